use crate::error::{Error, Result};
use crate::rational::Rational;

/// Integer-valued piecewise constant function on `(0,1)` with exact rational
/// breakpoints. The value at a breakpoint is undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction {
    breakpoints: Vec<Rational>,
    values: Vec<i64>,
}

impl StepFunction {
    /// `values[i]` is the value on the i-th open interval; there must be one
    /// more value than breakpoints. Breakpoints are sorted and must lie in
    /// `(0,1)`; repeated breakpoints are merged, which requires the interval
    /// between the copies (of length zero) to be absent from `values`.
    pub fn new(breakpoints: Vec<Rational>, values: Vec<i64>) -> Result<Self> {
        if values.len() != breakpoints.len() + 1 {
            return Err(Error::MalformedStepFunction(
                "need exactly one more value than breakpoints",
            ));
        }
        if breakpoints
            .iter()
            .any(|b| *b <= Rational::ZERO || *b >= Rational::ONE)
        {
            return Err(Error::MalformedStepFunction(
                "breakpoints must lie strictly inside (0,1)",
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedStepFunction(
                "breakpoints must be strictly increasing",
            ));
        }
        Ok(StepFunction {
            breakpoints,
            values,
        })
    }

    /// Builds the step function with the given jump locations by sampling
    /// `value` at the midpoint of every interval. Duplicates are merged.
    pub fn from_sampler<F>(mut breakpoints: Vec<Rational>, mut value: F) -> Result<Self>
    where
        F: FnMut(Rational) -> Result<i64>,
    {
        breakpoints.sort_unstable();
        breakpoints.dedup();
        let values = interval_midpoints(&breakpoints)
            .map(&mut value)
            .collect::<Result<Vec<_>>>()?;
        StepFunction::new(breakpoints, values)
    }

    pub fn zero() -> Self {
        StepFunction {
            breakpoints: Vec::new(),
            values: vec![0],
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `(left, right, value)` for every open interval, left to right.
    pub fn intervals(&self) -> impl Iterator<Item = (Rational, Rational, i64)> + '_ {
        let n = self.breakpoints.len();
        self.values.iter().enumerate().map(move |(i, &v)| {
            let left = if i == 0 {
                Rational::ZERO
            } else {
                self.breakpoints[i - 1]
            };
            let right = if i == n {
                Rational::ONE
            } else {
                self.breakpoints[i]
            };
            (left, right, v)
        })
    }

    pub fn value_at(&self, x: Rational) -> Result<i64> {
        if x <= Rational::ZERO || x >= Rational::ONE {
            return Err(Error::OutOfRange(x));
        }
        match self.breakpoints.binary_search(&x) {
            Ok(_) => Err(Error::BreakpointEvaluation(x)),
            Err(i) => Ok(self.values[i]),
        }
    }

    /// Exact `∫₀¹ f(x) dx`.
    pub fn integral(&self) -> Rational {
        self.intervals().map(|(a, b, v)| (b - a) * v).sum()
    }
}

/// Midpoints of the open intervals cut out of `(0,1)` by the sorted,
/// duplicate-free `breakpoints`.
pub fn interval_midpoints(breakpoints: &[Rational]) -> impl Iterator<Item = Rational> + '_ {
    let n = breakpoints.len();
    (0..=n).map(move |i| {
        let left = if i == 0 {
            Rational::ZERO
        } else {
            breakpoints[i - 1]
        };
        let right = if i == n {
            Rational::ONE
        } else {
            breakpoints[i]
        };
        left.midpoint(&right)
    })
}

/// Sorted union of the breakpoints of all `functions`.
pub fn common_breakpoints<'a, I>(functions: I) -> Vec<Rational>
where
    I: IntoIterator<Item = &'a StepFunction>,
{
    let mut all: Vec<Rational> = functions
        .into_iter()
        .flat_map(|f| f.breakpoints.iter().copied())
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}
