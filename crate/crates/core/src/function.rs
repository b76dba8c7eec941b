use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact rational value at every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexFunction {
    values: Vec<BigRational>,
}

impl VertexFunction {
    pub fn zeros(n: usize) -> Self {
        VertexFunction {
            values: vec![BigRational::zero(); n],
        }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        VertexFunction {
            values: values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn from_big_integers(values: Vec<BigInt>) -> Self {
        VertexFunction {
            values: values.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    pub fn new(values: Vec<BigRational>) -> Self {
        VertexFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.values[i]
    }

    pub(crate) fn set(&mut self, i: usize, value: BigRational) {
        self.values[i] = value;
    }

    pub(crate) fn push(&mut self, value: BigRational) {
        self.values.push(value);
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Values as `i64`, if every value is an integer in range.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.values
            .iter()
            .map(|v| {
                if v.is_integer() {
                    v.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|v| v.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn negated(&self) -> Self {
        VertexFunction {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn max_abs(&self) -> BigRational {
        self.values
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<BigRational>> for VertexFunction {
    fn from(values: Vec<BigRational>) -> Self {
        VertexFunction { values }
    }
}
