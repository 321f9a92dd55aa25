//! Exact scalars: Gaussian rationals and truncated power series in `t`.

mod scalar;
mod series;

pub use scalar::GaussianRational;
pub(crate) use scalar::{fmt_rational, parse_rational};
pub use series::{TruncatedSeries, DEFAULT_ORDER};

/// Coefficient ring of a [`crate::poly::SparsePoly`].
///
/// Implementations are exact. Series coefficients inside one polynomial share
/// a truncation order; mixing orders is a programming error and panics.
pub trait Coeff: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + serde::Serialize {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplies by a scalar from the base field.
    fn scale(&self, c: &GaussianRational) -> Self;
    /// Degree contributions of the coefficient itself (0 for scalars,
    /// `-2k` for every nonzero `t^k`).
    fn degree_shifts(&self) -> Vec<i64>;
    fn to_text(&self) -> String;
}

impl Coeff for GaussianRational {
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &GaussianRational) -> Self {
        self * c
    }
    fn degree_shifts(&self) -> Vec<i64> {
        vec![0]
    }
    fn to_text(&self) -> String {
        GaussianRational::to_text(self)
    }
}

impl Coeff for TruncatedSeries {
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        TruncatedSeries::add(self, other).expect("series coefficients share one order")
    }
    fn mul(&self, other: &Self) -> Self {
        TruncatedSeries::mul(self, other).expect("series coefficients share one order")
    }
    fn neg(&self) -> Self {
        TruncatedSeries::neg(self)
    }
    fn scale(&self, c: &GaussianRational) -> Self {
        TruncatedSeries::scale(self, c)
    }
    fn degree_shifts(&self) -> Vec<i64> {
        self.t_degree_shifts().collect()
    }
    fn to_text(&self) -> String {
        format!("({})", TruncatedSeries::to_text(self))
    }
}
