use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Default truncation order for series computations.
pub const DEFAULT_ORDER: usize = 16;

/// An element of `Q(sqrt(-1))[t] / (t^N)`.
///
/// `t` carries cohomological degree -2. The vector always has exactly `N`
/// entries, so the order is recoverable from `coeffs.len()`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct TruncatedSeries {
    coeffs: Vec<GaussianRational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    coeffs: Vec<GaussianRational>,
    order: usize,
}

impl TryFrom<SeriesRepr> for TruncatedSeries {
    type Error = Error;
    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.order == 0 || r.coeffs.len() > r.order {
            return Err(Error::Parse(format!(
                "series with {} coefficients does not fit order {}",
                r.coeffs.len(),
                r.order
            )));
        }
        Ok(TruncatedSeries::from_coeffs(r.coeffs, r.order))
    }
}

impl From<TruncatedSeries> for SeriesRepr {
    fn from(s: TruncatedSeries) -> Self {
        let order = s.order();
        SeriesRepr {
            coeffs: s.coeffs,
            order,
        }
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        TruncatedSeries {
            coeffs: vec![GaussianRational::zero(); order],
        }
    }

    pub fn constant(c: GaussianRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(GaussianRational::one(), order)
    }

    /// `c * t^k`; vanishes when `k >= order`.
    pub fn monomial(c: GaussianRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `a + b t`, the shape of every eigenvalue in the Fukaya-Floer tables.
    pub fn linear(a: GaussianRational, b: GaussianRational, order: usize) -> Self {
        let mut s = Self::constant(a, order);
        if order > 1 {
            s.coeffs[1] = b;
        }
        s
    }

    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        coeffs.resize(order, GaussianRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn constant_term(&self) -> &GaussianRational {
        &self.coeffs[0]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated at `t^N`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![GaussianRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `sum_k x^k / k!`, defined only when the constant term vanishes so the
    /// result stays inside `Q(sqrt(-1))[t]`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut acc = Self::one(n);
        let mut power = Self::one(n);
        let mut factorial = BigInt::one();
        for k in 1..n {
            power = power.mul_unchecked(self);
            if power.is_zero() {
                break;
            }
            factorial *= k;
            let inv = GaussianRational::real(BigRational::new(BigInt::one(), factorial.clone()));
            acc = acc.add_unchecked(&power.scale(&inv));
        }
        Ok(acc)
    }

    /// Substitutes `t -> c t`.
    pub fn rescale_variable(&self, c: &GaussianRational) -> Self {
        let mut factor = GaussianRational::one();
        let mut coeffs = Vec::with_capacity(self.order());
        for x in &self.coeffs {
            coeffs.push(x * &factor);
            factor = &factor * c;
        }
        TruncatedSeries { coeffs }
    }

    /// Degrees `-2k` of the nonzero `t^k` terms.
    pub fn t_degree_shifts(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| -2 * k as i64)
    }

    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let needs_paren = !c.is_real() && !c.re().is_zero();
            let cs = if needs_paren {
                format!("({})", c.to_text())
            } else {
                c.to_text()
            };
            parts.push(match k {
                0 => cs,
                _ => {
                    let t = if k == 1 {
                        "t".to_string()
                    } else {
                        format!("t^{k}")
                    };
                    if c.is_one() {
                        t
                    } else if *c == -GaussianRational::one() {
                        format!("-{t}")
                    } else {
                        format!("{cs}{t}")
                    }
                }
            });
        }
        if parts.is_empty() {
            return format!("0 + O(t^{})", self.order());
        }
        format!(
            "{} + O(t^{})",
            parts.join(" + ").replace("+ -", "- "),
            self.order()
        )
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
