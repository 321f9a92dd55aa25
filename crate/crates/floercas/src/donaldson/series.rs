use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, parse_rational, GaussianRational, TruncatedSeries};

/// `e^{Q/2} Σ a_i e^{K_i}` over a named sublattice of `H_2`, with intersection
/// form `Q`. Classes `K` pair with `D` through `K · D = Kᵀ Q D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DonaldsonSeries {
    pub basis: Vec<String>,
    pub q: Vec<Vec<i64>>,
    terms: BTreeMap<Vec<i64>, BigRational>,
    pub simple_type: bool,
}

impl DonaldsonSeries {
    pub fn new(basis: Vec<String>, q: Vec<Vec<i64>>) -> Result<Self> {
        let n = basis.len();
        if q.len() != n || q.iter().any(|row| row.len() != n) {
            return Err(Error::Lattice(format!("Q must be {n}x{n}")));
        }
        if (0..n).any(|i| (0..n).any(|j| q[i][j] != q[j][i])) {
            return Err(Error::Lattice("Q is not symmetric".into()));
        }
        Ok(DonaldsonSeries {
            basis,
            q,
            terms: BTreeMap::new(),
            simple_type: true,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds `a e^K`, merging with an existing class and pruning zeros.
    pub fn add_term(&mut self, k: Vec<i64>, a: BigRational) -> Result<()> {
        if k.len() != self.rank() {
            return Err(Error::Lattice(format!("class {k:?} has the wrong length")));
        }
        let entry = self
            .terms
            .entry(k.clone())
            .or_insert_with(BigRational::zero);
        *entry += a;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
        Ok(())
    }

    pub fn with_terms<I: IntoIterator<Item = (Vec<i64>, BigRational)>>(
        mut self,
        terms: I,
    ) -> Result<Self> {
        for (k, a) in terms {
            self.add_term(k, a)?;
        }
        Ok(self)
    }

    /// Terms sorted by class.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &[i64]) -> BigRational {
        self.terms.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn pairing(&self, k: &[i64], d: &[i64]) -> i64 {
        pair(&self.q, k, d)
    }

    pub fn same_lattice(&self, other: &Self) -> bool {
        self.basis == other.basis && self.q == other.q
    }
}

pub(crate) fn pair(q: &[Vec<i64>], k: &[i64], d: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, ki) in k.iter().enumerate() {
        for (j, dj) in d.iter().enumerate() {
            acc += ki * q[i][j] * dj;
        }
    }
    acc
}

/// `e^{Q(D) t²/2} Σ a e^{(K·D) t}` modulo `t^order`.
pub fn evaluate(series: &DonaldsonSeries, d: &[i64], order: usize) -> Result<TruncatedSeries> {
    if d.len() != series.rank() {
        return Err(Error::Lattice(format!("class {d:?} has the wrong length")));
    }
    let mut sum = TruncatedSeries::zero(order);
    for (k, a) in series.terms() {
        let kd = series.pairing(k, d);
        let e = TruncatedSeries::linear(
            GaussianRational::zero(),
            GaussianRational::from_int(kd),
            order,
        )
        .exp()?;
        sum = sum.add(&e.scale(&GaussianRational::real(a.clone())))?;
    }
    let qd = series.pairing(d, d);
    let half = GaussianRational::from_ratio(qd, 2);
    let quad = TruncatedSeries::monomial(half, 2, order).exp()?;
    quad.mul(&sum)
}

/// `norm · (E(t) + √−1^{d0} E(√−1 t))` with `E = evaluate(series, D)`; the
/// caller fixes `norm`.
pub fn twisted_combination(
    series: &DonaldsonSeries,
    d: &[i64],
    d0: i64,
    norm: &BigRational,
    order: usize,
) -> Result<TruncatedSeries> {
    let e = evaluate(series, d, order)?;
    let rotated = e
        .rescale_variable(&GaussianRational::i())
        .scale(&GaussianRational::i_pow(d0));
    Ok(e.add(&rotated)?
        .scale(&GaussianRational::real(norm.clone())))
}

/// `D^{(w,Σ)} = D^w + D^{w+Σ}`, termwise.
pub fn w_sigma_combine(a: &DonaldsonSeries, b: &DonaldsonSeries) -> Result<DonaldsonSeries> {
    if !a.same_lattice(b) {
        return Err(Error::Lattice("series live on different lattices".into()));
    }
    let mut out = a.clone();
    out.simple_type = a.simple_type && b.simple_type;
    for (k, c) in b.terms() {
        out.add_term(k.clone(), c.clone())?;
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    a: String,
    #[serde(rename = "K")]
    k: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    basis: Vec<String>,
    #[serde(rename = "Q")]
    q: Vec<Vec<i64>>,
    terms: Vec<TermRepr>,
    #[serde(default = "yes")]
    simple_type: bool,
}

fn yes() -> bool {
    true
}

impl Serialize for DonaldsonSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Largest classes first, so `+K` precedes `-K`.
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(k, a)| TermRepr {
                a: fmt_rational(a),
                k: k.clone(),
            })
            .collect();
        SeriesRepr {
            basis: self.basis.clone(),
            q: self.q.clone(),
            terms,
            simple_type: self.simple_type,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DonaldsonSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = SeriesRepr::deserialize(d)?;
        let mut s = DonaldsonSeries::new(r.basis, r.q).map_err(D::Error::custom)?;
        s.simple_type = r.simple_type;
        for t in r.terms {
            let a = parse_rational(&t.a).map_err(D::Error::custom)?;
            s.add_term(t.k, a).map_err(D::Error::custom)?;
        }
        Ok(s)
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub(crate) fn pow2(e: u32) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::one() << e)
}
