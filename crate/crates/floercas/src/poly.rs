//! Sparse polynomials in the three ring generators.
//!
//! The generators are written `α, β, γ` (the classical ring uses `a, b, c`
//! for the same slots). Each carries a cohomological degree: 2, 4 and 6.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{Coeff, GaussianRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Alpha, Var::Beta, Var::Gamma];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["α", "β", "γ"][self.index()]
    }

    pub fn weight(self) -> u32 {
        [2, 4, 6][self.index()]
    }
}

/// `α^e0 β^e1 γ^e2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `2 e_α + 4 e_β + 6 e_γ`.
    pub fn weighted_degree(&self) -> u32 {
        Var::ALL
            .iter()
            .map(|v| v.weight() * self.0[v.index()])
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| {
            Monomial([
                other.0[0] - self.0[0],
                other.0[1] - self.0[1],
                other.0[2] - self.0[2],
            ])
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    /// Pure power `v^e` of a single variable, if this monomial is one.
    pub fn pure_power(&self) -> Option<(Var, u32)> {
        let nz: Vec<_> = Var::ALL.iter().filter(|v| self.0[v.index()] > 0).collect();
        match nz.as_slice() {
            [v] => Some((**v, self.0[v.index()])),
            _ => None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in Var::ALL {
            match self.0[v.index()] {
                0 => {}
                1 => s.push_str(v.name()),
                e => s.push_str(&format!("{}^{}", v.name(), e)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Admissible monomial orders, all with precedence `α > β > γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    Grlex,
    Grevlex,
    /// Grevlex with weights (2, 4, 6).
    WeightedGrevlex,
}

impl MonomialOrder {
    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        let (a, b) = (m1.0, m2.0);
        match self {
            MonomialOrder::Grlex => m1
                .total_degree()
                .cmp(&m2.total_degree())
                .then_with(|| a.cmp(&b)),
            MonomialOrder::Grevlex => m1
                .total_degree()
                .cmp(&m2.total_degree())
                .then_with(|| revlex(&a, &b)),
            MonomialOrder::WeightedGrevlex => m1
                .weighted_degree()
                .cmp(&m2.weighted_degree())
                .then_with(|| revlex(&a, &b)),
        }
    }
}

// Smaller exponent in the last differing variable is larger.
fn revlex(a: &[u32; 3], b: &[u32; 3]) -> Ordering {
    for i in (0..3).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Degree class of a polynomial modulo 4, with `t` counted as degree -2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mod4Degree {
    Zero,
    Residue(u8),
    Inhomogeneous,
}

impl Mod4Degree {
    /// The zero polynomial is compatible with every class.
    pub fn is_compatible_with(&self, residue: u8) -> bool {
        match self {
            Mod4Degree::Zero => true,
            Mod4Degree::Residue(r) => *r == residue % 4,
            Mod4Degree::Inhomogeneous => false,
        }
    }
}

/// Polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

pub type Poly = SparsePoly<GaussianRational>;

impl<C: Coeff> Default for SparsePoly<C> {
    fn default() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> SparsePoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms sorted by `ord`, largest first.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(Monomial, C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|x, y| ord.compare(&y.0, &x.0));
        v
    }

    pub fn leading(&self, ord: MonomialOrder) -> Option<(Monomial, &C)> {
        self.terms
            .iter()
            .max_by(|x, y| ord.compare(x.0, y.0))
            .map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<Monomial> {
        self.leading(ord).map(|(m, _)| m)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x.scale(c))))
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, x)| (n.mul(m), x.mul(c))))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(n, x)| (n.mul(m), x.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32, one: C) -> Self {
        let mut acc = Self::term(Monomial::ONE, one);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Every term's degree is homogeneous in the exact (integer) sense.
    pub fn exact_degree(&self) -> Option<i64> {
        let mut degs = self.term_degrees();
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn term_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.iter().flat_map(|(m, c)| {
            let base = m.weighted_degree() as i64;
            c.degree_shifts().into_iter().map(move |s| base + s)
        })
    }

    pub fn mod4_degree(&self) -> Mod4Degree {
        let mut residues = self.term_degrees().map(|d| d.rem_euclid(4) as u8);
        let Some(first) = residues.next() else {
            return Mod4Degree::Zero;
        };
        if residues.all(|r| r == first) {
            Mod4Degree::Residue(first)
        } else {
            Mod4Degree::Inhomogeneous
        }
    }

    pub fn to_text(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let mut ct = c.to_text();
            let neg = ct.starts_with('-') && !ct[1..].contains(['+', '-']);
            if neg {
                ct.remove(0);
            } else if ct.contains(['+', '-']) && !ct.starts_with('(') {
                ct = format!("({ct})");
            }
            if k > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if m == Monomial::ONE {
                out.push_str(&ct);
            } else if ct == "1" {
                out.push_str(&m.to_text());
            } else {
                out.push_str(&ct);
                out.push_str(&m.to_text());
            }
        }
        out
    }

    /// JSON with terms sorted by `ord`, descending.
    pub fn to_json(&self, ord: MonomialOrder) -> serde_json::Value {
        let terms: Vec<_> = self
            .sorted_terms(ord)
            .into_iter()
            .map(|(m, c)| serde_json::json!({ "m": m.0, "c": c }))
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl SparsePoly<GaussianRational> {
    pub fn constant(c: GaussianRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), GaussianRational::one())
    }

    /// Builds from integer coefficients: `&[(c, [a, b, g])]`.
    pub fn from_ints(terms: &[(i64, [u32; 3])]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(c, e)| (Monomial(e), GaussianRational::from_int(c))),
        )
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self, ord: MonomialOrder) -> Self {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Substitutes scalar values for all three variables.
    pub fn eval(&self, point: &[GaussianRational; 3]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in point.iter().zip(m.0) {
                v = &v * &x.pow(e);
            }
            acc += &v;
        }
        acc
    }
}

impl<C: Coeff> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(MonomialOrder::Grlex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::TruncatedSeries;
    use proptest::prelude::*;

    fn p(terms: &[(i64, [u32; 3])]) -> Poly {
        Poly::from_ints(terms)
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, [1, 0, 0]), (1, [0, 1, 0])]);
        let b = p(&[(1, [1, 0, 0]), (-1, [0, 1, 0])]);
        assert_eq!(a.mul(&b), p(&[(1, [2, 0, 0]), (-1, [0, 2, 0])]));
        let g = Poly::var(Var::Gamma);
        assert_eq!(g.mul(&g), p(&[(1, [0, 0, 2])]));
    }

    #[test]
    fn series_coefficients_multiply() {
        let n = 2;
        let one_plus_t =
            TruncatedSeries::linear(GaussianRational::one(), GaussianRational::one(), n);
        let lhs = SparsePoly::term(Monomial::ONE, one_plus_t.clone());
        let alpha = SparsePoly::term(Monomial::var(Var::Alpha), TruncatedSeries::one(n));
        let prod = lhs.mul(&alpha);
        assert_eq!(
            prod,
            SparsePoly::term(Monomial::var(Var::Alpha), one_plus_t)
        );
    }

    #[test]
    fn order_examples() {
        let a2 = Monomial::new(2, 0, 0);
        let b = Monomial::new(0, 1, 0);
        assert_eq!(MonomialOrder::Grlex.compare(&a2, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grlex.compare(&b, &b), Ordering::Equal);
        // equal weight 4; revlex tie-break favours the smaller β exponent
        assert_eq!(
            MonomialOrder::WeightedGrevlex.compare(&a2, &b),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Grevlex.compare(&Monomial::new(1, 0, 1), &Monomial::new(0, 2, 0)),
            Ordering::Less
        );
    }

    #[test]
    fn mod4_examples() {
        assert_eq!(
            p(&[(1, [0, 1, 0]), (-8, [0, 0, 0])]).mod4_degree(),
            Mod4Degree::Residue(0)
        );
        assert_eq!(
            p(&[(1, [2, 0, 0]), (1, [0, 1, 0]), (-8, [0, 0, 0])]).mod4_degree(),
            Mod4Degree::Residue(0)
        );
        assert_eq!(
            p(&[(1, [1, 0, 0]), (1, [0, 1, 0])]).mod4_degree(),
            Mod4Degree::Inhomogeneous
        );
        assert_eq!(Poly::zero().mod4_degree(), Mod4Degree::Zero);
    }

    #[test]
    fn t_counts_as_minus_two() {
        // α + t·1 : degrees 2 and -2, both ≡ 2 mod 4
        let n = 3;
        let t = TruncatedSeries::monomial(GaussianRational::one(), 1, n);
        let q = SparsePoly::from_terms([
            (Monomial::var(Var::Alpha), TruncatedSeries::one(n)),
            (Monomial::ONE, t),
        ]);
        assert_eq!(q.mod4_degree(), Mod4Degree::Residue(2));
    }

    #[test]
    fn text_and_json() {
        let q = p(&[(1, [2, 0, 0]), (1, [0, 1, 0]), (-8, [0, 0, 0])]);
        assert_eq!(q.to_text(MonomialOrder::Grlex), "α^2 + β - 8");
        let js = q.to_json(MonomialOrder::Grlex);
        assert_eq!(js["terms"][0]["m"], serde_json::json!([2, 0, 0]));
        assert_eq!(js["terms"][2]["c"]["re"], "-8");
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        (0u32..4, 0u32..4, 0u32..4).prop_map(|(a, b, c)| Monomial::new(a, b, c))
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-5i64..5, -3i64..3, arb_mono()), 0..5).prop_map(|v| {
            Poly::from_terms(
                v.into_iter()
                    .map(|(a, b, m)| (m, GaussianRational::from_ints(a, b))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }

        #[test]
        fn orders_are_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for ord in [MonomialOrder::Grlex, MonomialOrder::Grevlex, MonomialOrder::WeightedGrevlex] {
                prop_assert_eq!(ord.compare(&a, &b), ord.compare(&a.mul(&c), &b.mul(&c)));
                prop_assert_eq!(ord.compare(&a, &b) == Ordering::Equal, a == b);
                prop_assert_ne!(ord.compare(&a.mul(&c), &a), Ordering::Less);
            }
        }
    }
}
