use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactalg::GaussianRational;

/// Dense univariate polynomial, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| GaussianRational::from_int(x)).collect())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `x - root`.
    pub fn linear(root: &GaussianRational) -> Self {
        Self::new(vec![-root, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Synthetic division by `x - root`; `None` when the remainder is nonzero.
    pub fn divide_by_root(&self, root: &GaussianRational) -> Option<UniPoly> {
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let mut q = vec![GaussianRational::zero(); n - 1];
        let mut carry = GaussianRational::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &(&carry * root);
            if k == 0 {
                return v.is_zero().then(|| UniPoly::new(q));
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    pub fn product_of_roots(roots: &[(GaussianRational, u32)]) -> UniPoly {
        let mut acc = UniPoly::one();
        for (r, m) in roots {
            for _ in 0..*m {
                acc = acc.mul(&UniPoly::linear(r));
            }
        }
        acc
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let x = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let ct = c.to_text();
            let ct = if !c.is_real() && !c.re().is_zero() {
                format!("({ct})")
            } else {
                ct
            };
            parts.push(if k == 0 {
                ct
            } else if c.is_one() {
                x
            } else if *c == -GaussianRational::one() {
                format!("-{x}")
            } else {
                format!("{ct}{x}")
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

/// Roots found among a candidate set, with multiplicities, and the
/// unfactored remainder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub roots: Vec<(GaussianRational, u32)>,
    pub remainder: UniPoly,
}

impl EigenReport {
    /// A remainder other than 1 means the spectrum left the candidate set.
    pub fn is_complete(&self) -> bool {
        self.remainder.is_one()
    }

    pub fn root_values(&self) -> Vec<GaussianRational> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn multiplicity(&self, root: &GaussianRational) -> u32 {
        self.roots
            .iter()
            .find(|(r, _)| r == root)
            .map_or(0, |(_, m)| *m)
    }
}

/// Repeated synthetic division of a monic polynomial by `x - λ` for each
/// candidate `λ`, in the given order.
pub fn factor_over_candidates(cp: &UniPoly, candidates: &[GaussianRational]) -> EigenReport {
    let mut rest = cp.clone();
    let mut roots = Vec::new();
    let mut seen: Vec<&GaussianRational> = Vec::new();
    for c in candidates {
        if seen.contains(&c) {
            continue;
        }
        seen.push(c);
        let mut mult = 0;
        while let Some(q) = rest.divide_by_root(c) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c.clone(), mult));
        }
    }
    EigenReport {
        roots,
        remainder: rest,
    }
}

/// `{4k, 4k sqrt(-1) : |k| <= r} ∪ {8, -8, 0}`, the eigenvalues every ring
/// in this crate is expected to draw from.
pub fn standard_candidates(r: i64) -> Vec<GaussianRational> {
    let mut out = vec![
        GaussianRational::zero(),
        GaussianRational::from_int(8),
        GaussianRational::from_int(-8),
    ];
    for k in -r..=r {
        out.push(GaussianRational::from_int(4 * k));
        out.push(GaussianRational::from_ints(0, 4 * k));
    }
    let mut dedup: Vec<GaussianRational> = Vec::new();
    for c in out {
        if !dedup.contains(&c) {
            dedup.push(c);
        }
    }
    dedup
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    #[test]
    fn cubic_splits() {
        let cp = UniPoly::from_ints(&[0, -16, 0, 1]);
        let rep = factor_over_candidates(&cp, &[g(0, 0), g(4, 0), g(-4, 0)]);
        assert_eq!(rep.roots, vec![(g(0, 0), 1), (g(4, 0), 1), (g(-4, 0), 1)]);
        assert!(rep.is_complete());
    }

    #[test]
    fn double_root() {
        let rep = factor_over_candidates(&UniPoly::from_ints(&[1, -2, 1]), &[g(1, 0)]);
        assert_eq!(rep.roots, vec![(g(1, 0), 2)]);
        assert!(rep.is_complete());
    }

    #[test]
    fn gaussian_roots() {
        let rep = factor_over_candidates(&UniPoly::from_ints(&[64, 0, 1]), &[g(0, 8), g(0, -8)]);
        assert_eq!(rep.roots.len(), 2);
        assert!(rep.is_complete());
    }

    #[test]
    fn leftover_is_reported() {
        let rep = factor_over_candidates(&UniPoly::from_ints(&[-2, 0, 1]), &standard_candidates(3));
        assert!(rep.roots.is_empty());
        assert_eq!(rep.remainder, UniPoly::from_ints(&[-2, 0, 1]));
        assert!(!rep.is_complete());
    }

    #[test]
    fn product_inverts_factoring() {
        let roots = vec![(g(4, 0), 2), (g(0, -8), 1)];
        let p = UniPoly::product_of_roots(&roots);
        let rep = factor_over_candidates(&p, &standard_candidates(2));
        assert_eq!(UniPoly::product_of_roots(&rep.roots), p);
    }
}
