use serde::{Deserialize, Serialize};

use num_rational::BigRational;

use crate::exactalg::GaussianRational;
use crate::poly::{Mod4Degree, MonomialOrder, Poly, Var};

/// Which recursion generates the relation triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// `q^i_r`, the relations of the invariant cohomology of the moduli space
    /// of stable bundles (variables read as `a, b, c`).
    #[serde(rename = "q")]
    Classical,
    /// `R^i_r`, the relations of `F_r`.
    #[serde(rename = "R")]
    Floer,
    /// `R̄^i_r`, the relations of `F̄_r = F_r / γ F_r` (third entry is 0).
    #[serde(rename = "Rbar")]
    Reduced,
}

impl Flavor {
    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "q" => Some(Flavor::Classical),
            "R" => Some(Flavor::Floer),
            "Rbar" => Some(Flavor::Reduced),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Classical => "q",
            Flavor::Floer => "R",
            Flavor::Reduced => "Rbar",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTriple {
    pub r: u32,
    pub flavor: Flavor,
    pub polys: [Poly; 3],
}

impl RelationTriple {
    /// Nonzero members, in order.
    pub fn generators(&self) -> Vec<Poly> {
        self.polys
            .iter()
            .filter(|p| !p.is_zero())
            .cloned()
            .collect()
    }

    /// Degrees `2r, 2r+2, 2r+4` of the classical relations.
    pub fn expected_degrees(&self) -> [i64; 3] {
        let r = self.r as i64;
        [2 * r, 2 * r + 2, 2 * r + 4]
    }

    /// Exact homogeneity for `q`, homogeneity mod 4 for `R` and `R̄`.
    pub fn grading_ok(&self) -> bool {
        let degs = self.expected_degrees();
        self.polys.iter().zip(degs).all(|(p, d)| match self.flavor {
            Flavor::Classical => p.is_zero() || p.exact_degree() == Some(d),
            _ => {
                let m = p.mod4_degree();
                m != Mod4Degree::Inhomogeneous && m.is_compatible_with(d.rem_euclid(4) as u8)
            }
        })
    }

    pub fn to_json(&self, ord: MonomialOrder) -> serde_json::Value {
        serde_json::json!({
            "flavor": self.flavor,
            "r": self.r,
            "relations": self.polys.iter().map(|p| p.to_json(ord)).collect::<Vec<_>>(),
        })
    }
}

fn sign8(r: u32) -> Poly {
    // β + (-1)^{r+1} 8
    let s = if (r + 1).is_multiple_of(2) { 8 } else { -8 };
    Poly::var(Var::Beta).add(&Poly::constant(GaussianRational::from_int(s)))
}

/// Unrolls the three-term recursion from `(1, 0, 0)` up to level `r`.
pub fn relations(flavor: Flavor, r: u32) -> RelationTriple {
    let mut p = [Poly::one(), Poly::zero(), Poly::zero()];
    for k in 0..r {
        let k2 = GaussianRational::from_int((k * k) as i64);
        let ratio = GaussianRational::real(BigRational::new(
            (2 * k as i64).into(),
            (k as i64 + 1).into(),
        ));
        let alpha = Poly::var(Var::Alpha);
        let gamma = Poly::var(Var::Gamma);
        let first = alpha.mul(&p[0]).add(&p[1].scale(&k2));
        let (second, third) = match flavor {
            Flavor::Classical => (
                Poly::var(Var::Beta).mul(&p[0]).add(&p[2].scale(&ratio)),
                gamma.mul(&p[0]),
            ),
            Flavor::Floer => (
                sign8(k).mul(&p[0]).add(&p[2].scale(&ratio)),
                gamma.mul(&p[0]),
            ),
            Flavor::Reduced => (sign8(k).mul(&p[0]), Poly::zero()),
        };
        p = [first, second, third];
    }
    RelationTriple {
        r,
        flavor,
        polys: p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn p(terms: &[(i64, [u32; 3])]) -> Poly {
        Poly::from_ints(terms)
    }

    #[test]
    fn base_case() {
        let t = relations(Flavor::Floer, 0);
        assert_eq!(t.polys, [Poly::one(), Poly::zero(), Poly::zero()]);
    }

    #[test]
    fn first_levels() {
        let t = relations(Flavor::Floer, 1);
        assert_eq!(
            t.polys,
            [
                Poly::var(Var::Alpha),
                p(&[(1, [0, 1, 0]), (-8, [0, 0, 0])]),
                Poly::var(Var::Gamma)
            ]
        );
        let t = relations(Flavor::Floer, 2);
        assert_eq!(
            t.polys,
            [
                p(&[(1, [2, 0, 0]), (1, [0, 1, 0]), (-8, [0, 0, 0])]),
                p(&[(1, [1, 1, 0]), (8, [1, 0, 0]), (1, [0, 0, 1])]),
                p(&[(1, [1, 0, 1])]),
            ]
        );
        let q = relations(Flavor::Classical, 2);
        assert_eq!(
            q.polys,
            [
                p(&[(1, [2, 0, 0]), (1, [0, 1, 0])]),
                p(&[(1, [1, 1, 0]), (1, [0, 0, 1])]),
                p(&[(1, [1, 0, 1])])
            ]
        );
        let rb = relations(Flavor::Reduced, 2);
        assert_eq!(rb.polys[1], p(&[(1, [1, 1, 0]), (8, [1, 0, 0])]));
        assert!(rb.polys[2].is_zero());
    }

    #[test]
    fn leading_monomials_grlex() {
        for r in 1..=6 {
            let t = relations(Flavor::Floer, r);
            let ord = MonomialOrder::Grlex;
            assert_eq!(
                t.polys[0].leading_monomial(ord),
                Some(Monomial::new(r, 0, 0))
            );
            assert_eq!(
                t.polys[1].leading_monomial(ord),
                Some(Monomial::new(r - 1, 1, 0))
            );
            assert_eq!(
                t.polys[2].leading_monomial(ord),
                Some(Monomial::new(r - 1, 0, 1))
            );
        }
    }

    #[test]
    fn reduced_is_floer_at_gamma_zero() {
        let zero_gamma = |q: &Poly| {
            Poly::from_terms(
                q.terms()
                    .filter(|(m, _)| m.0[2] == 0)
                    .map(|(m, c)| (*m, c.clone())),
            )
        };
        for r in 0..=6 {
            let f = relations(Flavor::Floer, r);
            let rb = relations(Flavor::Reduced, r);
            assert_eq!(zero_gamma(&f.polys[0]), rb.polys[0]);
            assert_eq!(zero_gamma(&f.polys[1]), rb.polys[1]);
        }
    }

    #[test]
    fn gradings() {
        for r in 0..=6 {
            for fl in [Flavor::Classical, Flavor::Floer, Flavor::Reduced] {
                assert!(relations(fl, r).grading_ok(), "{fl:?} r={r}");
            }
        }
    }
}
