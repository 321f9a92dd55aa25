//! The `t`-deformed eigenmodules: the reduced Fukaya-Floer module of
//! `Σ × S¹`, the effective eigenvalue table, the module for a loop `δ` in
//! `Σ`, and the `μ`-action of homology classes of `Σ × S¹` on it.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, TruncatedSeries};
use crate::floer::{binom, eigenpair, joint_spectrum, parity_range, reduced_quotient};
use crate::groebner::{standard_candidates, Matrix};
use crate::poly::Var;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub i: i64,
    #[serde(rename = "mult")]
    pub multiplicity: i64,
    pub alpha: TruncatedSeries,
    pub beta: GaussianRational,
    pub gamma: GaussianRational,
}

/// `α` on the `i`-th line: `4i + 2nt` for odd `i`, `4i√−1 − 2nt` for even `i`.
fn alpha_series(i: i64, n: i64, order: usize) -> TruncatedSeries {
    let (a0, _) = eigenpair(i);
    let slope = if i % 2 == 0 { -2 * n } else { 2 * n };
    TruncatedSeries::linear(a0, GaussianRational::from_int(slope), order)
}

fn component(k: Option<u32>, i: i64, multiplicity: i64, n: i64, order: usize) -> Component {
    let (_, beta) = eigenpair(i);
    Component {
        k,
        i,
        multiplicity,
        alpha: alpha_series(i, n, order),
        beta,
        gamma: GaussianRational::zero(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhffModule {
    pub genus: u32,
    pub n: i64,
    pub components: Vec<Component>,
}

/// The reduced module for `n` copies of the loop: `2g − 1` lines indexed by
/// `|i| <= g − 1`.
pub fn rhff(g: u32, n: i64, order: usize) -> RhffModule {
    let gi = g as i64;
    let components = (-(gi - 1)..=gi - 1)
        .map(|i| component(None, i, 1, n, order))
        .collect();
    RhffModule {
        genus: g,
        n,
        components,
    }
}

impl RhffModule {
    pub fn rank(&self) -> usize {
        self.components.len()
    }

    /// `(α(0), β)` pairs, sorted.
    pub fn constant_pairs(&self) -> Vec<(GaussianRational, GaussianRational)> {
        let mut v: Vec<_> = self
            .components
            .iter()
            .map(|c| (c.alpha.constant_term().clone(), c.beta.clone()))
            .collect();
        v.sort_by_key(|(a, b)| (a.to_text(), b.to_text()));
        v
    }
}

/// Distinct joint `(α, β)` eigenvalues of `F_g/(γ, β² − 64)`, sorted.
pub fn ring_pairs_at_t0(g: u32) -> Result<Vec<(GaussianRational, GaussianRational)>> {
    let q = reduced_quotient(g);
    let mats: Vec<Matrix> = [Var::Alpha, Var::Beta]
        .iter()
        .map(|v| q.mult_matrix(*v).clone())
        .collect();
    let spec = joint_spectrum(&mats, &standard_candidates(g as i64))?;
    let mut v: Vec<_> = spec
        .into_iter()
        .map(|(e, _)| (e[0].clone(), e[1].clone()))
        .collect();
    v.sort_by_key(|(a, b)| (a.to_text(), b.to_text()));
    v.dedup();
    Ok(v)
}

/// The eigenvalues of `(α, β, γ)` on the effective Fukaya-Floer module.
pub fn effective_eigenvalues(g: u32, order: usize) -> Vec<Component> {
    rhff(g, 1, order).components
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaHffModule {
    pub genus: u32,
    pub components: Vec<Component>,
}

/// `⊕_{k,i} Λ^k_0 H³_red ⊗ R_i ⊗ C[[t]]` with `0 <= k <= g−1`,
/// `|i| <= g−k−1`, `i ≡ g−k−1 (mod 2)`.
pub fn delta_hff(g: u32, order: usize) -> DeltaHffModule {
    let gi = g as i64;
    let mut components = Vec::new();
    for k in 0..g {
        let ki = k as i64;
        let mult = binom(2 * gi - 2, ki) - binom(2 * gi - 2, ki - 2);
        for i in parity_range(gi - ki - 1) {
            components.push(component(Some(k), i, mult, 1, order));
        }
    }
    DeltaHffModule {
        genus: g,
        components,
    }
}

impl DeltaHffModule {
    pub fn total_rank(&self) -> i64 {
        self.components.iter().map(|c| c.multiplicity).sum()
    }
}

/// A homology class of `Σ × S¹` in the basis `pt`; `S¹`, `γ_j`; `Σ`,
/// `γ_j × S¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "grade")]
pub enum YHomologyClass {
    #[serde(rename = "0")]
    Point { multiplicity: i64 },
    #[serde(rename = "1")]
    Curve {
        circle_coeff: i64,
        surface_coeffs: Vec<i64>,
    },
    #[serde(rename = "2")]
    Surface {
        sigma_coeff: i64,
        torus_coeffs: Vec<i64>,
    },
}

/// `γ_i · γ_j` with `γ_i · γ_{i+g} = 1` (0-based indices).
pub fn symplectic(g: usize, i: usize, j: usize) -> i64 {
    if j == i + g {
        1
    } else if i == j + g {
        -1
    } else {
        0
    }
}

impl YHomologyClass {
    pub fn grade(&self) -> u8 {
        match self {
            YHomologyClass::Point { .. } => 0,
            YHomologyClass::Curve { .. } => 1,
            YHomologyClass::Surface { .. } => 2,
        }
    }

    /// `a · S¹`.
    pub fn dot_circle(&self) -> i64 {
        match self {
            YHomologyClass::Surface { sigma_coeff, .. } => *sigma_coeff,
            _ => 0,
        }
    }

    /// `a · δ` for `δ = γ_1`.
    pub fn dot_delta(&self) -> i64 {
        match self {
            YHomologyClass::Surface { torus_coeffs, .. } => {
                let g = torus_coeffs.len() / 2;
                torus_coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * symplectic(g, j, 0))
                    .sum()
            }
            _ => 0,
        }
    }

    fn check(&self, g: u32) -> Result<()> {
        let len = match self {
            YHomologyClass::Point { .. } => return Ok(()),
            YHomologyClass::Curve { surface_coeffs, .. } => surface_coeffs.len(),
            YHomologyClass::Surface { torus_coeffs, .. } => torus_coeffs.len(),
        };
        if len != 2 * g as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {len}",
                2 * g
            )));
        }
        Ok(())
    }
}

/// Normalized scalar by which `a` acts on the line `R_i`: `2μ(a)` in grade 2,
/// `−4μ(pt)` in grade 0, and 0 in grade 1.
pub fn mu_action(g: u32, i: i64, a: &YHomologyClass, order: usize) -> Result<TruncatedSeries> {
    a.check(g)?;
    let s = a.dot_circle();
    let d = a.dot_delta();
    Ok(match a {
        YHomologyClass::Point { multiplicity } => {
            let sign = if i % 2 == 0 { 8 } else { -8 };
            TruncatedSeries::constant(GaussianRational::from_int(sign * multiplicity), order)
        }
        YHomologyClass::Curve { .. } => TruncatedSeries::zero(order),
        YHomologyClass::Surface { .. } => {
            if i % 2 == 0 {
                TruncatedSeries::linear(
                    GaussianRational::from_ints(0, 4 * s * i),
                    GaussianRational::from_int(-2 * d),
                    order,
                )
            } else {
                TruncatedSeries::linear(
                    GaussianRational::from_int(4 * s * i),
                    GaussianRational::from_int(2 * d),
                    order,
                )
            }
        }
    })
}

pub fn components_to_json(components: &[Component]) -> serde_json::Value {
    serde_json::to_value(components).expect("components serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::DEFAULT_ORDER;
    use crate::floer::psi1_homology_dims;
    use proptest::prelude::*;

    const N: usize = DEFAULT_ORDER;

    fn lin(a: (i64, i64), b: i64) -> TruncatedSeries {
        TruncatedSeries::linear(
            GaussianRational::from_ints(a.0, a.1),
            GaussianRational::from_int(b),
            N,
        )
    }

    #[test]
    fn rhff_examples() {
        let m = rhff(2, 1, N);
        let got: Vec<_> = m
            .components
            .iter()
            .map(|c| (c.i, c.alpha.clone(), c.beta.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (-1, lin((-4, 0), 2), GaussianRational::from_int(-8)),
                (0, lin((0, 0), -2), GaussianRational::from_int(8)),
                (1, lin((4, 0), 2), GaussianRational::from_int(-8)),
            ]
        );
        let m = rhff(1, 1, N);
        assert_eq!(m.components.len(), 1);
        assert_eq!(m.components[0].alpha, lin((0, 0), -2));
        let m = rhff(2, 0, N);
        assert!(m.components.iter().all(|c| c.alpha.coeff(1).is_zero()));
    }

    #[test]
    fn rhff_invariants() {
        let sixty_four = GaussianRational::from_int(64);
        for g in 1..=6 {
            for n in -2..=2 {
                let m = rhff(g, n, N);
                assert_eq!(m.rank(), 2 * g as usize - 1);
                assert!(m.components.iter().all(|c| &c.beta * &c.beta == sixty_four));
            }
        }
    }

    #[test]
    fn t_zero_matches_ring() {
        for g in 1..=4 {
            assert_eq!(
                ring_pairs_at_t0(g).unwrap(),
                rhff(g, 1, N).constant_pairs(),
                "g={g}"
            );
        }
    }

    #[test]
    fn effective_examples() {
        let e = effective_eigenvalues(1, N);
        assert_eq!(e.len(), 1);
        assert_eq!(
            (e[0].alpha.clone(), e[0].beta.clone()),
            (lin((0, 0), -2), GaussianRational::from_int(8))
        );
        let e3 = effective_eigenvalues(3, N);
        for a in [lin((0, 8), -2), lin((0, -8), -2)] {
            assert!(e3
                .iter()
                .any(|c| c.alpha == a && c.beta == GaussianRational::from_int(8)));
        }
        assert!(e3.iter().all(|c| c.gamma.is_zero()));
        // Top entry: ±4(g−1)√−1^g + (−1)^g 2t, β = (−1)^{g−1} 8.
        for g in 1..=6i64 {
            let top = effective_eigenvalues(g as u32, N).last().unwrap().clone();
            let ig = GaussianRational::i_pow(g);
            let want = TruncatedSeries::linear(
                &ig * &GaussianRational::from_int(4 * (g - 1)),
                GaussianRational::from_int(2 * (-1i64).pow(g as u32)),
                N,
            );
            let beta = GaussianRational::from_int(8 * (-1i64).pow(g as u32 - 1));
            let flipped = TruncatedSeries::linear(-&want.coeff(0), want.coeff(1), N);
            assert!(top.alpha == want || top.alpha == flipped, "g={g}");
            assert_eq!(top.beta, beta);
        }
    }

    #[test]
    fn delta_examples() {
        let m = delta_hff(2, N);
        let idx: Vec<_> = m
            .components
            .iter()
            .map(|c| (c.k.unwrap(), c.i, c.multiplicity))
            .collect();
        assert_eq!(idx, vec![(0, -1, 1), (0, 1, 1), (1, 0, 2)]);
        assert_eq!(m.total_rank(), 4);
        assert_eq!(delta_hff(1, N).components.len(), 1);
        assert_eq!(delta_hff(3, N).total_rank(), 16);
        for g in 1..=4 {
            let total: i64 = psi1_homology_dims(g).iter().map(|(_, m, d)| m * d).sum();
            assert_eq!(delta_hff(g, N).total_rank(), total);
        }
    }

    #[test]
    fn mu_examples() {
        let sigma = YHomologyClass::Surface {
            sigma_coeff: 1,
            torus_coeffs: vec![0; 4],
        };
        assert_eq!(mu_action(2, 1, &sigma, N).unwrap(), lin((4, 0), 0));
        let mut torus = vec![0; 4];
        torus[2] = 1;
        let a = YHomologyClass::Surface {
            sigma_coeff: 0,
            torus_coeffs: torus,
        };
        assert_eq!(a.dot_delta(), -1);
        assert_eq!(mu_action(2, 1, &a, N).unwrap(), lin((0, 0), -2));
        let pt = YHomologyClass::Point { multiplicity: 1 };
        assert_eq!(mu_action(2, 2, &pt, N).unwrap(), lin((8, 0), 0));
        let c = YHomologyClass::Curve {
            circle_coeff: 3,
            surface_coeffs: vec![1; 4],
        };
        assert!(mu_action(2, 0, &c, N).unwrap().is_zero());
        assert!(mu_action(3, 0, &c, N).is_err());
    }

    proptest! {
        #[test]
        fn mu_is_linear(i in -4i64..=4, s1 in -5i64..5, s2 in -5i64..5,
                        t1 in proptest::collection::vec(-3i64..3, 6), t2 in proptest::collection::vec(-3i64..3, 6)) {
            let a = YHomologyClass::Surface { sigma_coeff: s1, torus_coeffs: t1.clone() };
            let b = YHomologyClass::Surface { sigma_coeff: s2, torus_coeffs: t2.clone() };
            let sum = YHomologyClass::Surface {
                sigma_coeff: s1 + s2,
                torus_coeffs: t1.iter().zip(&t2).map(|(x, y)| x + y).collect(),
            };
            let lhs = mu_action(3, i, &sum, 4).unwrap();
            let rhs = mu_action(3, i, &a, 4).unwrap().add(&mu_action(3, i, &b, 4).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
