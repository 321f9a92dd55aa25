use num_traits::{One, Zero};

use super::rings::binom;
use crate::exactalg::GaussianRational;
use crate::groebner::{kernel_rank, Matrix};

/// `dim Λ^k_0 = C(2g, k) − C(2g, k−2)`.
pub fn primitive_dim(g: u32, k: u32) -> i64 {
    let (g, k) = (g as i64, k as i64);
    binom(2 * g, k) - binom(2 * g, k - 2)
}

fn masks_of_weight(n: u32, k: u32) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() == k).collect()
}

/// Wedges `ψ_b` onto the left of the monomial `s`; `None` if `b ∈ s`.
fn wedge_left(b: u32, s: u64) -> Option<(u64, bool)> {
    if s & (1 << b) != 0 {
        return None;
    }
    let below = (s & ((1u64 << b) - 1)).count_ones();
    Some((s | (1 << b), below % 2 == 1))
}

/// `c ∧ x` for `c = −2 Σ ψ_i ψ_{i+g}`, with `x` sparse over masks.
fn wedge_c(g: u32, x: &[(u64, GaussianRational)]) -> Vec<(u64, GaussianRational)> {
    let mut acc: std::collections::BTreeMap<u64, GaussianRational> = Default::default();
    let minus_two = GaussianRational::from_int(-2);
    for (s, coef) in x {
        for i in 0..g {
            let Some((s1, neg1)) = wedge_left(i + g, *s) else {
                continue;
            };
            let Some((s2, neg2)) = wedge_left(i, s1) else {
                continue;
            };
            let mut c = &minus_two * coef;
            if neg1 != neg2 {
                c = -c;
            }
            *acc.entry(s2).or_insert_with(GaussianRational::zero) += &c;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Kernel dimension of `c^{g−k+1} : Λ^k → Λ^{2g−k+2}` on a `2g`-dimensional
/// space, by exact linear algebra on wedge monomials.
pub fn primitive_dim_exact(g: u32, k: u32) -> i64 {
    let n = 2 * g;
    let source = masks_of_weight(n, k);
    let target_weight = k + 2 * (g - k + 1);
    if target_weight > n {
        return source.len() as i64;
    }
    let target = masks_of_weight(n, target_weight);
    let cols: Vec<Vec<GaussianRational>> = crate::par::map(&source, |s| {
        let mut x = vec![(*s, GaussianRational::one())];
        for _ in 0..g - k + 1 {
            x = wedge_c(g, &x);
        }
        let mut col = vec![GaussianRational::zero(); target.len()];
        for (m, c) in x {
            let pos = target.binary_search(&m).expect("weight is right");
            col[pos] = c;
        }
        col
    });
    let m = Matrix::from_columns(target.len(), &cols);
    kernel_rank(&m).1.len() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(primitive_dim(5, 0), 1);
        assert_eq!(primitive_dim(2, 1), 4);
        assert_eq!(primitive_dim(3, 2), 14);
    }

    #[test]
    fn exact_agrees_with_binomials() {
        for g in 1..=4 {
            for k in 0..=g {
                assert_eq!(
                    primitive_dim_exact(g, k),
                    primitive_dim(g, k),
                    "g={g} k={k}"
                );
            }
        }
    }

    #[test]
    fn c_power_is_top_form_multiple() {
        // c^g = (−2)^g g! ψ_1ψ_{1+g}···, a nonzero multiple of the volume form.
        let mut x = vec![(0u64, GaussianRational::one())];
        for _ in 0..3 {
            x = wedge_c(3, &x);
        }
        assert_eq!(x.len(), 1);
        assert_eq!(x[0].0, 0b111111);
        assert!(!x[0].1.is_zero());
    }
}
