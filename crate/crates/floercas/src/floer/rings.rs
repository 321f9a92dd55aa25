use num_traits::One;

use super::relations::{relations, Flavor};
use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::groebner::{kernel_rank, Matrix, QuotientRing, UniPoly};
use crate::poly::{Monomial, MonomialOrder, Poly, Var};

fn quotient(mut gens: Vec<Poly>, extra: &[Poly], ord: MonomialOrder) -> QuotientRing {
    gens.extend_from_slice(extra);
    QuotientRing::new(&gens, ord).expect("relation ideals are zero-dimensional")
}

/// `F_r = C[α,β,γ]/J_r`. `F_0` is the zero ring.
pub fn build_f(r: u32) -> QuotientRing {
    build_f_with(r, MonomialOrder::default())
}

pub fn build_f_with(r: u32, ord: MonomialOrder) -> QuotientRing {
    quotient(relations(Flavor::Floer, r).generators(), &[], ord)
}

/// `F̄_r = C[α,β,γ]/(R̄^1_r, R̄^2_r, γ)`.
pub fn build_fbar(r: u32) -> QuotientRing {
    build_fbar_with(r, MonomialOrder::default())
}

pub fn build_fbar_with(r: u32, ord: MonomialOrder) -> QuotientRing {
    quotient(
        relations(Flavor::Reduced, r).generators(),
        &[Poly::var(Var::Gamma)],
        ord,
    )
}

/// `C[a,b,c]/(q^1_r, q^2_r, q^3_r)`.
pub fn build_classical(r: u32) -> QuotientRing {
    quotient(
        relations(Flavor::Classical, r).generators(),
        &[],
        MonomialOrder::default(),
    )
}

/// `F_r / γ F_r`, built from the unreduced relations.
pub fn build_f_mod_gamma(r: u32) -> QuotientRing {
    quotient(
        relations(Flavor::Floer, r).generators(),
        &[Poly::var(Var::Gamma)],
        MonomialOrder::default(),
    )
}

/// `F_{-1}`: the whole ring is the ideal, so this is the zero ring too.
pub fn build_f_signed(r: i64) -> QuotientRing {
    if r < 0 {
        QuotientRing::zero_ring(MonomialOrder::default())
    } else {
        build_f(r as u32)
    }
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `{α^a β^b γ^c : a+b+c < r}`, or with `c = 0` only when `with_gamma` is off.
pub fn basis_monomials(r: u32, with_gamma: bool) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r - a {
            if with_gamma {
                for c in 0..r - a - b {
                    out.push(Monomial::new(a, b, c));
                }
            } else {
                out.push(Monomial::new(a, b, 0));
            }
        }
    }
    out
}

/// Rank of the normal forms of `monomials` in `ring`.
pub fn monomial_rank(ring: &QuotientRing, monomials: &[Monomial]) -> usize {
    let cols: Vec<_> = monomials
        .iter()
        .map(|m| ring.coords(&Poly::term(*m, GaussianRational::one())))
        .collect();
    if cols.is_empty() {
        return 0;
    }
    crate::groebner::linalg::rank(&Matrix::from_columns(ring.dim(), &cols))
}

/// Matrix of the natural surjection `from → to`. Fails unless the ideal of
/// `to` contains the ideal of `from`.
pub fn projection(from: &QuotientRing, to: &QuotientRing, from_gens: &[Poly]) -> Result<Matrix> {
    if let Some(g) = from_gens.iter().find(|g| !to.normal_form(g).is_zero()) {
        return Err(Error::Dimension(format!(
            "no projection: {} survives in the target",
            g.to_text(to.order())
        )));
    }
    let cols: Vec<_> = from
        .basis()
        .iter()
        .map(|m| to.coords(&Poly::term(*m, GaussianRational::one())))
        .collect();
    Ok(Matrix::from_columns(to.dim(), &cols))
}

/// `(dim ker γ, dim ker γ²)` on `F_r`.
pub fn gamma_kernel_dims(r: u32) -> (usize, usize) {
    let f = build_f(r);
    let g = f.mult_matrix(Var::Gamma);
    (kernel_rank(g).1.len(), kernel_rank(&g.mul(g)).1.len())
}

fn beta_shift(r: u32) -> Poly {
    let s = if (r + 1).is_multiple_of(2) { 8 } else { -8 };
    Poly::var(Var::Beta).add(&Poly::constant(GaussianRational::from_int(s)))
}

/// `F_{r+1}/(β + (-1)^{r+1} 8, γ)`, the quotient whose `α` char poly is the
/// product over the level-`r` eigenvalues.
pub fn socle_quotient(r: u32) -> QuotientRing {
    quotient(
        relations(Flavor::Floer, r + 1).generators(),
        &[beta_shift(r), Poly::var(Var::Gamma)],
        MonomialOrder::default(),
    )
}

/// The same quotient taken at level `r` itself.
pub fn socle_quotient_same_level(r: u32) -> QuotientRing {
    quotient(
        relations(Flavor::Floer, r).generators(),
        &[beta_shift(r), Poly::var(Var::Gamma)],
        MonomialOrder::default(),
    )
}

/// `(α² + 16 r²)···(α² + 16·2²)·α` for even `r`, `(α² − 16 r²)···(α² − 16)` for odd `r`.
pub fn socle_expected(r: u32) -> UniPoly {
    let mut acc = UniPoly::one();
    let r = r as i64;
    if r % 2 == 0 {
        acc = acc.mul(&UniPoly::from_ints(&[0, 1]));
        for k in (2..=r).step_by(2) {
            acc = acc.mul(&UniPoly::from_ints(&[16 * k * k, 0, 1]));
        }
    } else {
        for k in (1..=r).step_by(2) {
            acc = acc.mul(&UniPoly::from_ints(&[-16 * k * k, 0, 1]));
        }
    }
    acc
}

/// `F_g/(γ, β² − 64)`, the `t = 0` shadow of the reduced Fukaya-Floer module.
pub fn reduced_quotient(g: u32) -> QuotientRing {
    let b2 = Poly::from_ints(&[(1, [0, 2, 0]), (-64, [0, 0, 0])]);
    quotient(
        relations(Flavor::Floer, g).generators(),
        &[Poly::var(Var::Gamma), b2],
        MonomialOrder::default(),
    )
}

/// `α` and `β` eigenvalues attached to the index `i`: `(4i√−1, 8)` for even
/// `i`, `(4i, −8)` for odd `i`.
pub fn eigenpair(i: i64) -> (GaussianRational, GaussianRational) {
    if i % 2 == 0 {
        (
            GaussianRational::from_ints(0, 4 * i),
            GaussianRational::from_int(8),
        )
    } else {
        (
            GaussianRational::from_int(4 * i),
            GaussianRational::from_int(-8),
        )
    }
}

/// Indices `i` with `|i| <= n` and `i ≡ n (mod 2)`.
pub fn parity_range(n: i64) -> Vec<i64> {
    (-n..=n).step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::factor_over_candidates;
    use crate::groebner::standard_candidates;
    use num_traits::Zero;

    #[test]
    fn small_rings() {
        let f1 = build_f(1);
        assert_eq!(f1.dim(), 1);
        assert_eq!(
            f1.coords(&Poly::var(Var::Beta)),
            vec![GaussianRational::from_int(8)]
        );
        assert_eq!(
            f1.coords(&Poly::var(Var::Alpha)),
            vec![GaussianRational::zero()]
        );
        assert_eq!(build_f(2).dim(), 4);
        assert_eq!(build_f(3).dim(), 10);
        assert_eq!(build_fbar(2).dim(), 3);
        assert_eq!(build_f(0).dim(), 0);
    }

    #[test]
    fn dimensions_and_monomial_bases() {
        for r in 0..=6u32 {
            let f = build_f(r);
            let fb = build_fbar(r);
            let ri = r as i64;
            assert_eq!(f.dim() as i64, binom(ri + 2, 3), "F_{r}");
            assert_eq!(fb.dim() as i64, binom(ri + 1, 2), "Fbar_{r}");
            assert_eq!(monomial_rank(&f, &basis_monomials(r, true)), f.dim());
            assert_eq!(monomial_rank(&fb, &basis_monomials(r, false)), fb.dim());
            assert_eq!(build_f_mod_gamma(r).gb(), fb.gb());
        }
    }

    #[test]
    fn classical_dimensions() {
        for r in 0..=5u32 {
            assert_eq!(build_classical(r).dim() as i64, binom(r as i64 + 2, 3));
        }
    }

    #[test]
    fn gamma_shifts_levels_and_is_nilpotent() {
        for r in 1..=5u32 {
            let f = build_f(r);
            for p in relations(Flavor::Floer, r - 1).generators() {
                assert!(f.normal_form(&Poly::var(Var::Gamma).mul(&p)).is_zero());
            }
            let gr = Poly::var(Var::Gamma).pow(r, GaussianRational::one());
            assert!(f.normal_form(&gr).is_zero());
        }
    }

    #[test]
    fn gamma_kernels() {
        assert_eq!(gamma_kernel_dims(1), (1, 1));
        assert_eq!(gamma_kernel_dims(2), (3, 4));
        assert_eq!(gamma_kernel_dims(3), (6, 9));
        for r in 1..=5i64 {
            let (k1, k2) = gamma_kernel_dims(r as u32);
            assert_eq!(k1 as i64, binom(r + 1, 2));
            assert_eq!(k2 as i64, binom(r + 1, 2) + binom(r, 2));
        }
    }

    #[test]
    fn socle_products() {
        for r in 1..=5 {
            let q = socle_quotient(r);
            assert_eq!(q.char_poly(Var::Alpha), socle_expected(r), "r={r}");
        }
        // At the same level the quotient is too small for the product.
        assert_eq!(socle_quotient_same_level(1).dim(), 0);
        assert_eq!(socle_expected(1).degree(), Some(2));
    }

    #[test]
    fn reduced_quotient_spectrum() {
        for g in 1..=4u32 {
            let q = reduced_quotient(g);
            let rep =
                factor_over_candidates(&q.char_poly(Var::Alpha), &standard_candidates(g as i64));
            assert!(rep.is_complete());
            assert_eq!(rep.roots.len(), 2 * g as usize - 1, "g={g}");
        }
    }
}
