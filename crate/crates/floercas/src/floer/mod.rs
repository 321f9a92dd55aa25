//! The rings `F_r`, `F̄_r` and their subquotients, and the assembled Floer
//! cohomology `HF*_g = ⊕_k Λ^k_0 H³ ⊗ F_{g−k}`.

mod exterior;
mod relations;
mod rings;
mod subquotient;

pub use exterior::{primitive_dim, primitive_dim_exact};
pub use relations::{relations, Flavor, RelationTriple};
pub use rings::{
    basis_monomials, binom, build_classical, build_f, build_f_mod_gamma, build_f_signed,
    build_f_with, build_fbar, build_fbar_with, eigenpair, gamma_kernel_dims, monomial_rank,
    parity_range, projection, reduced_quotient, socle_expected, socle_quotient,
    socle_quotient_same_level,
};
pub use subquotient::{
    build_k, filtration_expected, filtration_step, joint_spectrum, k_expected, matches_expected,
    restrict, SubquotientModule,
};

use serde::Serialize;

use crate::groebner::{factor_over_candidates, standard_candidates, EigenReport, QuotientRing};
use crate::poly::Var;

#[derive(Clone, Debug)]
pub struct Summand {
    pub k: u32,
    pub multiplicity: i64,
    pub ring: QuotientRing,
}

impl Summand {
    pub fn level(&self, genus: u32) -> u32 {
        genus - self.k
    }
}

#[derive(Clone, Debug)]
pub struct FloerRing {
    pub genus: u32,
    pub summands: Vec<Summand>,
    pub total_dim: i64,
}

/// Builds every summand `Λ^k_0 H³ ⊗ F_{g−k}`, `0 <= k <= g`.
pub fn hf_assemble(g: u32) -> FloerRing {
    let ks: Vec<u32> = (0..=g).collect();
    let summands = crate::par::map(&ks, |&k| Summand {
        k,
        multiplicity: primitive_dim(g, k),
        ring: build_f(g - k),
    });
    let total_dim = summands
        .iter()
        .map(|s| s.multiplicity * s.ring.dim() as i64)
        .sum();
    FloerRing {
        genus: g,
        summands,
        total_dim,
    }
}

impl FloerRing {
    pub fn spectra(&self) -> Vec<[EigenReport; 3]> {
        crate::par::map(&self.summands, |s| {
            let c = standard_candidates(s.level(self.genus) as i64);
            Var::ALL.map(|v| factor_over_candidates(&s.ring.char_poly(v), &c))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct SummandRepr {
            k: u32,
            multiplicity: i64,
            dim: usize,
            relations: serde_json::Value,
            groebner_basis: serde_json::Value,
            staircase: Vec<[u32; 3]>,
            spectra: std::collections::BTreeMap<&'static str, EigenReport>,
        }
        let spectra = self.spectra();
        let summands: Vec<SummandRepr> = self
            .summands
            .iter()
            .zip(spectra)
            .map(|(s, sp)| {
                let ord = s.ring.order();
                SummandRepr {
                    k: s.k,
                    multiplicity: s.multiplicity,
                    dim: s.ring.dim(),
                    relations: relations(Flavor::Floer, s.level(self.genus)).to_json(ord),
                    groebner_basis: s.ring.gb().to_json(),
                    staircase: s.ring.basis().iter().map(|m| m.0).collect(),
                    spectra: Var::ALL.iter().map(|v| v.name()).zip(sp).collect(),
                }
            })
            .collect();
        serde_json::json!({
            "genus": self.genus,
            "total_dim": self.total_dim,
            "summands": summands,
        })
    }
}

/// `(k, C(2g−2,k) − C(2g−2,k−2), dim K_{g−k})` for `0 <= k <= g−1`.
pub fn psi1_homology_dims(g: u32) -> Vec<(u32, i64, i64)> {
    (0..g)
        .map(|k| {
            let (gi, ki) = (g as i64, k as i64);
            (
                k,
                binom(2 * gi - 2, ki) - binom(2 * gi - 2, ki - 2),
                (g - k) as i64,
            )
        })
        .collect()
}

/// Same as [`psi1_homology_dims`], with each `dim K_r` computed from the
/// subquotient rather than read off.
pub fn psi1_homology_dims_exact(g: u32) -> crate::Result<Vec<(u32, i64, i64)>> {
    let ks: Vec<u32> = (0..g).collect();
    crate::par::map(&ks, |&k| {
        let (gi, ki) = (g as i64, k as i64);
        let dim = build_k(g - k)?.dim() as i64;
        Ok((k, binom(2 * gi - 2, ki) - binom(2 * gi - 2, ki - 2), dim))
    })
    .into_iter()
    .collect()
}

pub fn psi1_total(rows: &[(u32, i64, i64)]) -> i64 {
    rows.iter().map(|(_, m, d)| m * d).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assembled_dims() {
        assert_eq!(hf_assemble(1).total_dim, 1);
        assert_eq!(hf_assemble(2).total_dim, 8);
        assert_eq!(hf_assemble(3).total_dim, 48);
        let r = hf_assemble(3);
        assert_eq!(r.summands.last().unwrap().ring.dim(), 0);
    }

    #[test]
    fn psi1() {
        assert_eq!(psi1_total(&psi1_homology_dims(1)), 1);
        assert_eq!(psi1_homology_dims(2), vec![(0, 1, 2), (1, 2, 1)]);
        assert_eq!(psi1_total(&psi1_homology_dims(2)), 4);
        assert_eq!(psi1_homology_dims(3), vec![(0, 1, 3), (1, 4, 2), (2, 5, 1)]);
        assert_eq!(psi1_total(&psi1_homology_dims(3)), 16);
        for g in 1..=4 {
            assert_eq!(psi1_homology_dims_exact(g).unwrap(), psi1_homology_dims(g));
        }
    }

    #[test]
    fn json_dump_is_deterministic() {
        let a = hf_assemble(2).to_json();
        crate::par::set_exec(crate::par::Exec::Sequential);
        let b = hf_assemble(2).to_json();
        crate::par::set_exec(crate::par::Exec::Parallel);
        assert_eq!(a, b);
        assert_eq!(a["total_dim"], 8);
    }
}
