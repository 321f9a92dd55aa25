use num_traits::Zero;
use serde::Serialize;

use super::relations::{relations, Flavor};
use super::rings::{build_f_signed, build_fbar, eigenpair, parity_range, projection};
use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::groebner::linalg::{independent_subset, solve_in_span};
use crate::groebner::{
    char_poly, factor_over_candidates, kernel_rank, standard_candidates, EigenReport, Matrix,
    QuotientRing, Vector,
};
use crate::poly::Var;

/// Matrix of `m` restricted to the invariant subspace spanned by `basis`.
pub fn restrict(m: &Matrix, basis: &[Vector]) -> Result<Matrix> {
    let cols = basis
        .iter()
        .map(|v| {
            solve_in_span(basis, &m.apply(v))
                .ok_or_else(|| Error::Dimension("subspace is not invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(basis.len(), &cols))
}

/// Simultaneous generalized eigenvalues of commuting matrices, drawn from
/// `candidates`. Each entry is a tuple of eigenvalues (one per matrix) and
/// the dimension of the joint generalized eigenspace.
pub fn joint_spectrum(
    mats: &[Matrix],
    candidates: &[GaussianRational],
) -> Result<Vec<(Vec<GaussianRational>, usize)>> {
    let n = mats.first().map_or(0, Matrix::rows);
    let full: Vec<Vector> = (0..n)
        .map(|i| {
            let mut e = vec![GaussianRational::zero(); n];
            e[i] = num_traits::One::one();
            e
        })
        .collect();
    let mut out = Vec::new();
    split(mats, &full, Vec::new(), candidates, &mut out)?;
    Ok(out)
}

fn split(
    mats: &[Matrix],
    space: &[Vector],
    prefix: Vec<GaussianRational>,
    candidates: &[GaussianRational],
    out: &mut Vec<(Vec<GaussianRational>, usize)>,
) -> Result<()> {
    let Some((m, rest)) = mats.split_first() else {
        out.push((prefix, space.len()));
        return Ok(());
    };
    let local = restrict(m, space)?;
    let rep = factor_over_candidates(&char_poly(&local)?, candidates);
    if !rep.is_complete() {
        return Err(Error::Falsified(format!(
            "eigenvalues outside the candidate set: {:?}",
            rep.remainder
        )));
    }
    let k = space.len();
    for (lambda, mult) in rep.roots {
        let shifted = local.sub(&Matrix::scalar(k, &lambda)).pow(mult);
        let (_, ker) = kernel_rank(&shifted);
        // Back to ambient coordinates.
        let sub: Vec<Vector> = ker
            .iter()
            .map(|c| {
                let mut v = vec![GaussianRational::zero(); space[0].len()];
                for (coef, b) in c.iter().zip(space) {
                    if !coef.is_zero() {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x += &(coef * y);
                        }
                    }
                }
                v
            })
            .collect();
        let mut p = prefix.clone();
        p.push(lambda);
        split(rest, &sub, p, candidates, out)?;
    }
    Ok(())
}

/// `N/D` for subspaces `D ⊆ N` of a quotient ring, with the induced actions
/// of `α, β, γ`.
#[derive(Clone, Debug)]
pub struct SubquotientModule {
    pub ambient: QuotientRing,
    pub numerator: Vec<Vector>,
    pub denominator: Vec<Vector>,
    /// Representatives of a basis of `N/D`.
    pub basis: Vec<Vector>,
    pub actions: [Matrix; 3],
    pub eigen: [EigenReport; 3],
}

impl SubquotientModule {
    pub fn new(
        ambient: QuotientRing,
        numerator: Vec<Vector>,
        denominator: Vec<Vector>,
        candidates: &[GaussianRational],
    ) -> Result<Self> {
        let numerator = independent_subset(&numerator);
        let denominator = independent_subset(&denominator);
        if let Some(d) = denominator
            .iter()
            .find(|d| solve_in_span(&numerator, d).is_none())
        {
            return Err(Error::Dimension(format!(
                "denominator vector {d:?} not in numerator"
            )));
        }
        let mut full = denominator.clone();
        let mut basis = Vec::new();
        for v in &numerator {
            if solve_in_span(&full, v).is_none() {
                full.push(v.clone());
                basis.push(v.clone());
            }
        }
        let nd = denominator.len();
        let mut actions = Vec::with_capacity(3);
        for var in Var::ALL {
            let m = ambient.mult_matrix(var);
            if denominator
                .iter()
                .any(|d| solve_in_span(&denominator, &m.apply(d)).is_none())
            {
                return Err(Error::Dimension(format!(
                    "{} does not preserve the denominator",
                    var.name()
                )));
            }
            let mut cols = Vec::with_capacity(basis.len());
            for b in &basis {
                let c = solve_in_span(&full, &m.apply(b)).ok_or_else(|| {
                    Error::Dimension(format!("{} does not preserve the numerator", var.name()))
                })?;
                cols.push(c[nd..].to_vec());
            }
            actions.push(Matrix::from_columns(basis.len(), &cols));
        }
        let actions: [Matrix; 3] = actions.try_into().expect("three variables");
        let eigen = actions
            .clone()
            .map(|a| factor_over_candidates(&char_poly(&a).expect("square"), candidates));
        Ok(SubquotientModule {
            ambient,
            numerator,
            denominator,
            basis,
            actions,
            eigen,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn action(&self, v: Var) -> &Matrix {
        &self.actions[v.index()]
    }

    pub fn eigen(&self, v: Var) -> &EigenReport {
        &self.eigen[v.index()]
    }

    pub fn actions_commute(&self) -> bool {
        let [a, b, c] = &self.actions;
        a.commutes_with(b) && a.commutes_with(c) && b.commutes_with(c)
    }

    /// Joint `(α, β, γ)` spectrum with multiplicities.
    pub fn joint_spectrum(
        &self,
        candidates: &[GaussianRational],
    ) -> Result<Vec<(Vec<GaussianRational>, usize)>> {
        joint_spectrum(&self.actions, candidates)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            ambient_dim: usize,
            numerator_dim: usize,
            denominator_dim: usize,
            dim: usize,
            actions: &'a [Matrix; 3],
            eigen: &'a [EigenReport; 3],
        }
        serde_json::to_value(Repr {
            ambient_dim: self.ambient.dim(),
            numerator_dim: self.numerator.len(),
            denominator_dim: self.denominator.len(),
            dim: self.dim(),
            actions: &self.actions,
            eigen: &self.eigen,
        })
        .expect("module serializes")
    }
}

/// `J̄_r/J̄_{r+1}`, the kernel of `F̄_{r+1} → F̄_r`.
pub fn filtration_step(r: u32) -> Result<SubquotientModule> {
    let big = build_fbar(r + 1);
    let small = build_fbar(r);
    let mut gens = relations(Flavor::Reduced, r + 1).generators();
    gens.push(crate::poly::Poly::var(Var::Gamma));
    let proj = projection(&big, &small, &gens)?;
    let (_, ker) = kernel_rank(&proj);
    SubquotientModule::new(big, ker, Vec::new(), &standard_candidates(r as i64 + 1))
}

/// Expected `(α, β, γ)` eigenvalues of `J̄_r/J̄_{r+1}`, one per line.
pub fn filtration_expected(r: u32) -> Vec<[GaussianRational; 3]> {
    parity_range(r as i64)
        .into_iter()
        .map(|i| {
            let (a, _) = eigenpair(i);
            let b = if r.is_multiple_of(2) { 8 } else { -8 };
            [a, GaussianRational::from_int(b), GaussianRational::zero()]
        })
        .collect()
}

/// `K_r = J_{r-1}/(J_r + γ J_{r-2})` inside `F_r`.
pub fn build_k(r: u32) -> Result<SubquotientModule> {
    if r == 0 {
        return Err(Error::InvalidArgument("K_r needs r >= 1".into()));
    }
    let f = build_f_signed(r as i64);
    let gens = relations(Flavor::Floer, r).generators();
    let kernel_to = |s: i64| -> Result<Vec<Vector>> {
        let target = build_f_signed(s);
        let p = projection(&f, &target, &gens)?;
        Ok(kernel_rank(&p).1)
    };
    let numerator = kernel_to(r as i64 - 1)?;
    let gamma = f.mult_matrix(Var::Gamma);
    let denominator: Vec<Vector> = kernel_to(r as i64 - 2)?
        .iter()
        .map(|v| gamma.apply(v))
        .collect();
    SubquotientModule::new(f, numerator, denominator, &standard_candidates(r as i64))
}

/// Expected `(α, β, γ)` eigenvalues of `K_r`.
pub fn k_expected(r: u32) -> Vec<[GaussianRational; 3]> {
    parity_range(r as i64 - 1)
        .into_iter()
        .map(|i| {
            let (a, b) = eigenpair(i);
            [a, b, GaussianRational::zero()]
        })
        .collect()
}

/// Compares a joint spectrum with a list of expected simple eigenlines.
pub fn matches_expected(
    spec: &[(Vec<GaussianRational>, usize)],
    expected: &[[GaussianRational; 3]],
) -> bool {
    let total: usize = spec.iter().map(|(_, m)| m).sum();
    total == expected.len()
        && expected.iter().all(|e| {
            let want = expected.iter().filter(|x| *x == e).count();
            spec.iter()
                .filter(|(v, _)| v.as_slice() == e.as_slice())
                .map(|(_, m)| m)
                .sum::<usize>()
                == want
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    #[test]
    fn filtration_examples() {
        let m = filtration_step(0).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.eigen(Var::Alpha).root_values(), vec![g(0, 0)]);
        let m = filtration_step(1).unwrap();
        assert_eq!(m.dim(), 2);
        let mut a = m.eigen(Var::Alpha).root_values();
        a.sort_by_key(|x| x.to_text());
        assert_eq!(a, vec![g(-4, 0), g(4, 0)]);
        assert_eq!(m.eigen(Var::Beta).roots, vec![(g(-8, 0), 2)]);
        let m = filtration_step(2).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.eigen(Var::Beta).roots, vec![(g(8, 0), 3)]);
        for x in [g(0, 0), g(0, 8), g(0, -8)] {
            assert_eq!(m.eigen(Var::Alpha).multiplicity(&x), 1);
        }
    }

    #[test]
    fn filtration_spectra() {
        for r in 0..=5 {
            let m = filtration_step(r).unwrap();
            assert_eq!(m.dim(), r as usize + 1);
            assert!(m.actions_commute());
            let spec = m
                .joint_spectrum(&standard_candidates(r as i64 + 1))
                .unwrap();
            assert!(
                matches_expected(&spec, &filtration_expected(r)),
                "r={r}: {spec:?}"
            );
        }
    }

    #[test]
    fn k_examples() {
        let k1 = build_k(1).unwrap();
        assert_eq!(k1.dim(), 1);
        assert_eq!(k1.actions[0][(0, 0)], g(0, 0));
        assert_eq!(k1.actions[1][(0, 0)], g(8, 0));
        assert_eq!(k1.actions[2][(0, 0)], g(0, 0));
        let k2 = build_k(2).unwrap();
        assert_eq!(k2.dim(), 2);
        assert_eq!(k2.eigen(Var::Beta).roots, vec![(g(-8, 0), 2)]);
        let k3 = build_k(3).unwrap();
        assert_eq!(k3.dim(), 3);
        assert_eq!(k3.eigen(Var::Beta).roots, vec![(g(8, 0), 3)]);
    }

    #[test]
    fn k_spectra() {
        for r in 1..=5 {
            let k = build_k(r).unwrap();
            assert_eq!(k.dim(), r as usize);
            assert!(k.actions_commute());
            let spec = k.joint_spectrum(&standard_candidates(r as i64)).unwrap();
            assert!(matches_expected(&spec, &k_expected(r)), "r={r}: {spec:?}");
        }
    }

    #[test]
    fn restriction_requires_invariance() {
        let m = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let e2 = vec![vec![g(0, 0), g(1, 0)]];
        assert!(restrict(&m, &e2).is_err());
    }
}
