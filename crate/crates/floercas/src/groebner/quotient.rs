use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use super::linalg::{Matrix, Vector};
use super::{buchberger, GroebnerBasis, UniPoly};
use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::par;
use crate::poly::{Monomial, MonomialOrder, Poly, Var};

/// All monomials outside the leading-term ideal, ascending in the basis order.
///
/// Fails when some variable has no pure power among the leading monomials,
/// which is exactly when the quotient is infinite-dimensional.
pub fn staircase_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let leads = gb.leading_monomials();
    if leads.contains(&Monomial::ONE) {
        return Ok(Vec::new());
    }
    let mut bounds = [0u32; 3];
    for v in Var::ALL {
        bounds[v.index()] = leads
            .iter()
            .filter_map(|m| m.pure_power().filter(|(w, _)| *w == v).map(|(_, e)| e))
            .min()
            .ok_or(Error::InfiniteStaircase(v.name()))?;
    }
    let mut out = Vec::new();
    for a in 0..bounds[0] {
        for b in 0..bounds[1] {
            for c in 0..bounds[2] {
                let m = Monomial::new(a, b, c);
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
            }
        }
    }
    let ord = gb.order();
    out.sort_by(|x, y| ord.compare(x, y));
    Ok(out)
}

/// A finite-dimensional quotient `C[α,β,γ]/I` with its staircase basis and
/// the matrices of multiplication by each generator.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    mult: [Matrix; 3],
}

impl QuotientRing {
    pub fn new(gens: &[Poly], ord: MonomialOrder) -> Result<Self> {
        Self::from_basis(buchberger(gens, ord))
    }

    pub fn from_basis(gb: GroebnerBasis) -> Result<Self> {
        let basis = staircase_basis(&gb)?;
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut ring = QuotientRing {
            gb,
            basis,
            index,
            mult: [
                Matrix::zeros(0, 0),
                Matrix::zeros(0, 0),
                Matrix::zeros(0, 0),
            ],
        };
        for v in Var::ALL {
            ring.mult[v.index()] = ring.compute_mult_matrix(v);
        }
        Ok(ring)
    }

    /// The zero ring (unit ideal).
    pub fn zero_ring(ord: MonomialOrder) -> Self {
        Self::new(&[Poly::one()], ord).expect("unit ideal has empty staircase")
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn order(&self) -> MonomialOrder {
        self.gb.order()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.gb.normal_form(p)
    }

    /// Coordinates of the class of `p` in the staircase basis.
    pub fn coords(&self, p: &Poly) -> Vector {
        let nf = self.normal_form(p);
        let mut v = vec![GaussianRational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let i = self.index[m];
            v[i] = c.clone();
        }
        v
    }

    pub fn element(&self, v: &[GaussianRational]) -> Poly {
        Poly::from_terms(self.basis.iter().zip(v).map(|(m, c)| (*m, c.clone())))
    }

    fn compute_mult_matrix(&self, v: Var) -> Matrix {
        let x = Monomial::var(v);
        let cols: Vec<Vector> = par::map(&self.basis, |m| {
            self.coords(&Poly::term(m.mul(&x), GaussianRational::one()))
        });
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Column `j` holds the coordinates of `v * basis[j]`.
    pub fn mult_matrix(&self, v: Var) -> &Matrix {
        &self.mult[v.index()]
    }

    /// Matrix of multiplication by an arbitrary polynomial.
    pub fn poly_matrix(&self, p: &Poly) -> Matrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(n, n);
        for (m, c) in p.terms() {
            let mut term = Matrix::scalar(n, c);
            for v in Var::ALL {
                term = term.mul(&self.mult_matrix(v).pow(m.0[v.index()]));
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn mult_matrices_commute(&self) -> bool {
        let [a, b, c] = &self.mult;
        a.commutes_with(b) && a.commutes_with(c) && b.commutes_with(c)
    }

    pub fn char_poly(&self, v: Var) -> UniPoly {
        super::char_poly(self.mult_matrix(v)).expect("square")
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            dim: usize,
            groebner_basis: serde_json::Value,
            staircase: Vec<[u32; 3]>,
            mult: BTreeMap<&'static str, &'a Matrix>,
        }
        serde_json::to_value(Repr {
            dim: self.dim(),
            groebner_basis: self.gb.to_json(),
            staircase: self.basis.iter().map(|m| m.0).collect(),
            mult: Var::ALL
                .iter()
                .map(|v| (v.name(), self.mult_matrix(*v)))
                .collect(),
        })
        .expect("ring serializes")
    }
}
