use num_traits::One;
use serde::Serialize;

use crate::exactalg::GaussianRational;
use crate::poly::{Monomial, MonomialOrder, Poly};

/// Reduced, monic Gröbner basis, generators sorted by leading monomial
/// (largest first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Poly>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial(self.order))
            .collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials().contains(&Monomial::ONE)
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        reduce(p, &self.generators, self.order)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr {
            order: MonomialOrder,
            generators: Vec<serde_json::Value>,
        }
        serde_json::to_value(Repr {
            order: self.order,
            generators: self
                .generators
                .iter()
                .map(|g| g.to_json(self.order))
                .collect(),
        })
        .expect("basis serializes")
    }
}

/// Full reduction of `p` modulo `basis`; the remainder has no term divisible
/// by a leading monomial of `basis`.
pub(crate) fn reduce(p: &Poly, basis: &[Poly], ord: MonomialOrder) -> Poly {
    let leads: Vec<(Monomial, GaussianRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading(ord).expect("basis elements are nonzero");
            (m, c.clone())
        })
        .collect();
    let mut work = p.clone();
    let mut rem = Poly::zero();
    while let Some((m, c)) = work.leading(ord).map(|(m, c)| (m, c.clone())) {
        let hit = leads.iter().position(|(lm, _)| lm.divides(&m));
        match hit {
            Some(k) => {
                let (lm, lc) = &leads[k];
                let q = lm.quotient_of(&m).expect("divisible");
                let f = c.div(lc).expect("leading coefficient is nonzero");
                work = work.sub(&basis[k].mul_term(&q, &f));
            }
            None => {
                work = work.sub(&Poly::term(m, c.clone()));
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Poly, g: &Poly, ord: MonomialOrder) -> Poly {
    let (mf, cf) = f.leading(ord).expect("nonzero");
    let (mg, cg) = g.leading(ord).expect("nonzero");
    let l = mf.lcm(&mg);
    let uf = mf.quotient_of(&l).expect("lcm");
    let ug = mg.quotient_of(&l).expect("lcm");
    let a = f.mul_term(&uf, &cf.inv().expect("nonzero"));
    let b = g.mul_term(&ug, &cg.inv().expect("nonzero"));
    a.sub(&b)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Buchberger's algorithm with the sugar selection strategy, followed by
/// full inter-reduction.
///
/// Pair selection is a total order (sugar, lcm, indices), so the output is
/// a function of the input alone.
pub fn buchberger(gens: &[Poly], ord: MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    inputs.sort_by(|a, b| {
        let la = a.leading_monomial(ord).expect("nonzero");
        let lb = b.leading_monomial(ord).expect("nonzero");
        ord.compare(&la, &lb)
    });
    for g in inputs {
        let s = g.max_total_degree();
        let h = reduce(&g, &basis, ord);
        if !h.is_zero() {
            push_element(&mut basis, &mut sugar, &mut pairs, h.monic(ord), s, ord);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ord.compare(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let sp = s_polynomial(&basis[pair.i], &basis[pair.j], ord);
        let h = reduce(&sp, &basis, ord);
        if !h.is_zero() {
            push_element(
                &mut basis,
                &mut sugar,
                &mut pairs,
                h.monic(ord),
                pair.sugar,
                ord,
            );
        }
    }

    GroebnerBasis {
        generators: interreduce(basis, ord),
        order: ord,
    }
}

fn push_element(
    basis: &mut Vec<Poly>,
    sugar: &mut Vec<u32>,
    pairs: &mut Vec<Pair>,
    h: Poly,
    s: u32,
    ord: MonomialOrder,
) {
    let lh = h.leading_monomial(ord).expect("nonzero");
    let s = s.max(h.max_total_degree());
    let k = basis.len();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial(ord).expect("nonzero");
        // Product criterion: coprime leading monomials give a zero S-polynomial.
        if lg.is_coprime(&lh) {
            continue;
        }
        let l = lg.lcm(&lh);
        let pair_sugar = (sugar[i] + l.total_degree() - lg.total_degree())
            .max(s + l.total_degree() - lh.total_degree());
        pairs.push(Pair {
            i,
            j: k,
            lcm: l,
            sugar: pair_sugar,
        });
    }
    basis.push(h);
    sugar.push(s);
}

fn interreduce(basis: Vec<Poly>, ord: MonomialOrder) -> Vec<Poly> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).expect("nonzero"))
        .collect();
    // Keep one element per minimal leading monomial.
    let mut minimal: Vec<Poly> = Vec::new();
    let mut kept_leads: Vec<Monomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, lj)| j != i && lj.divides(&leads[i]) && (lj != &leads[i] || j < i));
        if !redundant && !kept_leads.contains(&leads[i]) {
            kept_leads.push(leads[i]);
            minimal.push(g.clone());
        }
    }
    if kept_leads.contains(&Monomial::ONE) {
        return vec![Poly::one()];
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = minimal[i]
            .leading(ord)
            .map(|(m, c)| (m, c.clone()))
            .expect("nonzero");
        let tail = minimal[i].sub(&Poly::term(lm, lc.clone()));
        let r = Poly::term(lm, lc).add(&reduce(&tail, &others, ord));
        reduced.push(r.monic(ord));
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_monomial(ord).expect("nonzero");
        let lb = b.leading_monomial(ord).expect("nonzero");
        ord.compare(&lb, &la)
    });
    debug_assert!(reduced
        .iter()
        .all(|g| g.leading(ord).is_some_and(|(_, c)| c.is_one())));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn p(terms: &[(i64, [u32; 3])]) -> Poly {
        Poly::from_ints(terms)
    }

    fn j2() -> Vec<Poly> {
        vec![
            p(&[(1, [2, 0, 0]), (1, [0, 1, 0]), (-8, [0, 0, 0])]),
            p(&[(1, [1, 1, 0]), (8, [1, 0, 0]), (1, [0, 0, 1])]),
            p(&[(1, [1, 0, 1])]),
        ]
    }

    #[test]
    fn linear_ideal_is_already_reduced() {
        let gens = vec![
            Poly::var(Var::Alpha),
            p(&[(1, [0, 1, 0]), (-8, [0, 0, 0])]),
            Poly::var(Var::Gamma),
        ];
        let gb = buchberger(&gens, MonomialOrder::Grlex);
        assert_eq!(gb.generators().len(), 3);
        for g in &gens {
            assert!(gb.generators().contains(g));
        }
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&[Poly::one()], MonomialOrder::Grlex);
        assert_eq!(gb.generators(), &[Poly::one()]);
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn normal_forms_in_j2() {
        let gb = buchberger(&j2(), MonomialOrder::Grlex);
        assert_eq!(gb.normal_form(&Poly::one()), Poly::one());
        assert_eq!(
            gb.normal_form(&p(&[(1, [2, 0, 0])])),
            p(&[(8, [0, 0, 0]), (-1, [0, 1, 0])])
        );
        assert!(gb.normal_form(&p(&[(1, [1, 0, 1])])).is_zero());
    }

    #[test]
    fn s_polynomials_reduce_to_zero() {
        for ord in [
            MonomialOrder::Grlex,
            MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex,
        ] {
            let gb = buchberger(&j2(), ord);
            let gens = gb.generators();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    assert!(gb
                        .normal_form(&s_polynomial(&gens[i], &gens[j], ord))
                        .is_zero());
                }
            }
            for g in j2() {
                assert!(gb.contains(&g));
            }
        }
    }

    #[test]
    fn deterministic_under_input_permutation() {
        let mut gens = j2();
        let a = buchberger(&gens, MonomialOrder::Grlex);
        gens.reverse();
        let b = buchberger(&gens, MonomialOrder::Grlex);
        assert_eq!(a, b);
    }
}
