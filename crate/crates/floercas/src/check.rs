//! The verification suite: every algebraic claim the library reproduces,
//! checked exactly and reported in a fixed order.

use serde::Serialize;

use crate::donaldson::{
    congruence_check, fiber_sum, finite_type_order, product_series, FiberSumInput,
};
use crate::exactalg::{GaussianRational, DEFAULT_ORDER};
use crate::floer::{
    basis_monomials, binom, build_f, build_fbar, build_k, filtration_expected, filtration_step,
    k_expected, matches_expected, monomial_rank, primitive_dim, primitive_dim_exact,
    psi1_homology_dims_exact, psi1_total, relations, socle_expected, socle_quotient,
    socle_quotient_same_level, Flavor,
};
use crate::fukaya::{delta_hff, rhff, ring_pairs_at_t0};
use crate::groebner::standard_candidates;
use crate::poly::{Poly, Var};

/// Upper genus for the genus-indexed checks; each check also has its own cap.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_genus: u32,
}

impl Limits {
    /// The full ranges.
    pub const FULL: Limits = Limits { max_genus: 5 };

    fn genus(&self, cap: u32) -> u32 {
        self.max_genus.min(cap)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::FULL
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn result(
    id: u8,
    name: &'static str,
    claim: &'static str,
    failures: Vec<String>,
    ok_detail: String,
) -> CriterionResult {
    let passed = failures.is_empty();
    CriterionResult {
        id,
        name,
        claim,
        passed,
        detail: if passed {
            ok_detail
        } else {
            failures.join("; ")
        },
    }
}

pub fn dimensions(_: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    for r in 1..=6u32 {
        let (f, fb) = (build_f(r), build_fbar(r));
        let ri = r as i64;
        if f.dim() as i64 != binom(ri + 2, 3) {
            bad.push(format!("dim F_{r} = {}", f.dim()));
        }
        if fb.dim() as i64 != binom(ri + 1, 2) {
            bad.push(format!("dim F̄_{r} = {}", fb.dim()));
        }
        if monomial_rank(&f, &basis_monomials(r, true)) != f.dim() {
            bad.push(format!("monomials a+b+c<{r} are not a basis of F_{r}"));
        }
        if monomial_rank(&fb, &basis_monomials(r, false)) != fb.dim() {
            bad.push(format!("monomials a+b<{r} are not a basis of F̄_{r}"));
        }
    }
    result(
        1,
        "dimensions",
        "F_r has basis α^aβ^bγ^c (a+b+c<r); F̄_r has basis α^aβ^b (a+b<r)",
        bad,
        "r = 1..6".into(),
    )
}

pub fn gradings(_: Limits) -> CriterionResult {
    let bad = (0..=6u32)
        .flat_map(|r| [Flavor::Classical, Flavor::Floer, Flavor::Reduced].map(|f| (r, f)))
        .filter(|(r, f)| !relations(*f, *r).grading_ok())
        .map(|(r, f)| format!("{} at r={r}", f.name()))
        .collect();
    result(
        2,
        "gradings",
        "q relations are homogeneous; R relations are homogeneous mod 4",
        bad,
        "r = 0..6, all flavors".into(),
    )
}

pub fn filtration(_: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    for r in 0..=4u32 {
        match filtration_step(r) {
            Ok(m) => {
                if m.dim() != r as usize + 1 {
                    bad.push(format!("r={r}: dim {}", m.dim()));
                }
                if !m.eigen.iter().all(|e| e.is_complete()) {
                    bad.push(format!("r={r}: eigenvalues outside the candidate set"));
                }
                match m.joint_spectrum(&standard_candidates(r as i64 + 1)) {
                    Ok(s) if matches_expected(&s, &filtration_expected(r)) => {}
                    Ok(s) => bad.push(format!("r={r}: spectrum {s:?}")),
                    Err(e) => bad.push(format!("r={r}: {e}")),
                }
            }
            Err(e) => bad.push(format!("r={r}: {e}")),
        }
    }
    result(
        3,
        "filtration",
        "J̄_r/J̄_{r+1} is a sum of r+1 lines with α = 4i or 4i√−1, β = ∓8",
        bad,
        "r = 0..4".into(),
    )
}

pub fn socle(_: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    for r in 1..=5u32 {
        let got = socle_quotient(r).char_poly(Var::Alpha);
        if got != socle_expected(r) {
            bad.push(format!("r={r}: {got:?}"));
        }
    }
    let same = socle_quotient_same_level(1).dim();
    result(
        4,
        "socle quotients",
        "F_{r+1}/(β+(−1)^{r+1}8, γ) = C[α]/(product over the level-r eigenvalues)",
        bad,
        format!("r = 1..5 at level r+1 (at level r the r=1 quotient has dim {same})"),
    )
}

pub fn k_modules(limits: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    for r in 1..=5u32 {
        match build_k(r) {
            Ok(k) => {
                if k.dim() != r as usize {
                    bad.push(format!("dim K_{r} = {}", k.dim()));
                }
                match k.joint_spectrum(&standard_candidates(r as i64)) {
                    Ok(s) if matches_expected(&s, &k_expected(r)) => {}
                    Ok(s) => bad.push(format!("K_{r}: spectrum {s:?}")),
                    Err(e) => bad.push(format!("K_{r}: {e}")),
                }
            }
            Err(e) => bad.push(format!("K_{r}: {e}")),
        }
    }
    let gmax = limits.genus(4);
    for g in 1..=gmax {
        match psi1_homology_dims_exact(g) {
            Ok(rows) => {
                let total = psi1_total(&rows);
                let delta = delta_hff(g, DEFAULT_ORDER).total_rank();
                if total != delta {
                    bad.push(format!(
                        "g={g}: ker ψ₁/im ψ₁ has dim {total}, δ-module rank {delta}"
                    ));
                }
            }
            Err(e) => bad.push(format!("g={g}: {e}")),
        }
    }
    result(
        5,
        "K_r modules",
        "K_r = J_{r−1}/(J_r + γJ_{r−2}) is a sum of r lines; ker ψ₁/im ψ₁ matches the δ-module",
        bad,
        format!("r = 1..5, g = 1..{gmax}"),
    )
}

pub fn nilpotency(_: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    let gamma = Poly::var(Var::Gamma);
    for r in 1..=5u32 {
        let f = build_f(r);
        for p in relations(Flavor::Floer, r - 1).generators() {
            if !f.normal_form(&gamma.mul(&p)).is_zero() {
                bad.push(format!("γJ_{} ⊄ J_{r}", r - 1));
            }
        }
        if !f
            .normal_form(&gamma.pow(r, GaussianRational::from_int(1)))
            .is_zero()
        {
            bad.push(format!("γ^{r} ≠ 0 in F_{r}"));
        }
    }
    result(
        6,
        "nilpotency",
        "γJ_{r−1} ⊆ J_r and γ^r = 0 in F_r",
        bad,
        "r = 1..5".into(),
    )
}

pub fn reduced_module(limits: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    let gmax = limits.genus(5);
    let sixty_four = GaussianRational::from_int(64);
    for g in 1..=gmax {
        let m = rhff(g, 1, DEFAULT_ORDER);
        if m.rank() != 2 * g as usize - 1 {
            bad.push(format!("g={g}: rank {}", m.rank()));
        }
        if m.components.iter().any(|c| &c.beta * &c.beta != sixty_four) {
            bad.push(format!("g={g}: β² ≠ 64"));
        }
        match ring_pairs_at_t0(g) {
            Ok(p) if p == m.constant_pairs() => {}
            Ok(p) => bad.push(format!("g={g}: ring has {} eigenvalue pairs", p.len())),
            Err(e) => bad.push(format!("g={g}: {e}")),
        }
    }
    result(
        7,
        "reduced module",
        "the reduced Fukaya-Floer module has 2g−1 lines; at t=0 they are the spectrum of F_g/(γ, β²−64)",
        bad,
        format!("g = 1..{gmax}"),
    )
}

pub fn primitive_parts(limits: Limits) -> CriterionResult {
    let gmax = limits.genus(4);
    let pairs: Vec<(u32, u32)> = (1..=gmax)
        .flat_map(|g| (0..=g).map(move |k| (g, k)))
        .collect();
    let bad = crate::par::map(&pairs, |&(g, k)| {
        let (a, b) = (primitive_dim_exact(g, k), primitive_dim(g, k));
        (a != b).then(|| format!("g={g} k={k}: kernel {a}, formula {b}"))
    })
    .into_iter()
    .flatten()
    .collect();
    result(
        8,
        "primitive parts",
        "Λ^k_0 = ker c^{g−k+1} has dimension C(2g,k) − C(2g,k−2)",
        bad,
        format!("g ≤ {gmax}, k ≤ g"),
    )
}

pub fn finite_type(_: Limits) -> CriterionResult {
    let mut bad = Vec::new();
    for (g, b1_zero, want) in [(1, false, 1), (1, true, 1), (2, false, 2), (2, true, 1)] {
        let got = finite_type_order(g, b1_zero);
        if got != want {
            bad.push(format!("g={g} b1_zero={b1_zero}: {got}"));
        }
    }
    for g in 0..=10 {
        if finite_type_order(g, true) > finite_type_order(g, false) {
            bad.push(format!("g={g}: b₁=0 bound exceeds the general one"));
        }
    }
    result(
        9,
        "finite type",
        "genus 1 gives simple type; genus 2 gives order 2, or 1 when b₁ = 0",
        bad,
        "g ≤ 10".into(),
    )
}

pub fn fiber_sums(_: Limits) -> CriterionResult {
    let grid = [
        (2, 1, 1),
        (2, 1, 2),
        (2, 2, 2),
        (3, 1, 1),
        (3, 1, 2),
        (1, 1, 1),
    ];
    let bad = crate::par::map(&grid, |&(g, h1, h2)| {
        match fiber_sum(&FiberSumInput::products(g, h1, h2)) {
            Ok(s) if s == product_series(g, h1 + h2) => None,
            Ok(s) => Some(format!(
                "g={g} ({h1},{h2}): {}",
                serde_json::to_string(&s).unwrap_or_default()
            )),
            Err(e) => Some(format!("g={g} ({h1},{h2}): {e}")),
        }
    })
    .into_iter()
    .flatten()
    .collect();
    result(
        10,
        "fiber sums",
        "gluing products of surfaces along Σ_g reproduces the product series, genus 1 through sinh²",
        bad,
        "g = 2: (1,1) (1,2) (2,2); g = 3: (1,1) (1,2); g = 1: (1,1)".into(),
    )
}

/// `(g, h, Σ, genus of Σ, genus of the other factor)` for both factor classes.
fn congruence_grid(gmax: u32) -> Vec<(u32, u32, [i64; 2], u32, u32)> {
    let mut out = Vec::new();
    for g in 1..=gmax {
        for h in 1..=gmax {
            out.push((g, h, [1, 0], g, h));
            out.push((g, h, [0, 1], h, g));
        }
    }
    out
}

fn congruence_failures(gmax: u32, keep: impl Fn(u32) -> bool) -> (usize, Vec<String>) {
    let mut tested = 0;
    let mut bad = Vec::new();
    for (g, h, sigma, sg, other) in congruence_grid(gmax) {
        if !keep(other) {
            continue;
        }
        tested += 1;
        let rep = congruence_check(&product_series(g, h), &sigma, sg).expect("rank 2");
        for c in rep.classes.iter().filter(|c| !c.ok) {
            bad.push(format!(
                "Σ_{g}×Σ_{h}, Σ={}: K={:?} pairs to {}",
                if sigma[0] == 1 { "E" } else { "F" },
                c.k,
                c.pairing
            ));
        }
    }
    (tested, bad)
}

/// Every class of every product series, against both factors.
pub fn congruence_all(limits: Limits) -> CriterionResult {
    let gmax = limits.genus(4);
    let (n, bad) = congruence_failures(gmax, |_| true);
    result(
        11,
        "congruence",
        "K·Σ ≡ 2g−2 (mod 4) for every basic class",
        bad,
        format!("{n} series/surface pairs, g,h ≤ {gmax}"),
    )
}

/// The same, restricted to surfaces whose complementary factor has genus at
/// least 2. A torus factor makes every class in `{-(2g−2), …, 2g−2}` appear,
/// which the congruence does not claim to control.
pub fn congruence_in_scope(limits: Limits) -> CriterionResult {
    let gmax = limits.genus(4);
    let (n, bad) = congruence_failures(gmax, |other| other >= 2);
    let (_, outside) = congruence_failures(gmax, |other| other < 2);
    result(
        11,
        "congruence",
        "K·Σ ≡ 2g−2 (mod 4) for every basic class",
        bad,
        format!(
            "{n} series/surface pairs with complementary genus ≥ 2, g,h ≤ {gmax}; {} classes fail on torus products",
            outside.len()
        ),
    )
}

pub type Criterion = fn(Limits) -> CriterionResult;

/// Criteria 1..11 as run by `check`.
pub const SUITE: [Criterion; 11] = [
    dimensions,
    gradings,
    filtration,
    socle,
    k_modules,
    nilpotency,
    reduced_module,
    primitive_parts,
    finite_type,
    fiber_sums,
    congruence_in_scope,
];

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub max_genus: u32,
    pub results: Vec<CriterionResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let mark = if r.passed { "ok  " } else { "FAIL" };
            s.push_str(&format!(
                "[{mark}] {:>2} {:<16} {}\n",
                r.id, r.name, r.claim
            ));
            s.push_str(&format!("          {}\n", r.detail));
        }
        let n = self.results.iter().filter(|r| r.passed).count();
        s.push_str(&format!(
            "{n}/{} verified (max genus {})\n",
            self.results.len(),
            self.max_genus
        ));
        s
    }
}

fn run_once(limits: Limits) -> Vec<CriterionResult> {
    crate::par::map(&SUITE, |c| c(limits))
}

/// Runs the suite, then runs it again and adds a determinism verdict.
pub fn run(limits: Limits) -> Report {
    let first = run_once(limits);
    let second = run_once(limits);
    let same = first == second;
    let mut results = first;
    results.push(CriterionResult {
        id: 12,
        name: "determinism",
        claim: "repeated runs give identical results",
        passed: same,
        detail: if same {
            "two runs agree".into()
        } else {
            "runs differ".into()
        },
    });
    Report {
        max_genus: limits.max_genus,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = run(Limits { max_genus: 2 });
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(
            r.results.iter().map(|c| c.id).collect::<Vec<_>>(),
            (1..=12).collect::<Vec<_>>()
        );
    }

    #[test]
    fn literal_congruence_grid_fails_on_torus_products() {
        let r = congruence_all(Limits { max_genus: 2 });
        assert!(!r.passed);
        assert!(congruence_in_scope(Limits { max_genus: 2 }).passed);
    }
}
