use serde::{Deserialize, Serialize};

use super::product::{product_lattice, product_series};
use super::series::{int, pair, pow2, DonaldsonSeries};
use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::groebner::linalg::solve_in_span;

/// Data for gluing two manifolds along a surface `Σ` of genus `g` with
/// `Σ² = 0`. A class `D` of the result splits as `D̄₁ = M₁ D` and
/// `D̄₂ = M₂ D`, and `Σ` is given in all three lattices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiberSumInput {
    pub a: DonaldsonSeries,
    pub b: DonaldsonSeries,
    pub genus: u32,
    pub basis: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<i64>>,
    pub sigma: Vec<i64>,
    pub sigma_a: Vec<i64>,
    pub sigma_b: Vec<i64>,
    pub split_a: Vec<Vec<i64>>,
    pub split_b: Vec<Vec<i64>>,
}

/// The gluing data that lives outside the two series, as read from a file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Pairing {
    pub basis: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<i64>>,
    pub sigma: Vec<i64>,
    pub sigma_a: Vec<i64>,
    pub sigma_b: Vec<i64>,
    pub split_a: Vec<Vec<i64>>,
    pub split_b: Vec<Vec<i64>>,
}

impl FiberSumInput {
    pub fn from_pairing(a: DonaldsonSeries, b: DonaldsonSeries, genus: u32, p: Pairing) -> Self {
        FiberSumInput {
            a,
            b,
            genus,
            basis: p.basis,
            q: p.q,
            sigma: p.sigma,
            sigma_a: p.sigma_a,
            sigma_b: p.sigma_b,
            split_a: p.split_a,
            split_b: p.split_b,
        }
    }

    /// `Σ_g × Σ_{h1}` and `Σ_g × Σ_{h2}` glued along `Σ_g × pt`, which gives
    /// `Σ_g × Σ_{h1+h2}`. `D = xE + yF` splits as `xE₁ + yF₁` and `yF₂`.
    pub fn products(g: u32, h1: u32, h2: u32) -> Self {
        let lattice = product_lattice();
        FiberSumInput {
            a: product_series(g, h1),
            b: product_series(g, h2),
            genus: g,
            basis: lattice.basis.clone(),
            q: lattice.q.clone(),
            sigma: vec![1, 0],
            sigma_a: vec![1, 0],
            sigma_b: vec![1, 0],
            split_a: vec![vec![1, 0], vec![0, 1]],
            split_b: vec![vec![0, 0], vec![0, 1]],
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.basis.len();
        if !self.a.simple_type || !self.b.simple_type {
            return Err(Error::NotSimpleType);
        }
        let shape = |m: &[Vec<i64>], rows: usize, what: &str| -> Result<()> {
            if m.len() != rows || m.iter().any(|r| r.len() != n) {
                return Err(Error::Lattice(format!("{what} must be {rows}x{n}")));
            }
            Ok(())
        };
        shape(&self.q, n, "Q")?;
        shape(&self.split_a, self.a.rank(), "split_a")?;
        shape(&self.split_b, self.b.rank(), "split_b")?;
        if self.sigma.len() != n
            || self.sigma_a.len() != self.a.rank()
            || self.sigma_b.len() != self.b.rank()
        {
            return Err(Error::Lattice("Σ has the wrong length".into()));
        }
        if pair(&self.q, &self.sigma, &self.sigma) != 0
            || self.a.pairing(&self.sigma_a, &self.sigma_a) != 0
            || self.b.pairing(&self.sigma_b, &self.sigma_b) != 0
        {
            return Err(Error::Lattice("Σ must have square zero".into()));
        }
        // D² = D̄₁² + D̄₂² for every D.
        for i in 0..n {
            for j in 0..n {
                let ci: Vec<i64> = self.split_a.iter().map(|r| r[i]).collect();
                let cj: Vec<i64> = self.split_a.iter().map(|r| r[j]).collect();
                let di: Vec<i64> = self.split_b.iter().map(|r| r[i]).collect();
                let dj: Vec<i64> = self.split_b.iter().map(|r| r[j]).collect();
                if self.a.pairing(&ci, &cj) + self.b.pairing(&di, &dj) != self.q[i][j] {
                    return Err(Error::Lattice(
                        "split does not preserve the intersection form".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The class `C` with `C · D = K · D̄₁ + L · D̄₂ + s (Σ · D)` for all `D`.
    fn result_class(&self, k: &[i64], l: &[i64], s: i64) -> Result<Vec<i64>> {
        let n = self.basis.len();
        let rhs: Vec<GaussianRational> = (0..n)
            .map(|j| {
                let da: Vec<i64> = self.split_a.iter().map(|r| r[j]).collect();
                let db: Vec<i64> = self.split_b.iter().map(|r| r[j]).collect();
                let mut e = vec![0; n];
                e[j] = 1;
                GaussianRational::from_int(
                    self.a.pairing(k, &da)
                        + self.b.pairing(l, &db)
                        + s * pair(&self.q, &self.sigma, &e),
                )
            })
            .collect();
        let cols: Vec<Vec<GaussianRational>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| GaussianRational::from_int(self.q[i][j]))
                    .collect()
            })
            .collect();
        let c = solve_in_span(&cols, &rhs)
            .ok_or_else(|| Error::Lattice("exponent is not a class of the result".into()))?;
        c.iter()
            .map(|x| {
                if !x.is_real() || !x.re().is_integer() {
                    return Err(Error::Lattice("exponent is not an integral class".into()));
                }
                Ok(x.re().to_integer().try_into().expect("small class"))
            })
            .collect()
    }
}

/// Donaldson series of the fiber sum along a surface of genus `g`.
pub fn fiber_sum(input: &FiberSumInput) -> Result<DonaldsonSeries> {
    input.validate()?;
    let g = input.genus;
    if g == 0 {
        return Err(Error::InvalidArgument(
            "gluing genus must be at least 1".into(),
        ));
    }
    if input.q.len() != input.basis.len() || rank(&input.q) != input.basis.len() {
        return Err(Error::Lattice(
            "result intersection form is degenerate".into(),
        ));
    }
    let mut out = DonaldsonSeries::new(input.basis.clone(), input.q.clone())?;
    let top = 2 * g as i64 - 2;
    for (k, a) in input.a.terms() {
        let ks = input.a.pairing(k, &input.sigma_a);
        for (l, b) in input.b.terms() {
            let ls = input.b.pairing(l, &input.sigma_b);
            let ab = a * b;
            if g == 1 {
                // sinh²(x) = (e^{2x} − 2 + e^{−2x}) / 4
                for (s, w) in [
                    (2, int(1) / int(4)),
                    (0, int(-1) / int(2)),
                    (-2, int(1) / int(4)),
                ] {
                    out.add_term(input.result_class(k, l, s)?, &ab * w)?;
                }
                continue;
            }
            if ks != ls || ks.abs() != top {
                continue;
            }
            let mut c = &ab * pow2(7 * g - 9);
            let s = if ks > 0 { 2 } else { -2 };
            if ks < 0 && g.is_multiple_of(2) {
                c = -c;
            }
            out.add_term(input.result_class(k, l, s)?, c)?;
        }
    }
    Ok(out)
}

fn rank(q: &[Vec<i64>]) -> usize {
    let m =
        crate::groebner::Matrix::from_int_rows(&q.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
    crate::groebner::linalg::rank(&m)
}

/// `[(2g−2)/4] + 1` when `b₁ = 0`, else `Σ_{i=1}^{g} ([(2g−2i)/4] + 1)`.
pub fn finite_type_order(g: u32, b1_zero: bool) -> u32 {
    if g == 0 {
        return 0;
    }
    if b1_zero {
        (2 * g - 2) / 4 + 1
    } else {
        (1..=g).map(|i| (2 * g - 2 * i) / 4 + 1).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    #[serde(rename = "K")]
    pub k: Vec<i64>,
    pub pairing: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub genus: u32,
    pub classes: Vec<ClassVerdict>,
    pub pass: bool,
}

/// `K · Σ ≡ 2g − 2 (mod 4)` for every class, `Σ` given in the series' basis.
pub fn congruence_check(
    series: &DonaldsonSeries,
    sigma: &[i64],
    g: u32,
) -> Result<CongruenceReport> {
    if sigma.len() != series.rank() {
        return Err(Error::Lattice("Σ has the wrong length".into()));
    }
    let target = (2 * g as i64 - 2).rem_euclid(4);
    let classes: Vec<ClassVerdict> = series
        .terms()
        .map(|(k, _)| {
            let p = series.pairing(k, sigma);
            ClassVerdict {
                k: k.clone(),
                pairing: p,
                ok: p.rem_euclid(4) == target,
            }
        })
        .collect();
    let pass = classes.iter().all(|c| c.ok);
    Ok(CongruenceReport {
        genus: g,
        classes,
        pass,
    })
}
