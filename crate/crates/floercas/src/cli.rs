//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 on a usage or input error, 2 when a verified identity fails.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::check::{self, Limits};
use crate::donaldson::{self, DonaldsonSeries, FiberSumInput, Pairing};
use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, TruncatedSeries};
use crate::floer::{self, Flavor};
use crate::fukaya::{self, Component, YHomologyClass};
use crate::groebner::{factor_over_candidates, standard_candidates, EigenReport, QuotientRing};
use crate::poly::{MonomialOrder, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "floercas",
    version,
    about = "Exact algebra for the Floer and Fukaya-Floer rings of Σ × S¹"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Truncation order for power series in t.
    #[arg(long, global = true, default_value_t = crate::exactalg::DEFAULT_ORDER, value_parser = order_parser)]
    trunc: usize,
    #[command(subcommand)]
    cmd: Command,
}

fn order_parser(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n == 0 {
        return Err("must be at least 1".into());
    }
    Ok(n)
}

fn genus_parser(s: &str) -> std::result::Result<u32, String> {
    let n: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if n == 0 {
        return Err("genus must be at least 1".into());
    }
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    #[value(name = "q")]
    Q,
    #[value(name = "R")]
    R,
    #[value(name = "Rbar")]
    Rbar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    #[value(name = "F")]
    F,
    #[value(name = "Fbar")]
    Fbar,
    #[value(name = "filtration")]
    Filtration,
    #[value(name = "K")]
    K,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Floer cohomology HF*_g as a sum of quotient rings.
    Ring {
        #[arg(long, value_parser = genus_parser)]
        genus: u32,
        /// Only the summand F_g.
        #[arg(long)]
        invariant_only: bool,
    },
    /// Relation polynomials of level r.
    Relations {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        r: u32,
    },
    /// Spectra of α, β, γ on a ring or subquotient.
    Eigen {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum)]
        object: Object,
    },
    /// Reduced Fukaya-Floer module for n copies of the loop.
    Rhff {
        #[arg(long, value_parser = genus_parser)]
        genus: u32,
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
    /// Effective Fukaya-Floer eigenvalues.
    Effective {
        #[arg(long, value_parser = genus_parser)]
        genus: u32,
    },
    /// Fukaya-Floer module for a loop δ in Σ.
    Delta {
        #[arg(long, value_parser = genus_parser)]
        genus: u32,
    },
    /// Action of a homology class of Σ × S¹ on the line R_i.
    Mu {
        #[arg(long, value_parser = genus_parser)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        /// Sum of terms `[c*]atom`, atoms pt, S1, g<j>, Sigma, T<j> (T<j> = γ_j × S¹).
        #[arg(long = "class")]
        class: String,
    },
    /// Donaldson series calculators.
    Donaldson {
        #[command(subcommand)]
        cmd: DonaldsonCmd,
    },
    /// Runs the verification suite.
    Check {
        #[arg(long, default_value_t = 4, value_parser = genus_parser)]
        max_genus: u32,
    },
}

#[derive(Subcommand, Debug)]
enum DonaldsonCmd {
    /// Series of Σ_g × Σ_h.
    Product {
        #[arg(long, value_parser = genus_parser)]
        g: u32,
        #[arg(long, value_parser = genus_parser)]
        h: u32,
    },
    /// Evaluates a series on a class.
    Eval {
        #[arg(long)]
        series: PathBuf,
        #[arg(long = "class", allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_parser = order_parser)]
        order: Option<usize>,
    },
    /// Fiber sum of two series along a surface.
    Fibersum(FiberSumArgs),
    /// Finite-type order bound.
    Order {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        b1_zero: bool,
    },
    /// Checks K·Σ ≡ 2g−2 (mod 4) on every class.
    Congruence {
        #[arg(long)]
        series: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, value_parser = genus_parser)]
        genus: u32,
    },
}

#[derive(Args, Debug)]
struct FiberSumArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
    #[arg(long, value_parser = genus_parser)]
    genus: u32,
    /// JSON file with basis, Q, sigma, sigma_a, sigma_b, split_a, split_b.
    #[arg(long)]
    pairing: PathBuf,
}

/// What a command produced: a JSON value, its text rendering, and whether a
/// verified identity failed.
struct Output {
    json: Value,
    text: String,
    falsified: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            falsified: false,
        }
    }
}

pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{e}");
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        1
                    } else {
                        0
                    }
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json") + "\n",
                Format::Text => o.text,
            };
            if out.write_all(body.as_bytes()).is_err() {
                return 1;
            }
            if o.falsified {
                2
            } else {
                0
            }
        }
        Err(Error::Falsified(msg)) => {
            let _ = writeln!(err, "falsified: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let n = cli.trunc;
    match &cli.cmd {
        Command::Ring {
            genus,
            invariant_only,
        } => Ok(ring(*genus, *invariant_only)),
        Command::Relations { flavor, r } => Ok(relations(*flavor, *r)),
        Command::Eigen { r, object } => eigen(*r, *object),
        Command::Rhff { genus, n: loops } => {
            let m = fukaya::rhff(*genus, *loops, n);
            let text = format!(
                "reduced HFF, g={}, n={}: rank {}\n{}",
                genus,
                loops,
                m.rank(),
                components_text(&m.components)
            );
            Ok(Output::ok(serde_json::to_value(&m)?, text))
        }
        Command::Effective { genus } => {
            let c = fukaya::effective_eigenvalues(*genus, n);
            let text = format!("effective eigenvalues, g={genus}\n{}", components_text(&c));
            Ok(Output::ok(
                json!({ "genus": genus, "eigenvalues": c }),
                text,
            ))
        }
        Command::Delta { genus } => {
            let m = fukaya::delta_hff(*genus, n);
            let text = format!(
                "δ-module, g={}: total rank {}\n{}",
                genus,
                m.total_rank(),
                components_text(&m.components)
            );
            let mut j = serde_json::to_value(&m)?;
            j["total_rank"] = json!(m.total_rank());
            Ok(Output::ok(j, text))
        }
        Command::Mu { genus, i, class } => {
            let a = parse_class(*genus, class)?;
            let v = fukaya::mu_action(*genus, *i, &a, n)?;
            let what = match a.grade() {
                0 => "-4μ(pt)",
                1 => "μ(a)",
                _ => "2μ(a)",
            };
            let text = format!("{what} on R_{i} = {}\n", v.to_text());
            Ok(Output::ok(
                json!({ "genus": genus, "i": i, "class": a, "value": v }),
                text,
            ))
        }
        Command::Donaldson { cmd } => donaldson_cmd(cmd, n),
        Command::Check { max_genus } => {
            let report = check::run(Limits {
                max_genus: *max_genus,
            });
            let falsified = !report.passed();
            Ok(Output {
                json: serde_json::to_value(&report)?,
                text: report.to_text(),
                falsified,
            })
        }
    }
}

fn spectra(ring: &QuotientRing, r: u32) -> Vec<EigenReport> {
    let c = standard_candidates(r as i64 + 1);
    Var::ALL
        .iter()
        .map(|v| factor_over_candidates(&ring.char_poly(*v), &c))
        .collect()
}

fn report_text(name: &str, rep: &EigenReport) -> String {
    let roots: Vec<String> = rep
        .roots
        .iter()
        .map(|(v, m)| {
            if *m == 1 {
                v.to_text()
            } else {
                format!("{}^{m}", v.to_text())
            }
        })
        .collect();
    let rest = if rep.is_complete() {
        String::new()
    } else {
        format!(" (unfactored {:?})", rep.remainder)
    };
    format!("  {name}: {}{rest}\n", roots.join(", "))
}

fn ring(g: u32, invariant_only: bool) -> Output {
    let fr = floer::hf_assemble(g);
    let mut j = fr.to_json();
    let mut text = format!("HF*_{g}: total dim {}\n", fr.total_dim);
    let spectra = fr.spectra();
    for (s, sp) in fr.summands.iter().zip(&spectra) {
        if invariant_only && s.k != 0 {
            continue;
        }
        text.push_str(&format!(
            "k={} multiplicity {} × F_{} (dim {})\n",
            s.k,
            s.multiplicity,
            s.level(g),
            s.ring.dim()
        ));
        for (v, rep) in Var::ALL.iter().zip(sp) {
            if s.ring.dim() > 0 {
                text.push_str(&report_text(v.name(), rep));
            }
        }
    }
    if invariant_only {
        let keep: Vec<Value> = j["summands"]
            .as_array()
            .expect("array")
            .iter()
            .filter(|s| s["k"] == 0)
            .cloned()
            .collect();
        j["summands"] = Value::Array(keep);
        j["invariant_dim"] = json!(fr.summands[0].ring.dim());
    }
    Output::ok(j, text)
}

fn relations(flavor: FlavorArg, r: u32) -> Output {
    let f = match flavor {
        FlavorArg::Q => Flavor::Classical,
        FlavorArg::R => Flavor::Floer,
        FlavorArg::Rbar => Flavor::Reduced,
    };
    let t = floer::relations(f, r);
    let ord = MonomialOrder::default();
    let mut text = String::new();
    for (k, p) in t.polys.iter().enumerate() {
        let mut s = p.to_text(ord);
        if f == Flavor::Classical {
            s = s.replace('α', "a").replace('β', "b").replace('γ', "c");
        }
        text.push_str(&format!("{}^{}_{} = {}\n", f.name(), k + 1, r, s));
    }
    Output::ok(t.to_json(ord), text)
}

fn eigen(r: u32, object: Object) -> Result<Output> {
    match object {
        Object::F | Object::Fbar => {
            let ring = if object == Object::F {
                floer::build_f(r)
            } else {
                floer::build_fbar(r)
            };
            let reps = spectra(&ring, r);
            let name = if object == Object::F { "F" } else { "F̄" };
            let mut text = format!("{name}_{r}: dim {}\n", ring.dim());
            for (v, rep) in Var::ALL.iter().zip(&reps) {
                text.push_str(&report_text(v.name(), rep));
            }
            let falsified = !reps.iter().all(EigenReport::is_complete);
            Ok(Output {
                json: json!({ "object": name, "r": r, "dim": ring.dim(), "eigen": reps }),
                text,
                falsified,
            })
        }
        Object::Filtration | Object::K => {
            let (m, expected, cand, name, want_dim) = if object == Object::Filtration {
                (
                    floer::filtration_step(r)?,
                    floer::filtration_expected(r),
                    standard_candidates(r as i64 + 1),
                    "filtration",
                    r as usize + 1,
                )
            } else {
                (
                    floer::build_k(r)?,
                    floer::k_expected(r),
                    standard_candidates(r as i64),
                    "K",
                    r as usize,
                )
            };
            let spec = m.joint_spectrum(&cand);
            let mut text = format!("{name} r={r}: dim {}\n", m.dim());
            let mut falsified =
                m.dim() != want_dim || !m.eigen.iter().all(EigenReport::is_complete);
            let lines: Vec<Value> = match &spec {
                Ok(s) => {
                    falsified |= !floer::matches_expected(s, &expected);
                    for (v, mult) in s {
                        let t: Vec<String> = v.iter().map(GaussianRational::to_text).collect();
                        text.push_str(&format!("  (α, β, γ) = ({}) × {mult}\n", t.join(", ")));
                    }
                    s.iter().map(|(v, mult)| json!({ "alpha": v[0], "beta": v[1], "gamma": v[2], "mult": mult })).collect()
                }
                Err(e) => {
                    falsified = true;
                    text.push_str(&format!("  {e}\n"));
                    Vec::new()
                }
            };
            let mut j = m.to_json();
            j["object"] = json!(name);
            j["r"] = json!(r);
            j["joint_spectrum"] = Value::Array(lines);
            Ok(Output {
                json: j,
                text,
                falsified,
            })
        }
    }
}

fn components_text(cs: &[Component]) -> String {
    cs.iter()
        .map(|c| {
            let k = c.k.map(|k| format!("k={k} ")).unwrap_or_default();
            let m = if c.multiplicity != 1 {
                format!(" × {}", c.multiplicity)
            } else {
                String::new()
            };
            format!(
                "  {k}i={}: α = {}, β = {}, γ = {}{m}\n",
                c.i,
                c.alpha.to_text(),
                c.beta.to_text(),
                c.gamma.to_text()
            )
        })
        .collect()
}

/// Parses `[c*]atom + ...`; see the `mu` help text.
fn parse_class(g: u32, s: &str) -> Result<YHomologyClass> {
    let n = 2 * g as usize;
    let bad = |m: String| Error::Parse(m);
    let mut grade: Option<u8> = None;
    let (mut pt, mut s1, mut sigma) = (0i64, 0i64, 0i64);
    let mut curve = vec![0i64; n];
    let mut torus = vec![0i64; n];
    let normalized = s.replace(' ', "").replace('-', "+-");
    for term in normalized.split('+').filter(|t| !t.is_empty()) {
        let (c, atom) = match term.split_once('*') {
            Some((c, a)) => (
                c.parse::<i64>()
                    .map_err(|_| bad(format!("bad coefficient in `{term}`")))?,
                a,
            ),
            None => match term.strip_prefix('-') {
                Some(a) => (-1, a),
                None => (1, term),
            },
        };
        let index = |rest: &str| -> Result<usize> {
            let j: usize = rest
                .parse()
                .map_err(|_| bad(format!("bad index in `{term}`")))?;
            if j == 0 || j > n {
                return Err(bad(format!("index {j} out of range 1..={n}")));
            }
            Ok(j - 1)
        };
        let gr = match atom {
            "pt" => {
                pt += c;
                0
            }
            "S1" => {
                s1 += c;
                1
            }
            "Sigma" => {
                sigma += c;
                2
            }
            _ if atom.starts_with('g') => {
                curve[index(&atom[1..])?] += c;
                1
            }
            _ if atom.starts_with('T') => {
                torus[index(&atom[1..])?] += c;
                2
            }
            _ => return Err(bad(format!("unknown class `{atom}`"))),
        };
        if grade.is_some_and(|x| x != gr) {
            return Err(bad("class mixes grades".into()));
        }
        grade = Some(gr);
    }
    match grade {
        Some(0) => Ok(YHomologyClass::Point { multiplicity: pt }),
        Some(1) => Ok(YHomologyClass::Curve {
            circle_coeff: s1,
            surface_coeffs: curve,
        }),
        Some(2) => Ok(YHomologyClass::Surface {
            sigma_coeff: sigma,
            torus_coeffs: torus,
        }),
        _ => Err(bad("empty class".into())),
    }
}

fn parse_vector(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{x}`")))
        })
        .collect()
}

fn read_series(p: &PathBuf) -> Result<DonaldsonSeries> {
    Ok(serde_json::from_str(&std::fs::read_to_string(p)?)?)
}

fn series_text(s: &DonaldsonSeries) -> String {
    let mut text = format!("basis {:?}, Q = {:?}\n", s.basis, s.q);
    if s.is_empty() {
        text.push_str("  (no basic classes)\n");
    }
    for (k, a) in s.terms().collect::<Vec<_>>().into_iter().rev() {
        text.push_str(&format!("  {} · e^{:?}\n", a, k));
    }
    text
}

fn series_json(t: &TruncatedSeries) -> Value {
    serde_json::to_value(t).expect("series serializes")
}

fn donaldson_cmd(cmd: &DonaldsonCmd, trunc: usize) -> Result<Output> {
    match cmd {
        DonaldsonCmd::Product { g, h } => {
            let s = donaldson::product_series(*g, *h);
            Ok(Output::ok(
                serde_json::to_value(&s)?,
                format!("Σ_{g} × Σ_{h}\n{}", series_text(&s)),
            ))
        }
        DonaldsonCmd::Eval {
            series,
            class,
            order,
        } => {
            let s = read_series(series)?;
            let d = parse_vector(class)?;
            let e = donaldson::evaluate(&s, &d, order.unwrap_or(trunc))?;
            Ok(Output::ok(
                json!({ "class": d, "value": series_json(&e) }),
                format!("{}\n", e.to_text()),
            ))
        }
        DonaldsonCmd::Fibersum(a) => {
            let pairing: Pairing = serde_json::from_str(&std::fs::read_to_string(&a.pairing)?)?;
            let input = FiberSumInput::from_pairing(
                read_series(&a.a)?,
                read_series(&a.b)?,
                a.genus,
                pairing,
            );
            let s = donaldson::fiber_sum(&input)?;
            Ok(Output::ok(serde_json::to_value(&s)?, series_text(&s)))
        }
        DonaldsonCmd::Order { genus, b1_zero } => {
            let o = donaldson::finite_type_order(*genus, *b1_zero);
            Ok(Output::ok(
                json!({ "genus": genus, "b1_zero": b1_zero, "order": o }),
                format!("{o}\n"),
            ))
        }
        DonaldsonCmd::Congruence {
            series,
            sigma,
            genus,
        } => {
            let s = read_series(series)?;
            let rep = donaldson::congruence_check(&s, &parse_vector(sigma)?, *genus)?;
            let mut text = String::new();
            for c in &rep.classes {
                text.push_str(&format!(
                    "  K={:?}: K·Σ = {} {}\n",
                    c.k,
                    c.pairing,
                    if c.ok { "ok" } else { "FAIL" }
                ));
            }
            text.push_str(if rep.pass { "pass\n" } else { "fail\n" });
            Ok(Output::ok(serde_json::to_value(&rep)?, text))
        }
    }
}
