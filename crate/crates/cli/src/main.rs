mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use spectra::detrep::{self, DET_SIZE_LIMIT};
use spectra::jumpsys::{check_axiom_j, interval_property_check, maximal_constant_sum_check, ConstantSum};
use spectra::pipeline::{self, PipelineOptions, PipelineStatus};
use spectra::polymat::{self, FULL_SCAN_LIMIT};
use spectra::realcheck::{self, ones};
use spectra::reduce::{self, FloatRepresentation, Tolerances};
use spectra::scalar::parse_rational;
use spectra::{AnyPoly, Error, ExactMatrix, IngletonQuadruple, LatticePointSet, RankTable, Rational, Representation, ScanMode, SubsetMask};

use io::{envelope, render, Inputs, Status};

#[derive(Parser)]
#[command(name = "spectra", version, about = "Exact checks for determinantal representability")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Vámos matroid as JSON.
    Vamos,
    /// Rank of a subset.
    Rank {
        /// `vamos`, `uniform:R:N` or a matroid JSON file.
        #[arg(long, default_value = "vamos")]
        matroid: String,
        /// Comma-separated 1-based elements; empty for the empty set.
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Bases generating polynomial.
    BasesPoly {
        #[arg(long, default_value = "vamos")]
        matroid: String,
    },
    /// Normalization, monotonicity and submodularity of a rank table.
    PolymatroidCheck {
        #[arg(long, conflicts_with = "matroid")]
        table: Option<PathBuf>,
        #[arg(long)]
        matroid: Option<String>,
    },
    /// Ingleton deficit at one quadruple, or a scan.
    Ingleton {
        #[arg(long, conflicts_with = "matroid")]
        table: Option<PathBuf>,
        #[arg(long)]
        matroid: Option<String>,
        /// `paper` or `S1;S2;S3;S4`, e.g. `5,6;7,8;1,4;2,3`.
        #[arg(long, conflicts_with = "scan")]
        quadruple: Option<String>,
        /// `paper-quadruple`, `disjoint-pairs` or `full`.
        #[arg(long)]
        scan: Option<String>,
        #[arg(long, default_value_t = FULL_SCAN_LIMIT)]
        full_scan_limit: usize,
    },
    /// Jump-system axiom, constant-sum maxima and interval property.
    Jumpsystem {
        /// LatticePointSet JSON.
        #[arg(long, group = "source")]
        points: Option<PathBuf>,
        /// Polynomial JSON; its support is checked.
        #[arg(long, group = "source")]
        poly: Option<PathBuf>,
        /// Matroid whose bases polynomial supplies the support.
        #[arg(long, group = "source")]
        matroid: Option<String>,
    },
    /// Expand det(A0 + sum x_i A_i) exactly.
    ExpandDet {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, default_value_t = DET_SIZE_LIMIT)]
        max_matrix_size: usize,
    },
    /// det(B diag(z) B*) by Cauchy-Binet.
    CauchyBinet {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Compare a polynomial with the determinant of a representation.
    VerifyRep {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, default_value_t = DET_SIZE_LIMIT)]
        max_matrix_size: usize,
    },
    /// Shrink a monic pencil to size equal to the degree.
    ReduceRep {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = Tolerances::default().psd)]
        tol_psd: f64,
        #[arg(long, default_value_t = Tolerances::default().rank)]
        tol_rank: f64,
        #[arg(long, default_value_t = Tolerances::default().monic)]
        tol_monic: f64,
    },
    /// Exact real-rootedness of p along random directions.
    RzCheck {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value_t = 100)]
        dirs: usize,
        #[arg(long, env = "SPECTRA_SEED", default_value_t = 42)]
        seed: u64,
    },
    /// deg_t h(e + t x), or the rank table over coordinate vectors.
    HyperbolicRank {
        #[arg(long)]
        poly: PathBuf,
        /// Comma-separated rationals; defaults to all ones.
        #[arg(long)]
        e: Option<String>,
        /// Comma-separated rationals; omit to print the whole rank table.
        #[arg(long)]
        x: Option<String>,
    },
    /// Run the full obstruction argument for a matroid.
    Counterexample {
        #[arg(long, default_value = "vamos")]
        matroid: String,
        #[arg(long, env = "SPECTRA_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 100)]
        dirs: usize,
        /// Largest N for which the rank table of h^N is recomputed.
        #[arg(long, default_value_t = 2)]
        max_power: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Vamos => "vamos",
            Command::Rank { .. } => "rank",
            Command::BasesPoly { .. } => "bases-poly",
            Command::PolymatroidCheck { .. } => "polymatroid-check",
            Command::Ingleton { .. } => "ingleton",
            Command::Jumpsystem { .. } => "jumpsystem",
            Command::ExpandDet { .. } => "expand-det",
            Command::CauchyBinet { .. } => "cauchy-binet",
            Command::VerifyRep { .. } => "verify-rep",
            Command::ReduceRep { .. } => "reduce-rep",
            Command::RzCheck { .. } => "rz-check",
            Command::HyperbolicRank { .. } => "hyperbolic-rank",
            Command::Counterexample { .. } => "counterexample",
        }
    }
}

/// Appends the flag that raises an exceeded budget to the error message.
fn budget(err: Error, flag: &str) -> anyhow::Error {
    match err {
        Error::SizeBudgetExceeded { .. } | Error::ScanBudgetExceeded { .. } => anyhow!("{err}; raise it with {flag}"),
        other => other.into(),
    }
}

fn parse_vector(s: &str) -> anyhow::Result<Vec<Rational>> {
    s.split(',').map(|t| Ok(parse_rational(t.trim())?)).collect()
}

fn rank_table(inputs: &mut Inputs, table: &Option<PathBuf>, matroid: &Option<String>) -> anyhow::Result<RankTable> {
    match (table, matroid) {
        (Some(path), _) => Ok(serde_json::from_value(inputs.read_json(path)?).context("rank table JSON")?),
        (None, Some(m)) => Ok(RankTable::of_matroid(&inputs.matroid(m)?)),
        (None, None) => bail!("pass --table or --matroid"),
    }
}

fn run(cmd: &Command, inputs: &mut Inputs) -> anyhow::Result<(Value, Status)> {
    Ok(match cmd {
        Command::Vamos => (serde_json::to_value(spectra::Matroid::vamos().to_json())?, Status::Ok),
        Command::Rank { matroid, set } => {
            let m = inputs.matroid(matroid)?;
            let s = SubsetMask::parse(set)?.check(m.n())?;
            (json!({ "set": s.elements(), "rank": m.rank(s) }), Status::Ok)
        }
        Command::BasesPoly { matroid } => (inputs.matroid(matroid)?.bases_polynomial().to_json(), Status::Ok),
        Command::PolymatroidCheck { table, matroid } => {
            let r = rank_table(inputs, table, matroid)?;
            let v = polymat::check_polymatroid(&r);
            (json!({ "violations": v }), Status::flag(!v.is_empty()))
        }
        Command::Ingleton { table, matroid, quadruple, scan, full_scan_limit } => {
            let r = rank_table(inputs, table, matroid)?;
            match scan {
                Some(mode) => {
                    let mode: ScanMode = serde_json::from_value(json!(mode))
                        .map_err(|_| anyhow!("--scan takes paper-quadruple, disjoint-pairs or full"))?;
                    let found = polymat::ingleton_scan(&r, mode, *full_scan_limit).map_err(|e| budget(e, "--full-scan-limit"))?;
                    let reports: Vec<Value> = found.iter().map(|r| r.to_json()).collect();
                    (json!({ "mode": mode, "violations": reports }), Status::flag(!found.is_empty()))
                }
                None => {
                    let q = match quadruple.as_deref() {
                        None | Some("paper") => IngletonQuadruple::vamos(),
                        Some(s) => IngletonQuadruple::parse(s)?,
                    };
                    let rep = polymat::ingleton_check(&r, q)?;
                    (rep.to_json(), Status::flag(rep.deficit > 0))
                }
            }
        }
        Command::Jumpsystem { points, poly, matroid } => {
            let set = if let Some(p) = points {
                serde_json::from_value::<LatticePointSet>(inputs.read_json(p)?).context("point set JSON")?
            } else if let Some(p) = poly {
                AnyPoly::from_json(&inputs.read_json(p)?)?.to_gauss().support()
            } else {
                inputs.matroid(matroid.as_deref().unwrap_or("vamos"))?.bases_polynomial().support()
            };
            let axiom = check_axiom_j(&set);
            let interval = interval_property_check(&set);
            let sums = if set.is_empty() { None } else { Some(maximal_constant_sum_check(&set)?) };
            let bad = !axiom.is_empty() || matches!(sums, Some(ConstantSum::Witness { .. }));
            (
                json!({
                    "points": set.len(),
                    "axiom_violations": axiom,
                    "maximal_sum": sums,
                    "interval_violations": interval,
                }),
                // the interval property is reported but is not part of the jump-system axiom
                Status::flag(bad),
            )
        }
        Command::ExpandDet { rep, max_matrix_size } => {
            let rep = Representation::from_json(&inputs.read_json(rep)?)?;
            let p = if rep.is_hermitian() {
                detrep::expand_det_affine(&rep, *max_matrix_size).map(|p| p.to_json())
            } else {
                detrep::expand_det_affine_complex(&rep, *max_matrix_size).map(|p| p.to_json())
            };
            (p.map_err(|e| budget(e, "--max-matrix-size"))?, Status::Ok)
        }
        Command::CauchyBinet { matrix } => {
            let b = ExactMatrix::from_json(&inputs.read_json(matrix)?)?;
            (detrep::cauchy_binet_expand(&b)?.to_json(), Status::Ok)
        }
        Command::VerifyRep { poly, rep, max_matrix_size } => {
            let p = AnyPoly::from_json(&inputs.read_json(poly)?)?.to_gauss();
            let rep = Representation::from_json(&inputs.read_json(rep)?)?;
            let cmp = detrep::verify_representation(&p, &rep, *max_matrix_size).map_err(|e| budget(e, "--max-matrix-size"))?;
            let differs = matches!(cmp, detrep::RepComparison::Differs { .. });
            (cmp.to_json(), Status::flag(differs))
        }
        Command::ReduceRep { rep, degree, tol_psd, tol_rank, tol_monic } => {
            let rep = FloatRepresentation::from_json(&inputs.read_json(rep)?)?;
            let tol = Tolerances { psd: *tol_psd, rank: *tol_rank, monic: *tol_monic, ..Tolerances::default() };
            let report = reduce::reduce(&rep, *degree, &tol);
            let failed = !report.succeeded();
            (serde_json::to_value(&report)?, Status::flag(failed))
        }
        Command::RzCheck { poly, dirs, seed } => {
            let p = AnyPoly::from_json(&inputs.read_json(poly)?)?.rational()?;
            let directions = realcheck::random_directions(p.nvars(), *dirs, *seed);
            let verdicts = realcheck::rz_check(&p, &directions)?;
            let refuted = verdicts.iter().any(|v| !v.real_rooted);
            let verdict = if refuted { "refuted along a sampled direction" } else { "no counterexample found among given directions" };
            (json!({ "seed": seed, "directions": verdicts, "verdict": verdict }), Status::flag(refuted))
        }
        Command::HyperbolicRank { poly, e, x } => {
            let h = AnyPoly::from_json(&inputs.read_json(poly)?)?.rational()?;
            let e = match e {
                Some(s) => parse_vector(s)?,
                None => ones(h.nvars()),
            };
            match x {
                Some(s) => (json!({ "rank": realcheck::hyperbolic_rank(&h, &e, &parse_vector(s)?)? }), Status::Ok),
                None => {
                    let table = polymat::hyperbolic_rank_table(&h, &polymat::standard_basis(h.nvars()), &e)?;
                    (serde_json::to_value(&table)?, Status::Ok)
                }
            }
        }
        Command::Counterexample { matroid, seed, samples, dirs, max_power } => {
            let m = inputs.matroid(matroid)?;
            let opts = PipelineOptions { seed: *seed, stability_samples: *samples, rz_directions: *dirs, max_power: *max_power };
            let verdict = pipeline::counterexample(&m, &opts)?;
            let mut out = verdict.to_json();
            out["seed"] = json!(seed);
            (out, Status::flag(verdict.status == PipelineStatus::Obstruction))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    // resolved parameters, so a seed from the environment digests like --seed
    let mut inputs = Inputs::new(&format!("{:?}", cli.command));
    let (result, status) = match run(&cli.command, &mut inputs) {
        Ok(r) => r,
        Err(e) => {
            let msg = format!("{e:#}");
            eprintln!("spectra {name}: {msg}");
            (json!({ "error": msg }), Status::Error)
        }
    };
    println!("{}", render(&envelope(name, &inputs.digest(), result, status), cli.pretty));
    ExitCode::from(status.exit_code() as u8)
}
