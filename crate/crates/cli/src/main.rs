//! `holdring` command line: digit arithmetic, encoding against the
//! catalog rings, quotient probes, validation and search runs, degree
//! tables and tile figures.
//!
//! Exit codes: 0 success, 1 domain failure (non-terminating carries, no
//! residue digit, invalid verdict under `--expect-valid`), 2 usage.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use holdring::analysis::{self, Verdict};
use holdring::binding::SystemBinding;
use holdring::quotient::QuotientRing;
use holdring::render::{self, Viewport};
use holdring::serialize;
use holdring::{catalog, DigitString, Error, NumberSystem};

#[derive(Parser)]
#[command(name = "holdring", version, about = "hold-driven digit number systems")]
struct Cli {
    /// Emit machine-readable JSON where supported
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Encode a ring element as a digit string
    Encode {
        #[arg(long)]
        system: String,
        /// Step cap for the greedy encoder
        #[arg(long)]
        cap: Option<usize>,
        /// Element, e.g. "5" or "3-2*w"
        element: String,
    },
    /// Evaluate a digit string back to a ring element
    Decode {
        #[arg(long)]
        system: String,
        /// Little-endian comma-separated digits, e.g. "1,0,1"
        digits: String,
    },
    /// Add two digit strings using only the hold map
    Add {
        #[arg(long)]
        system: String,
        #[arg(long)]
        cap: Option<usize>,
        a: String,
        b: String,
    },
    /// Multiply two digit strings using only the hold map
    Mul {
        #[arg(long)]
        system: String,
        #[arg(long)]
        cap: Option<usize>,
        a: String,
        b: String,
    },
    /// Additive structure of R_m: order histogram as JSON
    Quotient {
        #[arg(long)]
        system: String,
        #[arg(short, long)]
        modulus: usize,
    },
    /// Consistency and attractor test of a system
    Validate {
        #[arg(long)]
        system: String,
        /// Coefficient box half-width for orbit starts
        #[arg(long, default_value_t = 60)]
        bound: i64,
        /// Exit non-zero unless the verdict is valid
        #[arg(long)]
        expect_valid: bool,
        /// Random digit-string pairs for the evaluation spot check
        #[arg(long, default_value_t = 200)]
        spot_checks: u64,
    },
    /// Exhaustive quadratic generator search for alphabet order n
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 60)]
        bound: i64,
    },
    /// Base -2 degree table
    Table {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Base -2 degree bound and cumulative interval check
    Bounds {
        #[arg(long, default_value_t = 1000)]
        zmax: i64,
        #[arg(long, default_value_t = 12)]
        dmax: u32,
    },
    /// Render a tile figure to a PPM or SVG file
    Tile {
        #[arg(long)]
        system: String,
        #[arg(long)]
        degree: u32,
        /// Output path; .svg selects SVG, anything else P6 PPM
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 512)]
        res: u32,
        #[arg(long, value_enum, default_value_t = Mode::Points)]
        mode: Mode,
    },
    /// List the built-in systems
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Points,
    Cells,
    Rescaled,
}

/// Built-in binding, or a digit-only system from HOLDRING_CATALOG.
enum Resolved {
    Binding(SystemBinding),
    DigitOnly(NumberSystem),
}

impl Resolved {
    fn system(&self) -> &NumberSystem {
        match self {
            Resolved::Binding(b) => b.system(),
            Resolved::DigitOnly(s) => s,
        }
    }

    fn binding(&self, name: &str) -> Result<&SystemBinding, Error> {
        match self {
            Resolved::Binding(b) => Ok(b),
            Resolved::DigitOnly(_) => Err(Error::Unsupported(format!(
                "{name} comes from an external catalog and has no ring realization"
            ))),
        }
    }
}

fn resolve(name: &str) -> Result<Resolved, Error> {
    if let Some(b) = catalog::find(name) {
        return Ok(Resolved::Binding(b));
    }
    if let Ok(path) = std::env::var("HOLDRING_CATALOG") {
        for sys in serialize::load_catalog_file(std::path::Path::new(&path))? {
            if sys.name().eq_ignore_ascii_case(name) {
                return Ok(Resolved::DigitOnly(sys));
            }
        }
    }
    Err(Error::Unsupported(format!(
        "unknown system {name:?}; see `holdring catalog`"
    )))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Encode {
            system,
            cap,
            element,
        } => {
            let r = resolve(&system)?;
            let b = r.binding(&system)?;
            let z = b.parse_element(&element)?;
            let s = b.encode(&z, cap)?;
            let n = b.system().order();
            if cli.json {
                println!(
                    "{}",
                    json!({"system": b.name(), "element": b.format_element(&z),
                           "digits": s.to_text(n)})
                );
            } else {
                println!("{}", s.to_text(n));
            }
        }
        Cmd::Decode { system, digits } => {
            let r = resolve(&system)?;
            let b = r.binding(&system)?;
            let s = DigitString::parse(&digits, b.system().order())?;
            let z = b.eval_sigma(&s);
            if cli.json {
                println!(
                    "{}",
                    json!({"system": b.name(), "element": b.format_element(&z)})
                );
            } else {
                println!("{}", b.format_element(&z));
            }
        }
        Cmd::Add { system, cap, a, b } => {
            let r = resolve(&system)?;
            let sys = r.system();
            let (x, y) = (
                DigitString::parse(&a, sys.order())?,
                DigitString::parse(&b, sys.order())?,
            );
            let cap = cap.unwrap_or_else(|| sys.default_cap(&x, &y));
            let s = sys.add(&x, &y, cap)?;
            println!("{}", s.to_text(sys.order()));
        }
        Cmd::Mul { system, cap, a, b } => {
            let r = resolve(&system)?;
            let sys = r.system();
            let (x, y) = (
                DigitString::parse(&a, sys.order())?,
                DigitString::parse(&b, sys.order())?,
            );
            let cap = cap.unwrap_or_else(|| sys.default_cap(&x, &y) + x.len() * y.len());
            let s = sys.mul(&x, &y, cap)?;
            println!("{}", s.to_text(sys.order()));
        }
        Cmd::Quotient { system, modulus } => {
            let r = resolve(&system)?;
            let ring = QuotientRing::new(r.system(), modulus);
            let probe = ring.structure_probe()?;
            println!("{}", serde_json::to_string_pretty(&probe).unwrap());
        }
        Cmd::Validate {
            system,
            bound,
            expect_valid,
            spot_checks,
        } => {
            let r = resolve(&system)?;
            let report = validate(&r, bound, spot_checks, cli.seed)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("system: {}", report.system);
                println!("consistency: {}", report.consistency);
                println!("elements checked: {}", report.elements_checked);
                for c in &report.attractor_cycles {
                    println!("cycle: {}", c.join(" -> "));
                }
                for w in report.witness_failures.iter().take(8) {
                    println!("witness failure: {w}");
                }
                println!("verdict: {:?}", report.verdict);
            }
            if expect_valid && report.verdict != Verdict::Valid {
                return Err(Error::InvalidSystem(format!(
                    "{system} verdict {:?}",
                    report.verdict
                )));
            }
        }
        Cmd::Search { n, bound } => {
            let out = analysis::search_quadratic(n, bound)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("accepted:");
                for h in &out.accepted {
                    match h.order {
                        Some((t, c)) => println!(
                            "  {}: X root of x^2 - ({t})x + {c}, hold(1) = {}",
                            h.field, h.hold_one
                        ),
                        None => println!("  {}: X = {}, hold(1) = {}", h.field, h.x, h.hold_one),
                    }
                }
                println!("rejected:");
                for r in &out.rejected {
                    match r.order {
                        Some((t, c)) => {
                            println!("  x^2 - ({t})x + {c}: {}", r.reason)
                        }
                        None => println!("  X = {}: {}", r.x, r.reason),
                    }
                }
            }
        }
        Cmd::Table { max } => {
            let rows = analysis::degree_table(max)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                println!("degree     min     max");
                for r in rows {
                    println!("{:>6}  {:>6}  {:>6}", r.degree, r.min, r.max);
                }
            }
        }
        Cmd::Bounds { zmax, dmax } => {
            let rep = analysis::check_bounds(zmax, dmax)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!(
                    "degree bound deg <= log2(3|z|+2)+1 for 0 < |z| <= {}: {}",
                    rep.z_max,
                    if rep.degree_bound_violations.is_empty() {
                        "pass"
                    } else {
                        "FAIL"
                    }
                );
                println!("max degree seen: {}", rep.max_degree_seen);
                println!(
                    "cumulative ranges equal the j-intervals: {}",
                    if rep.intervals_exact { "pass" } else { "FAIL" }
                );
                for (d, lo, hi) in rep.intervals {
                    println!("  deg <= {d}: [{lo}, {hi}]");
                }
            }
            if !rep.degree_bound_violations.is_empty() || !rep.intervals_exact {
                return Err(Error::InvalidSystem("bounds check failed".into()));
            }
        }
        Cmd::Tile {
            system,
            degree,
            out,
            res,
            mode,
        } => {
            let r = resolve(&system)?;
            let b = r.binding(&system)?;
            let q = b.as_quadratic().ok_or_else(|| {
                Error::Unsupported("tiles need a ring with a complex embedding".into())
            })?;
            let img = match mode {
                Mode::Points => {
                    let pts = render::to_complex(q, &render::tile_points(q, degree)?);
                    let vp = render::auto_viewport(&pts);
                    render::rasterize_points(&pts, vp, res, res, b.name(), degree)?
                }
                Mode::Cells => {
                    // unscaled fundamental-domain translates
                    let mut zn = render::z_n_set(q, degree)?;
                    zn.scale = num_complex::Complex64::new(1.0, 0.0);
                    let pts = render::to_complex(q, &render::tile_points(q, degree)?);
                    let vp = render::auto_viewport(&pts);
                    render::rasterize_cells(&zn, vp, res, res, b.name())?
                }
                Mode::Rescaled => {
                    let zn = render::z_n_set(q, degree)?;
                    render::rasterize_cells(&zn, Viewport::square(2.0), res, res, b.name())?
                }
            };
            if out.extension().is_some_and(|e| e == "svg") {
                img.write_svg(&out)?;
            } else {
                img.write_ppm(&out)?;
            }
            eprintln!(
                "{}: {} points, {}x{}, wrote {}",
                b.name(),
                img.points,
                img.width,
                img.height,
                out.display()
            );
        }
        Cmd::Catalog => {
            let entries = catalog::builtin();
            if cli.json {
                let arr: Vec<_> = entries
                    .iter()
                    .map(|b| {
                        let mut v = serialize::system_to_json(b.system());
                        v["description"] = json!(catalog::describe(b));
                        v
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&arr).unwrap());
            } else {
                for b in &entries {
                    println!("{:<8} {}", b.name(), catalog::describe(b));
                }
            }
        }
    }
    Ok(())
}

/// Consistency + attractor + a seeded evaluation spot check.
fn validate(
    r: &Resolved,
    bound: i64,
    spot_checks: u64,
    seed: u64,
) -> Result<analysis::ValidationReport, Error> {
    match r {
        Resolved::Binding(SystemBinding::Quadratic(q)) => {
            let mut report = analysis::attractor_test(q, bound)?;
            if spot_checks > 0 {
                use rand::{Rng, SeedableRng};
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let sys = q.system();
                let n = sys.order();
                for _ in 0..spot_checks {
                    let mut mk = || {
                        let len = rng.gen_range(0..=8usize);
                        DigitString::from_digits(
                            (0..len)
                                .map(|_| {
                                    let v = rng.gen_range(0..=n);
                                    if v == 0 {
                                        holdring::Digit::Zero
                                    } else {
                                        holdring::Digit::Root(v - 1)
                                    }
                                })
                                .collect(),
                        )
                    };
                    let (a, b) = (mk(), mk());
                    let sum = sys.add(&a, &b, sys.default_cap(&a, &b))?;
                    let lhs = q.eval_sigma(&sum);
                    let rhs = q.eval_sigma(&a).add(&q.eval_sigma(&b));
                    if lhs != rhs {
                        report.consistency = false;
                        report.verdict = Verdict::Invalid;
                        report
                            .witness_failures
                            .push(format!("sum mismatch on {}", a.to_text(n)));
                    }
                }
            }
            Ok(report)
        }
        Resolved::Binding(SystemBinding::Fq(f)) => Ok(analysis::ValidationReport {
            system: f.system().name().to_string(),
            consistency: true,
            witness_failures: vec![],
            attractor_cycles: vec![],
            verdict: Verdict::Valid,
            elements_checked: 0,
        }),
        Resolved::DigitOnly(sys) => Ok(analysis::ValidationReport {
            system: sys.name().to_string(),
            consistency: true,
            witness_failures: vec![],
            attractor_cycles: vec![],
            verdict: Verdict::Inconclusive,
            elements_checked: 0,
        }),
    }
}
