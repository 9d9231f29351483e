use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ccx_core::automorphism::{
    classify, parse_aut, ClassifyParams, FiniteCubing, Verdict, DEFAULT_RADIUS, DEFAULT_WINDOW,
};
use ccx_core::complex::{emit_ccx, parse_ccx, validate_with_jobs, CubeComplex};
use ccx_core::demos::{demo_bs, demo_l2};
use ccx_core::error::{Error, Result};
use ccx_core::hyperplanes::{all_halfspaces, walls};
use ccx_core::metric::{crossing_sequence, distance, CombinatorialPath};
use ccx_core::subdivision::subdivide;
use ccx_core::wallspace::{cubulate, emit_embedding, parse_wsp};

#[derive(Parser)]
#[command(name = "ccx", version, about = "Cube complex toolkit")]
struct Cli {
    /// Print only the verdict line.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Worker threads for all-pairs checks.
    #[arg(long, short, default_value_t = 1, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a CCX file as a cubing.
    Check { file: PathBuf },
    /// Print the canonical form of a CCX file.
    Emit { file: PathBuf },
    /// List walls with their sizes and halfspace sizes.
    Hyperplanes { file: PathBuf },
    /// Combinatorial distance between two vertices.
    Dist { file: PathBuf, u: String, v: String },
    /// Decide whether a vertex sequence is a geodesic.
    Geodesic {
        file: PathBuf,
        #[arg(required = true, num_args = 1..)]
        vertices: Vec<String>,
    },
    /// Write the cubical subdivision.
    Subdivide {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify an automorphism.
    Classify {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        max_power: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Cubulate a WSP wallspace.
    Cubulate {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
    /// Run a built-in example.
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand)]
enum Demo {
    /// Shift-plus-basis-vector map on finitely supported sequences.
    L2 {
        #[arg(long, default_value_t = 6)]
        window: usize,
        #[arg(long, default_value_t = 5)]
        axis: usize,
    },
    /// Baumslag–Solitar group acting on its Bass–Serre tree.
    Bs {
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
}

/// Collected output. The verdict line and any document survive `--quiet`.
struct Report {
    verdict: String,
    document: Option<String>,
    details: Vec<String>,
    code: u8,
}

impl Report {
    fn new(verdict: impl Into<String>, code: u8) -> Self {
        Report {
            verdict: verdict.into(),
            document: None,
            details: Vec::new(),
            code,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn load(path: &Path) -> Result<CubeComplex> {
    parse_ccx(&read(path)?)
}

/// Writes `text` to `path`, or makes it the whole of stdout so the output
/// can be piped.
fn write_or_print(path: Option<&Path>, text: &str, r: &mut Report) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            r.verdict.clear();
            r.details.clear();
            r.document = Some(text.to_owned());
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Report> {
    let tsv = cli.format == Format::Tsv;
    match &cli.command {
        Command::Check { file } => {
            let x = load(file)?;
            let report = validate_with_jobs(&x, cli.jobs.max(1));
            if report.is_cubing() {
                return Ok(Report::new(format!("valid cubing: {}", x.summary()), 0));
            }
            let mut r = Report::new(format!("not a cubing: {}", x.summary()), 1);
            for (name, ok) in [
                ("closure", report.closure_ok),
                ("compatibility", report.compatibility_ok),
                ("flag links", report.links_flag_ok),
                ("median", report.median_ok),
            ] {
                r.details
                    .push(format!("{name}: {}", if ok { "ok" } else { "FAILED" }));
            }
            r.details
                .extend(report.failures.iter().map(|d| d.to_string()));
            Ok(r)
        }
        Command::Emit { file } => {
            let mut r = Report::new(String::new(), 0);
            r.document = Some(emit_ccx(&load(file)?));
            Ok(r)
        }
        Command::Hyperplanes { file } => {
            let x = load(file)?;
            let ws = walls(&x);
            let hs = all_halfspaces(&x, &ws)?;
            let mut r = Report::new(format!("{} walls", ws.len()), 0);
            if tsv {
                r.details.push("wall\tedges\tside0\tside1".into());
            }
            for (w, h) in ws.iter().zip(&hs) {
                let (a, b) = (h.side(false).len(), h.side(true).len());
                r.details.push(if tsv {
                    format!("{}\t{}\t{a}\t{b}", w.id, w.len())
                } else {
                    format!("wall {}: {} edges, sides {a}/{b}", w.id, w.len())
                });
            }
            Ok(r)
        }
        Command::Dist { file, u, v } => {
            let x = load(file)?;
            let d = distance(&x, x.vertex(u)?, x.vertex(v)?)?;
            Ok(Report::new(
                if tsv {
                    format!("{u}\t{v}\t{d}")
                } else {
                    d.to_string()
                },
                0,
            ))
        }
        Command::Geodesic { file, vertices } => {
            let x = load(file)?;
            let ws = walls(&x);
            let path = CombinatorialPath::from_tokens(&x, vertices)?;
            let cs = crossing_sequence(&x, &ws, &path)?;
            let mut r = match cs.first_repeat() {
                None => Report::new("geodesic", 0),
                Some(w) => Report::new(format!("not-geodesic {w}"), 1),
            };
            if path.was_stuttering() {
                r.details
                    .push("repeated consecutive vertices were collapsed".into());
            }
            let seq: Vec<String> = cs.walls.iter().map(usize::to_string).collect();
            r.details.push(format!("crossings: {}", seq.join(" ")));
            Ok(r)
        }
        Command::Subdivide { file, output } => {
            let s = subdivide(&load(file)?)?;
            let mut r = Report::new(format!("subdivision: {}", s.subdivided.summary()), 0);
            write_or_print(output.as_deref(), &emit_ccx(&s.subdivided), &mut r)?;
            Ok(r)
        }
        Command::Classify {
            file,
            map,
            max_power,
            radius,
            window,
        } => {
            let x = load(file)?;
            let f = parse_aut(&x, &read(map)?)?;
            let g = FiniteCubing::new(x)?;
            let params = ClassifyParams {
                max_power: *max_power,
                radius: *radius,
                window: *window,
            };
            let c = classify(&g, &f, &params)?;
            let t = |v| g.complex.token(v).to_owned();
            let mut r = match &c.verdict {
                Verdict::InversionFound { wall, power } => {
                    Report::new(format!("inversion along wall {wall} at power {power}"), 1)
                }
                Verdict::Elliptic { fixed } => {
                    Report::new(format!("elliptic: fixes {}", t(*fixed)), 0)
                }
                Verdict::Hyperbolic {
                    delta,
                    witness,
                    axis,
                } => {
                    let mut r = Report::new(
                        format!("hyperbolic: delta {delta}, witness {}", t(*witness)),
                        0,
                    );
                    let toks: Vec<String> = axis.vertices.iter().map(|v| t(*v)).collect();
                    r.details.push(format!("axis: {}", toks.join(" ")));
                    r
                }
                Verdict::Indeterminate { best, .. } => {
                    let mut r = Report::new("indeterminate", 3);
                    if let Some((d, v)) = best {
                        r.details
                            .push(format!("least displacement {d} at {}", t(*v)));
                    }
                    r
                }
            };
            r.details.extend(c.certificate);
            Ok(r)
        }
        Command::Cubulate {
            file,
            output,
            embedding,
        } => {
            let w = parse_wsp(&read(file)?)?;
            let c = cubulate(&w)?;
            let mut r = Report::new(format!("cubulation: {}", c.complex.summary()), 0);
            write_or_print(output.as_deref(), &emit_ccx(&c.complex), &mut r)?;
            if let Some(p) = embedding {
                fs::write(p, emit_embedding(&w, &c))?;
            }
            Ok(r)
        }
        Command::Demo(Demo::L2 { window, axis }) => {
            let rep = demo_l2(*window, *axis)?;
            Ok(demo_report(rep.passed(), &rep.to_string()))
        }
        Command::Demo(Demo::Bs { m, n, radius }) => {
            let rep = demo_bs(*m, *n, *radius)?;
            Ok(demo_report(rep.passed(), &rep.to_string()))
        }
    }
}

fn demo_report(passed: bool, text: &str) -> Report {
    let mut r = Report::new(
        if passed { "demo passed" } else { "demo FAILED" },
        u8::from(!passed),
    );
    r.details.extend(text.lines().map(str::to_owned));
    r
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SeparationFailure { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            if !r.verdict.is_empty() {
                println!("{}", r.verdict);
            }
            if let Some(doc) = &r.document {
                print!("{doc}");
            }
            if !cli.quiet {
                for line in &r.details {
                    println!("{line}");
                }
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
