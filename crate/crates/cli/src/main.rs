use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use veerlat::pocket::SubsurfaceSpec;
use veerlat::section::{bottom_of, top_of, Section};
use veerlat::veering::{FlipScript, MonodromySpec, TauEdgeRef, VeeringComplex};
use veerlat_cli::pocket::{pocket_report, BoundaryFile};
use veerlat_cli::{exit, exit_code, run_suites, BundleFile, CheckReport, Suite, SuiteOptions};

/// Sections, pockets and instance checks for layered veering triangulations.
#[derive(Parser)]
#[command(name = "veerlat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or inspect bundle files.
    #[command(subcommand)]
    Bundle(BundleCmd),
    /// Sweep layers and extreme sections of edge families.
    #[command(subcommand)]
    Sections(SectionsCmd),
    /// Pockets of an annulus or an explicit τ-boundary.
    Pocket(PocketArgs),
    /// Run property suites and instance checks.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum BundleCmd {
    Build(BuildArgs),
    Info { bundle: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "monodromy")]
struct MonodromyArgs {
    /// LR word such as RRL or R^6L.
    #[arg(long)]
    lr: Option<String>,
    /// Matrix entries a b c d of [[a, b], [c, d]].
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["A", "B", "C", "D"])]
    matrix: Option<Vec<i128>>,
    /// JSON flip script.
    #[arg(long)]
    script: Option<PathBuf>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    monodromy: MonodromyArgs,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// File stem; defaults to the word, or "matrix"/"script".
    #[arg(long)]
    name: Option<String>,
    /// Store only the monodromy, not the built complex.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum SectionsCmd {
    /// Print the sweep layers between two steps.
    Sweep {
        bundle: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<i64>,
    },
    /// The top of T(E).
    Top(EdgesArgs),
    /// The bottom of T(E).
    Bottom(EdgesArgs),
}

#[derive(Args)]
struct EdgesArgs {
    bundle: PathBuf,
    /// Edge references e<orbit>@<level>.
    #[arg(long, num_args = 1.., required = true)]
    edges: Vec<TauEdgeRef>,
}

#[derive(Args)]
struct PocketArgs {
    bundle: PathBuf,
    /// Core slope p/q of an annulus.
    #[arg(long, conflicts_with = "boundary", required_unless_present = "boundary", allow_hyphen_values = true)]
    slope: Option<veerlat::fiber::Slope>,
    /// JSON file with a τ-boundary and an optional seed edge.
    #[arg(long)]
    boundary: Option<PathBuf>,
    /// Build isolated pockets below the 10D threshold.
    #[arg(long)]
    research: bool,
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    bundle: PathBuf,
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<Suite>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples per sampled check.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long)]
    research: bool,
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Bundle(BundleCmd::Build(a)) => build(a),
        Command::Bundle(BundleCmd::Info { bundle }) => {
            let b = load(&bundle)?;
            let c = b.complex()?;
            println!("bundle {}", bundle.display());
            println!("hash {}", b.content_hash);
            println!("cached {}", b.complex.is_some());
            print_complex(&b.monodromy, &c)?;
            Ok(exit::OK)
        }
        Command::Sections(cmd) => sections(cmd),
        Command::Pocket(a) => pocket(a),
        Command::Verify(a) => verify(a),
    }
}

fn load(path: &Path) -> Result<BundleFile> {
    Ok(BundleFile::load(path).with_context(|| format!("loading {}", path.display()))?)
}

fn monodromy(a: &MonodromyArgs) -> Result<(MonodromySpec, String)> {
    if let Some(w) = &a.lr {
        let stem: String = w.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        return Ok((MonodromySpec::word(w), stem));
    }
    if let Some(m) = &a.matrix {
        return Ok((MonodromySpec::Matrix([[m[0], m[1]], [m[2], m[3]]]), "matrix".into()));
    }
    if let Some(p) = &a.script {
        let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let script: FlipScript =
            serde_json::from_str(&text).map_err(|e| veerlat::Error::BadScript(format!("{}: {e}", p.display())))?;
        return Ok((MonodromySpec::Script(script), "script".into()));
    }
    bail!("no monodromy given")
}

fn build(a: BuildArgs) -> Result<i32> {
    let (spec, stem) = monodromy(&a.monodromy)?;
    let (b, c) = BundleFile::build(spec, !a.no_cache)?;
    let path = a.out_dir.join(format!("{}.bundle.json", a.name.unwrap_or(stem)));
    b.save(&path)?;
    println!("wrote {}", path.display());
    print_complex(&b.monodromy, &c)?;
    Ok(exit::OK)
}

fn print_complex(spec: &MonodromySpec, c: &VeeringComplex) -> Result<()> {
    match spec.lr_word()? {
        Some(w) => println!("monodromy {w}"),
        None => println!("monodromy flip script"),
    }
    println!("|F| {}", c.tetrahedra_per_period());
    println!("period {}", c.period());
    println!("chi {}", c.chi());
    println!("components {}", c.component_count());
    println!("{:>5} {:>8} {:>6} {:>9} {:>10}", "orbit", "slope", "color", "lifetime", "component");
    for r in 0..c.period() {
        let slope = c.vector(r).and_then(|v| v.slope()).map_or("-".to_string(), |s| s.to_string());
        let color = c.color(r).map_or("-".to_string(), |x| x.to_string());
        println!("{:>5} {:>8} {:>6} {:>9} {:>10}", r, slope, color, c.edge_death(r) - r, c.component(r));
    }
    Ok(())
}

fn describe(c: &VeeringComplex, t: &Section) -> String {
    let edges: Vec<String> = t
        .edges(c)
        .into_iter()
        .map(|e| {
            let slope = c.vector(e).and_then(|v| v.slope()).map_or(String::new(), |s| format!(" {s}"));
            format!("{}{}", c.edge_ref(e), slope)
        })
        .collect();
    format!("{t}  [{}]", edges.join(", "))
}

fn sections(cmd: SectionsCmd) -> Result<i32> {
    match cmd {
        SectionsCmd::Sweep { bundle, from, to } => {
            let c = load(&bundle)?.complex()?;
            let to = to.unwrap_or(from + c.period());
            for k in from..=to {
                let t = veerlat::section::base_section(&c, k)?;
                println!("{k:>5}  {}", describe(&c, &t));
            }
        }
        SectionsCmd::Top(a) => {
            let c = load(&a.bundle)?.complex()?;
            let e = edge_set(&c, &a.edges)?;
            println!("{}", describe(&c, &top_of(&c, &e)?));
        }
        SectionsCmd::Bottom(a) => {
            let c = load(&a.bundle)?.complex()?;
            let e = edge_set(&c, &a.edges)?;
            println!("{}", describe(&c, &bottom_of(&c, &e)?));
        }
    }
    Ok(exit::OK)
}

fn edge_set(c: &VeeringComplex, refs: &[TauEdgeRef]) -> Result<BTreeSet<i64>> {
    Ok(refs.iter().map(|&r| c.edge_id(r)).collect::<veerlat::Result<_>>()?)
}

fn write_out(dir: &Path, name: &str, json: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, format!("{json}\n"))?;
    Ok(path)
}

fn pocket(a: PocketArgs) -> Result<i32> {
    let c = load(&a.bundle)?.complex()?;
    let (spec, name) = match (&a.slope, &a.boundary) {
        (Some(s), _) => (SubsurfaceSpec::annulus(*s), format!("pocket-{}.json", s.to_string().replace('/', "_"))),
        (None, Some(p)) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let b: BoundaryFile = serde_json::from_str(&text).context("parsing boundary file")?;
            (SubsurfaceSpec::from(b), "pocket-boundary.json".to_string())
        }
        _ => bail!("give --slope or --boundary"),
    };
    let report = match pocket_report(&c, &spec, a.research) {
        Ok(r) => r,
        Err(e @ veerlat::Error::NotCompatible { .. }) => {
            if let veerlat::Error::NotCompatible { pivots, .. } = &e {
                println!("pivot slopes: {pivots}");
            }
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    let json = serde_json::to_string_pretty(&report)?;
    match &a.out_dir {
        Some(dir) => println!("wrote {}", write_out(dir, &name, &json)?.display()),
        None => println!("{json}"),
    }
    Ok(exit::OK)
}

fn verify(a: VerifyArgs) -> Result<i32> {
    let b = load(&a.bundle)?;
    let c = b.complex()?;
    let start = Instant::now();
    let opts = SuiteOptions { seed: a.seed, samples: a.samples, research_mode: a.research };
    let records = run_suites(&c, &a.suites, opts);
    let names = a.suites.iter().map(|s| s.to_string()).collect();
    let report = CheckReport::new(a.seed, &b.content_hash, names, records, start.elapsed().as_millis() as u64);
    let json = report.to_json();
    match &a.out_dir {
        Some(dir) => {
            let suites: Vec<String> = a.suites.iter().map(|s| s.to_string()).collect();
            let path = write_out(dir, &format!("report-{}-seed{}.json", suites.join("+"), a.seed), &json)?;
            for r in report.records.iter().filter(|r| r.failed()) {
                println!("FAIL {} ({}): {:?} vs {:?}", r.check_id, r.anchor, r.lhs, r.rhs);
            }
            let s = &report.summary;
            println!(
                "{} pass, {} fail, {} bound-only, {} recorded, {} skipped; wrote {}",
                s.pass,
                s.fail,
                s.bound_only,
                s.recorded,
                s.skipped,
                path.display()
            );
        }
        None => println!("{json}"),
    }
    Ok(if report.passed() { exit::OK } else { exit::CHECK_FAILED })
}
