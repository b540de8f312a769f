use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bqt_core::bqt::{BWord, LVector};
use bqt_core::daha::{apply_word, GeneratorWord, Realization, TVariant};
use bqt_core::family::{ModuleSpec, SeqSpec};
use bqt_core::io::{format_vector, parse_vector, vector_from_json, vector_to_json};
use bqt_core::limit::{DimTable, LimitConfig, StableLimit};
use bqt_core::syt::YoungDiagram;
use bqt_core::verify::{
    all_pass, check_aux_identities, check_bqt_relations, check_compatibility_with, check_daha_relations,
    check_theta_spectra, CheckConfig, RelationReport,
};

#[derive(Parser)]
#[command(name = "bqt", version, about = "Exact relation checks and stable limits for B_{q,t} representations")]
struct Cli {
    /// Worker threads (defaults to every available core).
    #[arg(long, env = "BQT_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a relation suite and emit a JSON report.
    Check(CheckArgs),
    /// Apply a generator or B-operator word to a vector.
    Act(ActArgs),
    /// Emit the stable-limit dimension table as JSON.
    Limit(LimitArgs),
    /// Print the stable-limit dimension table as text rows.
    Dims(LimitArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Daha,
    Bqt,
    Aux,
    Compat,
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Poly,
    Murnaghan,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqKind {
    Pol,
    Mur,
}

#[derive(Args)]
struct ModuleArgs {
    #[arg(long, value_enum, default_value = "poly")]
    module: ModuleKind,
    /// Partition as a comma list, e.g. `2,1`; `0` or empty for the empty shape.
    #[arg(long, default_value = "")]
    shape: String,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[command(flatten)]
    target: ModuleArgs,
    #[arg(long, default_value_t = 2)]
    dmax: u32,
    #[arg(long)]
    kmax: Option<usize>,
    /// Largest seed size for `theta`.
    #[arg(long, default_value_t = 3)]
    size: usize,
    /// Screen identities at random prime-field points instead of exactly.
    #[arg(long)]
    probabilistic: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use the sign-flipped Hecke action (a control that must fail).
    #[arg(long)]
    sign_flip: bool,
    /// Keep x_{n+1} terms in the connector (a control that must fail).
    #[arg(long)]
    broken_connector: bool,
    /// Record wall-clock milliseconds per relation.
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ActArgs {
    #[command(flatten)]
    target: ModuleArgs,
    /// JSON word, or `@path` to read it from a file.
    #[arg(long)]
    word: String,
    /// Vector as text (`x_1 + q*x_2`) or JSON records, or `@path`.
    #[arg(long)]
    vector: String,
    /// Flavor of the input for B-operator words.
    #[arg(long, default_value_t = 0)]
    flavor: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long, value_enum, default_value = "pol")]
    seq: SeqKind,
    #[arg(long, default_value = "")]
    shape: String,
    #[arg(long, default_value_t = 2)]
    kmax: usize,
    #[arg(long, default_value_t = 4)]
    dmax: u32,
    #[arg(long, default_value_t = 2)]
    window: usize,
    #[arg(long, default_value_t = 8)]
    ncap: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trust mod-p transition ranks without an exact recount.
    #[arg(long)]
    probabilistic: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A run that finished but whose checks did not all pass.
struct Failed;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let res = match cli.cmd {
        Cmd::Check(a) => check(a),
        Cmd::Act(a) => act(a).map(Ok),
        Cmd::Limit(a) => limit(a, false).map(Ok),
        Cmd::Dims(a) => limit(a, true).map(Ok),
    };
    match res {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn shape(s: &str) -> Result<YoungDiagram> {
    YoungDiagram::parse(s).with_context(|| format!("invalid shape {s:?}"))
}

fn need_n(a: &ModuleArgs) -> Result<usize> {
    a.n.ok_or_else(|| anyhow!("--n is required"))
}

fn module_spec(a: &ModuleArgs, sign_flip: bool) -> Result<ModuleSpec> {
    let n = need_n(a)?;
    Ok(match a.module {
        ModuleKind::Poly => {
            let variant = if sign_flip { TVariant::SignFlipped } else { TVariant::Standard };
            ModuleSpec::Poly { n, variant }
        }
        ModuleKind::Murnaghan if sign_flip => bail!("--sign-flip applies to the polynomial module only"),
        ModuleKind::Murnaghan => ModuleSpec::murnaghan(shape(&a.shape)?, n),
    })
}

fn seq_spec(kind: SeqKind, s: &str) -> Result<SeqSpec> {
    Ok(match kind {
        SeqKind::Pol => SeqSpec::Pol,
        SeqKind::Mur => SeqSpec::Murnaghan(shape(s)?),
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn check(a: CheckArgs) -> Result<std::result::Result<(), Failed>> {
    let mut cfg = CheckConfig::exact(a.dmax);
    if let Some(k) = a.kmax {
        cfg = cfg.k_max(k);
    }
    if a.probabilistic {
        cfg = cfg.probabilistic(a.seed);
    }
    cfg.seed = a.seed;
    cfg.timings = a.timings;
    let (suite, target, reports): (&str, String, Vec<RelationReport>) = match a.suite {
        Suite::Daha => {
            let m = module_spec(&a.target, a.sign_flip)?;
            ("daha", m.to_string(), check_daha_relations(&m, &cfg)?)
        }
        Suite::Bqt => {
            let m = module_spec(&a.target, a.sign_flip)?;
            ("bqt", m.to_string(), check_bqt_relations(&m, &cfg)?)
        }
        Suite::Aux => {
            let m = module_spec(&a.target, a.sign_flip)?;
            ("aux", m.to_string(), check_aux_identities(&m, &cfg)?)
        }
        Suite::Compat => {
            let seq = match a.target.module {
                ModuleKind::Poly => SeqSpec::Pol,
                ModuleKind::Murnaghan => SeqSpec::Murnaghan(shape(&a.target.shape)?),
            };
            let n = need_n(&a.target)?;
            let r = check_compatibility_with(&seq, n, &cfg, a.broken_connector)?;
            ("compat", format!("{seq} at n={n}"), r)
        }
        Suite::Theta => {
            let n = need_n(&a.target)?;
            ("theta", format!("seeds of size <= {} up to n={n}", a.size), vec![check_theta_spectra(a.size, n)?])
        }
    };
    let ok = all_pass(&reports);
    for r in reports.iter().filter(|r| !r.passed()) {
        eprintln!("{}", r.summary());
    }
    let doc = json!({
        "suite": suite,
        "target": target,
        "mode": cfg.mode.to_string(),
        "seed": a.seed,
        "all_pass": ok,
        "reports": reports,
    });
    emit(&a.out, &serde_json::to_string_pretty(&doc)?)?;
    Ok(if ok { Ok(()) } else { Err(Failed) })
}

fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {p}")),
        None => Ok(s.to_string()),
    }
}

fn act(a: ActArgs) -> Result<()> {
    let spec = module_spec(&a.target, false)?;
    let m = spec.build::<bqt_core::scalar::QtScalar>(())?;
    let n = m.rank();
    let word: Value = serde_json::from_str(&read_arg(&a.word)?).context("word is not valid JSON")?;
    let text = read_arg(&a.vector)?;
    let as_json: Option<Value> = serde_json::from_str(text.trim()).ok().filter(Value::is_array);
    let v = match &as_json {
        Some(j) => vector_from_json(j, n, m.tableaux())?,
        None => parse_vector(&text, n, m.tableaux())?,
    };
    let out = if BWord::looks_like(&word) {
        BWord::from_json(&word)?.apply(&m, &LVector::new(a.flavor, v))?.v
    } else {
        let w = GeneratorWord::from_json(&word)?;
        w.validate(n)?;
        apply_word(&m, &v, &w)?
    };
    let rendered = match as_json {
        Some(_) => serde_json::to_string(&vector_to_json(&out, m.tableaux()))?,
        None => format_vector(&out, m.tableaux()),
    };
    emit(&a.out, &rendered)
}

fn limit(a: LimitArgs, rows: bool) -> Result<()> {
    let cfg = LimitConfig { window: a.window, ncap: a.ncap, seed: a.seed, probabilistic: a.probabilistic };
    let l = StableLimit::new(seq_spec(a.seq, &a.shape)?, cfg)?;
    let table = l.dim_table(a.kmax, a.dmax)?;
    for (k, d) in table.unresolved() {
        eprintln!("warning: k={k} d={d} did not stabilize by n={}", a.ncap);
    }
    let text = if rows { render_rows(&table) } else { serde_json::to_string_pretty(&table)? };
    emit(&a.out, &text)
}

fn render_rows(t: &DimTable) -> String {
    let mut lines = vec![format!("{} (window {}, n <= {})", t.sequence, t.window, t.n_cap)];
    for (k, row) in t.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| c.map_or("?".to_string(), |x| x.to_string())).collect();
        lines.push(format!("k={k}: {}", cells.join(" ")));
    }
    lines.join("\n")
}
