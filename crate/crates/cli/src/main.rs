use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use uindep::families::{self, FamilyKind, Part};
use uindep::golden::{diagram_by_id, Golden};
use uindep::indep::{independence_isomorphic, IndependenceSystem, SweepOptions, UnknottingMap};
use uindep::oracle::{Oracle, DEFAULT_CAP};
use uindep::{analyze, conway_to_pd, load_catalog, parse_pd, ConwaySpec, Error, PlanarDiagram};

/// U-independence systems of knot diagrams: unknotting sets, exchange and
/// matroid properties, chromatic numbers and isomorphism.
#[derive(Parser, Debug)]
#[command(name = "uindep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Largest crossing count accepted.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    /// Allow a cap above the default, or family indices above their default limit.
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for the subset sweep (0 = all cores).
    #[arg(long, env = "UINDEP_WORKERS", default_value_t = 1, global = true)]
    workers: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Default)]
#[group(multiple = false)]
struct Input {
    /// Catalog name, e.g. 7_3.
    #[arg(long)]
    knot: Option<String>,
    /// PD code text, or @path to read it from a file.
    #[arg(long)]
    pd: Option<String>,
    /// Conway word, e.g. 5,1,4.
    #[arg(long)]
    conway: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full analysis of one diagram.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Exchange-property table for the catalog knots 3_1 to 8_6, diffed
    /// against the bundled expected values.
    Table1 {
        /// Also check the bundled worked examples and isomorphism pairs.
        #[arg(long)]
        examples: bool,
    },
    /// Decide whether two diagrams have isomorphic independence systems.
    /// Diagrams are catalog names or parenthesized Conway words, given
    /// positionally or through one input flag.
    Iso {
        diagrams: Vec<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Check a rational family instance: torus-odd (2n+1), twist-pair
    /// (2n,2) or bridge-triple (2n+1,1,2n).
    Family {
        kind: String,
        #[arg(long)]
        n: usize,
        /// Check this diagram in place of the generated one.
        #[arg(long)]
        pd: Option<String>,
    },
    /// The chromatic number of the independence system, with a witness.
    Chromatic {
        #[command(flatten)]
        input: Input,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => 3,
        Some(Error::UnknownName(_)) => 4,
        Some(Error::Workers(_)) => 1,
        Some(_) => 2,
        None if e.downcast_ref::<std::io::Error>().is_some() => 2,
        None => 1,
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let c = &cli.common;
    if c.cap > DEFAULT_CAP && !c.force {
        bail!(Error::CapExceeded { n: c.cap, cap: DEFAULT_CAP });
    }
    let opts = SweepOptions { oracle: Oracle::with_cap(c.cap), workers: c.workers };
    match &cli.command {
        Command::Analyze { input } => {
            let (id, d) = resolve(input)?.ok_or_else(|| anyhow!("no input: give --knot, --pd or --conway"))?;
            cmd_analyze(c, &opts, &id, &d)
        }
        Command::Table1 { examples } => cmd_table1(c, &opts, *examples),
        Command::Iso { diagrams, input } => cmd_iso(c, &opts, diagrams, input),
        Command::Family { kind, n, pd } => cmd_family(c, &opts, kind, *n, pd.as_deref()),
        Command::Chromatic { input } => {
            let (id, d) = resolve(input)?.ok_or_else(|| anyhow!("no input: give --knot, --pd or --conway"))?;
            cmd_chromatic(c, &opts, &id, &d)
        }
    }
}

fn resolve(input: &Input) -> anyhow::Result<Option<(String, PlanarDiagram)>> {
    if let Some(name) = &input.knot {
        return Ok(Some((name.clone(), load_catalog(name)?)));
    }
    if let Some(pd) = &input.pd {
        let text = match pd.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
            None => pd.clone(),
        };
        return Ok(Some(("pd".into(), parse_pd(&text)?)));
    }
    if let Some(word) = &input.conway {
        let spec: ConwaySpec = word.parse()?;
        return Ok(Some((spec.to_string(), conway_to_pd(&spec)?)));
    }
    Ok(None)
}

fn emit(c: &Common, text: &str) -> anyhow::Result<()> {
    match &c.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn progress(msg: &str) {
    eprintln!("{msg}");
}

fn cmd_analyze(c: &Common, opts: &SweepOptions, id: &str, d: &PlanarDiagram) -> anyhow::Result<ExitCode> {
    opts.oracle.check_cap(d)?;
    if d.crossing_count() >= 10 {
        progress(&format!("sweeping 2^{} crossing subsets of {id}", d.crossing_count()));
    }
    let start = Instant::now();
    let mut report = analyze(id, d, opts)?.report;
    match c.format {
        Format::Json => emit(c, &to_json(&report)?)?,
        Format::Table => {
            report.timing_ms = Some(start.elapsed().as_millis() as u64);
            emit(c, &report.to_table())?
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_table1(c: &Common, opts: &SweepOptions, examples: bool) -> anyhow::Result<ExitCode> {
    let golden = Golden::load();
    let rows = golden.table1_rows();
    let mut out_rows = Vec::new();
    let mut mismatches = Vec::new();
    for (i, (name, expected)) in rows.iter().enumerate() {
        progress(&format!("[{}/{}] {name}", i + 1, rows.len()));
        let r = analyze(name, &load_catalog(name)?, opts)?.report;
        if r.exchange != *expected {
            mismatches.push(format!("{name}: exchange expected {} got {}", yes_no(*expected), yes_no(r.exchange)));
        }
        out_rows.push(json!({
            "knot": name,
            "u": r.u,
            "minimal_unknotting_sets": r.minimal_unknotting_sets.len(),
            "exchange": r.exchange,
            "expected": expected,
            "matches": r.exchange == *expected,
        }));
    }
    if examples {
        for e in &golden.examples {
            progress(&format!("example {}", e.diagram));
            let r = analyze(&e.diagram, &diagram_by_id(&e.diagram)?, opts)?.report;
            for m in e.compare(&r) {
                mismatches.push(format!("{}: {} expected {} got {}", m.diagram, m.field, m.expected, m.actual));
            }
        }
        for iso in &golden.isomorphisms {
            let [a, b] = &iso.pair;
            progress(&format!("isomorphism {a} {b}"));
            let got = iso_systems(opts, &diagram_by_id(a)?, &diagram_by_id(b)?)?.is_some();
            if got != iso.expected {
                mismatches.push(format!("{a} ~ {b}: isomorphic expected {} got {}", iso.expected, got));
            }
        }
    }
    let text = match c.format {
        Format::Json => to_json(&json!({ "rows": out_rows, "mismatches": mismatches }))?,
        Format::Table => {
            let mut s = String::from("knot   u  minimal  exchange  expected\n");
            for r in &out_rows {
                s += &format!(
                    "{:<6} {:>2} {:>8}  {:<8}  {}{}\n",
                    r["knot"].as_str().unwrap_or_default(),
                    r["u"].as_u64().unwrap_or_default(),
                    r["minimal_unknotting_sets"].as_u64().unwrap_or_default(),
                    yes_no(r["exchange"].as_bool().unwrap_or_default()),
                    yes_no(r["expected"].as_bool().unwrap_or_default()),
                    if r["matches"].as_bool().unwrap_or_default() { "" } else { "  MISMATCH" },
                );
            }
            if mismatches.is_empty() {
                s += "all values match the expected file\n";
            } else {
                for m in &mismatches {
                    s += &format!("mismatch: {m}\n");
                }
            }
            s
        }
    };
    emit(c, &text)?;
    Ok(if mismatches.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn iso_systems(opts: &SweepOptions, a: &PlanarDiagram, b: &PlanarDiagram) -> anyhow::Result<Option<Vec<usize>>> {
    let sa = IndependenceSystem::from_map(&UnknottingMap::compute(a, opts)?);
    let sb = IndependenceSystem::from_map(&UnknottingMap::compute(b, opts)?);
    Ok(independence_isomorphic(&sa, &sb))
}

fn cmd_iso(c: &Common, opts: &SweepOptions, ids: &[String], input: &Input) -> anyhow::Result<ExitCode> {
    let mut diagrams = Vec::new();
    for id in ids {
        diagrams.push((id.clone(), diagram_by_id(id)?));
    }
    if let Some(d) = resolve(input)? {
        diagrams.push(d);
    }
    if diagrams.len() != 2 {
        bail!(Error::InvalidSpec(format!("iso needs exactly two diagrams, got {}", diagrams.len())));
    }
    let (a, b) = (&diagrams[0], &diagrams[1]);
    let phi = iso_systems(opts, &a.1, &b.1)?;
    let text = match c.format {
        Format::Json => to_json(&json!({
            "a": a.0,
            "b": b.0,
            "isomorphic": phi.is_some(),
            "bijection": phi,
        }))?,
        Format::Table => match &phi {
            Some(phi) => {
                let pairs: Vec<String> = phi
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| format!("{}->{}", a.1.crossing_name(i), b.1.crossing_name(j)))
                    .collect();
                format!("{} and {} are isomorphic\nbijection {}\n", a.0, b.0, pairs.join(" "))
            }
            None => format!("{} and {} are not isomorphic\n", a.0, b.0),
        },
    };
    emit(c, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_family(c: &Common, opts: &SweepOptions, kind: &str, n: usize, pd: Option<&str>) -> anyhow::Result<ExitCode> {
    let kind: FamilyKind = kind.parse()?;
    if n > kind.default_max_n() && !c.force {
        let spec = families::FamilySpec::new(kind, n)?;
        bail!(Error::CapExceeded { n: spec.crossing_count(), cap: families::FamilySpec::new(kind, kind.default_max_n())?.crossing_count() });
    }
    let part = match kind {
        FamilyKind::BridgeTriple => Part::A,
        FamilyKind::TorusOdd => Part::B,
        FamilyKind::TwistPair => Part::C,
    };
    progress(&format!("checking {kind} n={n}"));
    let check = match pd {
        Some(pd) => {
            let text = match pd.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
                None => pd.to_string(),
            };
            families::verify_proposition_on(part, n, "pd", &parse_pd(&text)?, opts)?
        }
        None => families::verify_proposition(part, n, opts)?,
    };
    let lemma = match (kind, pd) {
        (FamilyKind::TorusOdd, None) => Some(families::verify_lemma_unknotting(n, opts)?),
        _ => None,
    };
    let holds = check.holds && lemma.as_ref().is_none_or(|l| l.holds);
    let text = match c.format {
        Format::Json => to_json(&json!({ "proposition": check, "lemma": lemma, "holds": holds }))?,
        Format::Table => {
            let mut s = check.report.to_table();
            if let Some(l) = &lemma {
                s += &format!(
                    "check                u(D) = {} and every {}-subset unknots: {}\n",
                    n,
                    n,
                    if l.holds { "ok" } else { "FAILED" }
                );
            }
            for (what, ok) in &check.checks {
                s += &format!("check                {what}: {}\n", if *ok { "ok" } else { "FAILED" });
            }
            s += &format!("verdict              {}\n", if holds { "holds" } else { "FAILS" });
            s
        }
    };
    emit(c, &text)?;
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_chromatic(c: &Common, opts: &SweepOptions, id: &str, d: &PlanarDiagram) -> anyhow::Result<ExitCode> {
    let sys = IndependenceSystem::from_map(&UnknottingMap::compute(d, opts)?);
    let coloring = sys.chromatic_number();
    let text = match (c.format, &coloring) {
        (Format::Json, Ok(col)) => to_json(&json!({
            "diagram": id,
            "chromatic": col.number,
            "partition": col.partition,
            "fewer_parts_infeasible": col.number == 1 || sys.partition_into(col.number - 1).is_none(),
        }))?,
        (Format::Json, Err(e)) => to_json(&json!({ "diagram": id, "chromatic": null, "reason": e.to_string() }))?,
        (Format::Table, Ok(col)) => {
            let parts: Vec<String> = col
                .partition
                .iter()
                .map(|p| format!("{{{}}}", p.iter().map(|i| d.crossing_name(i)).collect::<Vec<_>>().join(",")))
                .collect();
            format!("{id}: chromatic number {}\npartition {}\n", col.number, parts.join(" "))
        }
        (Format::Table, Err(e)) => format!("{id}: chromatic number undefined ({e})\n"),
    };
    emit(c, &text)?;
    Ok(ExitCode::SUCCESS)
}
