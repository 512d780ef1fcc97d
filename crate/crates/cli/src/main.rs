use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use splitcycles::families::{verify_families, FamilyReport, MemberCheck};
use splitcycles::format::{parse_rotmap, parse_voltmap, write_rotmap};
use splitcycles::map::Subsurface;
use splitcycles::report::{Format, SearchReport};
use splitcycles::search::{enumerate, verify_cycle, Closure, PruneReason, SearchOptions, SplitVerdict};
use splitcycles::voltage::{bundled_base, gross_tucker_base, VoltageBaseMap};
use splitcycles::{no_interior_bound, RotationMap};

#[derive(Parser)]
#[command(name = "splitcycles", version, about = "Splitting cycles in triangulated surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive a map from a voltage base map and write it as a rotmap.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print vertex, edge and face counts and the genus.
    Genus {
        #[command(flatten)]
        input: Input,
    },
    /// Count splitting cycles through the root by type.
    Search {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify one cycle with the colouring check and the cut oracle.
    VerifyCycle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        /// Skip paths turning around a face.
        #[arg(long)]
        no_facial_prune: bool,
        /// Cycle vertices, comma separated.
        #[arg(long, required = true, value_delimiter = ',')]
        cycle: Vec<usize>,
    },
    /// Check the explicit splitting cycle families on M_{12s+7}.
    VerifyFamilies {
        s: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shortest cycle that can bound a side of the given genus with no interior vertex.
    Bound { genus: usize },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// A `rotmap 1` or `voltmap 1` file.
    map: Option<PathBuf>,
    #[arg(long)]
    voltmap: Option<PathBuf>,
    #[arg(long, value_name = "S")]
    gross_tucker: Option<u32>,
    /// One of the bundled K_19 base maps: A, B or C.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Require translation by one to be an automorphism (always on for derived maps).
    #[arg(long)]
    assume_transitive: bool,
    #[arg(long)]
    max_length: Option<usize>,
    /// Also skip cycles turning around a face where they close up.
    #[arg(long = "seam-remark2", value_name = "MODE", value_enum, default_value_t = Toggle::On)]
    prune_facial_seam: Toggle,
    #[arg(long)]
    no_test4: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    fn invalid(e: impl std::fmt::Display) -> Self {
        CliError::Invalid(e.to_string())
    }
}

struct Loaded {
    name: String,
    map: RotationMap,
    derived: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn load_base(input: &Input) -> Result<Option<(String, VoltageBaseMap)>, CliError> {
    if let Some(s) = input.gross_tucker {
        return Ok(Some((format!("gross-tucker-{s}"), gross_tucker_base(s).map_err(CliError::invalid)?)));
    }
    if let Some(name) = &input.base {
        return Ok(Some((name.to_uppercase(), bundled_base(name).map_err(CliError::invalid)?)));
    }
    let path = match (&input.voltmap, &input.map) {
        (Some(p), _) => p,
        (None, Some(p)) if is_voltmap(&read(p)?) => p,
        _ => return Ok(None),
    };
    let base = parse_voltmap(&read(path)?).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    Ok(Some((path.display().to_string(), base)))
}

fn is_voltmap(text: &str) -> bool {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')) == Some("voltmap 1")
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    if let Some((name, base)) = load_base(input)? {
        let map = base.derive().map_err(CliError::invalid)?;
        return Ok(Loaded { name, map, derived: true });
    }
    let path = input.map.as_ref().expect("clap requires one input");
    let map = parse_rotmap(&read(path)?).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    Ok(Loaded { name: path.display().to_string(), map, derived: false })
}

fn options(args: &SearchArgs, derived: bool, workers: usize) -> SearchOptions {
    SearchOptions {
        max_length: args.max_length,
        prune_facial: true,
        prune_facial_seam: matches!(args.prune_facial_seam, Toggle::On),
        test4: !args.no_test4,
        assume_transitive: derived || args.assume_transitive,
        workers,
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary(map: &RotationMap) -> Result<String, CliError> {
    let genus = map.genus().map_err(CliError::invalid)?;
    Ok(format!(
        "V = {}, E = {}, F = {}, genus {}",
        map.vertex_count(),
        map.edge_count(),
        map.face_count(),
        genus
    ))
}

fn describe(verdict: &SplitVerdict) -> String {
    match verdict {
        SplitVerdict::NonSeparating => "non-separating".to_string(),
        SplitVerdict::Separating(sep) if sep.is_contractible() => "separating, type 0 (contractible)".to_string(),
        SplitVerdict::Separating(sep) => format!("splitting, type {}", sep.cycle_type()),
    }
}

fn describe_pieces(pieces: &[Subsurface]) -> (String, Option<usize>) {
    match pieces {
        [a, b] => {
            let t = a.genus.min(b.genus);
            let text = if t == 0 {
                "separating, type 0 (contractible)".to_string()
            } else {
                format!("splitting, type {t}")
            };
            (format!("{text} (side genera {} and {})", a.genus, b.genus), Some(t))
        }
        _ => ("non-separating".to_string(), None),
    }
}

fn cmd_verify_cycle(input: &Input, args: &SearchArgs, no_facial_prune: bool, cycle: &[usize]) -> Result<(), CliError> {
    let loaded = load(input)?;
    let mut opts = options(args, false, 1);
    opts.prune_facial = !no_facial_prune;
    let fast = verify_cycle(&loaded.map, cycle, &opts).map_err(CliError::invalid)?;
    let pieces = loaded.map.cut_along(cycle).map_err(CliError::invalid)?;
    let (oracle_text, oracle_type) = describe_pieces(&pieces);
    let (fast_text, fast_type) = match &fast {
        Closure::Verdict(v) => (describe(v), Some(v.cycle_type())),
        Closure::Rejected(PruneReason::FacialCorner) => ("rejected: two consecutive edges on a face".to_string(), None),
        // a colouring conflict proves the cycle does not separate
        Closure::Rejected(r) => (format!("non-separating ({r:?} conflict)"), Some(None)),
    };
    println!("fast:   {fast_text}");
    println!("oracle: {oracle_text}");
    match fast_type {
        Some(t) if t != oracle_type => Err(CliError::Inconsistent("fast verdict disagrees with the oracle".into())),
        _ => Ok(()),
    }
}

fn member_line(m: &MemberCheck) -> String {
    let status = if m.verified() { "pass" } else { "FAIL" };
    let computed = m.oracle_type.map_or("non-separating".to_string(), |t| format!("type {t}"));
    format!("{status} {:?} {:?} claimed type {} computed {computed}", m.cycle.kind, m.cycle.vertices, m.cycle.claimed_type)
}

fn family_text(r: &FamilyReport) -> String {
    let mut lines = vec![format!("s = {}: n = {}, genus {}", r.s, r.n, r.genus)];
    lines.extend(r.gamma.iter().map(member_line));
    if let Some((faces, edges)) = r.gamma_empty_side {
        lines.push(format!("gamma empty side: {faces} triangles, {edges} interior edges"));
    }
    lines.extend(r.members.iter().map(member_line));
    lines.push(format!(
        "family: {} of {} verified, {} distinct (claimed {}), gamma in family: {}",
        r.verified_members(),
        r.members.len(),
        r.distinct_members,
        r.claimed_members(),
        r.gamma_in_family
    ));
    for t in &r.type_j {
        match (&t.check, &t.error) {
            (Some(m), _) => lines.push(member_line(m)),
            (None, Some(e)) => lines.push(format!("FAIL TypeJ {{ j: {} }} {e}", t.j)),
            (None, None) => {}
        }
    }
    lines.push(format!("irreducible: {}", r.irreducible));
    lines.join("\n") + "\n"
}

fn family_csv(r: &FamilyReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "vertices", "claimed_type", "fast_type", "oracle_type", "pass"]).map_err(CliError::invalid)?;
    let all = r.gamma.iter().chain(&r.members).chain(r.type_j.iter().filter_map(|t| t.check.as_ref()));
    for m in all {
        let vertices = m.cycle.vertices.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let opt = |t: Option<usize>| t.map_or(String::new(), |t| t.to_string());
        w.write_record([
            format!("{:?}", m.cycle.kind),
            vertices,
            m.cycle.claimed_type.to_string(),
            opt(m.fast_type),
            opt(m.oracle_type),
            m.verified().to_string(),
        ])
        .map_err(CliError::invalid)?;
    }
    let bytes = w.into_inner().map_err(CliError::invalid)?;
    String::from_utf8(bytes).map_err(CliError::invalid)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build { input, out } => {
            let loaded = load(&input)?;
            let line = summary(&loaded.map)?;
            match out {
                Some(p) => {
                    emit(&write_rotmap(&loaded.map), Some(&p))?;
                    println!("{line}");
                }
                None => {
                    print!("{}", write_rotmap(&loaded.map));
                    eprintln!("{line}");
                }
            }
        }
        Command::Genus { input } => println!("{}", summary(&load(&input)?.map)?),
        Command::Search { input, search, workers, format, out } => {
            if workers == 0 {
                return Err(CliError::Invalid("--workers must be at least 1".into()));
            }
            let loaded = load(&input)?;
            let opts = options(&search, loaded.derived, workers);
            let start = Instant::now();
            let table = enumerate(&loaded.map, search.root, &opts).map_err(CliError::invalid)?;
            let report = SearchReport::new(&loaded.name, loaded.map.vertex_count(), search.root, &table, &opts);
            let text = match format {
                OutputFormat::Text => report.with_wall_time(start.elapsed().as_millis() as u64).render(Format::Text),
                OutputFormat::Csv => report.render(Format::Csv),
                OutputFormat::Json => report.render(Format::Json),
            };
            emit(&text, out.as_deref())?;
        }
        Command::VerifyCycle { input, search, no_facial_prune, cycle } => {
            cmd_verify_cycle(&input, &search, no_facial_prune, &cycle)?;
        }
        Command::VerifyFamilies { s, format, out } => {
            let report = verify_families(s).map_err(CliError::invalid)?;
            let text = match format {
                OutputFormat::Text => family_text(&report),
                OutputFormat::Csv => family_csv(&report)?,
                OutputFormat::Json => serde_json::to_string_pretty(&report).map_err(CliError::invalid)? + "\n",
            };
            emit(&text, out.as_deref())?;
            if report.disagreements().next().is_some() {
                return Err(CliError::Inconsistent("fast verdict disagrees with the oracle".into()));
            }
            if !report.all_verified() {
                return Err(CliError::Invalid("some family cycles did not verify".into()));
            }
        }
        Command::Bound { genus } => println!("{}", no_interior_bound(genus)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are validation errors, not internal ones
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Invalid(_) => ExitCode::from(1),
                CliError::Inconsistent(_) => ExitCode::from(2),
            }
        }
    }
}
