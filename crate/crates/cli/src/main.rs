use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pyramidal_core::difference::{diagnose_df, DfDocument, PartialSpread};
use pyramidal_core::group::GroupSpec;
use pyramidal_core::search::{df_search, SearchError};
use pyramidal_core::sequences::{
    find_extended_langford_with_limit, find_extended_skolem_with_limit, SequenceError,
    DEFAULT_NODE_LIMIT,
};
use pyramidal_core::sts::{self, BuildError, ExampleKind};
use pyramidal_core::system::TripleSystem;
use pyramidal_core::verify::Report;

#[derive(Parser)]
#[command(name = "pyramidal")]
#[command(about = "Build and check 3-pyramidal Steiner triple systems", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Build a 3-pyramidal STS(v)
    Generate {
        #[arg(long)]
        v: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build one of the example systems with many fixed points
    Example {
        /// (2^n - 1)-pyramidal STS(2^(n+1) - 1) over Z2^n
        #[arg(
            long,
            conflicts_with = "dihedral",
            required_unless_present = "dihedral"
        )]
        projective: Option<u32>,
        /// f-pyramidal STS(3f) over the dihedral group of order 2f
        #[arg(long)]
        dihedral: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an STS or difference-family JSON file
    Verify {
        /// Input file, or `-` for stdin
        input: PathBuf,
    },
    /// Existence verdicts by residue class, then per order up to the limit
    Table {
        #[arg(long, default_value_t = 100)]
        limit: u32,
    },
    /// Find a k-extended Skolem sequence of order n
    Skolem {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, env = "PYRAMIDAL_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Find a k-extended Langford sequence of order n and defect d
    Langford {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, env = "PYRAMIDAL_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Exhaustively search for a difference family in a small group
    Search {
        /// Group descriptor such as Z9 or D6xZ5
        #[arg(long)]
        group: String,
        /// Put every subgroup of this prime order into the spread (repeatable)
        #[arg(long = "spread-order")]
        spread_orders: Vec<usize>,
        #[arg(long, env = "PYRAMIDAL_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Each variant maps to a fixed exit code.
enum Failure {
    /// I/O, parse or argument problems.
    Input(String),
    /// The requested object does not exist.
    Absent(String),
    /// A file failed verification.
    Rejected(String),
    /// A search hit its node budget without deciding.
    Exhausted(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Absent(_) => 2,
            Failure::Rejected(_) => 3,
            Failure::Exhausted(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m)
            | Failure::Absent(m)
            | Failure::Rejected(m)
            | Failure::Exhausted(m) => m,
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Commands::Generate { v, format, out } => generate(v, format, out.as_deref()),
        Commands::Example {
            projective,
            dihedral,
            format,
            out,
        } => example(projective, dihedral, format, out.as_deref()),
        Commands::Verify { input } => verify(&input),
        Commands::Table { limit } => table(limit),
        Commands::Skolem { n, k, node_limit } => skolem(n, k, node_limit),
        Commands::Langford {
            n,
            d,
            k,
            node_limit,
        } => langford(n, d, k, node_limit),
        Commands::Search {
            group,
            spread_orders,
            node_limit,
        } => search(&group, &spread_orders, node_limit),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write to stdout: {e}"))),
    }
}

fn write_system(t: &TripleSystem, format: Format, out: Option<&Path>) -> Result<()> {
    match format {
        Format::Json => emit(&(t.to_json() + "\n"), out),
        Format::Text => emit(&t.to_text(), out),
    }
}

fn build_failure(e: BuildError) -> Failure {
    match e {
        BuildError::NonExistence { .. } => Failure::Absent(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

fn generate(v: u32, format: Format, out: Option<&Path>) -> Result<()> {
    if v < 3 {
        return Err(Failure::Input(format!("v must be at least 3, got {v}")));
    }
    let t = sts::build_3pyramidal(v).map_err(build_failure)?;
    write_system(&t, format, out)
}

fn example(
    projective: Option<u32>,
    dihedral: Option<u32>,
    format: Format,
    out: Option<&Path>,
) -> Result<()> {
    let kind = match (projective, dihedral) {
        (Some(n), _) => ExampleKind::Projective(n),
        (_, Some(f)) => ExampleKind::Dihedral(f),
        _ => return Err(Failure::Input("pass --projective or --dihedral".into())),
    };
    let t = sts::build_f_pyramidal_examples(kind).map_err(|e| Failure::Absent(e.to_string()))?;
    write_system(&t, format, out)
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::Read::read_to_string(&mut io::stdin(), &mut s)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("values serialize")
    );
}

/// Single-line JSON for documents that are meant to be read back.
fn print_compact<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("documents serialize")
    );
}

fn verify(path: &Path) -> Result<()> {
    let text = read_input(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if value.get("spread").is_some() {
        return verify_family(value, path);
    }
    let t = TripleSystem::from_json(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let report = Report::check(&t);
    print_json(&serde_json::to_value(&report).expect("reports serialize"));
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Rejected(
            match (report.steiner, report.pyramidal) {
                (false, _) => "not a Steiner triple system".into(),
                _ => "the attached group does not act as claimed".into(),
            },
        ))
    }
}

fn verify_family(value: Value, path: &Path) -> Result<()> {
    let doc: DfDocument = serde_json::from_value(value)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let (family, spread) = doc
        .parse()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let defect = diagnose_df(&family, &spread).map_err(|e| Failure::Input(e.to_string()))?;
    print_json(&json!({
        "difference_family": defect.is_none(),
        "group": family.group().to_string(),
        "blocks": family.len(),
        "spread": spread.type_string(),
        "counterexample": defect.as_ref().map(|d| d.to_string()),
    }));
    match defect {
        None => Ok(()),
        Some(d) => Err(Failure::Rejected(d.to_string())),
    }
}

/// The verdict for each residue class mod 24, with the acting group.
const CLASSES: [(u32, &str); 8] = [
    (1, "No"),
    (3, "Yes ⇔ n even, Z4xZ<6n>"),
    (7, "Yes, Z2xZ2xZ<6n+1>"),
    (9, "Yes, D6xZ<4n+1>"),
    (13, "No"),
    (15, "Yes, Z2xZ2xZ3xZ<2n+1>"),
    (19, "Yes ⇔ n even, Z4xZ<6n+4>"),
    (21, "No"),
];

fn table(limit: u32) -> Result<()> {
    if limit < 3 {
        return Err(Failure::Input(format!(
            "limit must be at least 3, got {limit}"
        )));
    }
    let mut out = String::new();
    for (r, verdict) in CLASSES {
        out.push_str(&format!("24n+{r:<3} {verdict}\n"));
    }
    out.push('\n');
    for v in (3..=limit).filter(|v| v % 6 == 1 || v % 6 == 3) {
        let line = match (sts::admissible_3pyramidal(v), sts::planned_group(v)) {
            (true, Some(g)) => format!("{v:>5}  yes  {g}\n"),
            (true, None) => format!("{v:>5}  yes  trivial group, every point fixed\n"),
            (false, _) => format!("{v:>5}  no\n"),
        };
        out.push_str(&line);
    }
    emit(&out, None)
}

fn sequence_failure(e: SequenceError) -> Failure {
    match e {
        SequenceError::Exhausted { .. } => Failure::Exhausted(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

fn skolem(n: u32, k: u32, node_limit: u64) -> Result<()> {
    match find_extended_skolem_with_limit(n, k, node_limit).map_err(sequence_failure)? {
        Some(s) => {
            print_compact(&s);
            Ok(())
        }
        None => {
            println!("absent");
            Err(Failure::Absent(format!(
                "no {k}-extended Skolem sequence of order {n}"
            )))
        }
    }
}

fn langford(n: u32, d: u32, k: u32, node_limit: u64) -> Result<()> {
    match find_extended_langford_with_limit(n, d, k, node_limit).map_err(sequence_failure)? {
        Some(s) => {
            print_compact(&s);
            Ok(())
        }
        None => {
            println!("absent");
            Err(Failure::Absent(format!(
                "no {k}-extended Langford sequence of order {n} and defect {d}"
            )))
        }
    }
}

fn search(descriptor: &str, spread_orders: &[usize], node_limit: u64) -> Result<()> {
    let g: GroupSpec = descriptor
        .parse()
        .map_err(|e| Failure::Input(format!("{descriptor}: {e}")))?;
    let mut members = Vec::new();
    for &p in spread_orders {
        if !(2..=g.order()).contains(&p) || (2..p).any(|q| p % q == 0) {
            return Err(Failure::Input(format!("spread order {p} is not a prime")));
        }
        members.extend(g.subgroups_of_prime_order(p));
    }
    let spread =
        PartialSpread::new(g.clone(), members).map_err(|e| Failure::Input(e.to_string()))?;
    match df_search(&g, &spread, node_limit) {
        Ok(Some(family)) => {
            print_compact(&DfDocument::new(&family, &spread));
            Ok(())
        }
        Ok(None) => {
            println!("absent");
            Err(Failure::Absent(format!(
                "no ({g}, {}, 3, 1) difference family",
                spread.type_string()
            )))
        }
        Err(e @ SearchError::Exhausted { .. }) => Err(Failure::Exhausted(e.to_string())),
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}
