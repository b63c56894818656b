//! `latcli`: command line front end for the exact lattice toolkit.
//!
//! All outputs are JSON on stdout (`--pretty` switches the verification
//! subcommands to a human-readable table).  Exit codes: 0 = success /
//! all checks pass, 1 = a verification failed, 2 = input or usage error.

mod json;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use latcore::atlas;
use latcore::leech::{self, CaseName};
use latcore::shortvec;
use latcore::verify;

use json::{
    CaseResultJson, CertificateJson, DihedralReportJson, LatticeJson, NamedLatticeJson,
    NormSliceJson, PairJson, SnfJson, SummaryJson,
};

#[derive(Parser)]
#[command(
    name = "latcli",
    about = "Exact arithmetic for positive definite rational lattices: \
             normal forms, short vectors, and the dihedral-pair verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification harness (all cases or a single one).
    Verify(VerifyArgs),
    /// Classify a pair of lattices from a pair JSON file.
    Classify {
        /// Path to a JSON file {"m": <lattice>, "n": <lattice>}.
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Smith data of a lattice file: rank, determinant, invariant factors.
    Snf {
        #[arg(long)]
        file: PathBuf,
    },
    /// Enumerate all lattice vectors of one exact norm.
    Shortvec {
        #[arg(long)]
        file: PathBuf,
        /// Norm as an integer or "p/q" rational.
        #[arg(long)]
        norm: String,
    },
    /// Emit a named lattice with its certificate.
    Atlas {
        /// One of the atlas names (see the README for the list).
        name: String,
    },
    /// Emit the (M, N) pair of a named dihedral case.
    Case {
        name: String,
        /// Write the pair JSON to this file instead of stdout.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Emit the Leech lattice (or its octad list).
    Leech {
        /// List the 759 octads instead of the lattice.
        #[arg(long)]
        octads: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify every case plus the property suites.
    #[arg(long, conflicts_with = "case")]
    all: bool,
    /// Verify a single case by name.
    #[arg(long)]
    case: Option<String>,
    /// Include the slow tier (Leech kissing count, overlattice scan,
    /// order-5 decomposition).
    #[arg(long)]
    slow: bool,
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Classify { pair, pretty } => cmd_classify(&pair, pretty),
        Command::Snf { file } => cmd_snf(&file),
        Command::Shortvec { file, norm } => cmd_shortvec(&file, &norm),
        Command::Atlas { name } => cmd_atlas(&name),
        Command::Case { name, emit } => cmd_case(&name, emit.as_deref()),
        Command::Leech { octads } => cmd_leech(octads),
    }
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), String> {
    let s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{}", s);
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if let Some(name) = &args.case {
        let result = verify::verify_case(name)
            .map_err(|e| format!("unknown or failing case {:?}: {}", name, e))?;
        let pass = result.pass;
        if args.pretty {
            print_case_table(std::slice::from_ref(&result));
        } else {
            emit(&CaseResultJson::from_result(&result))?;
        }
        return Ok(if pass {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    if !args.all {
        return Err("use --all or --case <name>".into());
    }
    let summary = verify::verify_all(args.slow).map_err(|e| e.to_string())?;
    if args.pretty {
        print_case_table(&summary.cases);
        println!(
            "containments: {}   bw16 identity: {}   named certificates: {}   hermite: {}",
            ok(summary.containments.pass),
            ok(summary.bw16_identity),
            ok(summary.named_certificates_ok),
            ok(summary.hermite_ok),
        );
        for p in &summary.properties {
            println!("property {:36} {}", p.name, ok(p.pass));
        }
        if let Some(s) = &summary.slow {
            println!(
                "slow tier: kissing {} ({}), scan {}/{} singular ({}), order-5 blocks {} tensor {}",
                s.leech_kissing,
                ok(s.kissing_ok),
                s.scan.singular_classes,
                s.scan.classes,
                ok(s.scan.pass),
                ok(s.dih10_blocks_ok),
                ok(s.dih10_tensor_ok),
            );
        }
        println!("overall: {}", ok(summary.all_pass));
    } else {
        emit(&SummaryJson::from_summary(&summary))?;
    }
    Ok(if summary.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn ok(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn print_case_table(cases: &[verify::CaseResult]) {
    println!(
        "{:<12} {:>5} {:>5} {:>6} {:>9} {:>9} {:>8}  smith",
        "case", "pass", "gram", "rank", "order", "rootless", "f"
    );
    for c in cases {
        let smith: Vec<String> = c.smith_computed.iter().map(|x| x.to_string()).collect();
        println!(
            "{:<12} {:>5} {:>5} {:>6} {:>9} {:>9} {:>8}  {}",
            c.name,
            ok(c.pass),
            ok(c.gram_match),
            format!("{}/{}", c.rank_computed, c.rank_expected),
            format!("{}/{}", c.product_order_computed, c.product_order_expected),
            ok(c.rootless),
            c.f_label.as_deref().unwrap_or("-"),
            smith.join(","),
        );
    }
}

fn load_pair(
    path: &std::path::Path,
) -> Result<(latcore::Lattice, latcore::Lattice, String), String> {
    let bytes = fs::read(path).map_err(|e| format!("reading {}: {}", path.display(), e))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let hash = hasher
        .finalize()
        .iter()
        .map(|b| format!("{:02x}", b))
        .collect::<String>();
    let pair: PairJson = serde_json::from_slice(&bytes).map_err(|e| e.to_string())?;
    let m = pair.m.to_lattice()?;
    let n = pair.n.to_lattice()?;
    Ok((m, n, hash))
}

fn cmd_classify(path: &std::path::Path, pretty: bool) -> Result<ExitCode, String> {
    let (m, n, hash) = load_pair(path)?;
    let report = verify::classify_pair(&m, &n).map_err(|e| e.to_string())?;
    if pretty {
        println!(
            "rank {}  |t_M t_N| = {}  dihedral order {}  integral {}  rootless {}  F = {} (rank {})",
            report.rank,
            report.product_order,
            report.dihedral_order,
            report.is_integral,
            report.is_rootless,
            report.f_label.as_deref().unwrap_or("unrecognized"),
            report.f_rank,
        );
    } else {
        emit(&DihedralReportJson::from_report(&report, Some(hash)))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn load_lattice(path: &std::path::Path) -> Result<latcore::Lattice, String> {
    let bytes = fs::read(path).map_err(|e| format!("reading {}: {}", path.display(), e))?;
    let lat: LatticeJson = serde_json::from_slice(&bytes).map_err(|e| e.to_string())?;
    lat.to_lattice()
}

fn cmd_snf(path: &std::path::Path) -> Result<ExitCode, String> {
    let l = load_lattice(path)?;
    let divisors = l
        .discriminant_group()
        .map_err(|e| format!("snf requires an integral lattice: {}", e))?;
    emit(&SnfJson {
        rank: l.rank(),
        det: json::rational_to_string(&l.determinant()),
        divisors: divisors.iter().map(|d| d.to_string()).collect(),
    })?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_shortvec(path: &std::path::Path, norm: &str) -> Result<ExitCode, String> {
    let l = load_lattice(path)?;
    let n = json::parse_rational(norm)?;
    if n < num_rational::BigRational::from_integer(0.into()) {
        return Err("norm must be nonnegative".into());
    }
    let slice = shortvec::vectors_of_norm(&l, &n);
    emit(&NormSliceJson {
        norm: json::rational_to_string(&slice.norm),
        count: slice.count(),
        vectors: slice
            .vectors
            .iter()
            .map(|v| v.iter().map(json::signed_i64).collect())
            .collect(),
    })?;
    Ok(ExitCode::SUCCESS)
}

fn named_json(named: &atlas::NamedLattice) -> Result<NamedLatticeJson, String> {
    Ok(NamedLatticeJson {
        name: named.name.clone(),
        certificate: CertificateJson {
            rank: named.certificate.rank,
            det: json::rational_to_string(&named.certificate.det),
            integral: named.certificate.integral,
            even: named.certificate.even,
            min_norm: json::rational_to_string(&named.certificate.min_norm),
            smith: named
                .certificate
                .smith
                .iter()
                .map(|d| d.to_string())
                .collect(),
        },
        lattice: LatticeJson::from_lattice(&named.lattice)?,
    })
}

fn cmd_atlas(name: &str) -> Result<ExitCode, String> {
    let named = atlas::by_name(name).map_err(|_| {
        format!(
            "unknown atlas name {:?}; available: {}",
            name,
            atlas::NAMES.join(", ")
        )
    })?;
    emit(&named_json(&named)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_case(name: &str, out: Option<&std::path::Path>) -> Result<ExitCode, String> {
    let case = CaseName::parse(name).ok_or_else(|| {
        let names: Vec<&str> = CaseName::ALL.iter().map(|c| c.as_str()).collect();
        format!("unknown case {:?}; available: {}", name, names.join(", "))
    })?;
    let (m, n) = leech::case_data(case).map_err(|e| e.to_string())?;
    let pair = PairJson {
        m: LatticeJson::from_lattice(&m)?,
        n: LatticeJson::from_lattice(&n)?,
    };
    let text = serde_json::to_string_pretty(&pair).map_err(|e| e.to_string())?;
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("writing {}: {}", path.display(), e))?;
            println!("{{\"written\": \"{}\"}}", path.display());
        }
        None => println!("{}", text),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_leech(octads: bool) -> Result<ExitCode, String> {
    let ctx = leech::leech();
    if octads {
        #[derive(serde::Serialize)]
        struct Octads {
            count: usize,
            octads: Vec<Vec<usize>>,
        }
        let list: Vec<Vec<usize>> = ctx.golay.octads_lex().iter().map(|o| o.members()).collect();
        emit(&Octads {
            count: list.len(),
            octads: list,
        })?;
    } else {
        let named = atlas::by_name("leech").map_err(|e| e.to_string())?;
        emit(&named_json(&named)?)?;
    }
    Ok(ExitCode::SUCCESS)
}
