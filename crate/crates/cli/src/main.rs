//! `thom`: homology of pointed sets over trace monoids, from the command line.
//!
//! Exit codes: 0 when a command ran (and any asserted check passed), 1 when
//! an asserted check failed, 2 on input or validation errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use thom_core::battery::{battery, battery_alphabet, BATTERY_NAMES};
use thom_core::simplicial::BUILTIN_NAMES;
use thom_core::verify::{check_thm3, Verifier};
use thom_core::{
    kset_complex, kset_homology, reduced_homology, simplicial_chain_complex, DdCheck, IndependenceAlphabet,
    PointedAction, SimplicialComplex, TheoremId, TheoremReport, Variant,
};

#[derive(Parser)]
#[command(name = "thom", version, about = "Integer homology of pointed sets over free partially commutative monoids")]
struct Cli {
    /// Cap on worker threads for internal parallelism.
    #[arg(long, env = "THOM_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(clap::Args)]
struct ActionInput {
    /// Alphabet file, or the name of a battery alphabet.
    #[arg(long)]
    alphabet: String,
    /// Pointed action file over the alphabet.
    #[arg(long, conflicts_with = "chain", required_unless_present = "chain")]
    action: Option<PathBuf>,
    /// Use the uniform chain action x0 -> x1 -> ... -> xN -> * instead of a file.
    #[arg(long, allow_negative_numbers = true)]
    chain: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Homology groups of the clique-indexed complex of a pointed action.
    Homology {
        #[command(flatten)]
        input: ActionInput,
        /// Highest degree to report (default: the maximal clique size).
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, default_value_t = Variant::Unreduced)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print the boundary matrices before the groups.
        #[arg(long)]
        dump: bool,
    },
    /// Reduced homology of the clique complex of an alphabet.
    CliqueHomology {
        /// Alphabet file, or the name of a battery alphabet.
        #[arg(long)]
        alphabet: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check a decomposition statement on concrete instances.
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        /// Alphabet file or battery name; repeat to give the parts for thm3.
        #[arg(long, required_unless_present = "battery")]
        alphabet: Vec<String>,
        /// Run over every battery alphabet.
        #[arg(long, conflicts_with = "alphabet")]
        battery: bool,
        /// Chain length(s) for thm1 and corollary (default: -1, 0, 1, 2).
        #[arg(long, allow_negative_numbers = true)]
        m: Vec<i64>,
        /// Largest chain length for thm2.
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        max_m: i64,
        /// Chain length for thm3.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        /// Highest degree compared (default: the maximal clique size).
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Barycentric subdivision of a simplicial complex.
    Subdivide {
        /// Complex file, or the name of a builtin complex.
        #[arg(long)]
        complex: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the commutation alphabet of the (flag) result instead.
        #[arg(long)]
        as_alphabet: bool,
    },
    /// Write a builtin complex or battery alphabet.
    Example {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// For complexes: write the commutation alphabet instead.
        #[arg(long)]
        as_alphabet: bool,
    },
    /// Check that consecutive boundary maps compose to zero.
    DdCheck {
        /// Alphabet file or battery name (with --action or --chain).
        #[arg(long, conflicts_with = "complex", required_unless_present = "complex")]
        alphabet: Option<String>,
        #[arg(long, requires = "alphabet", conflicts_with = "chain")]
        action: Option<PathBuf>,
        #[arg(long, requires = "alphabet", allow_negative_numbers = true)]
        chain: Option<i64>,
        #[arg(long, default_value_t = Variant::Unreduced)]
        variant: Variant,
        /// Simplicial complex file or builtin name.
        #[arg(long)]
        complex: Option<String>,
        /// Augment the simplicial complex (reduced homology).
        #[arg(long, requires = "complex")]
        augmented: bool,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: thom_core::VerifyError| e.to_string())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("InputFile: cannot read {}", path.display()))
}

/// An existing file wins over a battery name of the same spelling.
fn load_alphabet(input: &str) -> Result<(String, IndependenceAlphabet)> {
    let path = Path::new(input);
    if path.exists() {
        let alpha = read(path)?.parse().with_context(|| format!("in alphabet file {input}"))?;
        let name = path.file_stem().map_or(input.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((name, alpha));
    }
    battery_alphabet(input).map(|a| (input.to_string(), a)).ok_or_else(|| {
        anyhow!("InputFile: {input:?} is neither a readable file nor a battery alphabet ({})", BATTERY_NAMES.join(", "))
    })
}

fn load_complex(input: &str) -> Result<SimplicialComplex> {
    let path = Path::new(input);
    if path.exists() {
        return read(path)?.parse().with_context(|| format!("in complex file {input}"));
    }
    if BUILTIN_NAMES.contains(&input) {
        return Ok(SimplicialComplex::builtin(input)?);
    }
    bail!("InputFile: {input:?} is neither a readable file nor a builtin complex ({})", BUILTIN_NAMES.join(", "))
}

fn load_action(alpha: &IndependenceAlphabet, action: Option<&Path>, chain: Option<i64>) -> Result<PointedAction> {
    match (action, chain) {
        (Some(path), _) => {
            PointedAction::parse(&read(path)?, alpha).with_context(|| format!("in action file {}", path.display()))
        }
        (None, Some(n)) if n >= -1 => Ok(PointedAction::chain_set(alpha, n)),
        (None, Some(n)) => bail!("ChainLength: --chain must be at least -1, got {n}"),
        (None, None) => bail!("InputFile: give --action or --chain"),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("OutputFile: cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_groups(groups: &[thom_core::FinAbGroup], prefix: &str, format: Format) {
    for (k, g) in groups.iter().enumerate() {
        match format {
            Format::Text => println!("{prefix}_{k} = {g}"),
            Format::Machine => println!("deg={k} group={g}"),
        }
    }
}

fn print_report(report: &TheoremReport, format: Format) {
    match format {
        Format::Text => print!("{report}"),
        Format::Machine => print!("{}", report.machine()),
    }
}

fn verify(
    theorem: TheoremId,
    alphas: &[(String, IndependenceAlphabet)],
    ms: &[i64],
    max_m: i64,
    n: i64,
    max_dim: Option<usize>,
    format: Format,
) -> Result<ExitCode> {
    if let Some(&bad) = ms.iter().chain([&max_m, &n]).find(|&&m| m < -1) {
        bail!("ChainLength: chain lengths must be at least -1, got {bad}");
    }
    let mut reports = Vec::new();
    if theorem == TheoremId::Thm3 {
        let (name, parts) = if alphas.len() == 1 {
            // a single alphabet is split into its commutation components
            let (name, alpha) = &alphas[0];
            let parts = alpha.components().iter().map(|c| alpha.restrict(c)).collect::<Result<Vec<_>, _>>()?;
            (name.clone(), parts)
        } else {
            (alphas.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join("|"), alphas.iter().map(|(_, a)| a.clone()).collect())
        };
        let kmax = max_dim.unwrap_or_else(|| parts.iter().map(|p| p.max_clique_size()).max().unwrap_or(0)).max(1);
        reports.push(check_thm3(&name, &parts, n, kmax)?);
    } else {
        for (name, alpha) in alphas {
            let verifier = Verifier::new(name.clone(), alpha, max_dim.unwrap_or_else(|| alpha.max_clique_size()));
            match theorem {
                TheoremId::Thm2 => reports.push(verifier.thm2(max_m)),
                TheoremId::Thm1 => reports.extend(ms.iter().map(|&m| verifier.thm1(m))),
                _ => reports.extend(ms.iter().map(|&m| verifier.corollary(m))),
            }
        }
    }
    for r in &reports {
        print_report(r, format);
    }
    let failed = theorem.asserted() && reports.iter().any(|r| !r.passed());
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().ok();
    }
    match cli.command {
        Command::Homology { input, max_dim, variant, format, dump } => {
            let (_, alpha) = load_alphabet(&input.alphabet)?;
            let action = load_action(&alpha, input.action.as_deref(), input.chain)?;
            let kmax = max_dim.unwrap_or_else(|| alpha.max_clique_size());
            if dump {
                print!("{}", kset_complex(&action, Some(kmax), variant).dump());
            }
            print_groups(&kset_homology(&action, variant, kmax), "H", format);
        }
        Command::CliqueHomology { alphabet, format } => {
            let (_, alpha) = load_alphabet(&alphabet)?;
            let kmax = alpha.max_clique_size().saturating_sub(1);
            print_groups(&reduced_homology(&SimplicialComplex::clique_complex(&alpha), kmax), "H~", format);
        }
        Command::Verify { theorem, alphabet, battery: all, m, max_m, n, max_dim, format } => {
            let alphas: Vec<(String, IndependenceAlphabet)> = if all {
                battery().into_iter().map(|(n, a)| (n.to_string(), a)).collect()
            } else {
                alphabet.iter().map(|s| load_alphabet(s)).collect::<Result<_>>()?
            };
            let ms = if m.is_empty() { vec![-1, 0, 1, 2] } else { m };
            return verify(theorem, &alphas, &ms, max_m, n, max_dim, format);
        }
        Command::Subdivide { complex, out, as_alphabet } => {
            let sd = load_complex(&complex)?.barycentric_subdivision()?;
            let text = if as_alphabet { sd.to_alphabet()?.to_string() } else { sd.to_string() };
            emit(&text, out.as_deref())?;
        }
        Command::Example { name, out, as_alphabet } => {
            let text = if BUILTIN_NAMES.contains(&name.as_str()) {
                let sc = SimplicialComplex::builtin(&name)?;
                if as_alphabet { sc.to_alphabet()?.to_string() } else { sc.to_string() }
            } else if let Some(alpha) = battery_alphabet(&name) {
                alpha.to_string()
            } else {
                bail!(
                    "UnknownName: no example {name:?}; complexes: {}; alphabets: {}",
                    BUILTIN_NAMES.join(", "),
                    BATTERY_NAMES.join(", ")
                );
            };
            emit(&text, out.as_deref())?;
        }
        Command::DdCheck { alphabet, action, chain, variant, complex, augmented } => {
            let cc = match (alphabet, complex) {
                (Some(input), _) => {
                    let (_, alpha) = load_alphabet(&input)?;
                    kset_complex(&load_action(&alpha, action.as_deref(), chain)?, None, variant)
                }
                (None, Some(input)) => simplicial_chain_complex(&load_complex(&input)?, augmented),
                (None, None) => bail!("InputFile: give --alphabet or --complex"),
            };
            match cc.verify_dd_zero() {
                DdCheck::Pass => println!("dd=0 pass"),
                DdCheck::Fail { degree, row, col } => {
                    println!("dd=0 FAIL degree={degree} row={row} col={col}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
