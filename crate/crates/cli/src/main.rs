mod document;
mod error;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mwc_power::atlas::{atlas_entries, enumerate_antichains, profile_atlases, MAX_PROFILE_VOTERS};
use mwc_power::direct::DEFAULT_TERM_BUDGET;
use mwc_power::oracle::{oracle_banzhaf, oracle_ssi};
use mwc_power::{
    analyze, count_winning, direct::direct_indices, is_proper, trace, DirectOptions, IndexKind,
    LimitError, MwcSet, Rational, TraceKind, TraceSteps,
};
use serde_json::json;

use document::SystemDocument;
use error::CliError;

#[derive(Parser)]
#[command(name = "mwcpower", version, about = "Exact voting-power indices from minimal winning coalitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// System document (JSON); reads standard input when omitted or "-".
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Compute {
    /// Maximum number of MWC sub-families to visit.
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    budget: u64,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl Compute {
    fn options(&self) -> DirectOptions {
        DirectOptions::default()
            .with_budget(self.budget)
            .with_workers(self.workers)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print BS, PBP, PBI, SSI, DP and HP for every voter.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        compute: Compute,
        /// Emit JSON with exact fractions.
        #[arg(long)]
        json: bool,
        /// Digits after the decimal point in the table.
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Print the MWC-set of a weighted game.
    Derive {
        #[command(flatten)]
        input: Input,
        /// Emit the result as an MWC system document.
        #[arg(long)]
        json: bool,
    },
    /// Compare the direct formulas with the brute-force oracle.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Check every system on this many voters instead of one document.
        #[arg(long, value_name = "N", conflicts_with = "input")]
        atlas: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: u64,
    },
    /// Print the partial sums of one voter's score after each sub-family size.
    Trace {
        #[command(flatten)]
        input: Input,
        /// Voter name.
        #[arg(long)]
        voter: String,
        #[arg(long, value_enum, default_value_t = Kind::Bs)]
        kind: Kind,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 6)]
        precision: usize,
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: u64,
    },
    /// Enumerate every voting system on N voters.
    Atlas {
        n: usize,
        /// Count distinct power profiles of these indices (N <= 5).
        #[arg(long, value_enum, value_name = "KIND")]
        profiles: Vec<ProfileKind>,
        /// Write one JSON object per system to FILE.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bs,
    Ssi,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileKind {
    Pbi,
    Ssi,
    Dp,
    Hp,
    All,
}

impl ProfileKind {
    fn kinds(self) -> Vec<IndexKind> {
        match self {
            ProfileKind::Pbi => vec![IndexKind::Pbi],
            ProfileKind::Ssi => vec![IndexKind::Ssi],
            ProfileKind::Dp => vec![IndexKind::Dp],
            ProfileKind::Hp => vec![IndexKind::Hp],
            ProfileKind::All => IndexKind::ALL.to_vec(),
        }
    }
}

fn read_document(input: &Input) -> Result<SystemDocument, CliError> {
    let mut text = String::new();
    match &input.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    SystemDocument::from_json(&text)
}

fn read_system(input: &Input) -> Result<MwcSet, CliError> {
    read_document(input)?.into_system()?.into_mwc()
}

fn cmd_analyze(input: &Input, compute: &Compute, json: bool, precision: usize) -> Result<(), CliError> {
    let system = read_system(input)?;
    let report = analyze(&system, &compute.options())?;
    let proper = is_proper(&system);
    if json {
        let out = json!({
            "system": SystemDocument::from_mwc(&system),
            "proper": proper,
            "winning_coalitions": count_winning(&system).to_string(),
            "indices": render::report_json(&report),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!(
            "{} voters, {} minimal winning coalitions, {}",
            system.n(),
            system.len(),
            if proper { "proper" } else { "improper" }
        );
        print!("{}", render::report_table(&report, precision));
    }
    Ok(())
}

fn cmd_derive(input: &Input, json: bool) -> Result<(), CliError> {
    let document::System::Weighted(game) = read_document(input)?.into_system()? else {
        return Err(CliError::Input("derive needs a weighted document (\"weights\" and \"quota\")".into()));
    };
    let system = mwc_power::derive_mwc(&game)?;
    if json {
        let doc = SystemDocument::from_mwc(&system);
        println!("{}", serde_json::to_string(&doc).expect("serializable"));
    } else {
        for &c in system.members() {
            println!("{{{}}}", system.voters().coalition_names(c).join(", "));
        }
    }
    Ok(())
}

/// `(bs_ok, ssi_ok)` for one system.
fn compare_with_oracle(system: &MwcSet, budget: u64) -> Result<(bool, bool), CliError> {
    let oracle_bs = oracle_banzhaf(system)?;
    let oracle_ssi = oracle_ssi(system)?;
    let (bs, ssi) = direct_indices(system, &DirectOptions::default().with_budget(budget).with_workers(0))?;
    Ok((bs == oracle_bs, ssi == oracle_ssi))
}

fn cmd_verify(input: &Input, atlas: Option<usize>, budget: u64) -> Result<(), CliError> {
    let (bs_ok, ssi_ok, systems) = match atlas {
        Some(n) => {
            if n == 0 || n > MAX_PROFILE_VOTERS {
                return Err(LimitError::AtlasSizeExceeded {
                    got: n,
                    max: MAX_PROFILE_VOTERS,
                }
                .into());
            }
            let mut acc = (true, true, 0usize);
            for system in enumerate_antichains(n)? {
                let (b, s) = compare_with_oracle(&system, budget)?;
                acc = (acc.0 && b, acc.1 && s, acc.2 + 1);
            }
            acc
        }
        None => {
            let (b, s) = compare_with_oracle(&read_system(input)?, budget)?;
            (b, s, 1)
        }
    };
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let noun = if systems == 1 { "system" } else { "systems" };
    println!("BS: {} ({systems} {noun})", verdict(bs_ok));
    println!("SSI: {} ({systems} {noun})", verdict(ssi_ok));
    if bs_ok && ssi_ok {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn cmd_trace(
    input: &Input,
    voter: &str,
    kind: Kind,
    json: bool,
    precision: usize,
    budget: u64,
) -> Result<(), CliError> {
    let system = read_system(input)?;
    let index = system
        .voters()
        .index_of(voter)
        .ok_or_else(|| CliError::Validation(mwc_power::ValidationError::UnknownVoter(voter.into())))?;
    let kind = match kind {
        Kind::Bs => TraceKind::Banzhaf,
        Kind::Ssi => TraceKind::ShapleyShubik,
    };
    let report = trace(&system, index, kind, budget)?;
    let steps: Vec<String> = match &report.steps {
        TraceSteps::Banzhaf(s) => render::integers(s),
        TraceSteps::ShapleyShubik(s) => s.iter().map(Rational::to_string).collect(),
    };
    if json {
        let out = json!({
            "voter": voter,
            "kind": if kind == TraceKind::Banzhaf { "bs" } else { "ssi" },
            "steps": match &report.steps {
                TraceSteps::Banzhaf(s) => render::integers(s),
                TraceSteps::ShapleyShubik(s) => render::fractions(s),
            },
        });
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        let decimals = report.rational_steps();
        let rows: Vec<Vec<String>> = steps
            .into_iter()
            .zip(&decimals)
            .enumerate()
            .map(|(r, (exact, value))| {
                let mut row = vec![(r + 1).to_string(), exact];
                if kind == TraceKind::ShapleyShubik {
                    row.push(value.to_decimal_string(precision));
                }
                row
            })
            .collect();
        let header: &[&str] = if kind == TraceKind::Banzhaf {
            &["r", "partial sum"]
        } else {
            &["r", "partial sum", "decimal"]
        };
        print!("{}", render::table(header, &rows));
    }
    Ok(())
}

fn cmd_atlas(n: usize, profiles: &[ProfileKind], dump: Option<&PathBuf>) -> Result<(), CliError> {
    let count = enumerate_antichains(n)?.count();
    println!("{count} systems");

    if !profiles.is_empty() {
        let atlases = profile_atlases(n)?;
        let mut kinds: Vec<IndexKind> = profiles.iter().flat_map(|p| p.kinds()).collect();
        kinds.sort();
        kinds.dedup();
        for kind in kinds {
            let atlas = &atlases[&kind];
            println!(
                "{}: {} distinct ordered profiles, {} distinct unordered profiles",
                kind.name(),
                atlas.ordered.len(),
                atlas.unordered.len()
            );
        }
    }

    if let Some(path) = dump {
        let file = File::create(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let mut out = BufWriter::new(file);
        for entry in atlas_entries(n)? {
            let mwc: Vec<Vec<usize>> = entry
                .system
                .members()
                .iter()
                .map(|c| c.members().collect())
                .collect();
            let bs: Vec<u64> = entry
                .report
                .bs
                .iter()
                .map(|b| u64::try_from(b).expect("n <= 6"))
                .collect();
            let record = json!({
                "mwc": mwc,
                "bs": bs,
                "pbp": render::fractions(&entry.report.pbp),
                "pbi": render::fractions(&entry.report.pbi),
                "ssi": render::fractions(&entry.report.ssi),
                "dp": render::fractions(&entry.report.dp),
                "hp": render::fractions(&entry.report.hp),
            });
            writeln!(out, "{record}")?;
        }
        out.flush()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze {
            input,
            compute,
            json,
            precision,
        } => cmd_analyze(input, compute, *json, *precision),
        Command::Derive { input, json } => cmd_derive(input, *json),
        Command::Verify { input, atlas, budget } => cmd_verify(input, *atlas, *budget),
        Command::Trace {
            input,
            voter,
            kind,
            json,
            precision,
            budget,
        } => cmd_trace(input, voter, *kind, *json, *precision, *budget),
        Command::Atlas { n, profiles, dump } => cmd_atlas(*n, profiles, dump.as_ref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
