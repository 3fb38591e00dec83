//! Command-line front end for the library.
//!
//! Exit codes: `0` on success, `1` when a verification or conjecture check
//! fails, `2` on usage or input errors.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijections;
use crate::conjectures;
use crate::oracle::{AvoidanceClass, Caps, CountStat, Oracle, Population, Weight};
use crate::perm::Permutation;
use crate::syt;
use crate::verify;
use crate::words::{self, BinaryWord};

#[derive(Parser, Debug)]
#[command(
    name = "invstat",
    version,
    about = "Statistics of pattern-avoiding involutions: enumeration, generating functions, bijections and conjecture sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PopulationArg {
    /// All permutations.
    Perm,
    /// Involutions.
    Inv,
    /// Fixed-point-free involutions.
    Fpf,
}

impl From<PopulationArg> for Population {
    fn from(p: PopulationArg) -> Population {
        match p {
            PopulationArg::Perm => Population::Permutations,
            PopulationArg::Inv => Population::Involutions,
            PopulationArg::Fpf => Population::FixedPointFree,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// Size of the permutations.
    #[arg(long)]
    n: usize,
    /// Population to enumerate.
    #[arg(long, value_enum, default_value = "inv")]
    population: PopulationArg,
    /// Comma- or space-separated patterns to avoid, e.g. "321" or "123 3412".
    #[arg(long, num_args = 0.., value_delimiter = ' ', default_value = "")]
    patterns: Vec<String>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of an avoidance class with their statistics.
    Enumerate {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the generating function of a statistic over an avoidance class.
    Genfun {
        #[command(flatten)]
        class: ClassArgs,
        /// Statistic to track: inv, coinv, maj, comaj, des, asc, joint
        /// (p^inv q^maj t^des) or joint-reversed (p^coinv q^comaj t^asc).
        #[arg(long, default_value = "inv")]
        weight: String,
        /// Number of worker threads (0 = rayon default, 1 = serial).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-check every registered closed form, table row and bijection
    /// against the brute-force oracle.
    Verify {
        /// Largest involution size for the formula and table checks.
        #[arg(long, default_value_t = 9)]
        n: usize,
        /// Largest size for bijection round trips.
        #[arg(long, default_value_t = 8)]
        bijection_n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply one of the structural maps to a given input.
    Bijection {
        /// Which map to apply.
        #[arg(long, value_enum)]
        map: MapArg,
        /// Input: a permutation in one-line form ("215634" or "2,1,5,6,3,4")
        /// or a binary word for word-to-involution.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the equidistribution conjecture sweeps.
    Conjecture {
        /// Which sweep to run.
        #[arg(long, value_enum, default_value = "all")]
        sweep: SweepArg,
        /// Largest pattern length for the Wilf sweeps.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Largest size to compare distributions at.
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapArg {
    /// 321-avoiding involution -> binary word.
    WordEncode,
    /// Binary word -> 321-avoiding involution.
    WordDecode,
    /// Permutation -> insertion and recording tableaux.
    Rsk,
    /// Involution -> involution with transposed tableau.
    Transpose,
    /// 213-avoiding involution -> its descent set.
    DescentSet213,
    /// 132-avoiding involution -> its descent set.
    DescentSet132,
    /// 213-avoiding involution -> 132-avoiding involution (descent complement).
    Transfer,
    /// 132-avoiding permutation -> 213-avoiding permutation (ascents to descents).
    Theta,
    /// Inverse of theta.
    ThetaInverse,
    /// 123-avoiding involution -> its cycle-removal sequence.
    Decompose123,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SweepArg {
    /// Wilf sweep for inv over involutions.
    InvWilf,
    /// Wilf sweep for maj over involutions.
    MajWilf,
    /// Reversal symmetry of maj for layered pattern pairs.
    Reversal,
    /// Maj-equidistributed inflation pairs over all permutations.
    Pairs,
    /// Everything above, plus the length-6 near-coincidence.
    All,
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    match s {
        "joint" => Ok(Weight::joint()),
        "joint-reversed" => Ok(Weight::joint_reversed()),
        other => CountStat::parse(other)
            .map(Weight::q_only)
            .ok_or_else(|| format!("unknown weight `{other}`")),
    }
}

fn parse_patterns(raw: &[String]) -> Result<Vec<Permutation>, String> {
    let mut out = Vec::new();
    for chunk in raw {
        for token in chunk.split([',', ' ']).filter(|t| !t.is_empty()) {
            out.push(
                Permutation::from_str(token)
                    .map_err(|e| format!("bad pattern `{token}`: {e}"))?,
            );
        }
    }
    Ok(out)
}

fn oracle_for(n: usize) -> Oracle {
    let d = Caps::default();
    Oracle::with_caps(Caps {
        permutations: d.permutations.max(n),
        involutions: d.involutions.max(n),
    })
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), String> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap already uses exit code 2 for usage errors and 0 for
            // --help/--version; forward its rendering and code.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Enumerate { class, output } => cmd_enumerate(class, output),
        Command::Genfun { class, weight, jobs, output } => cmd_genfun(class, &weight, jobs, output),
        Command::Verify { n, bijection_n, output } => cmd_verify(n, bijection_n, output),
        Command::Bijection { map, input, output } => cmd_bijection(map, &input, output),
        Command::Conjecture { sweep, max_len, n, output } => cmd_conjecture(sweep, max_len, n, output),
    }
}

fn build_class(args: &ClassArgs) -> Result<AvoidanceClass, String> {
    Ok(AvoidanceClass {
        population: args.population.into(),
        n: args.n,
        patterns: parse_patterns(&args.patterns)?,
    })
}

fn cmd_enumerate(args: ClassArgs, output: OutputArgs) -> Result<i32, String> {
    let class = build_class(&args)?;
    let oracle = oracle_for(args.n);
    let members = oracle.members(&class).map_err(|e| e.to_string())?;
    let text = match output.format {
        FormatArg::Human => {
            let mut s = String::new();
            for p in &members {
                let st = p.stats();
                let _ = writeln!(
                    s,
                    "{p}  inv={} maj={} des={} coinv={} comaj={} asc={}",
                    st.inv, st.maj, st.des, st.coinv, st.comaj, st.asc
                );
            }
            let _ = writeln!(s, "total: {}", members.len());
            s
        }
        FormatArg::Json => {
            let rows: Vec<_> = members
                .iter()
                .map(|p| {
                    let st = p.stats();
                    json!({
                        "perm": p.word(),
                        "inv": st.inv, "maj": st.maj, "des": st.des,
                        "coinv": st.coinv, "comaj": st.comaj, "asc": st.asc,
                    })
                })
                .collect();
            format!("{}\n", json!({"count": members.len(), "members": rows}))
        }
    };
    emit(&output, &text)?;
    Ok(0)
}

fn cmd_genfun(args: ClassArgs, weight: &str, jobs: usize, output: OutputArgs) -> Result<i32, String> {
    let class = build_class(&args)?;
    let weight = parse_weight(weight)?;
    let oracle = oracle_for(args.n);
    let poly = if jobs == 1 {
        oracle.genfun(&class, weight)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| oracle.genfun_parallel(&class, weight))
    }
    .map_err(|e| e.to_string())?;
    let text = match output.format {
        FormatArg::Human => format!("{poly}\n"),
        FormatArg::Json => format!("{}\n", poly.to_json()),
    };
    emit(&output, &text)?;
    Ok(0)
}

fn cmd_verify(n: usize, bijection_n: usize, output: OutputArgs) -> Result<i32, String> {
    let oracle = oracle_for(n.max(bijection_n));
    let options = verify::VerifyOptions {
        involution_cap: n,
        permutation_cap: n.min(8),
        fpf_cap: n,
        bijection_cap: bijection_n,
    };
    let report = verify::run(&oracle, options).map_err(|e| e.to_string())?;
    let text = match output.format {
        FormatArg::Human => report.to_string(),
        FormatArg::Json => format!("{}\n", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?),
    };
    emit(&output, &text)?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn cmd_bijection(map: MapArg, input: &str, output: OutputArgs) -> Result<i32, String> {
    let parse_perm =
        |s: &str| Permutation::from_str(s).map_err(|e| format!("bad permutation `{s}`: {e}"));
    let (human, value) = match map {
        MapArg::WordEncode => {
            let p = parse_perm(input)?;
            let w = words::phi_321(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {w}\n"), json!({"input": p.word(), "word": w.to_string()}))
        }
        MapArg::WordDecode => {
            let w = BinaryWord::from_str(input).map_err(|e| e.to_string())?;
            let p = words::phi_321_inverse(&w).map_err(|e| e.to_string())?;
            (format!("{w} -> {p}\n"), json!({"input": w.to_string(), "involution": p.word()}))
        }
        MapArg::Rsk => {
            let p = parse_perm(input)?;
            let (ins, rec) = syt::rsk(&p);
            (
                format!("{p}\nP = {ins}\nQ = {rec}\n"),
                json!({"input": p.word(), "p": ins.rows(), "q": rec.rows()}),
            )
        }
        MapArg::Transpose => {
            let p = parse_perm(input)?;
            let image = syt::transpose_involution(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {image}\n"), json!({"input": p.word(), "image": image.word()}))
        }
        MapArg::DescentSet213 => {
            let p = parse_perm(input)?;
            let a = bijections::varphi_213(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {a:?}\n"), json!({"input": p.word(), "descent_set": a}))
        }
        MapArg::DescentSet132 => {
            let p = parse_perm(input)?;
            let a = bijections::psi_132(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {a:?}\n"), json!({"input": p.word(), "descent_set": a}))
        }
        MapArg::Transfer => {
            let p = parse_perm(input)?;
            let image = bijections::transfer_213_to_132(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {image}\n"), json!({"input": p.word(), "image": image.word()}))
        }
        MapArg::Theta => {
            let p = parse_perm(input)?;
            let image = bijections::theta(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {image}\n"), json!({"input": p.word(), "image": image.word()}))
        }
        MapArg::ThetaInverse => {
            let p = parse_perm(input)?;
            let image = bijections::theta_inverse(&p).map_err(|e| e.to_string())?;
            (format!("{p} -> {image}\n"), json!({"input": p.word(), "image": image.word()}))
        }
        MapArg::Decompose123 => {
            let p = parse_perm(input)?;
            let seq = bijections::decompose_123(&p).map_err(|e| e.to_string())?;
            (
                format!("{p} -> family {:?}, m = {}, entries {:?}\n", seq.family, seq.m, seq.entries),
                json!({
                    "input": p.word(),
                    "family": format!("{:?}", seq.family),
                    "m": seq.m,
                    "entries": seq.entries,
                }),
            )
        }
    };
    let text = match output.format {
        FormatArg::Human => human,
        FormatArg::Json => format!("{value}\n"),
    };
    emit(&output, &text)?;
    Ok(0)
}

fn cmd_conjecture(sweep: SweepArg, max_len: usize, n: usize, output: OutputArgs) -> Result<i32, String> {
    let oracle = oracle_for(n);
    let mut report = conjectures::ConjectureReport::default();
    let err = |e: crate::oracle::OracleError| e.to_string();
    if matches!(sweep, SweepArg::InvWilf | SweepArg::All) {
        report.merge(conjectures::inv_wilf_sweep(&oracle, max_len, n).map_err(err)?);
    }
    if matches!(sweep, SweepArg::MajWilf | SweepArg::All) {
        report.merge(conjectures::maj_wilf_sweep(&oracle, max_len, n).map_err(err)?);
    }
    if matches!(sweep, SweepArg::Reversal | SweepArg::All) {
        report.merge(
            conjectures::reversal_symmetry_sweep(&oracle, Population::Involutions, max_len + 1, n)
                .map_err(err)?,
        );
    }
    if matches!(sweep, SweepArg::Pairs | SweepArg::All) {
        report.merge(
            conjectures::corollary_pairs_sweep(&oracle, max_len.min(3), 2, n.min(7)).map_err(err)?,
        );
    }
    if sweep == SweepArg::All {
        let split = conjectures::inv_wilf_length6_split(&oracle).map_err(err)?;
        report.push(split.label, split.holds, split.detail);
    }
    let text = match output.format {
        FormatArg::Human => report.to_string(),
        FormatArg::Json => format!("{}\n", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?),
    };
    emit(&output, &text)?;
    Ok(if report.all_hold() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Command {
        Cli::try_parse_from(std::iter::once("invstat").chain(args.iter().copied()))
            .unwrap()
            .command
    }

    #[test]
    fn parses_genfun_invocation() {
        let cmd = parse(&[
            "genfun", "--n", "6", "--population", "inv", "--patterns", "321", "--weight", "maj",
            "--jobs", "2", "--format", "json",
        ]);
        match cmd {
            Command::Genfun { class, weight, jobs, output } => {
                assert_eq!(class.n, 6);
                assert_eq!(class.population, PopulationArg::Inv);
                assert_eq!(parse_patterns(&class.patterns).unwrap(), vec![crate::perm::perm("321")]);
                assert_eq!(weight, "maj");
                assert_eq!(jobs, 2);
                assert_eq!(output.format, FormatArg::Json);
            }
            other => panic!("unexpected parse: {other:?}"),
        }
    }

    #[test]
    fn genfun_matches_oracle_through_both_paths() {
        let class = ClassArgs {
            n: 6,
            population: PopulationArg::Inv,
            patterns: vec!["321".into()],
        };
        let oracle = Oracle::new();
        let expected = oracle
            .genfun(&build_class(&class).unwrap(), Weight::maj())
            .unwrap();
        let parallel = oracle
            .genfun_parallel(&build_class(&class).unwrap(), Weight::maj())
            .unwrap();
        assert_eq!(expected, parallel);
    }

    #[test]
    fn weight_and_pattern_parsing() {
        assert_eq!(parse_weight("joint").unwrap(), Weight::joint());
        assert_eq!(parse_weight("asc").unwrap(), Weight::q_only(CountStat::Asc));
        assert!(parse_weight("majj").is_err());
        let pats = parse_patterns(&["321,123".into(), "3412".into()]).unwrap();
        assert_eq!(pats.len(), 3);
        assert!(parse_patterns(&["3x1".into()]).is_err());
    }

    #[test]
    fn bijection_round_trip_through_dispatch() {
        let out = OutputArgs { format: FormatArg::Human, out: None };
        assert_eq!(cmd_bijection(MapArg::Theta, "41235", out).unwrap(), 0);
        let out = OutputArgs { format: FormatArg::Json, out: None };
        assert_eq!(cmd_bijection(MapArg::WordEncode, "132458967", out).unwrap(), 0);
    }
}
