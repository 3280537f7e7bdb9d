use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use rootsys::export::export_dot;
use rootsys::oracle::{oracle_check, DEFAULT_PAIR_BOUND};
use rootsys::report::{classify, SurveyRow};
use rootsys::series::{count_series, expected_bds_count};
use rootsys::{Error, LieType, RootSystem, VoganDatum};

const MISMATCH: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "rootsys", version, about = "Borel-de Siebenthal positive systems of equi-rank real forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compact data, diagrams and Borel-de Siebenthal systems of one datum
    Classify {
        /// Cartan type such as E6 or B4
        lie_type: LieType,
        /// Painted node, 1-based
        nu: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz digraph of the weights of p
    ExportDot { lie_type: LieType, nu: usize },
    /// Compare the constructive enumeration with exhaustive search
    OracleCheck {
        lie_type: LieType,
        nu: usize,
        #[arg(long, default_value_t = DEFAULT_PAIR_BOUND)]
        oracle_bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate every admissible datum up to a rank
    Survey {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Also run the oracle on every datum within the bound
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_PAIR_BOUND)]
        oracle_bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Roots of a simple Lie algebra in canonical order
    DumpRoots {
        lie_type: LieType,
        #[arg(long)]
        json: bool,
    },
}

fn datum(t: LieType, nu: usize) -> Result<VoganDatum, ExitCode> {
    if nu == 0 || nu > t.rank() {
        eprintln!("error: node {nu} is out of range for {t}");
        return Err(ExitCode::from(USAGE));
    }
    VoganDatum::new(t, nu - 1).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(USAGE)
    })
}

fn failure(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(MISMATCH)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(MISMATCH)
    }
}

fn survey_row(vd: &VoganDatum, run_oracle: bool, bound: usize) -> SurveyRow {
    let expected = expected_bds_count(vd);
    let base = SurveyRow {
        datum: vd.label(),
        hermitian: vd.is_hermitian(),
        bds: 0,
        expected,
        total: 0,
        oracle_ok: None,
        note: None,
    };
    let count = match count_series(vd) {
        Ok(c) => c,
        Err(e) => return SurveyRow { note: Some(e.to_string()), ..base },
    };
    let mut row = SurveyRow { bds: count.bds, total: count.total, ..base };
    if run_oracle {
        match oracle_check(vd, bound) {
            Ok(r) => row.oracle_ok = Some(r.ok),
            Err(e @ Error::OracleBound { .. }) => row.note = Some(format!("oracle skipped: {e}")),
            Err(e) => {
                row.oracle_ok = Some(false);
                row.note = Some(e.to_string());
            }
        }
    }
    row
}

fn survey_text(rows: &[SurveyRow]) -> String {
    let mut out = format!("{:<8} {:<10} {:>4} {:>9} {:>8} {:>7}\n", "datum", "kind", "bds", "expected", "total", "oracle");
    for r in rows {
        let kind = if r.hermitian { "hermitian" } else { "semisimple" };
        let oracle = match r.oracle_ok {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        write!(out, "{:<8} {:<10} {:>4} {:>9} {:>8} {:>7}", r.datum, kind, r.bds, r.expected, r.total, oracle).unwrap();
        if let Some(n) = &r.note {
            write!(out, "  {n}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Classify { lie_type, nu, json } => {
            let vd = datum(lie_type, nu)?;
            let report = classify(&vd).map_err(failure)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(verdict(report.consistent()))
        }
        Command::ExportDot { lie_type, nu } => {
            print!("{}", export_dot(&datum(lie_type, nu)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleCheck { lie_type, nu, oracle_bound, json } => {
            let vd = datum(lie_type, nu)?;
            let report = match oracle_check(&vd, oracle_bound) {
                Ok(r) => r,
                Err(e @ Error::OracleBound { .. }) => {
                    eprintln!("notice: {e}; raise --oracle-bound to run it");
                    return Err(ExitCode::from(USAGE));
                }
                Err(e) => return Err(failure(e)),
            };
            if json {
                println!("{}", to_json(&report));
            } else {
                let tag = if report.ok { "OK" } else { "MISMATCH" };
                println!("{tag}, {} = {}", report.oracle_bds, report.enumerated_bds);
                println!(
                    "positive systems containing P_k: {} (expected {})",
                    report.positive_systems, report.expected_positive_systems
                );
                for b in &report.only_oracle {
                    println!("only in oracle: {b:?}");
                }
                for b in &report.only_enumerated {
                    println!("only in enumeration: {b:?}");
                }
            }
            Ok(verdict(report.ok))
        }
        Command::Survey { max_rank, all, oracle_bound, json } => {
            let data = VoganDatum::all_up_to(max_rank);
            // par_iter().map().collect() preserves input order
            let rows: Vec<SurveyRow> = data.par_iter().map(|vd| survey_row(vd, all, oracle_bound)).collect();
            if json {
                println!("{}", to_json(&rows));
            } else {
                print!("{}", survey_text(&rows));
            }
            let ok = rows.iter().all(|r| r.bds == r.expected && r.oracle_ok != Some(false) && r.total > 0);
            Ok(verdict(ok))
        }
        Command::DumpRoots { lie_type, json } => {
            let rs = RootSystem::of_type(lie_type);
            if json {
                println!("{}", to_json(&rs.roots()));
            } else {
                print!("{}", rs.dump_text());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
