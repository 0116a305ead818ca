use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use abelaut_core::enumeration::groups_up_to;
use abelaut_core::oracle::OracleBudget;
use abelaut_core::search::{SearchBounds, SearchVerdict};
use abelaut_core::{arith, p_valuation_of_aut, BigRational, FactorBound, GroupShape};
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::output::{class_tags, Format, Record, RowWriter};
use crate::{exit, parse_group, sweep, Error, Result};

/// Exact |Aut(G)| and |Aut(G)|/|G| for finite abelian groups.
///
/// Groups are written as products of cyclic factors, e.g. `Z2xZ3xZ9`,
/// `C12*C18` or "Z2 x Z4".
#[derive(Debug, Parser)]
#[command(name = "abelaut", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest trial divisor used to factor moduli and orders.
    #[arg(long, default_value_t = 1_000_000, global = true)]
    pub factor_bound: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print |Aut(G)|.
    Aut {
        #[arg(required = true, num_args = 1..)]
        group: Vec<String>,
    },
    /// Print |Aut(G)|/|G| as a reduced fraction.
    Ratio {
        #[arg(required = true, num_args = 1..)]
        group: Vec<String>,
    },
    /// Classify each primary component.
    Classify {
        #[arg(required = true, num_args = 1..)]
        group: Vec<String>,
    },
    /// The p-adic valuation of |Aut(G)| for the p-primary component.
    Valuation {
        #[arg(required = true, num_args = 1..)]
        group: Vec<String>,
        #[arg(short = 'p', long = "prime")]
        prime: u64,
    },
    /// Stream every abelian group of order <= N with its invariants.
    Enumerate {
        #[arg(long)]
        max_order: u64,
    },
    /// Look for a group whose ratio equals a target `a/b`.
    Search {
        target: String,
        #[arg(long, default_value_t = 10_000)]
        max_order: u64,
        /// Give up after this many seconds.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Every ratio attained up to order N, with its smallest witness.
    Atlas {
        #[arg(long, default_value_t = 10_000)]
        max_order: u64,
    },
    /// Check the closed form against brute-force counting.
    Verify {
        #[arg(long)]
        max_order: u64,
        /// Oracle limit on candidate generator tuples, |G|^n.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn group_arg(words: &[String], bound: &FactorBound) -> Result<GroupShape> {
    parse_group(&words.join(" "), bound)
}

fn timeout(seconds: Option<f64>) -> Result<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| Error::Usage(format!("invalid time limit {s}"))))
        .transpose()
}

#[derive(Serialize)]
struct ValuationRow {
    group: String,
    prime: u64,
    n: u64,
    d: u64,
    c: u64,
    total: u64,
}

#[derive(Serialize)]
struct SearchRow {
    verdict: &'static str,
    reason: Option<String>,
    order: Option<u64>,
    group: Option<String>,
    ratio_num: Option<String>,
    ratio_den: Option<String>,
    max_order_searched: Option<u64>,
}

#[derive(Serialize)]
struct VerifyRow {
    max_order: u64,
    budget: u64,
    groups: u64,
    checked: u64,
    skipped: u64,
    shapes_counted: u64,
    mismatches: usize,
}

#[derive(Serialize)]
struct MismatchRow {
    group: String,
    formula: String,
    oracle: String,
}

fn execute(cli: &Cli, out: &mut impl Write) -> Result<i32> {
    let bound = FactorBound::new(cli.factor_bound);
    let mut rows = RowWriter::new(cli.format, out);
    match &cli.command {
        Command::Aut { group } => {
            let g = group_arg(group, &bound)?;
            rows.write(&Record::for_group(&g), |r| r.aut_order.clone())?;
        }
        Command::Ratio { group } => {
            let g = group_arg(group, &bound)?;
            rows.write(&Record::for_group(&g), Record::ratio_text)?;
        }
        Command::Classify { group } => {
            let g = group_arg(group, &bound)?;
            let text = if g.is_trivial() {
                "trivial".to_string()
            } else {
                class_tags(&g).replace(';', "\n").replace(':', ": ")
            };
            rows.write(&Record::for_group(&g), |_| text)?;
        }
        Command::Valuation { group, prime } => {
            if !arith::is_prime(*prime) {
                return Err(abelaut_core::Error::NotPrime(*prime).into());
            }
            let g = group_arg(group, &bound)?;
            let part = g
                .factor(*prime)
                .ok_or_else(|| Error::Usage(format!("{g} has no {prime}-primary component")))?;
            let v = p_valuation_of_aut(part);
            let row = ValuationRow { group: part.to_string(), prime: *prime, n: v.n, d: v.d, c: v.c, total: v.total };
            rows.write(&row, |r| format!("n={} d={} c={} total={}", r.n, r.d, r.c, r.total))?;
        }
        Command::Enumerate { max_order } => {
            for (_, g) in groups_up_to(*max_order, &bound)? {
                let rec = Record::for_group(&g);
                rows.write(&rec, |r| format!("{}\t{}\t{}", r.order, r.group, r.ratio_text()))?;
            }
        }
        Command::Search { target, max_order, time_limit } => {
            let target: BigRational = target.parse()?;
            let mut bounds = SearchBounds::new(*max_order)?;
            bounds.time_limit = timeout(*time_limit)?;
            let verdict = sweep::realize_timed(&target, &bounds, &bound)?;
            let row = search_row(&verdict);
            rows.write(&row, |_| search_text(&verdict))?;
        }
        Command::Atlas { max_order } => {
            SearchBounds::new(*max_order)?;
            let chunks = rayon::current_num_threads() as u64 * 4;
            let atlas = sweep::parallel_atlas(*max_order, chunks, &bound)?;
            for (_, w) in atlas.iter() {
                let rec = Record::for_group(&w.group);
                rows.write(&rec, |r| format!("{}\t{}\t{}", r.ratio_text(), r.order, r.group))?;
            }
        }
        Command::Verify { max_order, budget } => {
            let budget = OracleBudget::new(*budget)?;
            let report = sweep::verify(*max_order, &budget, &bound)?;
            if cli.format != Format::Csv {
                for m in &report.mismatches {
                    let row = MismatchRow {
                        group: m.group.to_string(),
                        formula: m.formula.to_string(),
                        oracle: m.oracle.to_string(),
                    };
                    rows.write(&row, |r| format!("MISMATCH {} formula={} oracle={}", r.group, r.formula, r.oracle))?;
                }
            }
            let summary = VerifyRow {
                max_order: *max_order,
                budget: budget.max_candidate_tuples(),
                groups: report.groups,
                checked: report.checked,
                skipped: report.skipped,
                shapes_counted: report.shapes_counted,
                mismatches: report.mismatches.len(),
            };
            rows.write(&summary, |s| {
                format!(
                    "{}: {} groups, {} checked, {} skipped (over budget), {} mismatches",
                    if s.mismatches == 0 { "PASS" } else { "FAIL" },
                    s.groups,
                    s.checked,
                    s.skipped,
                    s.mismatches
                )
            })?;
            if !report.passed() {
                return Ok(exit::MISMATCH);
            }
        }
    }
    Ok(exit::OK)
}

fn search_row(v: &SearchVerdict) -> SearchRow {
    let empty = SearchRow {
        verdict: "",
        reason: None,
        order: None,
        group: None,
        ratio_num: None,
        ratio_den: None,
        max_order_searched: None,
    };
    match v {
        SearchVerdict::Witness(w) => {
            let r = abelaut_core::ratio(&w.group);
            SearchRow {
                verdict: "Witness",
                order: Some(w.order),
                group: Some(w.group.to_string()),
                ratio_num: Some(r.numer().to_string()),
                ratio_den: Some(r.denom().to_string()),
                ..empty
            }
        }
        SearchVerdict::Unrealizable(reason) => {
            SearchRow { verdict: "Unrealizable", reason: Some(reason.to_string()), ..empty }
        }
        SearchVerdict::NotFoundWithinBounds { max_order_searched } => SearchRow {
            verdict: "NotFoundWithinBounds",
            max_order_searched: Some(*max_order_searched),
            ..empty
        },
    }
}

fn search_text(v: &SearchVerdict) -> String {
    match v {
        SearchVerdict::Witness(w) => format!("Witness {} (order {})", w.group, w.order),
        SearchVerdict::Unrealizable(reason) => format!("Unrealizable({reason})"),
        SearchVerdict::NotFoundWithinBounds { max_order_searched } => {
            format!("NotFoundWithinBounds({max_order_searched})")
        }
    }
}
