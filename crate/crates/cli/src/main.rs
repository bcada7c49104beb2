use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ordsum::oracle::{check_random_exprs, GenConfig};
use ordsum::rulesets::{PosetGame, TokenRowState, DEFAULT_STATE_CAP};
use ordsum::{parse, ChainSpec, Error, Evaluator, GameArena, NatSet, DEFAULT_NODE_CAP};

/// Evaluate impartial game expressions built from sums, ordinal sums and
/// ordinal sums with substitution.
#[derive(Parser, Debug)]
#[command(name = "ordsum", version)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum number of game nodes any expansion may intern.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_CAP)]
    node_cap: usize,

    /// Output style: readable text or `key=value` lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Vset,
    Grundy,
    Outcome,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as "*1 :[*3] (*2 + *4)".
    Eval {
        expr: String,
        /// Quantities to print.
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "vset,grundy,outcome"
        )]
        show: Vec<Quantity>,
    },
    /// Compare the set formulas against brute-force expansion on random
    /// expressions.
    Check {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_birthday: u32,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        #[arg(long, default_value_t = 4)]
        max_nimber: u64,
        /// Corrupt the substitution formula to confirm the check can fail.
        #[arg(long, hide = true)]
        mutant: bool,
    },
    /// Grundy value of the nimber chain *a0 :[*â1] *a1 ... :[*ân] *an.
    Chain {
        /// Comma-separated a0..an.
        #[arg(long)]
        a: String,
        /// Comma-separated â1..ân; empty for a single nimber.
        #[arg(long, default_value = "")]
        ahat: String,
    },
    /// Analyse a row of tokens given as a permutation of 0..n-1.
    Tokens { perm: String },
    /// Grundy value and outcome of a poset game file.
    Poset {
        file: PathBuf,
        /// Maximum number of positions the search may visit.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
}

/// Collects output lines in either format.
struct Report {
    format: Format,
    lines: Vec<String>,
}

impl Report {
    fn new(format: Format) -> Self {
        Report {
            format,
            lines: Vec::new(),
        }
    }

    fn field(&mut self, key: &str, label: &str, value: impl Display) {
        self.lines.push(match self.format {
            Format::Machine => format!("{key}={value}"),
            Format::Text => format!("{label}: {value}"),
        });
    }

    fn print(self) {
        for l in self.lines {
            println!("{l}");
        }
    }
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_list<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| format!("{flag}: `{}` is not a non-negative integer", s.trim()))
        })
        .collect()
}

fn vset_text(v: &NatSet, format: Format) -> String {
    match format {
        Format::Machine => join(v.iter()),
        Format::Text => v.to_string(),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let mut arena = GameArena::with_node_cap(cli.node_cap);
    let mut out = Report::new(cli.format);
    let mut ok = true;
    match cli.command {
        Command::Eval { expr, show } => {
            let e = parse(&expr)
                .map_err(|err| format!("{err}\n  {expr}\n  {}^", " ".repeat(err.byte_offset)))?;
            let mut ev = Evaluator::new();
            for q in show {
                match q {
                    Quantity::Vset => {
                        let v = ev.vset(&e).map_err(|e| e.to_string())?;
                        out.field("vset", "variation set", vset_text(&v, cli.format));
                    }
                    Quantity::Grundy => out.field(
                        "grundy",
                        "Grundy number",
                        ev.grundy(&e).map_err(|e| e.to_string())?,
                    ),
                    Quantity::Outcome => out.field(
                        "outcome",
                        "outcome",
                        ev.outcome(&e).map_err(|e| e.to_string())?,
                    ),
                }
            }
        }
        Command::Check {
            count,
            max_birthday,
            max_depth,
            max_nimber,
            mutant,
        } => {
            let cfg = GenConfig {
                max_birthday,
                max_expr_depth: max_depth,
                max_nimber,
                seed: cli.seed,
                ..GenConfig::default()
            };
            let r =
                check_random_exprs(&mut arena, &cfg, count, mutant).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Machine => {
                    out.field("passed", "", r.passed);
                    out.field("failed", "", r.failed);
                    out.field("skipped", "", r.skipped);
                }
                Format::Text => {
                    let mut line = format!("{} passed, {} failed", r.passed, r.failed);
                    if r.skipped > 0 {
                        line.push_str(&format!(", {} skipped (too large to expand)", r.skipped));
                    }
                    out.lines.push(line);
                }
            }
            for c in &r.counterexamples {
                out.field("counterexample", "counterexample", c);
            }
            ok = r.ok();
        }
        Command::Chain { a, ahat } => {
            let a = parse_list("--a", &a)?;
            let ahat = parse_list("--ahat", &ahat)?;
            let c = ChainSpec::new(a, ahat).map_err(|e| e.to_string())?;
            out.field("sigma", "suffix sums", join(c.suffix_sums()));
            out.field("p", "p", c.pivot());
            out.field(
                "grundy",
                "Grundy number",
                c.grundy().map_err(|e| e.to_string())?,
            );
        }
        Command::Tokens { perm } => {
            let perm = parse_list("perm", &perm)?;
            let s = TokenRowState::new(perm).map_err(|e| e.to_string())?;
            let flags = s.records().into_iter().map(u8::from);
            out.field("records", "record flags", join(flags));
            out.field("b", "b sequence", join(s.b_sequence()));
            let g = s.grundy();
            out.field("grundy", "Grundy number", g);
            out.field("claimed", "min non-record formula", s.claimed_grundy());
            if s.len() <= 8 {
                let searched = s
                    .retrograde_grundy(DEFAULT_STATE_CAP)
                    .map_err(|e| e.to_string())?;
                out.field("search", "exhaustive search", searched);
                out.field(
                    "verified",
                    "search agrees",
                    if searched == g { "yes" } else { "no" },
                );
                ok = searched == g;
            }
        }
        Command::Poset { file, state_cap } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let game = PosetGame::parse(&text).map_err(|e| match e {
                Error::PosetLoad { .. } => format!("{}: {e}", file.display()),
                other => other.to_string(),
            })?;
            let g = game
                .grundy(&mut arena, state_cap)
                .map_err(|e| e.to_string())?;
            out.field("grundy", "Grundy number", g);
            out.field("outcome", "outcome", if g == 0 { "P" } else { "N" });
        }
    }
    out.print();
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
