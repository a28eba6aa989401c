//! Command-line front end.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::classification::{
    block_stabilizers, exceptional_records, exceptional_records_for, irreducible_outer,
    is_mult_free, is_tau_invariant, minimal_triples, monomial_imprimitive, CharRef, GroupKind,
    EXCEPTIONAL_GROUPS,
};
use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};
use crate::shifted_tableaux::{st_count, tp_tableaux};
use crate::spin_characters::{
    branch_down, branch_up, clifford_degree, degree, outer_product_decompose, AnSpinLabel, Half,
    SpinLabel, Variant,
};
use crate::verify::verify_all;

pub use render::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "spinfold",
    version,
    about = "Spin characters of the double covers of S_n and A_n"
)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Render angle brackets and group names in ASCII.
    #[arg(long, global = true)]
    pub ascii: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Sn,
    An,
}

impl From<GroupArg> for GroupKind {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Sn => GroupKind::Sn,
            GroupArg::An => GroupKind::An,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[value(name = "plain", alias = "p")]
    Plain,
    #[value(name = "a", alias = "associate")]
    Associate,
    #[value(name = "self", alias = "s")]
    SelfAssociate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HalfArg {
    Whole,
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose the projective outer product <mu> x <nu>.
    Decompose {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Induce a spin character to S~(n+1), or restrict it with --down.
    Branch {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long)]
        down: bool,
    },
    /// Count tableaux of shape lambda/mu with content nu satisfying (TP).
    Stcoeff {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Also print the tableaux.
        #[arg(long)]
        list: bool,
    },
    /// Degree of <lambda>.
    Degree {
        #[arg(long)]
        lambda: String,
    },
    /// Multiplicity-freeness, irreducibility and tau-invariance of <mu> x <nu>.
    Classify {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Minimal triples (H, phi, chi).
    Triples {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
    },
    /// Block stabilizers of a spin character.
    Stabilizers {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, value_enum)]
        half: Option<HalfArg>,
    },
    /// Imprimitive monomial spin characters up to n-max.
    Monomial {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n_max: usize,
    },
    /// Minimal triples of 3.A6, 3.A7, 6.A6 and 6.A7.
    Exceptional {
        #[arg(long)]
        group: Option<String>,
    },
    /// Run the oracle and property suites.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_weight: usize,
    },
}

/// Result of one invocation: rendered output and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

pub fn parse_strict(s: &str) -> Result<StrictPartition> {
    s.parse()
}

fn nonempty(s: &str) -> Result<StrictPartition> {
    let p = parse_strict(s)?;
    if p.is_empty() {
        return Err(Error::InvalidLabel("partition must be non-empty".into()));
    }
    Ok(p)
}

fn spin_label(lambda: &str, variant: Option<VariantArg>) -> Result<SpinLabel> {
    let shape = nonempty(lambda)?;
    match variant {
        None => Ok(SpinLabel::of(shape)),
        Some(VariantArg::Plain) => SpinLabel::new(shape, Variant::Plain),
        Some(VariantArg::Associate) => SpinLabel::new(shape, Variant::Associate),
        Some(VariantArg::SelfAssociate) => SpinLabel::new(shape, Variant::SelfAssociate),
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    match execute(&cli.command, cli.ascii) {
        Ok((report, passed)) => Outcome {
            code: if passed { 0 } else { 1 },
            stdout: report.render(cli.format, cli.ascii),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(command: &Command, ascii: bool) -> Result<(Report, bool)> {
    let fmt_char = |c: &CharRef| if ascii { c.ascii() } else { c.to_string() };
    let report = match command {
        Command::Decompose { mu, nu } => {
            let (mu, nu) = (nonempty(mu)?, nonempty(nu)?);
            Report::combination(&outer_product_decompose(&mu, &nu)?)
        }
        Command::Branch {
            lambda,
            variant,
            down,
        } => {
            let x = spin_label(lambda, *variant)?;
            Report::combination(&if *down {
                branch_down(&x)
            } else {
                branch_up(&x)
            })
        }
        Command::Stcoeff {
            lambda,
            mu,
            nu,
            list,
        } => {
            let (lambda, mu, nu) = (parse_strict(lambda)?, parse_strict(mu)?, parse_strict(nu)?);
            let count = st_count(&lambda, &mu, &nu)?;
            let mut text = format!("st = {count}\n");
            let mut tableaux = Vec::new();
            if *list {
                for t in tp_tableaux(&lambda, &mu, &nu)? {
                    text.push('\n');
                    text.push_str(&t.to_string());
                    tableaux.push(Value::String(t.word().to_string()));
                }
            }
            let mut json = json!({ "st": count });
            if *list {
                json["words"] = Value::Array(tableaux);
            }
            Report::raw(text, json, vec!["st".into()], vec![vec![count.to_string()]])
        }
        Command::Degree { lambda } => {
            let shape = nonempty(lambda)?;
            let d = degree(&shape);
            Report::raw(
                format!("{d}\n"),
                json!({ "lambda": shape.parts(), "degree": d.to_string() }),
                vec!["lambda".into(), "degree".into()],
                vec![vec![shape.to_string(), d.to_string()]],
            )
        }
        Command::Classify { mu, nu } => {
            let (mu, nu) = (nonempty(mu)?, nonempty(nu)?);
            let case = is_mult_free(&mu, &nu);
            let irr = irreducible_outer(&mu, &nu);
            let tau = if mu.size() == nu.size() {
                Some(is_tau_invariant(&mu, &nu)?)
            } else {
                None
            };
            let d: BigUint = clifford_degree(&mu, &nu);
            let rows = vec![
                vec![
                    "multiplicity-free".into(),
                    case.map_or("no".into(), |c| format!("yes, case {c}")),
                ],
                vec![
                    "irreducible".into(),
                    irr.as_ref().map_or("no".into(), |l| {
                        if ascii {
                            format!("yes, <{l}>")
                        } else {
                            format!("yes, ⟨{l}⟩")
                        }
                    }),
                ],
                vec![
                    "tau-invariant".into(),
                    tau.map_or("n/a".into(), |t| if t { "yes" } else { "no" }.into()),
                ],
                vec!["clifford degree".into(), d.to_string()],
            ];
            let json = json!({
                "mult_free": case.is_some(),
                "case": case.map(|c| c.to_string()),
                "irreducible": irr.map(|l| l.parts().to_vec()),
                "tau_invariant": tau,
                "clifford_degree": d.to_string(),
            });
            Report::table(None, rows, json, vec!["property".into(), "value".into()])
        }
        Command::Triples { group, n } => {
            let triples = minimal_triples((*group).into(), *n)?;
            let rows = triples
                .iter()
                .map(|t| {
                    let stab = if ascii {
                        t.stabilizer.ascii()
                    } else {
                        t.stabilizer.to_string()
                    };
                    vec![stab, fmt_char(&t.phi), fmt_char(&t.chi)]
                })
                .collect();
            let json =
                json!({ "triples": triples.iter().map(|t| t.to_json()).collect::<Vec<_>>() });
            let headers = vec!["stabilizer".into(), "phi".into(), "chi".into()];
            Report::table(Some(headers.clone()), rows, json, headers)
        }
        Command::Stabilizers {
            group,
            lambda,
            variant,
            half,
        } => {
            let label = match group {
                GroupArg::Sn => CharRef::Spin(spin_label(lambda, *variant)?),
                GroupArg::An => {
                    let shape = nonempty(lambda)?;
                    let half = match half {
                        Some(HalfArg::Whole) => Half::Whole,
                        Some(HalfArg::Plus) => Half::Plus,
                        Some(HalfArg::Minus) => Half::Minus,
                        None if shape.sign().is_odd() => Half::Whole,
                        None => Half::Plus,
                    };
                    CharRef::An(AnSpinLabel::new(shape, half)?)
                }
            };
            let stabs = block_stabilizers(&label);
            let rows = stabs
                .iter()
                .map(|s| {
                    vec![
                        if ascii { s.ascii() } else { s.to_string() },
                        s.order().to_string(),
                    ]
                })
                .collect();
            let json = json!({
                "stabilizers": stabs.iter().map(|s| json!({"name": s.ascii(), "order": s.order().to_string()})).collect::<Vec<_>>(),
            });
            let headers = vec!["stabilizer".into(), "order".into()];
            Report::table(Some(headers.clone()), rows, json, headers)
        }
        Command::Monomial { group, n_max } => {
            let list = monomial_imprimitive((*group).into(), *n_max);
            let rows = list
                .iter()
                .map(|(n, chars)| {
                    vec![
                        n.to_string(),
                        chars.iter().map(fmt_char).collect::<Vec<_>>().join(", "),
                    ]
                })
                .collect();
            let json = json!({
                "monomial": list.iter().map(|(n, chars)| json!({
                    "n": n,
                    "chi": chars.iter().map(CharRef::to_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            let headers = vec!["n".into(), "chi".into()];
            Report::table(Some(headers.clone()), rows, json, headers)
        }
        Command::Exceptional { group } => {
            let records = match group {
                Some(g) => exceptional_records_for(g).ok_or_else(|| {
                    Error::InvalidLabel(format!(
                        "unknown group {g}; expected one of {}",
                        EXCEPTIONAL_GROUPS.join(", ")
                    ))
                })?,
                None => exceptional_records().to_vec(),
            };
            let rows = records
                .iter()
                .map(|r| {
                    vec![
                        r.group.into(),
                        r.stabilizer.into(),
                        r.phi.into(),
                        r.chi.into(),
                    ]
                })
                .collect();
            let json = json!({ "records": records });
            let headers = vec![
                "group".into(),
                "stabilizer".into(),
                "phi".into(),
                "chi".into(),
            ];
            Report::table(Some(headers.clone()), rows, json, headers)
        }
        Command::Verify { max_weight } => {
            let report = verify_all(*max_weight)?;
            let mut text = String::new();
            for f in &report.failures {
                text.push_str(&format!("FAIL: {f}\n"));
            }
            if report.ok() {
                text.push_str(&format!(
                    "OK: {} coefficient identities checked\n",
                    report.checked
                ));
            } else {
                text.push_str(&format!(
                    "FAILED: {} of {} checks\n",
                    report.failures.len(),
                    report.checked
                ));
            }
            let json = json!({ "ok": report.ok(), "checked": report.checked, "failures": report.failures });
            let passed = report.ok();
            return Ok((
                Report::raw(
                    text,
                    json,
                    vec!["ok".into(), "checked".into(), "failures".into()],
                    vec![vec![
                        passed.to_string(),
                        report.checked.to_string(),
                        report.failures.len().to_string(),
                    ]],
                ),
                passed,
            ));
        }
    };
    Ok((report, true))
}
