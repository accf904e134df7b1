//! The `elnet` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use elnet_core::montecarlo::{self, McEstimate};
use elnet_core::perturbation::analyze_edge_removal;
use elnet_core::walk_regular::check_walk_regular;
use elnet_core::{generators, solver, EdgeRef, PerturbationReport};

use crate::edgelist::{parse_edge_list, EdgeListError, LabeledNetwork};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Agreement threshold for simulated estimates, in standard errors.
pub const MC_SIGMAS: f64 = 3.0;
/// Relative tolerance between closed-form predictions and recomputation.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "elnet", version, about = "Random walks and effective resistance on electric networks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Edge-list file; standard input when omitted or `-`.
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
    /// Emit a JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Complete,
    Hypercube,
    UnitaryCayley,
    Petersen,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum McQuery {
    Return,
    Hitting,
    Pendant,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named graph family as an edge list.
    Gen {
        family: Family,
        params: Vec<usize>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Effective resistance of one pair, or the full matrix.
    Resistance {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<String>>,
    },
    /// Kirchhoff index: the sum of resistances over unordered pairs.
    Kirchhoff {
        #[command(flatten)]
        input: Input,
    },
    /// Expected hitting time of the walk.
    Hitting {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Expected return time of the walk.
    ReturnTime {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: String,
    },
    /// Analyse the deletion of one edge.
    RemoveEdge {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        edge: Vec<String>,
    },
    /// Certify walk-regularity by exact closed-walk counts.
    WalkRegular {
        #[command(flatten)]
        input: Input,
    },
    /// Compare a Monte Carlo estimate with the exact value.
    McVerify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        what: McQuery,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Core(#[from] elnet_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Rounds to 12 significant digits and prints the shortest form of the result.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    rounded.to_string()
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, input: &Input) -> Result<LabeledNetwork, CliError> {
        let text = match &input.input {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        Ok(parse_edge_list(&text)?)
    }

    fn emit<T: Serialize>(&mut self, json: bool, doc: &T, text: &str) -> Result<(), CliError> {
        if json {
            serde_json::to_writer_pretty(&mut *self.stdout, doc).map_err(std::io::Error::from)?;
            writeln!(self.stdout)?;
        } else {
            write!(self.stdout, "{text}")?;
        }
        Ok(())
    }
}

fn vertex(g: &LabeledNetwork, label: &str) -> Result<usize, CliError> {
    g.id_of(label).ok_or_else(|| CliError::Usage(format!("unknown vertex {label:?}")))
}

fn generate(family: Family, params: &[usize]) -> Result<elnet_core::Network, CliError> {
    let one = || match params {
        [p] => Ok(*p),
        _ => Err(CliError::Usage(format!("{family:?} takes exactly one parameter"))),
    };
    Ok(match family {
        Family::Cycle => generators::cycle(one()?)?,
        Family::Complete => generators::complete(one()?)?,
        Family::Hypercube => {
            let d = u32::try_from(one()?).map_err(|_| CliError::Usage("dimension too large".into()))?;
            generators::hypercube(d)?
        }
        Family::UnitaryCayley => generators::unitary_cayley(one()?)?,
        Family::Petersen => {
            if !params.is_empty() {
                return Err(CliError::Usage("petersen takes no parameters".into()));
            }
            generators::petersen()
        }
    })
}

#[derive(Serialize)]
struct RemoveEdgeDocument<'a> {
    #[serde(flatten)]
    report: &'a PerturbationReport,
    walk_regular_certified: bool,
    consistent: bool,
}

#[derive(Serialize)]
struct McDocument {
    what: &'static str,
    estimate: McEstimate,
    exact: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_plus_1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cz_formula: Option<f64>,
    sigmas: f64,
    pass: bool,
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= IDENTITY_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen { family, params, output } => {
            let g = LabeledNetwork::with_numeric_labels(generate(family, &params)?);
            let text = g.to_edge_list();
            match output {
                Some(p) if p.as_os_str() != "-" => std::fs::write(p, text)?,
                _ => write!(io.stdout, "{text}")?,
            }
        }
        Command::Resistance { input, pair } => {
            let g = io.load(&input)?;
            let report = solver::effective_resistance_matrix(&g.network)?;
            match pair {
                Some(p) => {
                    let (a, b) = (vertex(&g, &p[0])?, vertex(&g, &p[1])?);
                    let r = report.get(a, b);
                    let doc = json!({ "a": p[0], "b": p[1], "resistance": r });
                    io.emit(input.json, &doc, &format!("{}\n", fmt_num(r)))?;
                }
                None => {
                    // rows and columns follow internal id order
                    let mut text = format!("# columns: {}\n", g.labels.join(" "));
                    for (label, row) in g.labels.iter().zip(&report.resistance) {
                        let cells: Vec<String> = row.iter().map(|&x| fmt_num(x)).collect();
                        text.push_str(&format!("{label}: {}\n", cells.join(" ")));
                    }
                    io.emit(input.json, &report, &text)?;
                }
            }
        }
        Command::Kirchhoff { input } => {
            let g = io.load(&input)?;
            let k = solver::kirchhoff_index(&g.network)?;
            io.emit(input.json, &json!({ "kirchhoff_index": k }), &format!("{}\n", fmt_num(k)))?;
        }
        Command::Hitting { input, from, to } => {
            let g = io.load(&input)?;
            let h = solver::hitting_time(&g.network, vertex(&g, &from)?, vertex(&g, &to)?)?;
            let doc = json!({ "from": from, "to": to, "hitting": h });
            io.emit(input.json, &doc, &format!("{}\n", fmt_num(h)))?;
        }
        Command::ReturnTime { input, vertex: z } => {
            let g = io.load(&input)?;
            let t = solver::return_time(&g.network, vertex(&g, &z)?)?;
            let doc = json!({ "vertex": z, "return_time": t });
            io.emit(input.json, &doc, &format!("{}\n", fmt_num(t)))?;
        }
        Command::RemoveEdge { input, edge } => {
            let g = io.load(&input)?;
            let e = EdgeRef::new(vertex(&g, &edge[0])?, vertex(&g, &edge[1])?);
            let report = analyze_edge_removal(&g.network, e)?;
            let consistent = rel_close(report.r_after_predicted, report.r_after_direct)
                && report
                    .hitting_after_predicted
                    .is_none_or(|h| rel_close(h, report.hitting_after_direct));
            let doc = RemoveEdgeDocument {
                report: &report,
                walk_regular_certified: report.hitting_after_predicted.is_some(),
                consistent,
            };
            let opt = |x: Option<f64>| x.map_or_else(|| "n/a (not walk-regular)".to_string(), fmt_num);
            let text = format!(
                "edge: {} {}\n\
                 walk_regular_certified: {}\n\
                 r_before: {}\n\
                 r_after_predicted: {}\n\
                 r_after_direct: {}\n\
                 r_increment: {}\n\
                 hitting_before: {}\n\
                 hitting_after_predicted: {}\n\
                 hitting_after_direct: {}\n\
                 kirchhoff_before: {}\n\
                 kirchhoff_after: {}\n\
                 consistent: {}\n",
                edge[0],
                edge[1],
                doc.walk_regular_certified,
                fmt_num(report.r_before),
                fmt_num(report.r_after_predicted),
                fmt_num(report.r_after_direct),
                fmt_num(report.r_increment),
                fmt_num(report.hitting_before),
                opt(report.hitting_after_predicted),
                fmt_num(report.hitting_after_direct),
                fmt_num(report.kirchhoff_before),
                fmt_num(report.kirchhoff_after),
                consistent,
            );
            io.emit(input.json, &doc, &text)?;
            if !consistent {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
        Command::WalkRegular { input } => {
            let g = io.load(&input)?;
            let report = check_walk_regular(&g.network)?;
            let mut text = format!(
                "is_regular: {}\nis_walk_regular: {}\nchecked_k_max: {}\n",
                report.is_regular, report.is_walk_regular, report.checked_k_max
            );
            if let Some(v) = &report.first_violation {
                text.push_str(&format!(
                    "first_violation: k={} between {} and {}\n",
                    v.k,
                    g.label(v.x),
                    g.label(v.y)
                ));
            }
            io.emit(input.json, &report, &text)?;
        }
        Command::McVerify { input, what, samples, seed, vertex: z, from, to } => {
            let g = io.load(&input)?;
            let net = &g.network;
            let need = |opt: &Option<String>, flag: &str| -> Result<usize, CliError> {
                let label = opt
                    .as_deref()
                    .ok_or_else(|| CliError::Usage(format!("--what {what:?} needs {flag}")))?;
                vertex(&g, label)
            };
            let doc = match what {
                McQuery::Return => {
                    let z = need(&z, "--vertex")?;
                    let estimate = montecarlo::estimate_return_time(net, z, samples, seed)?;
                    let exact = solver::return_time(net, z)?;
                    McDocument {
                        what: "return",
                        pass: estimate.agrees_with(exact, MC_SIGMAS),
                        estimate,
                        exact,
                        c_plus_1: None,
                        cz_formula: None,
                        sigmas: MC_SIGMAS,
                    }
                }
                McQuery::Hitting => {
                    let (a, b) = (need(&from, "--from")?, need(&to, "--to")?);
                    let estimate = montecarlo::estimate_hitting_time(net, a, b, samples, seed)?;
                    let exact = solver::hitting_time(net, a, b)?;
                    McDocument {
                        what: "hitting",
                        pass: estimate.agrees_with(exact, MC_SIGMAS),
                        estimate,
                        exact,
                        c_plus_1: None,
                        cz_formula: None,
                        sigmas: MC_SIGMAS,
                    }
                }
                McQuery::Pendant => {
                    let z = need(&z, "--vertex")?;
                    let check = montecarlo::verify_pendant_identities(net, z, samples, seed)?;
                    McDocument {
                        what: "pendant",
                        pass: check.lhs.agrees_with(check.c_plus_1, MC_SIGMAS)
                            && check.lhs.agrees_with(check.cz_formula, MC_SIGMAS),
                        estimate: check.lhs,
                        exact: check.c_plus_1,
                        c_plus_1: Some(check.c_plus_1),
                        cz_formula: Some(check.cz_formula),
                        sigmas: MC_SIGMAS,
                    }
                }
            };
            let text = format!(
                "what: {}\nexact: {}\nmean: {}\nstderr: {}\nsamples: {}\nseed: {}\nresult: {}\n",
                doc.what,
                fmt_num(doc.exact),
                fmt_num(doc.estimate.mean),
                fmt_num(doc.estimate.stderr),
                doc.estimate.samples,
                doc.estimate.seed,
                if doc.pass { "pass" } else { "FAIL" },
            );
            io.emit(input.json, &doc, &text)?;
            if !doc.pass {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{rendered}") } else { write!(stdout, "{rendered}") };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}
