//! Command bodies. Each returns the text destined for stdout so that output
//! is byte-deterministic and testable without spawning the binary.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use germs::{catalan, enumerate, Germ, Rgs};
use hamilton::{hamilton_cycle, parse_certificate, verify_hamilton, write_certificate};
use lexical::{cat_table, colored_mk_pi, colored_rk, one_factorization, s0_blocks, s1_blocks};
use midlevels::{Budget, ColoredGraph};
use serde::Serialize;
use treecodec::{aleph, castle, hat_theta, theta, uncastle_trace, OrderedTree, TreeCode};

use crate::checks::run_suite;
use crate::tables::{check_table, TableId};
use crate::CliError;

pub const GERMS_MAX_K: usize = 16;
pub const COUNT_MAX_K: usize = 30;
pub const MK_MAX_K: usize = 9;
pub const CAT_MAX_K: usize = 10;
pub const VERIFY_MAX_K: usize = 6;
pub const HAMILTON_MAX_K: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    JsonLines,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Mk,
    Mkpi,
    Rk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    S0,
    S1,
}

fn bound(k: usize, max: usize, unsafe_large: bool, what: &str) -> Result<(), CliError> {
    if k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    if k > max && !unsafe_large {
        return Err(CliError::Usage(format!(
            "{what}: k={k} exceeds the default bound {max}; pass --unsafe-large to override"
        )));
    }
    Ok(())
}

fn unsupported(format: Format, what: &str) -> CliError {
    CliError::Usage(format!("{what} has no {format:?} output"))
}

#[derive(Serialize)]
struct GermRow<'a> {
    m: usize,
    germ: &'a str,
}

#[derive(Serialize)]
struct RgsRow<'a> {
    m: usize,
    rgs: &'a str,
}

pub fn germs(
    k: usize,
    count_only: bool,
    rgs: bool,
    format: Format,
    unsafe_large: bool,
) -> Result<String, CliError> {
    if count_only {
        bound(k, COUNT_MAX_K, false, "germs --count-only")?;
        return Ok(format!("{}\n", catalan(k)));
    }
    bound(k, GERMS_MAX_K, unsafe_large, "germs")?;
    let mut out = String::new();
    let column = if rgs { "rgs" } else { "germ" };
    match format {
        Format::Text => {}
        Format::Csv => out.push_str(&format!("m,{column}\n")),
        Format::JsonLines => {}
        Format::Dot => return Err(unsupported(format, "germs")),
    }
    for (m, g) in enumerate(k).iter().enumerate() {
        let value = if rgs {
            g.to_rgs().to_string()
        } else {
            g.to_string()
        };
        match format {
            Format::Text => writeln!(out, "{m} {value}").ok(),
            Format::Csv => writeln!(out, "{m},{value}").ok(),
            Format::JsonLines if rgs => {
                writeln!(out, "{}", serde_json::to_string(&RgsRow { m, rgs: &value })?).ok()
            }
            Format::JsonLines => {
                writeln!(out, "{}", serde_json::to_string(&GermRow { m, germ: &value })?).ok()
            }
            Format::Dot => None,
        };
    }
    Ok(out)
}

#[derive(Serialize)]
struct Encoded {
    germ: String,
    k: usize,
    code: String,
    theta: String,
    hat_theta: String,
    aleph: String,
}

/// Accepts a k-germ, or an RGS padded to `k` digits when `k` is given.
pub fn parse_germ(s: &str, k: Option<usize>) -> Result<Germ, CliError> {
    match k {
        Some(k) => Ok(Rgs::parse(s)?.pad(k)?),
        None => Ok(Germ::parse(s)?),
    }
}

pub fn encode(g: &Germ, format: Format) -> Result<String, CliError> {
    let code = castle(g);
    let w = theta(g);
    let e = Encoded {
        germ: g.to_string(),
        k: g.k(),
        code: code.to_string(),
        theta: w.to_string(),
        hat_theta: hat_theta(g).to_string(),
        aleph: aleph(w).to_string(),
    };
    match format {
        Format::Text => Ok(format!(
            "germ {}\nk {}\ncode {}\ntheta {}\nhat_theta {}\naleph {}\n",
            e.germ, e.k, e.code, e.theta, e.hat_theta, e.aleph
        )),
        Format::Csv => Ok(format!(
            "germ,k,code,theta,hat_theta,aleph\n{},{},{},{},{},{}\n",
            e.germ, e.k, e.code, e.theta, e.hat_theta, e.aleph
        )),
        Format::JsonLines => Ok(format!("{}\n", serde_json::to_string(&e)?)),
        Format::Dot => Ok(OrderedTree::from_code(&code).to_dot()),
    }
}

pub fn decode(code: &str, trace: bool, format: Format) -> Result<String, CliError> {
    let code = TreeCode::parse(code)?;
    code.validate()?;
    let (germ, steps) = uncastle_trace(&code)?;
    match format {
        Format::Dot => return Ok(OrderedTree::from_code(&code).to_dot()),
        Format::Text => {}
        other => return Err(unsupported(other, "decode")),
    }
    let mut out = String::new();
    if trace {
        for s in &steps {
            let _ = writeln!(out, "level {}  {}  {}", s.level, s.code, s.germ);
        }
    }
    let _ = writeln!(out, "{germ}");
    Ok(out)
}

fn render_graph<V: Copy + Eq + std::hash::Hash>(
    g: &ColoredGraph<V>,
    name: &str,
    format: Format,
    label: impl Fn(&V) -> String,
) -> Result<String, CliError> {
    match format {
        Format::Dot => Ok(g.to_dot(name, label)),
        Format::Csv => Ok(g.to_csv(label)),
        Format::Text => {
            let mut out = format!(
                "{name}: {} vertices, {} edges, {} loops\n",
                g.vertex_count(),
                g.edge_count(),
                g.loop_count()
            );
            let colors: std::collections::BTreeMap<u8, usize> = g
                .edges()
                .iter()
                .filter_map(|e| e.color)
                .fold(Default::default(), |mut acc, c| {
                    *acc.entry(c).or_insert(0) += 1;
                    acc
                });
            for (c, n) in colors {
                let _ = writeln!(out, "color {c}: {n} edges");
            }
            Ok(out)
        }
        Format::JsonLines => Err(unsupported(format, "graph")),
    }
}

pub fn graph(k: usize, which: Which, format: Format, budget: &Budget) -> Result<String, CliError> {
    bound(k, budget.max_k, budget.unsafe_large, "graph")?;
    match which {
        Which::Mk => render_graph(&one_factorization(k, budget)?, &format!("M{k}"), format, |w| {
            w.to_string()
        }),
        Which::Mkpi => render_graph(&colored_mk_pi(k, budget)?, &format!("M{k}_pi"), format, |c| {
            c.canonical().to_string()
        }),
        Which::Rk => render_graph(&colored_rk(k, budget)?, &format!("R{k}"), format, |c| {
            c.canonical().to_string()
        }),
    }
}

pub fn cat(k: usize, format: Format, codes: bool, unsafe_large: bool) -> Result<String, CliError> {
    bound(k, CAT_MAX_K, unsafe_large, "cat")?;
    let t = cat_table(k)?;
    match format {
        Format::Text => Ok(t.to_text(codes)?),
        Format::Csv => Ok(t.to_csv()),
        Format::JsonLines => Ok(t.to_json_lines()),
        Format::Dot => Err(unsupported(format, "cat")),
    }
}

/// Terms separated by spaces; with `blocks`, Catalan blocks separated by `|`.
pub fn seq(which: Sequence, count: usize, blocks: bool) -> Result<String, CliError> {
    let parts = match which {
        Sequence::S0 => s0_blocks(count)?,
        Sequence::S1 => s1_blocks(count)?,
    };
    let join = |b: &Vec<usize>| b.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let sep = if blocks { " | " } else { " " };
    Ok(format!(
        "{}\n",
        parts.iter().map(join).collect::<Vec<_>>().join(sep)
    ))
}

/// Result of `hamilton`: the certificate (unless written to a file) and a
/// status line.
pub struct HamiltonOutput {
    pub stdout: String,
    pub status: String,
}

pub fn hamilton(
    k: usize,
    out: Option<&Path>,
    verify: bool,
    budget: &Budget,
) -> Result<HamiltonOutput, CliError> {
    bound(k, budget.max_k, budget.unsafe_large, "hamilton")?;
    let run = hamilton_cycle(k, budget)?;
    let text = write_certificate(&run.cycle);
    let reread = match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            std::fs::read_to_string(path)?
        }
        None => text.clone(),
    };
    let cert = verify_hamilton(k, &parse_certificate(&reread)?)?;
    let status = format!(
        "k={k}: certificate of length {} accepted ({} cycles glued with {} six-cycles)",
        cert.length,
        run.decomposition.cycle_count(),
        run.gluing.chosen.len()
    );
    let stdout = match (out, verify) {
        (_, true) => format!("{status}\n"),
        (None, false) => text,
        (Some(_), false) => String::new(),
    };
    Ok(HamiltonOutput { stdout, status })
}

/// Runs the invariant suites up to `k`, optionally the table diffs and a
/// certificate check. Returns the report and whether everything passed.
pub fn verify(
    k: usize,
    tables: bool,
    certificate: Option<&Path>,
    budget: &Budget,
) -> Result<(String, bool), CliError> {
    bound(k, budget.max_k, budget.unsafe_large, "verify")?;
    let mut out = String::new();
    let mut ok = true;
    for check in run_suite(k, budget) {
        ok &= check.passed();
        let _ = writeln!(out, "{check}");
    }
    if tables {
        for id in TableId::ALL {
            let report = check_table(id)?;
            ok &= report.passed();
            let verdict = if report.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict}  tables    {id}: {} printed cells corrected",
                report.explained.len()
            );
            for (d, reason) in &report.explained {
                let _ = writeln!(out, "        erratum {d}; {reason}");
            }
            for d in &report.unexplained {
                let _ = writeln!(out, "        unexplained {d}");
            }
            for f in &report.failures {
                let _ = writeln!(out, "        {f}");
            }
        }
    }
    if let Some(path) = certificate {
        let text = std::fs::read_to_string(path)?;
        let cycle = parse_certificate(&text)?;
        let n = cycle.first().map_or(0, |w| w.len());
        let verdict = verify_hamilton(n / 2, &cycle);
        ok &= verdict.is_ok();
        match verdict {
            Ok(c) => writeln!(
                out,
                "ok    hamilton  certificate {}: length {} accepted",
                path.display(),
                c.length
            ),
            Err(e) => writeln!(out, "FAIL  hamilton  certificate {}: {e}", path.display()),
        }
        .ok();
    }
    Ok((out, ok))
}
