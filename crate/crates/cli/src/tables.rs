//! Golden copies of the six printed tables, their re-derivation and a
//! cell-level diff. Cells where the print is known to be wrong are listed in
//! `golden/errata.txt`; each listed cell is checked to be impossible on its
//! own terms before the diff is accepted.

use std::fmt::{self, Write as _};

use germs::{enumerate, Germ};
use lexical::cat_table;
use treecodec::{aleph, castle, hat_aleph, hat_theta, theta, uncastle, uncastle_trace, TreeCode};

use crate::CliError;

pub const ERRATA: &str = include_str!("../golden/errata.txt");

/// Germ whose uncastling trace is printed as the third table.
pub const TRACE_CODE: &str = "04*3*2*1*";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableId(pub u8);

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId(1),
        TableId(2),
        TableId(3),
        TableId(4),
        TableId(5),
        TableId(6),
    ];

    pub fn golden(self) -> &'static str {
        match self.0 {
            1 => include_str!("../golden/table1.txt"),
            2 => include_str!("../golden/table2.txt"),
            3 => include_str!("../golden/table3.txt"),
            4 => include_str!("../golden/table4.txt"),
            5 => include_str!("../golden/table5.txt"),
            6 => include_str!("../golden/table6.txt"),
            _ => "",
        }
    }

    /// The value of k for rows that carry no k column.
    fn fixed_k(self, block: usize) -> usize {
        match self.0 {
            3 => 4,
            4 => block + 2,
            5 => 4,
            6 => 5,
            _ => 0,
        }
    }

    pub fn derive(self) -> Result<Vec<Block>, CliError> {
        match self.0 {
            1 => Ok(vec![table1()]),
            2 => Ok(vec![table2()]),
            3 => Ok(vec![table3()?]),
            4 => [2, 3]
                .into_iter()
                .map(|k| {
                    let text = cat_table(k)?.to_text(true)?;
                    let mut b = parse_blocks(&text).remove(0);
                    b.rows.pop();
                    Ok(b)
                })
                .collect(),
            5 => Ok(parse_blocks(&cat_table(4)?.to_text(false)?)),
            6 => Ok(parse_blocks(&cat_table(5)?.to_text(false)?)),
            n => Err(CliError::Usage(format!("no table {n}"))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table{}", self.0)
    }
}

/// Rows of whitespace-separated cells under a header line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Block {
    fn new(header: &[&str]) -> Self {
        Block {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }
}

pub fn parse_blocks(text: &str) -> Vec<Block> {
    let mut blocks = Vec::new();
    let mut current: Option<Block> = None;
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let cells: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if cells.is_empty() {
            blocks.extend(current.take());
            continue;
        }
        match current.as_mut() {
            None => {
                current = Some(Block {
                    header: cells,
                    rows: Vec::new(),
                })
            }
            Some(b) => b.rows.push(cells),
        }
    }
    blocks.extend(current);
    blocks
}

/// Left-aligned columns joined by two spaces, blocks separated by a blank
/// line.
pub fn render_blocks(blocks: &[Block]) -> String {
    let mut out = String::new();
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let all: Vec<&Vec<String>> = std::iter::once(&b.header).chain(&b.rows).collect();
        let widths: Vec<usize> = (0..b.header.len())
            .map(|j| {
                all.iter()
                    .map(|r| r.get(j).map_or(0, String::len))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in all {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
    }
    out
}

fn table1() -> Block {
    let mut b = Block::new(&["k", "m", "germ", "F"]);
    for k in 2..=4 {
        for (m, g) in enumerate(k).iter().enumerate() {
            b.rows.push(vec![
                k.to_string(),
                m.to_string(),
                g.to_string(),
                castle(g).to_string(),
            ]);
        }
    }
    b
}

fn table2() -> Block {
    let mut b = Block::new(&["k", "m", "germ", "theta", "hat_theta", "hat_aleph", "aleph"]);
    for k in 2..=3 {
        for (m, g) in enumerate(k).iter().enumerate() {
            b.rows.push(vec![
                k.to_string(),
                m.to_string(),
                g.to_string(),
                theta(g).to_string(),
                hat_theta(g).to_string(),
                hat_aleph(g).to_string(),
                aleph(theta(g)).to_string(),
            ]);
        }
    }
    b
}

fn table3() -> Result<Block, CliError> {
    let mut b = Block::new(&["j", "code", "germ"]);
    let (_, trace) = uncastle_trace(&TreeCode::parse(TRACE_CODE)?)?;
    for step in trace {
        b.rows.push(vec![
            (step.level - 1).to_string(),
            step.code.to_string(),
            step.germ.to_string(),
        ]);
    }
    Ok(b)
}

/// One cell where the printed table and the derived one disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub table: TableId,
    pub k: usize,
    pub m: String,
    pub column: String,
    pub printed: String,
    pub derived: String,
}

impl fmt::Display for CellDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} k={} m={} {}: printed {} derived {}",
            self.table, self.k, self.m, self.column, self.printed, self.derived
        )
    }
}

/// Cell-by-cell comparison; a shape mismatch is reported as an error.
pub fn diff_table(id: TableId) -> Result<Vec<CellDiff>, CliError> {
    let printed = parse_blocks(id.golden());
    let derived = id.derive()?;
    let shape = |bs: &[Block]| -> Vec<(usize, Vec<usize>)> {
        bs.iter()
            .map(|b| (b.header.len(), b.rows.iter().map(Vec::len).collect()))
            .collect()
    };
    if shape(&printed) != shape(&derived) || printed.iter().zip(&derived).any(|(p, d)| p.header != d.header) {
        return Err(CliError::Check(format!(
            "{id}: derived table has a different shape"
        )));
    }
    let mut diffs = Vec::new();
    for (bi, (p, d)) in printed.iter().zip(&derived).enumerate() {
        let k_col = p.column("k");
        let m_col = p.column("m").or_else(|| p.column("j"));
        for (ri, (prow, drow)) in p.rows.iter().zip(&d.rows).enumerate() {
            for (j, (pc, dc)) in prow.iter().zip(drow).enumerate() {
                if pc != dc {
                    let k = match k_col {
                        Some(c) => prow[c].parse().unwrap_or(0),
                        None => id.fixed_k(bi),
                    };
                    let m = match (id.0, m_col) {
                        (3, _) | (_, None) => ri.to_string(),
                        (_, Some(c)) => prow[c].clone(),
                    };
                    diffs.push(CellDiff {
                        table: id,
                        k,
                        m,
                        column: p.header[j].clone(),
                        printed: pc.clone(),
                        derived: dc.clone(),
                    });
                }
            }
        }
    }
    Ok(diffs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub table: TableId,
    pub k: usize,
    pub m: String,
    pub column: String,
    pub printed: String,
    pub derived: String,
}

pub fn errata() -> Result<Vec<Erratum>, CliError> {
    ERRATA
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let bad = || CliError::Check(format!("malformed errata line {l:?}"));
            if f.len() != 6 {
                return Err(bad());
            }
            Ok(Erratum {
                table: TableId(f[0].parse().map_err(|_| bad())?),
                k: f[1].parse().map_err(|_| bad())?,
                m: f[2].to_string(),
                column: f[3].to_string(),
                printed: f[4].to_string(),
                derived: f[5].to_string(),
            })
        })
        .collect()
}

impl Erratum {
    fn matches(&self, d: &CellDiff) -> bool {
        self.table == d.table
            && self.k == d.k
            && self.m == d.m
            && self.column == d.column
            && self.printed == d.printed
            && self.derived == d.derived
    }

    /// Shows that the printed cell cannot be right without using the derived
    /// value: returns the reason, or an error when the printed cell passes
    /// every check.
    pub fn refute(&self) -> Result<String, CliError> {
        let not_refuted = || CliError::Check(format!("printed cell {} is not refuted", self.printed));
        if self.column == "hat_theta" {
            return refute_annotated(&self.printed, self.k).ok_or_else(not_refuted);
        }
        let block = self.block()?;
        let row = block
            .rows
            .iter()
            .find(|r| block.column("m").map(|c| &r[c]) == Some(&self.m))
            .ok_or_else(not_refuted)?;
        if let Some(c) = self.column.strip_prefix("F^") {
            let germ_col = block.column(&format!("a^{c}")).ok_or_else(not_refuted)?;
            return refute_coded(&self.printed, self.k, &row[germ_col]).ok_or_else(not_refuted);
        }
        if self.column.starts_with("a^") {
            let col = block.column(&self.column).ok_or_else(not_refuted)?;
            let germ_col = block.column("germ").ok_or_else(not_refuted)?;
            let m_col = block.column("m").ok_or_else(not_refuted)?;
            let hits: Vec<&str> = block
                .rows
                .iter()
                .filter(|r| r[col] == self.printed)
                .map(|r| r[m_col].as_str())
                .collect();
            if hits.len() > 1 {
                return Ok(format!(
                    "{} occurs in rows {} of column {}, which must be a permutation",
                    self.printed,
                    hits.join(","),
                    self.column
                ));
            }
            let back = block.rows.iter().find(|r| r[germ_col] == self.printed);
            if let Some(r) = back {
                if r[col] != row[germ_col] {
                    return Ok(format!(
                        "row {} maps {} back to {}, not to {}",
                        r[m_col], self.printed, r[col], row[germ_col]
                    ));
                }
            }
        }
        Err(not_refuted())
    }

    fn block(&self) -> Result<Block, CliError> {
        let blocks = parse_blocks(self.table.golden());
        let index = if self.table.0 == 4 {
            self.k.saturating_sub(2)
        } else {
            0
        };
        blocks
            .into_iter()
            .nth(index)
            .ok_or_else(|| CliError::Check(format!("{}: no block for k={}", self.table, self.k)))
    }
}

/// A subscripted word must have binary bits, the labels `0..=k` on its zeros
/// in some order and `*` on its ones.
fn refute_annotated(s: &str, k: usize) -> Option<String> {
    let chars: Vec<char> = s.chars().collect();
    if chars.len() != 3 * (2 * k + 1) {
        return Some(format!("{} symbols instead of {}", chars.len() / 3, 2 * k + 1));
    }
    let mut labels = Vec::new();
    for (i, t) in chars.chunks(3).enumerate() {
        if t[1] != '_' {
            return Some(format!("position {i} is not of the form bit_label"));
        }
        match (t[0], t[2]) {
            ('0', l) if l != '*' => labels.push(l),
            ('1', '*') => {}
            (b, l) => {
                return Some(format!(
                    "position {i} reads {b}_{l}, which is neither 0_label nor 1_*"
                ))
            }
        }
    }
    labels.sort_unstable();
    let expected: Vec<char> = (0..=k as u32).filter_map(|d| char::from_digit(d, 10)).collect();
    (labels != expected).then(|| "zero labels are not 0..=k once each".to_string())
}

/// A coded neighbor word must carry every label once and `k` stars, and read
/// from its 0 it must be the tree code of the neighbor germ printed in the
/// same row.
fn refute_coded(s: &str, k: usize, neighbor: &str) -> Option<String> {
    let mut labels: Vec<char> = s.chars().filter(|&c| c != '*').collect();
    labels.sort_unstable();
    let expected: Vec<char> = (0..=k as u32).filter_map(|d| char::from_digit(d, 10)).collect();
    if labels != expected {
        return Some(format!(
            "labels {} are not 0..={k} once each",
            labels.iter().collect::<String>()
        ));
    }
    let start = s.find('0')?;
    let rotated = format!("{}{}", &s[start..], &s[..start]);
    let germ = TreeCode::parse(&rotated).ok().and_then(|c| uncastle(&c).ok());
    let Ok(printed) = Germ::parse(neighbor) else {
        return Some(format!("neighbor {neighbor} is not a germ"));
    };
    match germ {
        None => Some(format!("{rotated} (read from 0) is not a tree code")),
        Some(g) if g != printed => Some(format!("{rotated} decodes to {g}, but the row gives {printed}")),
        Some(_) => None,
    }
}

/// Outcome of checking one table against its golden copy.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub table: TableId,
    pub explained: Vec<(CellDiff, String)>,
    pub unexplained: Vec<CellDiff>,
    pub failures: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.unexplained.is_empty() && self.failures.is_empty()
    }
}

/// Diffs a table and accounts for every differing cell with a refuted
/// erratum; errata without a matching diff are failures too.
pub fn check_table(id: TableId) -> Result<TableReport, CliError> {
    let errata: Vec<Erratum> = errata()?.into_iter().filter(|e| e.table == id).collect();
    let diffs = diff_table(id)?;
    let mut report = TableReport {
        table: id,
        explained: Vec::new(),
        unexplained: Vec::new(),
        failures: Vec::new(),
    };
    for d in diffs {
        match errata.iter().find(|e| e.matches(&d)) {
            Some(e) => match e.refute() {
                Ok(reason) => report.explained.push((d, reason)),
                Err(err) => report.failures.push(format!("{d}: {err}")),
            },
            None => report.unexplained.push(d),
        }
    }
    for e in &errata {
        if !report.explained.iter().any(|(d, _)| e.matches(d))
            && !report.failures.iter().any(|f| f.contains(&e.printed))
        {
            report.failures.push(format!(
                "errata entry for {} k={} m={} {} matches no diff",
                id, e.k, e.m, e.column
            ));
        }
    }
    Ok(report)
}
