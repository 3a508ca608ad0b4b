use std::fmt::Write as _;

use germs::{catalan, Germ, GermIndex};
use rayon::prelude::*;
use serde::Serialize;
use treecodec::castle;

use crate::color::Color;
use crate::delta::{neighbor_code, neighbors};
use crate::LexicalError;

/// Colored adjacency table: for each germ in natural order, the rank of its
/// neighbor along every color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatTable {
    index: GermIndex,
    /// `ranks[m][c]` is the rank of the color-c neighbor of germ `m`.
    ranks: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    m: usize,
    germ: String,
    /// Neighbor germs for colors k down to 0.
    neighbors: Vec<&'a str>,
}

pub fn cat_table(k: usize) -> Result<CatTable, LexicalError> {
    if k < 2 {
        return Err(LexicalError::TableK(k));
    }
    let index = GermIndex::new(k);
    let ranks = index
        .germs()
        .par_iter()
        .map(|g| {
            neighbors(g)?
                .iter()
                .map(|n| {
                    index
                        .rank(n)
                        .ok_or_else(|| LexicalError::Internal(format!("neighbor {n} of {g} has no rank")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CatTable { index, ranks })
}

/// Position `j` of the entry `a_j` that column `c` keeps unchanged, if any.
pub fn preserved_index(k: usize, c: Color) -> Option<usize> {
    let c = usize::from(c);
    if c == k {
        Some(k - 1)
    } else if c + 1 == k {
        None
    } else {
        Some(c + 1)
    }
}

fn footer_string(k: usize, keep: impl Fn(usize) -> bool) -> String {
    (1..k)
        .rev()
        .map(|j| {
            if keep(j) {
                std::char::from_digit(j as u32, 36).unwrap_or('?')
            } else {
                '*'
            }
        })
        .collect()
}

/// The footer pattern predicted for column `c`, e.g. `*2*`.
pub fn expected_footer(k: usize, c: Color) -> String {
    let j = preserved_index(k, c);
    footer_string(k, |i| Some(i) == j)
}

impl CatTable {
    pub fn k(&self) -> usize {
        self.index.k()
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn germs(&self) -> &[Germ] {
        self.index.germs()
    }

    pub fn germ(&self, m: usize) -> &Germ {
        &self.index.germs()[m]
    }

    pub fn neighbor_rank(&self, m: usize, c: Color) -> usize {
        self.ranks[m][usize::from(c)]
    }

    pub fn neighbor(&self, m: usize, c: Color) -> &Germ {
        self.germ(self.neighbor_rank(m, c))
    }

    /// Ranks down column `c`.
    pub fn column(&self, c: Color) -> Vec<usize> {
        self.ranks.iter().map(|r| r[usize::from(c)]).collect()
    }

    /// Colors from `k` down to 0, the order of the printed columns.
    pub fn colors_desc(&self) -> impl Iterator<Item = Color> {
        (0..=self.k() as Color).rev()
    }

    /// Footer of column `c` read off the table: every entry position that
    /// no row changes.
    pub fn observed_footer(&self, c: Color) -> String {
        let k = self.k();
        footer_string(k, |j| {
            (0..self.len()).all(|m| self.germ(m).entry(j) == self.neighbor(m, c).entry(j))
        })
    }

    fn grid(&self, codes: bool) -> Result<Vec<Vec<String>>, LexicalError> {
        let k = self.k();
        let mut header = vec!["m".to_string(), "germ".to_string()];
        if codes {
            header.push("F".into());
            header.extend(self.colors_desc().map(|c| format!("F^{c}")));
        }
        header.extend(self.colors_desc().map(|c| format!("a^{c}")));
        let mut rows = vec![header];
        for m in 0..self.len() {
            let g = self.germ(m);
            let mut row = vec![m.to_string(), g.to_string()];
            if codes {
                row.push(castle(g).to_string());
                for c in self.colors_desc() {
                    row.push(neighbor_code(g, c)?);
                }
            }
            row.extend(self.colors_desc().map(|c| self.neighbor(m, c).to_string()));
            rows.push(row);
        }
        let mut footer = vec!["-".to_string(), "-".to_string()];
        if codes {
            footer.extend(std::iter::repeat_n("-".to_string(), k + 2));
        }
        footer.extend(self.colors_desc().map(|c| self.observed_footer(c)));
        rows.push(footer);
        Ok(rows)
    }

    /// Aligned text, one row per germ and a last row of preserved entries.
    /// With `codes`, the tree code of each germ and the coded neighbors are
    /// included.
    pub fn to_text(&self, codes: bool) -> Result<String, LexicalError> {
        let rows = self.grid(codes)?;
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &rows {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        Ok(out)
    }

    /// CSV rows `m,germ,n_k,...,n_0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,germ");
        for c in self.colors_desc() {
            let _ = write!(out, ",n{c}");
        }
        out.push('\n');
        for m in 0..self.len() {
            let _ = write!(out, "{m},{}", self.germ(m));
            for c in self.colors_desc() {
                let _ = write!(out, ",{}", self.neighbor(m, c));
            }
            out.push('\n');
        }
        out
    }

    /// One JSON object per row.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for m in 0..self.len() {
            let names: Vec<String> = self
                .colors_desc()
                .map(|c| self.neighbor(m, c).to_string())
                .collect();
            let row = JsonRow {
                m,
                germ: self.germ(m).to_string(),
                neighbors: names.iter().map(String::as_str).collect(),
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&row).expect("rows serialize"));
        }
        out
    }
}

/// Smallest `k >= 2` whose Catalan number reaches `count`.
fn k_for(count: usize) -> usize {
    (2..)
        .find(|&k| catalan(k) as usize >= count)
        .expect("Catalan numbers grow")
}

/// The stable color-k column as one sequence, split at Catalan indices.
pub fn s0_blocks(count: usize) -> Result<Vec<Vec<usize>>, LexicalError> {
    if count == 0 {
        return Err(LexicalError::EmptySequence);
    }
    let k = k_for(count);
    let column = cat_table(k)?.column(k as Color);
    let mut blocks = Vec::new();
    let mut start = 0;
    for j in 2..=k {
        let end = (catalan(j) as usize).min(count);
        if start < end {
            blocks.push(column[start..end].to_vec());
        }
        start = end;
    }
    Ok(blocks)
}

pub fn s0_sequence(count: usize) -> Result<Vec<usize>, LexicalError> {
    Ok(s0_blocks(count)?.concat())
}

/// Column `k-1` of each table restricted to its new rows `[C_{k-1}, C_k)`
/// (all of `[0, 2)` for k = 2).
pub fn s1_blocks(count: usize) -> Result<Vec<Vec<usize>>, LexicalError> {
    if count == 0 {
        return Err(LexicalError::EmptySequence);
    }
    let mut blocks = Vec::new();
    let mut have = 0;
    let mut k = 2;
    while have < count {
        let table = cat_table(k)?;
        let start = if k == 2 { 0 } else { catalan(k - 1) as usize };
        let end = (catalan(k) as usize).min(start + count - have);
        let column = table.column((k - 1) as Color);
        blocks.push(column[start..end].to_vec());
        have += end - start;
        k += 1;
    }
    Ok(blocks)
}

pub fn s1_sequence(count: usize) -> Result<Vec<usize>, LexicalError> {
    Ok(s1_blocks(count)?.concat())
}
