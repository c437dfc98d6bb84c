use std::fmt::Write;

use serde_json::{json, Value};

use super::{ConjectureEngine, ConjectureId, Family, Mode, Verdict};
use crate::class::TriValue;
use crate::localization::CategoryId;

#[derive(Clone, Debug)]
pub struct Cell {
    pub conjecture: ConjectureId,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub category: CategoryId,
    pub cells: Vec<Cell>,
}

/// Per-category verdicts for LTC1/LTC2/LTC3 up to `max_n`, GSC and SDGSC.
#[derive(Clone, Debug)]
pub struct VerdictTable {
    pub max_n: u32,
    pub rows: Vec<Row>,
}

/// Conjectures in one row, in table order.
pub fn row_conjectures(cat: CategoryId, max_n: u32) -> Vec<ConjectureId> {
    let mut out = Vec::new();
    for f in [ConjectureId::ltc1, ConjectureId::ltc2, ConjectureId::ltc3] {
        out.extend((0..=max_n).map(|n| f(n, cat)));
    }
    out.push(ConjectureId::gsc(cat));
    out.push(ConjectureId::sdgsc(cat));
    out
}

impl ConjectureEngine {
    pub fn report(&self, cats: &[CategoryId], max_n: u32) -> VerdictTable {
        let rows = cats
            .iter()
            .map(|&category| Row {
                category,
                cells: row_conjectures(category, max_n)
                    .into_iter()
                    .map(|conjecture| Cell {
                        conjecture,
                        verdict: self.evaluate(conjecture),
                    })
                    .collect(),
            })
            .collect();
        VerdictTable { max_n, rows }
    }
}

/// The classification verdicts shipped with the library, with the mode
/// expected for the LTC cells.
pub fn golden_cell(c: ConjectureId) -> Option<(TriValue, Option<Mode>)> {
    use CategoryId::*;
    let cat = c.category();
    if cat == Ambient {
        return None;
    }
    let ltc_mode = if cat == BPLocal {
        Mode::Cited
    } else {
        Mode::Recomputed
    };
    Some(match c.family() {
        Family::LTC1 | Family::LTC2 | Family::LTC3 => (TriValue::Holds, Some(ltc_mode)),
        Family::GSC => match cat {
            En(_) | Kn(_) => (TriValue::Holds, None),
            _ => (TriValue::Fails, None),
        },
        Family::SDGSC => match cat {
            BPLocal => (TriValue::Open, None),
            _ => (TriValue::Holds, None),
        },
        Family::TC1 | Family::TC2 | Family::TC3 => return None,
    })
}

fn summarize(cells: &[&Cell]) -> String {
    let first = &cells[0].verdict;
    if cells
        .iter()
        .all(|c| c.verdict.value() == first.value() && c.verdict.mode == first.mode)
    {
        format!("{} ({})", first.value(), first.mode)
    } else {
        cells
            .iter()
            .map(|c| c.verdict.value().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl VerdictTable {
    pub fn cell(&self, c: ConjectureId) -> Option<&Verdict> {
        self.rows
            .iter()
            .find(|r| r.category == c.category())?
            .cells
            .iter()
            .find(|cell| cell.conjecture == c)
            .map(|cell| &cell.verdict)
    }

    /// Cells that differ from [`golden_cell`].
    pub fn golden_mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for cell in self.rows.iter().flat_map(|r| &r.cells) {
            let Some((value, mode)) = golden_cell(cell.conjecture) else {
                out.push(format!("{}: no expected verdict", cell.conjecture));
                continue;
            };
            let v = &cell.verdict;
            if v.value() != value || mode.is_some_and(|m| m != v.mode) {
                out.push(format!(
                    "{}: got {} ({}), expected {}{}",
                    cell.conjecture,
                    v.value(),
                    v.mode,
                    value,
                    mode.map(|m| format!(" ({m})")).unwrap_or_default()
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_n": self.max_n,
            "rows": self.rows.iter().map(|r| json!({
                "category": r.category,
                "cells": r.cells.iter().map(|c| {
                    let mut v = c.verdict.to_json();
                    v["conjecture"] = json!(c.conjecture);
                    v
                }).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    /// One aligned line per category; an LTC column collapses to a single
    /// entry when every index agrees.
    pub fn to_text(&self) -> String {
        let header = [
            "category".to_string(),
            format!("LTC1_0..{}", self.max_n),
            format!("LTC2_0..{}", self.max_n),
            format!("LTC3_0..{}", self.max_n),
            "GSC".to_string(),
            "SDGSC".to_string(),
        ];
        let mut lines: Vec<Vec<String>> = vec![header.to_vec()];
        for r in &self.rows {
            let pick = |f: Family| -> Vec<&Cell> {
                r.cells
                    .iter()
                    .filter(|c| c.conjecture.family() == f)
                    .collect()
            };
            lines.push(vec![
                r.category.to_string(),
                summarize(&pick(Family::LTC1)),
                summarize(&pick(Family::LTC2)),
                summarize(&pick(Family::LTC3)),
                summarize(&pick(Family::GSC)),
                summarize(&pick(Family::SDGSC)),
            ]);
        }
        let widths: Vec<usize> = (0..header.len())
            .map(|k| lines.iter().map(|l| l[k].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for l in &lines {
            let cols: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", cols.join("  ").trim_end());
        }
        out
    }
}
