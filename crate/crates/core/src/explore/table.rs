use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    /// `n_g`, stored at index 0.
    NByGenus,
    /// `rho_{g,q}` indexed by quasi-ordinarization number.
    Rho,
    /// `o_{g,r}` indexed by ordinarization number.
    O,
    /// `f_omega`, row `omega`, index 0.
    FOmega,
    /// `rho_{g,q}` derived from `f_omega` for the high range only.
    RhoTheorem,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::NByGenus => "n_by_genus",
            TableKind::Rho => "rho",
            TableKind::O => "o",
            TableKind::FOmega => "f_omega",
            TableKind::RhoTheorem => "rho_theorem",
        }
    }
}

/// Exact counts keyed by `(g, index)`, with per-genus totals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: TableKind,
    max_genus: u32,
    entries: BTreeMap<(u32, u32), u64>,
    row_sums: BTreeMap<u32, u64>,
}

impl CountTable {
    /// Builds a table from dense rows (`rows[g][index]`); zero entries are
    /// dropped, except that every genus keeps a row sum.
    pub fn from_rows(kind: TableKind, rows: &[Vec<u64>]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut row_sums = BTreeMap::new();
        for (g, row) in rows.iter().enumerate() {
            let g = g as u32;
            let mut sum = 0u64;
            for (i, &count) in row.iter().enumerate() {
                if count > 0 || kind == TableKind::NByGenus {
                    entries.insert((g, i as u32), count);
                }
                sum = sum
                    .checked_add(count)
                    .ok_or(Error::CountOverflow { genus: g })?;
            }
            row_sums.insert(g, sum);
        }
        Ok(CountTable {
            kind,
            max_genus: rows.len().saturating_sub(1) as u32,
            entries,
            row_sums,
        })
    }

    /// Builds a sparse table from explicit entries.
    pub fn from_entries(
        kind: TableKind,
        entries: impl IntoIterator<Item = ((u32, u32), u64)>,
    ) -> Result<Self> {
        let entries: BTreeMap<(u32, u32), u64> = entries.into_iter().collect();
        let mut row_sums = BTreeMap::new();
        for (&(g, _), &count) in &entries {
            let sum: &mut u64 = row_sums.entry(g).or_default();
            *sum = sum
                .checked_add(count)
                .ok_or(Error::CountOverflow { genus: g })?;
        }
        let max_genus = entries.keys().map(|k| k.0).max().unwrap_or(0);
        Ok(CountTable {
            kind,
            max_genus,
            entries,
            row_sums,
        })
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    pub fn get(&self, g: u32, index: u32) -> u64 {
        self.entries.get(&(g, index)).copied().unwrap_or(0)
    }

    pub fn row_sum(&self, g: u32) -> u64 {
        self.row_sums.get(&g).copied().unwrap_or(0)
    }

    pub fn genera(&self) -> impl Iterator<Item = u32> + '_ {
        self.row_sums.keys().copied()
    }

    /// Dense row for genus `g`, trailing zeros trimmed.
    pub fn row(&self, g: u32) -> Vec<u64> {
        let mut out = Vec::new();
        for (&(_, i), &count) in self.entries.range((g, 0)..=(g, u32::MAX)) {
            out.resize(i as usize, 0);
            out.push(count);
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `g,index,count` rows in ascending `(g, index)` order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("g,index,count\n");
        for ((g, i), count) in self.entries() {
            writeln!(out, "{g},{i},{count}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .genera()
            .map(|g| json!({ "g": g, "counts": self.row(g), "sum": self.row_sum(g) }))
            .collect();
        json!({ "kind": self.kind.name(), "max_genus": self.max_genus, "rows": rows })
    }

    /// Plain text: single-index kinds print one line of values; indexed kinds
    /// print `g: c0 c1 ... | sum` per genus.
    pub fn to_text(&self) -> String {
        match self.kind {
            TableKind::NByGenus | TableKind::FOmega => {
                let values: Vec<String> = self.genera().map(|g| self.get(g, 0).to_string()).collect();
                format!("{}\n", values.join(" "))
            }
            TableKind::Rho | TableKind::O => {
                let mut out = String::new();
                for g in self.genera() {
                    let row: Vec<String> = self.row(g).iter().map(u64::to_string).collect();
                    writeln!(out, "{g}: {} | {}", row.join(" "), self.row_sum(g)).unwrap();
                }
                out
            }
            TableKind::RhoTheorem => {
                let mut out = String::new();
                for ((g, q), count) in self.entries() {
                    writeln!(out, "{g} {q} {count}").unwrap();
                }
                out
            }
        }
    }
}

/// An entry that decreases from genus `g` to `g + 1` at the same index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityViolation {
    pub g: u32,
    pub index: u32,
    pub at_g: u64,
    pub at_next: u64,
}

/// Lists every `(g, index)` with `T[g][index] > T[g+1][index]`, for
/// consecutive genera both present in the table.
pub fn check_monotonicity(table: &CountTable) -> Vec<MonotonicityViolation> {
    let genera: Vec<u32> = table.genera().collect();
    let mut out = Vec::new();
    for pair in genera.windows(2) {
        let (g, next) = (pair[0], pair[1]);
        if next != g + 1 {
            continue;
        }
        let width = table.row(g).len().max(table.row(next).len()) as u32;
        for index in 0..width {
            let (at_g, at_next) = (table.get(g, index), table.get(next, index));
            if at_g > at_next {
                out.push(MonotonicityViolation {
                    g,
                    index,
                    at_g,
                    at_next,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_sums() {
        let t = CountTable::from_rows(TableKind::Rho, &[vec![1], vec![1], vec![2], vec![3, 1]]).unwrap();
        assert_eq!(t.row(3), vec![3, 1]);
        assert_eq!(t.row_sum(3), 4);
        assert_eq!(t.get(3, 5), 0);
        assert_eq!(t.max_genus(), 3);
        assert_eq!(t.to_csv(), "g,index,count\n0,0,1\n1,0,1\n2,0,2\n3,0,3\n3,1,1\n");
        assert_eq!(t.to_text(), "0: 1 | 1\n1: 1 | 1\n2: 2 | 2\n3: 3 1 | 4\n");
    }

    #[test]
    fn sparse_rows_keep_interior_zeros() {
        let t = CountTable::from_entries(TableKind::RhoTheorem, [((9, 4), 1), ((9, 2), 5)]).unwrap();
        assert_eq!(t.row(9), vec![0, 0, 5, 0, 1]);
    }

    #[test]
    fn overflow_is_detected() {
        let err = CountTable::from_rows(TableKind::Rho, &[vec![u64::MAX, 1]]).unwrap_err();
        assert_eq!(err, Error::CountOverflow { genus: 0 });
    }

    #[test]
    fn monotonicity() {
        let t = CountTable::from_rows(TableKind::Rho, &[vec![1], vec![2, 3], vec![3, 2]]).unwrap();
        assert_eq!(
            check_monotonicity(&t),
            vec![MonotonicityViolation { g: 1, index: 1, at_g: 3, at_next: 2 }]
        );
        let single = CountTable::from_rows(TableKind::Rho, &[vec![7, 1]]).unwrap();
        assert!(check_monotonicity(&single).is_empty());
    }

    #[test]
    fn json_shape() {
        let t = CountTable::from_rows(TableKind::NByGenus, &[vec![1], vec![1]]).unwrap();
        assert_eq!(
            t.to_json().to_string(),
            r#"{"kind":"n_by_genus","max_genus":1,"rows":[{"counts":[1],"g":0,"sum":1},{"counts":[1],"g":1,"sum":1}]}"#
        );
    }
}
