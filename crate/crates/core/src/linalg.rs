//! Sparse row echelon forms over `F_p`.

use std::collections::BTreeMap;

use crate::field::PrimeField;

/// A sparse row: `(column, value)` pairs sorted by column, values nonzero.
pub type SparseRow = Vec<(usize, u64)>;

/// Incrementally maintained row echelon form. Pivot rows are monic and keyed
/// by their pivot column; the set of pivot columns depends only on the row
/// space, not on insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    rows: BTreeMap<usize, SparseRow>,
}

/// `a - c * b`.
fn axpy(field: &PrimeField, a: &[(usize, u64)], c: u64, b: &[(usize, u64)]) -> SparseRow {
    let neg = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ca, va) = a[i];
        let (cb, vb) = b[j];
        if ca < cb {
            out.push((ca, va));
            i += 1;
        } else if cb < ca {
            out.push((cb, field.mul(vb, neg)));
            j += 1;
        } else {
            let v = field.add(va, field.mul(vb, neg));
            if v != 0 {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(c, v)| (c, field.mul(v, neg))));
    out
}

impl Echelon {
    pub fn new(field: PrimeField) -> Echelon {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut start = 0;
        while start < row.len() {
            let (c, v) = row[start];
            match self.rows.get(&c) {
                Some(p) => {
                    let tail = axpy(&self.field, &row[start..], v, p);
                    row.truncate(start);
                    row.extend(tail);
                }
                None => start += 1,
            }
        }
        row
    }

    /// Inserts a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row: SparseRow = row.into_iter().filter(|&(_, v)| v != 0).collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        // Only leading entries need to hit a pivot for echelon form.
        loop {
            let Some(&(c, v)) = row.first() else {
                return false;
            };
            match self.rows.get(&c) {
                Some(p) => row = axpy(&self.field, &row, v, p),
                None => {
                    let inv = self.field.inv(v);
                    for e in &mut row {
                        e.1 = self.field.mul(e.1, inv);
                    }
                    self.rows.insert(c, row);
                    return true;
                }
            }
        }
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        let mut row: SparseRow = row.into_iter().filter(|&(_, v)| v != 0).collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        self.reduce(row).is_empty()
    }

    /// Reduced row echelon basis of the rows whose pivot is at column
    /// `>= from`, i.e. of the intersection of the row space with the span of
    /// the trailing coordinates.
    pub fn reduced_rows_from(&self, from: usize) -> Vec<SparseRow> {
        let mut sub = Echelon {
            field: self.field,
            rows: self
                .rows
                .range(from..)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        };
        let keys: Vec<usize> = sub.rows.keys().rev().copied().collect();
        for k in keys {
            let row = sub.rows.remove(&k).expect("present");
            let lead = vec![row[0]];
            let tail = sub.reduce(row[1..].to_vec());
            sub.rows.insert(k, lead.into_iter().chain(tail).collect());
        }
        sub.rows.into_values().collect()
    }
}

/// Rank of a matrix given as sparse rows.
pub fn rank(field: PrimeField, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
