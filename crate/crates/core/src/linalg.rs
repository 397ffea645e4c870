//! Sparse row echelon forms over an exact field.

use std::collections::BTreeMap;

use crate::field::Field;

pub type SparseRow<E> = Vec<(usize, E)>;

/// Incrementally built echelon basis of a row space. Rows are sparse,
/// sorted by column, and each stored row is monic at its pivot.
pub struct Echelon<'a, F: Field> {
    field: &'a F,
    pivots: BTreeMap<usize, SparseRow<F::Elem>>,
}

fn axpy<F: Field>(f: &F, a: &SparseRow<F::Elem>, c: &F::Elem, b: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(c, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<'a, F: Field> Echelon<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Echelon { field, pivots: BTreeMap::new() }
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let f = self.field;
        let mut k = 0;
        while k < row.len() {
            let col = row[k].0;
            match self.pivots.get(&col) {
                Some(p) => {
                    let c = f.neg(&row[k].1);
                    let tail = row.split_off(k);
                    row.extend(axpy(f, &tail, &c, p));
                }
                None => k += 1,
            }
        }
        row
    }

    /// Adds `row`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, row: SparseRow<F::Elem>) -> bool {
        let row = self.reduce(row);
        let Some((col, lead)) = row.first().cloned() else { return false };
        let inv = self.field.inv(&lead).expect("nonzero pivot");
        let row = row.into_iter().map(|(c, v)| (c, self.field.mul(&inv, &v))).collect();
        self.pivots.insert(col, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, row: SparseRow<F::Elem>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of a sparse matrix given by rows.
pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseRow<F::Elem>>) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
