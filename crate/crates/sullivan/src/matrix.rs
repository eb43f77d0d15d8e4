//! Dense exact linear algebra over the rationals.
//!
//! Row reduction is deterministic: pivots are chosen in the leftmost nonzero
//! column, then the lowest row index. All downstream constructions (cohomology
//! representatives, quotient bases, canonical solutions) inherit their
//! reproducibility from this.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Dense matrix of rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of `rref`: the reduced row-echelon form and its pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc += self.at(r, c) * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row-echelon form with the deterministic pivoting rule.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let pivot_row = (next_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(next_row, pr);
            let inv = m.at(next_row, col).recip();
            for c in col..m.cols {
                let v = m.at(next_row, c) * &inv;
                *m.at_mut(next_row, c) = v;
            }
            for r in 0..m.rows {
                if r != next_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &factor * m.at(next_row, c);
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        RowEchelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, one vector per free column in ascending
    /// column order. Count is always `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = self.rref();
        let pivot_set: Vec<usize> = ech.pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivot_set.iter().enumerate() {
                v[p] = -ech.matrix.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b` when consistent, with free variables set
    /// to zero; `None` signals inconsistency.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let ech = aug.rref();
        if ech.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.matrix.at(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Reduce `v` against the rows of an rref, in place.
fn reduce_mod_rref(v: &mut [Rational], ech: &RowEchelon) {
    for (row, &p) in ech.pivots.iter().enumerate() {
        if !v[p].is_zero() {
            let factor = v[p].clone();
            for c in 0..v.len() {
                let delta = &factor * ech.matrix.at(row, c);
                v[c] -= delta;
            }
        }
    }
}

/// Canonical representatives for the quotient span(cycles)/span(boundaries).
///
/// Each cycle vector is reduced against the boundary row space and against the
/// representatives already accepted; nonzero remainders are normalized to a
/// leading coefficient of one. The result is deterministic given the input
/// order.
pub fn quotient_representatives(
    cycles: &[Vec<Rational>],
    boundaries: &[Vec<Rational>],
) -> Vec<Vec<Rational>> {
    if cycles.is_empty() {
        return Vec::new();
    }
    let dim = cycles[0].len();
    let bnd = RationalMatrix::from_rows(boundaries.to_vec());
    let bnd_ech = if boundaries.is_empty() {
        RationalMatrix::zero(0, dim).rref()
    } else {
        bnd.rref()
    };
    let mut reps: Vec<Vec<Rational>> = Vec::new();
    let mut accepted = RationalMatrix::zero(0, dim).rref();
    for cycle in cycles {
        let mut v = cycle.clone();
        reduce_mod_rref(&mut v, &bnd_ech);
        reduce_mod_rref(&mut v, &accepted);
        if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[lead].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            reps.push(v.clone());
            let mut rows: Vec<Vec<Rational>> = reps.clone();
            rows.sort_by_key(|r| r.iter().position(|x| !x.is_zero()));
            accepted = RationalMatrix::from_rows(rows).rref();
        }
    }
    reps
}

/// Coordinates of `v` in the row space of `basis_ech`, or `None` if `v` is
/// not in the span. Requires `basis_ech` to be an rref.
pub fn coords_in_rowspace(v: &[Rational], basis: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return if v.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // solve basis^T * c = v
    let rows = v.len();
    let cols = basis.len();
    let mut m = RationalMatrix::zero(rows, cols);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..rows {
            *m.at_mut(i, j) = b[i].clone();
        }
    }
    m.solve(v)
}
