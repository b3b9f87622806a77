//! The ten Schubert cells of `G(1,4)`.
//!
//! A line has a unique reduced row-echelon basis `v0, v1` with pivots
//! `i < j`. Row 0 has free entries in the columns after `i` except `j`, row
//! 1 in the columns after `j`; the cell coordinates are named `u<col>` and
//! `v<col>` accordingly.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{MonomialOrder, MultiPoly, PolyRing};
use crate::error::Result;
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertCell {
    pivots: (usize, usize),
}

/// All cells in lexicographic pivot order; `(0, 1)` is the chart `p01 = 1`.
pub fn cells() -> Vec<SchubertCell> {
    (0..5).flat_map(|i| (i + 1..5).map(move |j| SchubertCell { pivots: (i, j) })).collect()
}

impl SchubertCell {
    pub fn new(i: usize, j: usize) -> Option<Self> {
        (i < j && j < 5).then_some(SchubertCell { pivots: (i, j) })
    }

    pub fn chart01() -> Self {
        SchubertCell { pivots: (0, 1) }
    }

    pub fn pivots(&self) -> (usize, usize) {
        self.pivots
    }

    pub fn label(&self) -> String {
        alloc::format!("({},{})", self.pivots.0, self.pivots.1)
    }

    /// Free positions `(row, column)`, row 0 first.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let (i, j) = self.pivots;
        let row0 = (i + 1..5).filter(move |&c| c != j).map(|c| (0, c));
        let row1 = (j + 1..5).map(|c| (1, c));
        row0.chain(row1).collect()
    }

    pub fn dim(&self) -> usize {
        self.free_positions().len()
    }

    /// Non-pivot columns, increasing.
    pub fn complement(&self) -> [usize; 3] {
        let (i, j) = self.pivots;
        let mut out = [0; 3];
        for (slot, c) in out.iter_mut().zip((0..5).filter(|&c| c != i && c != j)) {
            *slot = c;
        }
        out
    }

    pub fn coordinate_names(&self) -> Vec<String> {
        self.free_positions()
            .iter()
            .map(|&(r, c)| alloc::format!("{}{c}", if r == 0 { 'u' } else { 'v' }))
            .collect()
    }

    /// A ring whose first `dim` variables are the cell coordinates, followed
    /// by `extra` variables.
    pub fn ring<F: Field>(&self, field: F, extra: &[String]) -> Result<PolyRing<F>> {
        let mut names = self.coordinate_names();
        names.extend(extra.iter().cloned());
        PolyRing::new(field, names, MonomialOrder::GrevLex)
    }

    /// The symbolic rows in a ring built by [`SchubertCell::ring`].
    pub fn rows<F: Field>(&self, ring: &PolyRing<F>) -> [Vec<MultiPoly<F::Elem>>; 2] {
        let (i, j) = self.pivots;
        let mut rows = [alloc::vec![ring.zero(); 5], alloc::vec![ring.zero(); 5]];
        rows[0][i] = ring.one();
        rows[1][j] = ring.one();
        for (k, (r, c)) in self.free_positions().into_iter().enumerate() {
            rows[r][c] = ring.var(k);
        }
        rows
    }

    /// Concrete rows for given coordinate values.
    pub fn rows_at<F: Field>(&self, field: &F, values: &[F::Elem]) -> [Vec<F::Elem>; 2] {
        let (i, j) = self.pivots;
        let mut rows = [alloc::vec![field.zero(); 5], alloc::vec![field.zero(); 5]];
        rows[0][i] = field.one();
        rows[1][j] = field.one();
        for (k, (r, c)) in self.free_positions().into_iter().enumerate() {
            rows[r][c] = values[k].clone();
        }
        rows
    }
}

/// Plücker coordinates `p_ij`, `i < j`, in lexicographic order.
pub fn plucker<F: Field>(ring: &PolyRing<F>, rows: &[Vec<MultiPoly<F::Elem>>; 2]) -> Vec<MultiPoly<F::Elem>> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            out.push(ring.sub(&ring.mul(&rows[0][i], &rows[1][j]), &ring.mul(&rows[0][j], &rows[1][i])));
        }
    }
    out
}

/// The five quadratic Plücker relations evaluated on `p`.
pub fn plucker_relations<F: Field>(ring: &PolyRing<F>, p: &[MultiPoly<F::Elem>]) -> Vec<MultiPoly<F::Elem>> {
    let idx = |a: usize, b: usize| -> usize { (0..a).map(|r| 4 - r).sum::<usize>() + (b - a - 1) };
    let mut out = Vec::with_capacity(5);
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                for d in c + 1..5 {
                    let t1 = ring.mul(&p[idx(a, b)], &p[idx(c, d)]);
                    let t2 = ring.mul(&p[idx(a, c)], &p[idx(b, d)]);
                    let t3 = ring.mul(&p[idx(a, d)], &p[idx(b, c)]);
                    out.push(ring.add(&ring.sub(&t1, &t2), &t3));
                }
            }
        }
    }
    out
}

/// Cell and coordinates of the line spanned by `a` and `b`; `None` if they
/// are dependent.
pub fn locate<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<(SchubertCell, Vec<F::Elem>)> {
    let mut m = [a.to_vec(), b.to_vec()];
    let mut pivots = [0usize; 2];
    let mut row = 0;
    for col in 0..5 {
        if row == 2 {
            break;
        }
        let Some(r) = (row..2).find(|&r| !field.is_zero(&m[r][col])) else { continue };
        m.swap(row, r);
        let inv = field.inv(&m[row][col]).unwrap();
        m[row] = m[row].iter().map(|x| field.mul(x, &inv)).collect();
        let other = 1 - row;
        let factor = m[other][col].clone();
        let pivot_row = m[row].clone();
        m[other] = m[other].iter().zip(&pivot_row).map(|(x, y)| field.sub_mul(x, &factor, y)).collect();
        pivots[row] = col;
        row += 1;
    }
    if row < 2 {
        return None;
    }
    let cell = SchubertCell { pivots: (pivots[0], pivots[1]) };
    let values = cell.free_positions().iter().map(|&(r, c)| m[r][c].clone()).collect();
    Some((cell, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn dimensions_and_names() {
        let dims: Vec<usize> = cells().iter().map(|c| c.dim()).collect();
        assert_eq!(dims, vec![6, 5, 4, 3, 4, 3, 2, 2, 1, 0]);
        assert_eq!(SchubertCell::chart01().coordinate_names(), vec!["u2", "u3", "u4", "v2", "v3", "v4"]);
        assert_eq!(SchubertCell::new(3, 4).unwrap().dim(), 0);
        assert_eq!(SchubertCell::new(1, 3).unwrap().complement(), [0, 2, 4]);
    }

    #[test]
    fn plucker_relations_vanish_on_every_cell() {
        for cell in cells() {
            let ring = cell.ring(Rationals, &[]).unwrap();
            let p = plucker(&ring, &cell.rows(&ring));
            assert!(plucker_relations(&ring, &p).iter().all(|r| r.is_zero()), "cell {}", cell.label());
        }
    }

    #[test]
    fn locate_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let cell = SchubertCell::new(1, 3).unwrap();
        let vals = vec![2, 5, 6];
        let rows = cell.rows_at(&f, &vals);
        // mix the rows before locating
        let a: Vec<u32> = rows[0].iter().zip(&rows[1]).map(|(x, y)| (x + 3 * y) % 7).collect();
        let b: Vec<u32> = rows[0].iter().zip(&rows[1]).map(|(x, y)| (2 * x + y) % 7).collect();
        assert_eq!(locate(&f, &a, &b), Some((cell, vals)));
        assert_eq!(locate(&f, &a, &a), None);
    }
}
