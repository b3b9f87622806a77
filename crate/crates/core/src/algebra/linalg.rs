//! Dense exact matrices over a [`Field`], stored row-major as `Vec<Vec<E>>`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

pub type Matrix<E> = Vec<Vec<E>>;

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter().zip(b).fold(field.zero(), |acc, (x, brow)| field.add(&acc, &field.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y))))
        .collect()
}

/// Fraction-free (Bareiss) elimination. Returns the rank, and the
/// determinant when the matrix is square.
pub fn bareiss<F: Field>(field: &F, a: &Matrix<F::Elem>) -> (usize, Option<F::Elem>) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.clone();
    let mut prev = field.one();
    let mut sign_neg = false;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        if piv != rank {
            m.swap(piv, rank);
            sign_neg = !sign_neg;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = field.sub(&field.mul(&m[rank][col], &m[r][c]), &field.mul(&m[r][col], &m[rank][c]));
                m[r][c] = field.div(&num, &prev).expect("nonzero Bareiss pivot");
            }
            m[r][col] = field.zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let det = (rows == cols).then(|| {
        if rank < rows {
            field.zero()
        } else if sign_neg {
            field.neg(&m[rows - 1][cols - 1])
        } else {
            m[rows - 1][cols - 1].clone()
        }
    });
    (rank, det)
}

pub fn rank<F: Field>(field: &F, a: &Matrix<F::Elem>) -> usize {
    bareiss(field, a).0
}

pub fn determinant<F: Field>(field: &F, a: &Matrix<F::Elem>) -> F::Elem {
    assert!(a.iter().all(|r| r.len() == a.len()), "determinant of a non-square matrix");
    if a.is_empty() {
        return field.one();
    }
    bareiss(field, a).1.unwrap()
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn inverse<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.len();
    let mut m: Matrix<F::Elem> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !field.is_zero(&m[r][col]))?;
        m.swap(piv, col);
        let inv = field.inv(&m[col][col]).unwrap();
        for x in m[col].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !field.is_zero(&row[col]) {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub_mul(x, &factor, p);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right kernel `{v : a v = 0}`.
pub fn kernel<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(piv, r);
        let inv = field.inv(&m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !field.is_zero(&row[c]) {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x = field.sub_mul(x, &factor, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); cols];
            v[fc] = field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&m[i][fc]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn determinant_and_rank() {
        let a = vec![vec![q(2), q(1), q(0)], vec![q(1), q(3), q(1)], vec![q(0), q(1), q(4)]];
        // 2(12-1) - 1(4-0) = 18
        assert_eq!(determinant(&Rationals, &a), q(18));
        let swapped = vec![a[1].clone(), a[0].clone(), a[2].clone()];
        assert_eq!(determinant(&Rationals, &swapped), q(-18));
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&Rationals, &sing), 1);
        assert_eq!(determinant(&Rationals, &sing), q(0));
        let inv = inverse(&Rationals, &a).unwrap();
        assert_eq!(mat_mul(&Rationals, &a, &inv), identity(&Rationals, 3));
        assert!(inverse(&Rationals, &sing).is_none());
    }

    #[test]
    fn kernel_vectors() {
        let f = PrimeField::new(7).unwrap();
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&f, &a);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mat_vec(&f, &a, &v).iter().all(|&x| x == 0));
        }
    }
}
