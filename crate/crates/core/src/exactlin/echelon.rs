//! Fraction-free row reduction.
//!
//! Rows are scaled to primitive integer vectors and eliminated with the
//! cross-multiplication step `row ← p·row − a·pivot`, after which the row's
//! content is divided out. Rationals only reappear when the reduced echelon
//! form is normalised at the very end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Matrix, Scalar, Vector};

fn lcm_of_denoms<'a>(row: impl Iterator<Item = &'a Scalar>) -> BigInt {
    row.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub(crate) fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let l = lcm_of_denoms(row.iter());
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

/// Reduce integer rows in place. With `full`, entries above pivots are cleared
/// too. Returns the pivot columns; the first `pivots.len()` rows are the
/// nonzero echelon rows.
pub(crate) fn reduce(rows: &mut Vec<Vec<BigInt>>, cols: usize, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let pick = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].bits());
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        let pv = pivot_row[c].clone();
        let eliminate = |row: &mut Vec<BigInt>| {
            if row[c].is_zero() {
                return;
            }
            let g = pv.gcd(&row[c]);
            let mp = &pv / &g;
            let ma = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &mp;
                    }
                } else {
                    *x = &*x * &mp - &ma * y;
                }
            }
            make_primitive(row);
        };
        let start = if full { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i != r {
                eliminate(row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Reduced row echelon form with unit pivots, and the pivot columns.
pub fn rref(m: &Matrix) -> (Vec<Vector>, Vec<usize>) {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| integer_row(m.row(i))).collect();
    let pivots = reduce(&mut rows, m.cols(), true);
    let out = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let mut p = row[c].clone();
            let mut row = row;
            if p.is_negative() {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
                p = -p;
            }
            row.into_iter()
                .map(|x| Scalar::from_ratio(x, p.clone()))
                .collect()
        })
        .collect();
    (out, pivots)
}

/// Dimension of the row space.
pub fn rank(m: &Matrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| integer_row(m.row(i)))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    reduce(&mut rows, m.cols(), false).len()
}

/// Basis of the right null space, one vector per free column.
pub fn null_basis(m: &Matrix) -> Vec<Vector> {
    let (rows, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::zeros(3, 3)), 0);
        assert_eq!(rank(&Matrix::identity(4)), 4);
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
    }

    #[test]
    fn rref_is_canonical() {
        let a = Matrix::from_i64(&[&[2, 4, 6], &[1, 1, 1]]);
        let b = Matrix::from_i64(&[&[1, 3, 5], &[0, 1, 2]]);
        assert_eq!(rref(&a), rref(&b));
    }

    #[test]
    fn null_basis_example() {
        let k = null_basis(&Matrix::from_i64(&[&[1, 1, 0]]));
        assert_eq!(k.len(), 2);
        let m = Matrix::from_i64(&[&[1, 1, 0]]);
        for v in &k {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }
}
