//! Dense linear algebra over `Q`.

use alloc::vec::Vec;

use alloc::collections::BTreeMap;

use num_traits::Zero;

use super::polynomial::Polynomial;
use super::ring::Ring;
use super::Rational;

/// Row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        rows[r].iter_mut().for_each(|x| *x /= &lead);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Rational::zero(); ncols];
            v[f] = Rational::from_integer(1.into());
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant of a square polynomial matrix by Laplace expansion along
/// rows, memoized on the set of remaining columns.
pub fn determinant(ring: &Ring, matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    assert!(n < 32 && matrix.iter().all(|r| r.len() == n), "square matrix of size < 32");
    let mut memo: BTreeMap<u32, Polynomial> = BTreeMap::new();
    minor(ring, matrix, (1u32 << n) - 1, &mut memo)
}

fn minor(ring: &Ring, matrix: &[Vec<Polynomial>], cols: u32, memo: &mut BTreeMap<u32, Polynomial>) -> Polynomial {
    if cols == 0 {
        return ring.one();
    }
    if let Some(d) = memo.get(&cols) {
        return d.clone();
    }
    let row = matrix.len() - cols.count_ones() as usize;
    let mut acc = ring.zero();
    let mut sign_negative = false;
    for j in 0..matrix.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &matrix[row][j];
        if !entry.is_zero() {
            let term = entry * &minor(ring, matrix, cols & !(1 << j), memo);
            acc = if sign_negative { &acc - &term } else { &acc + &term };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = alloc::vec![
            alloc::vec![rat(1), rat(2), rat(3)],
            alloc::vec![rat(2), rat(4), rat(6)],
            alloc::vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(&m), 2);
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot: Rational = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn polynomial_determinant() {
        use super::super::{parse_polynomial, TermOrder};
        let r = Ring::new(&["x", "y"], TermOrder::Grevlex).unwrap();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let m = alloc::vec![
            alloc::vec![p("x"), p("y"), p("0")],
            alloc::vec![p("1"), p("x"), p("y")],
            alloc::vec![p("0"), p("1"), p("x")],
        ];
        assert_eq!(determinant(&r, &m), p("x^3 - 2*x*y"));
        assert_eq!(determinant(&r, &[]), r.one());
    }
}
