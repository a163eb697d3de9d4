//! Exact linear algebra over the rationals for small integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Inverse of a square integer matrix over `Q`, or `None` when singular.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix must be square");
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] = &a[r][j] - t;
                let t = &f * &inv[col][j];
                inv[r][j] = &inv[r][j] - t;
            }
        }
    }
    Some(inv)
}

/// Solves `m x = b` exactly, or returns `None` when `m` is singular.
pub fn rational_solve(m: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let inv = rational_inverse(m)?;
    Some(
        inv.iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .fold(BigRational::zero(), |acc, (x, &y)| {
                        acc + x * BigRational::from_integer(BigInt::from(y))
                    })
            })
            .collect(),
    )
}

/// Rank of an integer matrix over `Q`.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..cols {
                let t = &f * &a[rank][j];
                a[r][j] = &a[r][j] - t;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let c = vec![vec![2, -1], vec![-1, 2]];
        let inv = rational_inverse(&c).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(inv[0][1], third);
        let x = rational_solve(&c, &[2, 2]).unwrap();
        assert_eq!(x, vec![BigRational::from_integer(2.into()); 2]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rational_rank(&[vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]), 2);
        assert_eq!(rational_rank(&[]), 0);
    }

    #[test]
    fn singular_is_rejected() {
        assert!(rational_inverse(&[vec![1, 2], vec![2, 4]]).is_none());
    }
}
