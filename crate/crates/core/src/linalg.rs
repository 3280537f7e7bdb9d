//! Small exact linear algebra over the integers and rationals.
//!
//! Matrices are dense `Vec<Vec<_>>`, row-major. Sizes here never exceed the
//! rank of an exceptional algebra, so nothing is tuned for speed.

use num_rational::Ratio;

pub type Q = Ratio<i64>;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Rank of a list of integer vectors.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != Q::from_integer(0)) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[c] != Q::from_integer(0) {
                let f = row[c] / pivot[c];
                for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse over the rationals, `None` when singular.
pub fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let zero = Q::from_integer(0);
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Q> = r.iter().map(|&x| Q::from_integer(x)).collect();
            row.extend((0..n).map(|j| Q::from_integer((i == j) as i64)));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != zero)?;
        a.swap(c, p);
        let pivot = a[c][c];
        for x in a[c].iter_mut() {
            *x /= pivot;
        }
        let pivot_row = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && row[c] != zero {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Inverse of a unimodular integer matrix; `None` unless `det = ±1`.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    if determinant(m).abs() != 1 {
        return None;
    }
    let inv = inverse(m)?;
    inv.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect()
        })
        .collect()
}

/// Column matrix whose `j`-th column is `cols[j]`.
pub fn from_columns(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cols.first().map_or(0, |c| c.len());
    (0..n)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_vec_q(m: &[Vec<Q>], v: &[i64]) -> Vec<Q> {
    m.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .fold(Q::from_integer(0), |acc, (a, &b)| acc + *a * b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[]), 1);
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
        // Cartan matrix of A_3 has determinant 4
        let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&a3), 4);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 2], vec![0, 0, -1]];
        let inv = unimodular_inverse(&m).unwrap();
        for (i, row) in m.iter().enumerate() {
            for j in 0..3 {
                let s: i64 = row.iter().zip(&inv).map(|(x, r)| x * r[j]).sum();
                assert_eq!(s, (i == j) as i64);
            }
        }
        assert!(unimodular_inverse(&[vec![2, 0], vec![0, 1]]).is_none());
    }

    #[test]
    fn rank_detects_dependence() {
        assert_eq!(rank(&[vec![1, 0, 1], vec![2, 0, 2]]), 1);
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 0], vec![1, 1, 1]]), 2);
        assert_eq!(rank(&[vec![1, 0], vec![0, 1]]), 2);
    }
}
