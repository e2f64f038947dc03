//! Small exact linear algebra over [`Rational`].

use super::rational::Rational;

/// Reduced row echelon form of `rows` (all of length `ncols`).
/// Returns the nonzero reduced rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : R x = 0}` for a matrix already in reduced row echelon form.
pub fn null_space(rref_rows: &[Vec<Rational>], pivots: &[usize], ncols: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in rref_rows.iter().zip(pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc *= &pivot;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..n {
                let delta = &f * &m[c][j];
                m[i][j] -= delta;
            }
        }
    }
    acc
}

/// Solves the square system `a x = b`; `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, n + 1);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square matrix; `None` if singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(det(a), q(0, 1));
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(b), q(-1, 1));
    }

    #[test]
    fn null_space_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let (r, p) = rref(&a, 3);
        assert_eq!(p, vec![0]);
        let ns = null_space(&r, &p, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                assert!(dot(row, v).is_zero());
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![q(1, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]]);
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(solve(&a, &[q(3, 1), q(2, 1)]).unwrap(), vec![q(1, 1), q(1, 1)]);
    }
}
