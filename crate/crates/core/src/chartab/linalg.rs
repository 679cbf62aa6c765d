//! Dense linear algebra over F_p.

use crate::field::PrimeField;

pub type Matrix = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: PrimeField, m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(piv) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, piv);
        let inv = f.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..m[r].len() {
                    let sub = f.mul(factor, m[row][c]);
                    m[r][c] = f.sub(m[r][c], sub);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn nullspace(f: PrimeField, m: &Matrix, ncols: usize) -> Vec<Vec<u64>> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[r][fc]);
            }
            v
        })
        .collect()
}

/// Solves `B X = W` for `B` of full column rank `d` (both `r × d`).
pub fn solve_full_rank(f: PrimeField, b: &Matrix, w: &Matrix, d: usize) -> Option<Matrix> {
    let mut aug: Matrix = b
        .iter()
        .zip(w)
        .map(|(br, wr)| br.iter().chain(wr).copied().collect())
        .collect();
    let pivots = rref(f, &mut aug, d);
    if pivots.len() != d {
        return None;
    }
    // Consistency: rows past the pivots must vanish on the right-hand side.
    if aug[d..].iter().any(|row| row[d..].iter().any(|&x| x != 0)) {
        return None;
    }
    Some(aug[..d].iter().map(|row| row[d..].to_vec()).collect())
}

pub fn mat_mul(f: PrimeField, a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    (0..inner).fold(0, |acc, k| f.add(acc, f.mul(row[k], b[k][c])))
                })
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(xI − M)`, coefficients from low to high
/// degree, via reduction to Hessenberg form.
pub fn charpoly(f: PrimeField, m: &Matrix) -> Vec<u64> {
    let n = m.len();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let factor = f.mul(h[k][j], inv);
            for c in 0..n {
                let sub = f.mul(factor, h[j + 1][c]);
                h[k][c] = f.sub(h[k][c], sub);
            }
            for row in h.iter_mut() {
                let add = f.mul(factor, row[k]);
                row[j + 1] = f.add(row[j + 1], add);
            }
        }
    }
    // polys[m] is the characteristic polynomial of the leading m×m block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for mm in 1..=n {
        let prev = &polys[mm - 1];
        let mut p = vec![0; mm + 1];
        for (i, &c) in prev.iter().enumerate() {
            p[i + 1] = f.add(p[i + 1], c);
            p[i] = f.sub(p[i], f.mul(h[mm - 1][mm - 1], c));
        }
        let mut t = 1;
        for i in 1..mm {
            t = f.mul(t, h[mm - i][mm - i - 1]);
            let coef = f.mul(t, h[mm - i - 1][mm - 1]);
            for (k, &c) in polys[mm - i - 1].iter().enumerate() {
                p[k] = f.sub(p[k], f.mul(coef, c));
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(f: PrimeField, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// All roots in F_p by exhaustive evaluation.
pub fn roots(f: PrimeField, poly: &[u64]) -> Vec<u64> {
    (0..f.modulus())
        .filter(|&x| eval_poly(f, poly, x) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(f: PrimeField, m: &Matrix) -> u64 {
        let n = m.len();
        let mut a = m.clone();
        let mut d = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                d = f.neg(d);
            }
            d = f.mul(d, a[c][c]);
            let inv = f.inv(a[c][c]);
            for r in c + 1..n {
                let factor = f.mul(a[r][c], inv);
                for k in c..n {
                    let s = f.mul(factor, a[c][k]);
                    a[r][k] = f.sub(a[r][k], s);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_agrees_with_determinant() {
        let f = PrimeField::new(101);
        let m: Matrix = vec![
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ];
        let cp = charpoly(f, &m);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for x in [0u64, 1, 2, 17, 50, 100] {
            let shifted: Matrix = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let d = if i == j { x } else { 0 };
                            f.sub(d, m[i][j])
                        })
                        .collect()
                })
                .collect();
            assert_eq!(eval_poly(f, &cp, x), det(f, &shifted));
        }
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = PrimeField::new(13);
        let m: Matrix = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(f, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let dot = row.iter().zip(&v).fold(0, |a, (x, y)| f.add(a, f.mul(*x, *y)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn solve_recovers_coordinates() {
        let f = PrimeField::new(7);
        let b: Matrix = vec![vec![1, 0], vec![1, 1], vec![0, 2]];
        let x: Matrix = vec![vec![3, 1], vec![4, 5]];
        let w = mat_mul(f, &b, &x);
        assert_eq!(solve_full_rank(f, &b, &w, 2).unwrap(), x);
    }
}
