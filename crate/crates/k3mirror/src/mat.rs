//! Exact dense linear algebra over `Z` and `Q`.
//!
//! Everything downstream (hulls, Gram matrices, Smith invariants,
//! discriminant forms) reduces to a handful of exact kernels collected here:
//! fraction-free determinants, rational elimination, row Hermite normal form
//! with its unimodular transform, and Smith normal form with both transforms.
//! Matrices are plain `Vec<Vec<_>>` rows; sizes in this crate stay below
//! 20x20, so clarity wins over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn to_int_matrix(m: &[Vec<i64>]) -> Vec<Vec<Int>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

pub fn to_rat_matrix(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

pub fn identity_int(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

pub fn mat_mul_int(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let p = &a[i][t] * &b[t][j];
                out[i][j] += p;
            }
        }
    }
    out
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    let rows = m.len();
    let cols = m[0].len();
    (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn det_i64(m: &[Vec<i64>]) -> Int {
    det_int(&to_int_matrix(m))
}

pub fn det_rat(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][k].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if pivot != k {
            a.swap(k, pivot);
            det = -det;
        }
        det *= a[k][k].clone();
        let inv = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &inv;
            for j in k..n {
                let s = &a[k][j] * &f;
                a[i][j] -= s;
            }
        }
    }
    det
}

/// Rank over `Q`.
pub fn rank_int(m: &[Vec<Int>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = match (rank..rows).find(|&i| !a[i][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].clone();
        for i in 0..rows {
            if i != rank && !a[i][col].is_zero() {
                let f = &a[i][col] / &inv;
                for j in col..cols {
                    let s = &a[rank][j] * &f;
                    a[i][j] -= s;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank_i64(m: &[Vec<i64>]) -> usize {
    rank_int(&to_int_matrix(m))
}

/// Solve `A x = b` over `Q`; `Some` only when a solution exists and is unique.
pub fn solve_unique_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    if rows == 0 {
        return None;
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, t)| {
            let mut row = r.clone();
            row.push(t.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = match (rank..rows).find(|&i| !m[i][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for j in col..=cols {
            m[rank][j] = &m[rank][j] / &inv;
        }
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    let s = &m[rank][j] * &f;
                    m[i][j] -= s;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    // Inconsistent or underdetermined systems have no unique solution.
    for i in rank..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    if rank < cols {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = m[r][cols].clone();
    }
    Some(x)
}

/// Exact inverse over `Q`; `None` for singular input.
pub fn inverse_rat(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].clone();
        for j in 0..2 * n {
            a[col][j] = &a[col][j] / &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..2 * n {
                    let s = &a[col][j] * &f;
                    a[i][j] -= s;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row Hermite normal form `H = U A` with `U` unimodular.
///
/// `H` is in row echelon shape with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`; zero rows sink to the bottom. For a
/// full-row-rank matrix this representative of the left `GL(n,Z)` orbit is
/// unique.
pub fn hnf_row(a: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h: Vec<Vec<Int>> = a.to_vec();
    let mut u = identity_int(rows);
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean reduction within the column.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows {
                if !h[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) => {
                            if h[i][col].abs() < h[b][col].abs() {
                                Some(i)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let b = match best {
                None => break,
                Some(b) => b,
            };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..rows {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = div_round(&h[i][col], &h[pivot_row][col]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let s = &q * &h[pivot_row][j];
                        h[i][j] -= s;
                    }
                    for j in 0..rows {
                        let s = &q * &u[pivot_row][j];
                        u[i][j] -= s;
                    }
                }
                if !h[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            for j in 0..cols {
                h[pivot_row][j] = -h[pivot_row][j].clone();
            }
            for j in 0..rows {
                u[pivot_row][j] = -u[pivot_row][j].clone();
            }
        }
        for i in 0..pivot_row {
            let q = h[i][col].div_floor(&h[pivot_row][col]);
            if !q.is_zero() {
                for j in 0..cols {
                    let s = &q * &h[pivot_row][j];
                    h[i][j] -= s;
                }
                for j in 0..rows {
                    let s = &q * &u[pivot_row][j];
                    u[i][j] -= s;
                }
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

fn div_round(a: &Int, b: &Int) -> Int {
    // Quotient minimizing |a - q b|.
    let (q, r) = a.div_rem(b);
    let two_r = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the integer kernel `{x : A x = 0}`.
pub fn kernel_int(a: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let at = transpose(a);
    let (h, u) = hnf_row(&at);
    let mut out = Vec::new();
    for (row_h, row_u) in h.iter().zip(u.iter()) {
        if row_h.iter().all(|x| x.is_zero()) {
            out.push(row_u.clone());
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SmithResult {
    /// Diagonal of the Smith form, nonnegative, each dividing the next.
    pub diag: Vec<Int>,
    /// `diag = U * A * V` as full matrices.
    pub u: Vec<Vec<Int>>,
    pub v: Vec<Vec<Int>>,
}

/// Smith normal form with unimodular transforms.
pub fn smith(a: &[Vec<Int>]) -> SmithResult {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Int>> = a.to_vec();
    let mut u = identity_int(rows);
    let mut v = identity_int(cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block moves to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() {
                        best = match best {
                            None => Some((i, j)),
                            Some((bi, bj)) => {
                                if m[i][j].abs() < m[bi][bj].abs() {
                                    Some((i, j))
                                } else {
                                    Some((bi, bj))
                                }
                            }
                        };
                    }
                }
            }
            let (bi, bj) = match best {
                None => {
                    return finish_smith(m, u, v, t);
                }
                Some(b) => b,
            };
            m.swap(t, bi);
            u.swap(t, bi);
            swap_cols(&mut m, t, bj);
            swap_cols(&mut v, t, bj);
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = div_round(&m[i][t], &m[t][t]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let s = &q * &m[t][j];
                        m[i][j] -= s;
                    }
                    for j in 0..rows {
                        let s = &q * &u[t][j];
                        u[i][j] -= s;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = div_round(&m[t][j], &m[t][t]);
                if !q.is_zero() {
                    for i in 0..rows {
                        let s = &q * &m[i][t];
                        m[i][j] -= s;
                    }
                    for i in 0..cols {
                        let s = &q * &v[i][t];
                        v[i][j] -= s;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility fix-up: fold any non-multiple into column t.
            let mut fixed = true;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        for jj in 0..cols {
                            let s = m[i][jj].clone();
                            m[t][jj] += s;
                        }
                        for jj in 0..rows {
                            let s = u[i][jj].clone();
                            u[t][jj] += s;
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
    }
    finish_smith(m, u, v, n)
}

fn finish_smith(
    mut m: Vec<Vec<Int>>,
    mut u: Vec<Vec<Int>>,
    v: Vec<Vec<Int>>,
    upto: usize,
) -> SmithResult {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let n = rows.min(cols);
    for t in 0..upto.min(n) {
        if m[t][t].is_negative() {
            for j in 0..cols {
                m[t][j] = -m[t][j].clone();
            }
            for j in 0..rows {
                u[t][j] = -u[t][j].clone();
            }
        }
    }
    let diag = (0..n).map(|t| m[t][t].clone()).collect();
    SmithResult { diag, u, v }
}

fn swap_cols(m: &mut [Vec<Int>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Inverse of a unimodular integer matrix, exact and integral.
pub fn inverse_unimodular(m: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = m.len();
    let rat_m: Vec<Vec<Rat>> = m
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let inv = inverse_rat(&rat_m).expect("unimodular matrix is invertible");
    inv.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "inverse of unimodular matrix must be integral");
                    x.to_integer()
                })
                .collect()
        })
        .collect::<Vec<Vec<Int>>>()
        .iter()
        .take(n)
        .cloned()
        .collect()
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x))
}

/// Divide out the content, fixing the first nonzero entry positive when
/// `orient` is set.
pub fn primitive(v: &[i64], orient: bool) -> Vec<i64> {
    let g = gcd_slice(v);
    if g == 0 {
        return v.to_vec();
    }
    let mut out: Vec<i64> = v.iter().map(|&x| x / g).collect();
    if orient {
        if let Some(first) = out.iter().find(|&&x| x != 0) {
            if *first < 0 {
                for x in &mut out {
                    *x = -*x;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m64(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_on_small_matrices() {
        let m = m64(&[&[0, 2, 3, 0], &[2, 6, 9, 1], &[3, 9, 12, 0], &[0, 1, 0, -2]]);
        assert_eq!(det_int(&m), int(-3));
        let u = m64(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_int(&u), int(-1));
    }

    #[test]
    fn hnf_is_canonical_under_left_multiplication() {
        let a = m64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (h, u) = hnf_row(&a);
        assert_eq!(det_int(&u).abs(), int(1));
        assert_eq!(mat_mul_int(&u, &a), h);
        // Multiplying on the left by a unimodular matrix leaves the HNF fixed.
        let g = m64(&[&[1, 2, 0], &[0, 1, 0], &[1, 1, 1]]);
        let (h2, _) = hnf_row(&mat_mul_int(&g, &a));
        assert_eq!(h, h2);
    }

    #[test]
    fn smith_diag_divides_and_transforms_check() {
        let a = m64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a);
        let prod = mat_mul_int(&mat_mul_int(&s.u, &a), &s.v);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { s.diag[i].clone() } else { Int::zero() };
                assert_eq!(prod[i][j], expect);
            }
        }
        for w in s.diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        assert_eq!(det_int(&s.u).abs(), int(1));
        assert_eq!(det_int(&s.v).abs(), int(1));
    }

    #[test]
    fn smith_invariants_match_minor_gcd_oracle() {
        // d_1 ... d_k equals the gcd of all k x k minors.
        let a = m64(&[&[0, 3], &[3, 0]]);
        let s = smith(&a);
        assert_eq!(s.diag, vec![int(3), int(3)]);
        let gcd_1x1 = int(3);
        assert_eq!(s.diag[0], gcd_1x1);
        assert_eq!(&s.diag[0] * &s.diag[1], det_int(&a).abs());
    }

    #[test]
    fn kernel_of_weight_covector() {
        let a = m64(&[&[1, 3, 5, 9]]);
        let k = kernel_int(&a);
        assert_eq!(k.len(), 3);
        for v in &k {
            let dot: Int = v[0].clone() + &v[1] * 3 + &v[2] * 5 + &v[3] * 9;
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn unique_solve_and_inverse() {
        let a = to_rat_matrix(&[vec![2, 1], vec![1, 1]]);
        let x = solve_unique_rat(&a, &[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = inverse_rat(&a).unwrap();
        assert_eq!(inv[0][0], rat(1));
        assert_eq!(inv[0][1], rat(-1));
        // Overdetermined but consistent.
        let b = to_rat_matrix(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let x = solve_unique_rat(&b, &[rat(2), rat(5), rat(7)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(5)]);
        assert!(solve_unique_rat(&b, &[rat(2), rat(5), rat(8)]).is_none());
    }
}
