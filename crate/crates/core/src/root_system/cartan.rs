//! Cartan matrices in Bourbaki numbering.
//!
//! Entry `[i][j]` is `<α_i^∨, α_j>`, so the simple reflection `s_i` acts on a
//! root with simple coordinates `c` by subtracting `Σ_j c_j [i][j]` from
//! `c_i`.

use super::{Letter, TypeRank};

pub(crate) fn cartan_matrix(spec: TypeRank) -> Vec<Vec<i64>> {
    let n = spec.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match spec.letter() {
        Letter::A | Letter::B | Letter::C => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
        Letter::D => {
            for i in 1..n - 1 {
                link(i - 1, i);
            }
            link(n - 3, n - 1);
        }
        Letter::E => {
            link(0, 2);
            link(1, 3);
            for i in 3..n {
                link(i - 1, i);
            }
        }
        Letter::F | Letter::G => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
    }
    match spec.letter() {
        // α_n short
        Letter::B => a[n - 1][n - 2] = -2,
        // α_n long
        Letter::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Letter::F => a[2][1] = -2,
        // α_1 short, α_2 long
        Letter::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Integer determinant by fraction-free Gaussian elimination (Bareiss).
pub(crate) fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i64;
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
    sign * a[n - 1][n - 1]
}
