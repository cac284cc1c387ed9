//! Up/down lattice paths that never go below the x-axis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::num::{self, ExactInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

/// A nonnegative U/D path starting at height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<LatticePath> {
        let mut h = 0i64;
        for (t, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidPath(format!(
                    "goes below the x-axis at step {}",
                    t + 1
                )));
            }
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `H_0 = 0, H_1, …, H_m`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            match s {
                Step::U => h += 1,
                Step::D => h -= 1,
            }
            out.push(h);
        }
        out
    }

    pub fn end_height(&self) -> usize {
        let ups = self.steps.iter().filter(|&&s| s == Step::U).count();
        2 * ups - self.steps.len()
    }

    /// Times `t ≥ 1` at which the path is back on the x-axis.
    pub fn returns(&self) -> usize {
        self.heights()[1..].iter().filter(|&&h| h == 0).count()
    }

    pub fn is_dyck(&self) -> bool {
        self.end_height() == 0
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<LatticePath> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                other => Err(Error::InvalidPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

/// All nonnegative paths of a given length, in lexicographic order with
/// `U` before `D`.
pub struct Paths {
    length: usize,
    /// Partial paths and their current heights; extended depth-first.
    stack: Vec<(Vec<Step>, usize)>,
}

impl Iterator for Paths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        while let Some((steps, h)) = self.stack.pop() {
            if steps.len() == self.length {
                return Some(LatticePath { steps });
            }
            if h > 0 {
                let mut down = steps.clone();
                down.push(Step::D);
                self.stack.push((down, h - 1));
            }
            let mut up = steps;
            up.push(Step::U);
            self.stack.push((up, h + 1));
        }
        None
    }
}

pub fn enumerate_paths(length: usize) -> Paths {
    Paths {
        length,
        stack: vec![(Vec::with_capacity(length), 0)],
    }
}

/// `|B_{n,h,j}|` by listing every path.
pub fn count_paths<T: ExactInt>(n: usize, h: usize, j: usize) -> Result<T> {
    let c = enumerate_paths(n)
        .filter(|p| p.end_height() == h && p.returns() == j)
        .count();
    num::from_u64(c as u64, "count_paths")
}

/// All `(end height, returns)` counts for paths of length `n`, in one pass.
pub fn count_table(n: usize) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for p in enumerate_paths(n) {
        *out.entry((p.end_height(), p.returns())).or_insert(0) += 1;
    }
    out
}

fn check_partition(n: usize, lambda: &[usize]) -> Result<()> {
    if lambda.len() != n {
        return Err(Error::InvalidPartition(format!(
            "expected {n} parts, got {}",
            lambda.len()
        )));
    }
    for (i, &part) in lambda.iter().enumerate() {
        if part > n - i {
            return Err(Error::InvalidPartition(format!(
                "part {} = {part} exceeds the staircase bound {}",
                i + 1,
                n - i
            )));
        }
        if i > 0 && part > lambda[i - 1] {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing ({} < {part})",
                lambda[i - 1]
            )));
        }
    }
    Ok(())
}

/// Type-A encoding of a staircase partition as a Dyck path of length
/// `2n + 2`: `U D^{a_1} U D^{a_2} … U D^{a_{n+1}}` with
/// `a_k = #{i : λ_i = n+1-k}` for `k ≤ n` and `a_{n+1} = #{i : λ_i = 0} + 1`.
/// Returns minus one equals the number of full rows.
pub fn dyck_from_partition(n: usize, lambda: &[usize]) -> Result<LatticePath> {
    check_partition(n, lambda)?;
    let mut blocks = vec![0usize; n + 1];
    for &part in lambda {
        blocks[n - part] += 1;
    }
    blocks[n] += 1;
    let mut steps = Vec::with_capacity(2 * n + 2);
    for a in blocks {
        steps.push(Step::U);
        steps.extend(std::iter::repeat_n(Step::D, a));
    }
    LatticePath::new(steps)
}

/// Inverse of [`dyck_from_partition`].
pub fn partition_from_dyck(n: usize, path: &LatticePath) -> Result<Vec<usize>> {
    if path.len() != 2 * n + 2 || !path.is_dyck() {
        return Err(Error::InvalidPath(format!(
            "expected a Dyck path of length {}, got {path}",
            2 * n + 2
        )));
    }
    let mut blocks: Vec<usize> = Vec::with_capacity(n + 1);
    for s in path.steps() {
        match s {
            Step::U => blocks.push(0),
            Step::D => *blocks.last_mut().expect("nonnegative path starts with U") += 1,
        }
    }
    let mut lambda = Vec::with_capacity(n);
    for (k, &a) in blocks.iter().enumerate().take(n) {
        lambda.extend(std::iter::repeat_n(n - k, a));
    }
    lambda.extend(std::iter::repeat_n(0, blocks[n] - 1));
    check_partition(n, &lambda)?;
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::binom;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_paths(0).count(), 1);
        let two: Vec<String> = enumerate_paths(2).map(|p| p.to_string()).collect();
        assert_eq!(two, vec!["UU", "UD"]);
        assert_eq!(enumerate_paths(4).count(), 6);
        for n in 0..=16usize {
            assert_eq!(
                enumerate_paths(n).count() as u64,
                binom::<u64>(n as i64, n as i64 / 2).unwrap()
            );
        }
    }

    #[test]
    fn statistics() {
        let udud = p("UDUD");
        assert_eq!((udud.end_height(), udud.returns()), (0, 2));
        let uduu = p("UDUU");
        assert_eq!((uduu.end_height(), uduu.returns()), (2, 1));
        assert!("DU".parse::<LatticePath>().is_err());
        assert_eq!(count_paths::<u64>(4, 0, 2).unwrap(), 1);
        assert_eq!(count_paths::<u64>(4, 2, 1).unwrap(), 1);
        assert_eq!(count_paths::<u64>(5, 3, 0).unwrap(), 3);
        assert!((0..6).all(|j| count_paths::<u64>(5, 0, j).unwrap() == 0));
    }

    #[test]
    fn length_four_table() {
        let t = count_table(4);
        let expected: BTreeMap<(usize, usize), u64> = [
            ((0, 1), 1),
            ((0, 2), 1),
            ((2, 0), 2),
            ((2, 1), 1),
            ((4, 0), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(t, expected);
    }

    #[test]
    fn dyck_rule_examples() {
        let d = dyck_from_partition(2, &[0, 0]).unwrap();
        assert_eq!(d.to_string(), "UUUDDD");
        assert_eq!(d.returns(), 1);
        let d = dyck_from_partition(2, &[2, 1]).unwrap();
        assert_eq!(d.to_string(), "UDUDUD");
        assert_eq!(d.returns(), 3);
        let d = dyck_from_partition(2, &[2, 0]).unwrap();
        assert_eq!(d.to_string(), "UDUUDD");
        assert_eq!(d.returns(), 2);
        assert!(dyck_from_partition(2, &[3, 0]).is_err());
        assert!(dyck_from_partition(2, &[0, 1]).is_err());
    }

    #[test]
    fn dyck_inverse_examples() {
        for n in 1..=6 {
            let full: Vec<usize> = (0..n).map(|i| n - i).collect();
            let zig: LatticePath = "UD".repeat(n + 1).parse().unwrap();
            assert_eq!(partition_from_dyck(n, &zig).unwrap(), full);
            let tent: LatticePath = format!("{}{}", "U".repeat(n + 1), "D".repeat(n + 1))
                .parse()
                .unwrap();
            assert_eq!(partition_from_dyck(n, &tent).unwrap(), vec![0; n]);
        }
        assert!(partition_from_dyck(2, &p("UDUU")).is_err());
        assert!(partition_from_dyck(2, &p("UDUDUU")).is_err());
    }
}
