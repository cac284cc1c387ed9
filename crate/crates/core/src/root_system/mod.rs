//! Positive root systems of the simple Lie algebras.
//!
//! Roots are stored by their coordinates over the simple roots
//! `α_1, …, α_n` (Bourbaki numbering). The positive roots are generated by
//! closing the simple roots under the simple reflections, and every derived
//! invariant (Coxeter number, exponents, Weyl group order, connection index)
//! is computed from the generated data and cross-checked at build time.

mod cartan;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rootset::{RootSet, MAX_POSITIVE_ROOTS};

/// Cartan–Killing type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, Letter::A | Letter::B | Letter::C | Letter::D)
    }

    /// Smallest and largest admissible rank. `None` means unbounded.
    fn rank_bounds(self) -> (usize, Option<usize>, &'static str) {
        match self {
            Letter::A => (1, None, "type A requires rank >= 1"),
            Letter::B => (2, None, "type B requires rank >= 2"),
            Letter::C => (2, None, "type C requires rank >= 2"),
            Letter::D => (3, None, "type D requires rank >= 3"),
            Letter::E => (6, Some(8), "type E requires rank 6, 7 or 8"),
            Letter::F => (4, Some(4), "type F requires rank 4"),
            Letter::G => (2, Some(2), "type G requires rank 2"),
        }
    }

    /// Number of positive roots of the system of this type at `rank`.
    fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Letter::A => rank * (rank + 1) / 2,
            Letter::B | Letter::C => rank * rank,
            Letter::D => rank * (rank - 1),
            Letter::E => match rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Letter::F => 24,
            Letter::G => 6,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Letter::A),
            "B" => Ok(Letter::B),
            "C" => Ok(Letter::C),
            "D" => Ok(Letter::D),
            "E" => Ok(Letter::E),
            "F" => Ok(Letter::F),
            "G" => Ok(Letter::G),
            _ => Err(Error::UnknownLetter(s.to_string())),
        }
    }
}

/// A validated (type, rank) pair such as `D4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeRank {
    letter: Letter,
    rank: usize,
}

impl TypeRank {
    pub fn new(letter: Letter, rank: usize) -> Result<TypeRank> {
        let (lo, hi, requirement) = letter.rank_bounds();
        if rank < lo || hi.is_some_and(|hi| rank > hi) {
            return Err(Error::InvalidRank {
                letter,
                rank,
                requirement,
            });
        }
        Ok(TypeRank { letter, rank })
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every valid system of the given letters with rank ≤ `max_rank`,
    /// ordered by letter then rank.
    pub fn all_of(letters: &[Letter], max_rank: usize) -> Vec<TypeRank> {
        let mut out = Vec::new();
        for &letter in letters {
            let (lo, hi, _) = letter.rank_bounds();
            let top = hi.map_or(max_rank, |hi| hi.min(max_rank));
            for rank in lo..=top {
                out.push(TypeRank { letter, rank });
            }
        }
        out
    }

    pub fn all_up_to(max_rank: usize) -> Vec<TypeRank> {
        Self::all_of(&Letter::ALL, max_rank)
    }
}

impl fmt::Display for TypeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for TypeRank {
    type Err = Error;

    /// Parses `"D4"`, `"d4"` or `"D_4"`.
    fn from_str(s: &str) -> Result<TypeRank> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter: Letter = chars
            .next()
            .ok_or_else(|| Error::UnknownLetter(String::new()))?
            .to_string()
            .parse()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse::<usize>().map_err(|_| Error::OutOfRange {
            what: "rank",
            value: -1,
            range: format!("a positive integer (got {rest:?})"),
        })?;
        TypeRank::new(letter, rank)
    }
}

/// A positive root, as coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<u32>,
}

impl Root {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn height(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    /// `[c1,c2,...]`, the form accepted back by the CLI.
    pub fn vector_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Root {
    /// `α1 + 2α2 + α3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "α{}", i + 1)?;
        }
        Ok(())
    }
}

/// The positive roots of a simple Lie algebra together with the root-poset
/// tables used by the ideal enumerator. Immutable after [`RootSystem::build`].
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: TypeRank,
    roots: Vec<Root>,
    simple_indices: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    theta_index: usize,
    marks: Vec<u32>,
    exponents: Vec<u32>,
    coxeter_number: u32,
    weyl_order: BigUint,
    connection_index: u32,
    lookup: HashMap<Vec<u32>, usize>,
    /// `covers[a]` = roots of the form `a + α_i`.
    covers: Vec<RootSet>,
    /// `up_sets[a]` = roots `b` with `a ≤ b`.
    up_sets: Vec<RootSet>,
    /// `sums[a]` = pairs `(b, c)` with `root(a) + root(b) = root(c)`.
    sums: Vec<Vec<(usize, usize)>>,
}

/// The numerical invariants of a root system, with both computations of the
/// connection index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantsReport {
    pub spec: TypeRank,
    pub positive_roots: usize,
    pub coxeter_number: u32,
    pub exponents: Vec<u32>,
    pub weyl_order: BigUint,
    pub connection_index_det: i64,
    pub connection_index_marks: u32,
    pub marks: Vec<u32>,
}

impl RootSystem {
    pub fn build(spec: TypeRank) -> Result<RootSystem> {
        let n = spec.rank();
        let expected = spec.letter().positive_root_count(n);
        if expected > MAX_POSITIVE_ROOTS {
            return Err(Error::CapacityExceeded {
                letter: spec.letter(),
                rank: n,
                roots: expected,
                capacity: MAX_POSITIVE_ROOTS,
            });
        }
        let cartan = cartan::cartan_matrix(spec);
        let mut roots = reflection_closure(&cartan);
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));

        let lookup: HashMap<Vec<u32>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        let simple_indices: Vec<usize> = (0..n)
            .map(|i| {
                let mut v = vec![0u32; n];
                v[i] = 1;
                lookup[&v]
            })
            .collect();

        let max_height = roots.last().map_or(0, Root::height);
        let theta_index = roots.len() - 1;
        let marks = roots[theta_index].coeffs.clone();

        // #roots of each height 1..=max_height; exponent k occurs
        // (m_k - m_{k+1}) times.
        let mut by_height = vec![0usize; max_height as usize + 2];
        for r in &roots {
            by_height[r.height() as usize] += 1;
        }
        let mut exponents = Vec::with_capacity(n);
        for k in 1..=max_height as usize {
            let mult = by_height[k].checked_sub(by_height[k + 1]).ok_or_else(|| {
                Error::InvariantViolation {
                    system: spec.to_string(),
                    detail: format!("height distribution increases at height {k}"),
                }
            })?;
            exponents.extend(std::iter::repeat_n(k as u32, mult));
        }
        let weyl_order = exponents
            .iter()
            .map(|&e| BigUint::from(e + 1))
            .product::<BigUint>();
        let connection_index = 1 + marks.iter().filter(|&&a| a == 1).count() as u32;

        let mut covers = vec![RootSet::EMPTY; roots.len()];
        let mut sums = vec![Vec::new(); roots.len()];
        for (a, ra) in roots.iter().enumerate() {
            for i in 0..n {
                let mut v = ra.coeffs.clone();
                v[i] += 1;
                if let Some(&c) = lookup.get(&v) {
                    covers[a].insert(c);
                }
            }
            for (b, rb) in roots.iter().enumerate() {
                let v: Vec<u32> = ra
                    .coeffs
                    .iter()
                    .zip(&rb.coeffs)
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(&c) = lookup.get(&v) {
                    sums[a].push((b, c));
                }
            }
        }
        let up_sets = roots
            .iter()
            .map(|ra| {
                roots
                    .iter()
                    .enumerate()
                    .filter(|(_, rb)| dominated(ra, rb))
                    .map(|(b, _)| b)
                    .collect()
            })
            .collect();

        let rs = RootSystem {
            spec,
            roots,
            simple_indices,
            cartan,
            theta_index,
            marks,
            exponents,
            coxeter_number: max_height + 1,
            weyl_order,
            connection_index,
            lookup,
            covers,
            up_sets,
            sums,
        };
        rs.invariants_report()?;
        Ok(rs)
    }

    pub fn spec(&self) -> TypeRank {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Root index of `α_j` for `j` in `0..rank` (zero-based).
    pub fn simple_index(&self, j: usize) -> usize {
        self.simple_indices[j]
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    pub fn simple_set(&self) -> RootSet {
        self.simple_indices.iter().copied().collect()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn theta_index(&self) -> usize {
        self.theta_index
    }

    /// The highest root and its coefficients `a_1, …, a_n`.
    pub fn highest_root(&self) -> (&Root, &[u32]) {
        (&self.roots[self.theta_index], &self.marks)
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    pub fn connection_index(&self) -> u32 {
        self.connection_index
    }

    pub fn all(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    /// Root-poset order: `b - a` has nonnegative simple coordinates.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up_sets[a].contains(b)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        if v.len() != self.rank() || v.iter().any(|&c| c < 0 || c > u32::MAX as i64) {
            return None;
        }
        let key: Vec<u32> = v.iter().map(|&c| c as u32).collect();
        self.lookup.get(&key).copied()
    }

    /// Roots obtained from `a` by adding one simple root.
    pub fn covers(&self, a: usize) -> RootSet {
        self.covers[a]
    }

    /// All roots `≥ a`.
    pub fn up_set(&self, a: usize) -> RootSet {
        self.up_sets[a]
    }

    /// `(b, c)` with `a + b = c`, all three positive roots.
    pub fn sums_with(&self, a: usize) -> &[(usize, usize)] {
        &self.sums[a]
    }

    /// The invariants, validated against each other. Any disagreement is an
    /// [`Error::InvariantViolation`].
    pub fn invariants_report(&self) -> Result<InvariantsReport> {
        let fail = |detail: String| Error::InvariantViolation {
            system: self.spec.to_string(),
            detail,
        };
        let n = self.rank();
        let h = self.coxeter_number as usize;
        if self.roots.len() * 2 != n * h {
            return Err(fail(format!(
                "|positive roots| = {} but rank * h / 2 = {}",
                self.roots.len(),
                n * h / 2
            )));
        }
        if self.roots.len() != self.spec.letter().positive_root_count(n) {
            return Err(fail(format!(
                "generated {} positive roots, expected {}",
                self.roots.len(),
                self.spec.letter().positive_root_count(n)
            )));
        }
        if self.exponents.len() != n {
            return Err(fail(format!(
                "{} exponents for rank {n}",
                self.exponents.len()
            )));
        }
        if (0..self.roots.len()).any(|a| !self.leq(a, self.theta_index)) {
            return Err(fail("highest root is not the unique maximum".into()));
        }
        let product: BigUint = self
            .exponents
            .iter()
            .map(|&e| BigUint::from(e + 1))
            .product();
        if product != self.weyl_order {
            return Err(fail("|W| differs from the product of (e_i + 1)".into()));
        }
        let det = cartan::determinant(&self.cartan);
        if det != self.connection_index as i64 {
            return Err(fail(format!(
                "det(Cartan) = {det} but 1 + #{{a_i = 1}} = {}",
                self.connection_index
            )));
        }
        Ok(InvariantsReport {
            spec: self.spec,
            positive_roots: self.roots.len(),
            coxeter_number: self.coxeter_number,
            exponents: self.exponents.clone(),
            weyl_order: self.weyl_order.clone(),
            connection_index_det: det,
            connection_index_marks: self.connection_index,
            marks: self.marks.clone(),
        })
    }
}

fn dominated(a: &Root, b: &Root) -> bool {
    a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x <= y)
}

/// Close the simple roots under simple reflections, keeping only vectors
/// with nonnegative coordinates.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        })
        .collect();
    for v in &queue {
        seen.insert(v.clone(), ());
    }
    while let Some(v) = queue.pop() {
        for (i, row) in cartan.iter().enumerate() {
            let pairing: i64 = v.iter().zip(row).map(|(c, a)| c * a).sum();
            if pairing == 0 {
                continue;
            }
            let mut w = v.clone();
            w[i] -= pairing;
            if w.iter().all(|&c| c >= 0) && !seen.contains_key(&w) {
                seen.insert(w.clone(), ());
                queue.push(w);
            }
        }
    }
    seen.into_keys()
        .map(|v| Root {
            coeffs: v.into_iter().map(|c| c as u32).collect(),
        })
        .collect()
}
