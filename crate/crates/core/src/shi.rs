//! Staircase and shifted-staircase diagrams for the classical types.
//!
//! Each positive root labels exactly one box. A subdiagram is a set of boxes
//! closed under moving left and up, stored as the number `λ_i` of leftmost
//! boxes taken in each row. In types A, B, C the labels of a subdiagram form
//! an ideal and every ideal arises once. In type D the two middle columns
//! `n-1` and `n` carry incomparable labels, so an ideal may instead come
//! from a subdiagram read with those two columns exchanged; subdiagrams
//! whose middle columns have equal length give the same ideal either way.
//!
//! Row `i` (1-based) of the diagram reads, left to right:
//!
//! | type | columns            | label                |
//! |------|--------------------|----------------------|
//! | A_n  | `1 ..= n+1-i`      | `α_i + … + α_{n+1-c}` |
//! | B_n  | `i ..= n-1`        | `e_i + e_{c+1}`       |
//! |      | `n`                | `e_i`                 |
//! |      | `n+1 ..= 2n-i`     | `e_i - e_{2n+1-c}`    |
//! | C_n  | `i ..= n`          | `e_i + e_c`           |
//! |      | `n+1 ..= 2n-i`     | `e_i - e_{2n+1-c}`    |
//! | D_n  | `i ..= n-1`        | `e_i + e_{c+1}`       |
//! |      | `n ..= 2n-1-i`     | `e_i - e_{2n-c}`      |
//!
//! with the usual orthonormal `e`-coordinates converted to simple-root
//! coordinates.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::num::ExactInt;
use crate::root_system::{Letter, RootSystem, TypeRank};
use crate::rootset::RootSet;
use crate::stats::{Method, StatsTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeRow {
    /// First occupied column, 1-based.
    pub start: usize,
    /// Root indices, one per box, left to right.
    pub labels: Vec<usize>,
}

impl ShapeRow {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A labelled (shifted) staircase diagram.
#[derive(Debug, Clone)]
pub struct Shape<'a> {
    rs: &'a RootSystem,
    rows: Vec<ShapeRow>,
}

/// Left-up-closed box set, as row prefix lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubDiagram {
    prefix: Vec<usize>,
}

impl SubDiagram {
    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }
}

/// Simple-coordinate vector builder for one rank.
struct Coords(usize);

impl Coords {
    fn zero(&self) -> Vec<i64> {
        vec![0; self.0]
    }

    /// `α_lo + … + α_hi` (1-based, empty when `hi < lo`) added `k` times.
    fn add_span(v: &mut [i64], lo: usize, hi: usize, k: i64) {
        for c in v.iter_mut().take(hi).skip(lo.saturating_sub(1)) {
            *c += k;
        }
    }

    fn span(&self, lo: usize, hi: usize) -> Vec<i64> {
        let mut v = self.zero();
        Self::add_span(&mut v, lo, hi, 1);
        v
    }

    /// `e_i - e_j`, `i < j ≤ n`: `α_i + … + α_{j-1}`.
    fn minus(&self, i: usize, j: usize) -> Vec<i64> {
        self.span(i, j - 1)
    }
}

fn labels_for(spec: TypeRank) -> Result<Vec<(usize, Vec<Vec<i64>>)>> {
    let n = spec.rank();
    let co = Coords(n);
    let mut rows = Vec::new();
    match spec.letter() {
        Letter::A => {
            for i in 1..=n {
                let labels = (1..=n + 1 - i).map(|c| co.span(i, n + 1 - c)).collect();
                rows.push((1, labels));
            }
        }
        Letter::B => {
            // e_i = α_i + … + α_n; e_i + e_j = α_i..α_{j-1} + 2(α_j..α_n)
            let plus = |i: usize, j: usize| {
                let mut v = co.span(i, j - 1);
                Coords::add_span(&mut v, j, n, 2);
                v
            };
            for i in 1..=n {
                let mut labels = Vec::new();
                for c in i..n {
                    labels.push(plus(i, c + 1));
                }
                labels.push(co.span(i, n));
                for c in n + 1..=2 * n - i {
                    labels.push(co.minus(i, 2 * n + 1 - c));
                }
                rows.push((i, labels));
            }
        }
        Letter::C => {
            // e_i + e_j = α_i..α_{j-1} + 2(α_j..α_{n-1}) + α_n, including i = j
            let plus = |i: usize, j: usize| {
                let mut v = co.span(i, j - 1);
                Coords::add_span(&mut v, j, n - 1, 2);
                v[n - 1] += 1;
                v
            };
            for i in 1..=n {
                let mut labels = Vec::new();
                for c in i..=n {
                    labels.push(plus(i, c));
                }
                for c in n + 1..=2 * n - i {
                    labels.push(co.minus(i, 2 * n + 1 - c));
                }
                rows.push((i, labels));
            }
        }
        Letter::D => {
            // e_i + e_n = α_i..α_{n-2} + α_n;
            // e_i + e_j = α_i..α_{j-1} + 2(α_j..α_{n-2}) + α_{n-1} + α_n
            let plus = |i: usize, j: usize| {
                let mut v = co.span(i, j.min(n - 1) - 1);
                if j == n {
                    v[n - 1] += 1;
                } else {
                    Coords::add_span(&mut v, j, n - 2, 2);
                    v[n - 2] += 1;
                    v[n - 1] += 1;
                }
                v
            };
            for i in 1..n {
                let mut labels = Vec::new();
                for c in i..n {
                    labels.push(plus(i, c + 1));
                }
                for c in n..=2 * n - 1 - i {
                    labels.push(co.minus(i, 2 * n - c));
                }
                rows.push((i, labels));
            }
        }
        letter => {
            return Err(Error::Unsupported {
                letter,
                operation: "staircase diagram",
            })
        }
    }
    Ok(rows)
}

impl<'a> Shape<'a> {
    /// Builds and validates the labelled diagram of `rs`. Fails for the
    /// exceptional types, and with [`Error::InvariantViolation`] if the
    /// labelling is not a bijection onto the positive roots with the
    /// required order pattern.
    pub fn new(rs: &'a RootSystem) -> Result<Shape<'a>> {
        let spec = rs.spec();
        let raw = labels_for(spec)?;
        let fail = |detail: String| Error::InvariantViolation {
            system: spec.to_string(),
            detail: format!("diagram: {detail}"),
        };
        let mut rows = Vec::with_capacity(raw.len());
        for (i, (start, vecs)) in raw.into_iter().enumerate() {
            let labels = vecs
                .iter()
                .map(|v| {
                    rs.index_of(v)
                        .ok_or_else(|| fail(format!("row {} label {v:?} is not a root", i + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(ShapeRow { start, labels });
        }
        let shape = Shape { rs, rows };
        shape.validate().map_err(fail)?;
        Ok(shape)
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let rs = self.rs;
        let n = rs.rank();
        let is_d = self.letter() == Letter::D;
        let mut seen = RootSet::EMPTY;
        for (i, row) in self.rows.iter().enumerate() {
            for &l in &row.labels {
                if seen.contains(l) {
                    return Err(format!("{} appears twice", rs.root(l)));
                }
                seen.insert(l);
            }
            for (k, w) in row.labels.windows(2).enumerate() {
                let col = row.start + k;
                let middle = is_d && col == n - 1;
                let ordered = rs.leq(w[1], w[0]);
                let comparable = ordered || rs.leq(w[0], w[1]);
                if middle && comparable {
                    return Err(format!("row {}: middle columns comparable", i + 1));
                }
                if !middle && !ordered {
                    return Err(format!("row {} not decreasing at column {col}", i + 1));
                }
            }
            if i > 0 {
                for c in row.start..row.start + row.len() {
                    match (self.label(i - 1, c), self.label(i, c)) {
                        (Some(up), Some(down)) if rs.leq(down, up) => {}
                        (Some(_), Some(_)) => {
                            return Err(format!("column {c} not decreasing at row {}", i + 1))
                        }
                        _ => return Err(format!("row {} overhangs row {i}", i + 1)),
                    }
                }
            }
        }
        if seen != rs.all() {
            return Err("labels do not cover every positive root".into());
        }
        for (j, &simple) in rs.simple_indices().iter().enumerate() {
            if self.simple_position(j) != self.position_of(simple) {
                return Err(format!("α{} is not at its expected position", j + 1));
            }
        }
        Ok(())
    }

    /// Where `α_{j+1}` must sit: the right end of row `j+1` in types A, B,
    /// C; in type D rows `1..=n-2` end in `α_i` and the last row holds
    /// `α_n, α_{n-1}`.
    fn simple_position(&self, j: usize) -> Option<(usize, usize)> {
        let n = self.rs.rank();
        if self.letter() == Letter::D && j >= n - 2 {
            let last = n - 2;
            let col = if j == n - 1 { n - 1 } else { n };
            return Some((last, col));
        }
        let row = &self.rows[j];
        Some((j, row.start + row.len() - 1))
    }

    fn position_of(&self, root: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.labels
                .iter()
                .position(|&l| l == root)
                .map(|k| (i, row.start + k))
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn letter(&self) -> Letter {
        self.rs.spec().letter()
    }

    pub fn rows(&self) -> &[ShapeRow] {
        &self.rows
    }

    /// Label at zero-based `row` and 1-based `column`.
    pub fn label(&self, row: usize, column: usize) -> Option<usize> {
        let r = self.rows.get(row)?;
        column
            .checked_sub(r.start)
            .and_then(|k| r.labels.get(k))
            .copied()
    }

    fn shifted(&self) -> bool {
        self.letter() != Letter::A
    }

    fn check(&self, s: &SubDiagram) -> Result<()> {
        if s.prefix.len() != self.rows.len() {
            return Err(Error::OutOfRange {
                what: "subdiagram rows",
                value: s.prefix.len() as i64,
                range: format!("exactly {}", self.rows.len()),
            });
        }
        for (i, (&l, row)) in s.prefix.iter().zip(&self.rows).enumerate() {
            if l > row.len() {
                return Err(Error::OutOfRange {
                    what: "row prefix",
                    value: l as i64,
                    range: format!("0..={} in row {}", row.len(), i + 1),
                });
            }
            if i > 0 && !self.closure_ok(s.prefix[i - 1], l) {
                return Err(Error::OutOfRange {
                    what: "row prefix",
                    value: l as i64,
                    range: format!("compatible with row {} length {}", i, s.prefix[i - 1]),
                });
            }
        }
        Ok(())
    }

    fn closure_ok(&self, above: usize, here: usize) -> bool {
        if self.shifted() {
            here == 0 || above > here
        } else {
            above >= here
        }
    }

    pub fn subdiagram(&self, prefix: Vec<usize>) -> Result<SubDiagram> {
        let s = SubDiagram { prefix };
        self.check(&s)?;
        Ok(s)
    }

    /// Every subdiagram, in lexicographic order of the prefix vector.
    pub fn enumerate_subdiagrams(&self) -> Vec<SubDiagram> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.rows.len());
        self.extend(&mut prefix, &mut out);
        out
    }

    fn extend(&self, prefix: &mut Vec<usize>, out: &mut Vec<SubDiagram>) {
        let i = prefix.len();
        if i == self.rows.len() {
            out.push(SubDiagram {
                prefix: prefix.clone(),
            });
            return;
        }
        for l in 0..=self.rows[i].len() {
            if i > 0 && !self.closure_ok(prefix[i - 1], l) {
                continue;
            }
            prefix.push(l);
            self.extend(prefix, out);
            prefix.pop();
        }
    }

    /// 1-based column actually read when the middle columns are exchanged.
    fn read_column(&self, column: usize, swapped: bool) -> usize {
        let n = self.rs.rank();
        match (swapped, column) {
            (true, c) if c == n - 1 => n,
            (true, c) if c == n => n - 1,
            (_, c) => c,
        }
    }

    fn selected_labels(&self, s: &SubDiagram, swapped: bool) -> RootSet {
        let mut out = RootSet::EMPTY;
        for (i, (&l, row)) in s.prefix.iter().zip(&self.rows).enumerate() {
            for c in row.start..row.start + l {
                let label = self
                    .label(i, self.read_column(c, swapped))
                    .expect("middle columns are present in every type-D row");
                out.insert(label);
            }
        }
        out
    }

    /// The ideal spanned by the labels of the selected boxes. With
    /// `swapped`, columns `n-1` and `n` are exchanged first (type D only).
    pub fn rootset(&self, s: &SubDiagram, swapped: bool) -> Result<Ideal<'a>> {
        if swapped && self.letter() != Letter::D {
            return Err(Error::Unsupported {
                letter: self.letter(),
                operation: "swapped reading",
            });
        }
        self.check(s)?;
        Ideal::new(self.rs, self.selected_labels(s, swapped))
    }

    fn column_length(&self, s: &SubDiagram, column: usize) -> usize {
        s.prefix
            .iter()
            .zip(&self.rows)
            .filter(|(&l, row)| row.start <= column && column < row.start + l)
            .count()
    }

    /// Whether the selected boxes in columns `n-1` and `n` have the same
    /// count. Type D only.
    pub fn equal_middle_columns(&self, s: &SubDiagram) -> Result<bool> {
        if self.letter() != Letter::D {
            return Err(Error::Unsupported {
                letter: self.letter(),
                operation: "equal_middle_columns",
            });
        }
        self.check(s)?;
        let n = self.rs.rank();
        Ok(self.column_length(s, n - 1) == self.column_length(s, n))
    }

    /// Number of simple roots in `rootset(s, _)`, read off the prefix: full
    /// rows contribute their terminal simple root, and in type D the last
    /// row contributes one per selected box. The same for both readings.
    pub fn simple_count_from_prefix(&self, s: &SubDiagram) -> usize {
        let full = |(l, row): (&usize, &ShapeRow)| *l == row.len();
        if self.letter() == Letter::D {
            let last = s.prefix.len() - 1;
            let upper = s.prefix[..last]
                .iter()
                .zip(&self.rows)
                .filter(|&p| full(p))
                .count();
            upper + s.prefix[last]
        } else {
            s.prefix.iter().zip(&self.rows).filter(|&p| full(p)).count()
        }
    }

    /// The subdiagram producing `ideal`, preferring the unswapped reading.
    pub fn subdiagram_of(&self, ideal: &Ideal<'_>) -> Result<(SubDiagram, bool)> {
        let readings: &[bool] = if self.letter() == Letter::D {
            &[false, true]
        } else {
            &[false]
        };
        for &swapped in readings {
            let prefix: Vec<usize> = self
                .rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    (row.start..row.start + row.len())
                        .take_while(|&c| {
                            let l = self.label(i, self.read_column(c, swapped)).unwrap();
                            ideal.contains(l)
                        })
                        .count()
                })
                .collect();
            let s = SubDiagram { prefix };
            if self.check(&s).is_ok() && self.selected_labels(&s, swapped) == ideal.members() {
                return Ok((s, swapped));
            }
        }
        Err(Error::NotUpwardClosed(format!(
            "no subdiagram of {} reads as {ideal:?}",
            self.rs.spec()
        )))
    }
}

/// Type-D bookkeeping behind `|I(D_n)| = 2|S| - |equal-column subdiagrams|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDParts<T> {
    pub unswapped: StatsTable<T>,
    pub swapped: StatsTable<T>,
    pub equal_columns: StatsTable<T>,
    pub subdiagrams: usize,
    pub equal_column_subdiagrams: usize,
    /// Ideals produced by both readings.
    pub overlap: usize,
    /// Distinct ideals over both readings.
    pub distinct_ideals: usize,
    /// Subdiagrams whose unswapped reading contains `α_n`.
    pub containing_alpha_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramStats<T> {
    /// `P_X(j)` as counted through diagrams.
    pub combined: StatsTable<T>,
    pub type_d: Option<TypeDParts<T>>,
}

/// Per-`j` counts of ideals via subdiagrams. Every rootset is validated as
/// an ideal and its simple-root count is checked against the prefix rule.
pub fn diagram_stats<T: ExactInt>(rs: &RootSystem) -> Result<DiagramStats<T>> {
    let shape = Shape::new(rs)?;
    let spec = rs.spec();
    let n = spec.rank();
    let subs = shape.enumerate_subdiagrams();

    let tally = |swapped: bool, only_equal: bool| -> Result<(Vec<u64>, HashSet<RootSet>)> {
        let mut counts = vec![0u64; n + 1];
        let mut seen = HashSet::new();
        for s in &subs {
            if only_equal && !shape.equal_middle_columns(s)? {
                continue;
            }
            let ideal = shape.rootset(s, swapped)?;
            let j = ideal.simple_count();
            if j != shape.simple_count_from_prefix(s) {
                return Err(Error::InvariantViolation {
                    system: spec.to_string(),
                    detail: format!("simple count of {:?} disagrees with its prefix", s.prefix),
                });
            }
            counts[j] += 1;
            seen.insert(ideal.members());
        }
        Ok((counts, seen))
    };

    if spec.letter() != Letter::D {
        let (counts, _) = tally(false, false)?;
        return Ok(DiagramStats {
            combined: StatsTable::from_u64s(spec, Method::Diagrams, &counts)?,
            type_d: None,
        });
    }

    let (unswapped, u_set) = tally(false, false)?;
    let (swapped, s_set) = tally(true, false)?;
    let (equal, _) = tally(false, true)?;
    let combined: Vec<u64> = unswapped
        .iter()
        .zip(&equal)
        .map(|(&u, &e)| 2 * u - e)
        .collect();
    let alpha_n = rs.simple_index(n - 1);
    let containing_alpha_n = subs
        .iter()
        .filter(|s| shape.selected_labels(s, false).contains(alpha_n))
        .count();
    let parts = TypeDParts {
        unswapped: StatsTable::from_u64s(spec, Method::DiagramsUnswapped, &unswapped)?,
        swapped: StatsTable::from_u64s(spec, Method::DiagramsSwapped, &swapped)?,
        equal_columns: StatsTable::from_u64s(spec, Method::DiagramsEqualColumns, &equal)?,
        subdiagrams: subs.len(),
        equal_column_subdiagrams: equal.iter().sum::<u64>() as usize,
        overlap: u_set.intersection(&s_set).count(),
        distinct_ideals: u_set.union(&s_set).count(),
        containing_alpha_n,
    };
    Ok(DiagramStats {
        combined: StatsTable::from_u64s(spec, Method::Diagrams, &combined)?,
        type_d: Some(parts),
    })
}
