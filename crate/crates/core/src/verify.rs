//! Cross-verification of enumerations, diagram and path encodings, and
//! closed forms.
//!
//! Closed forms are reached through a [`FormulaBook`] so a deliberately
//! corrupted book ([`Mutant`]) can be substituted; a sound verifier must
//! notice every such corruption.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::closed_forms::{self as cf, FormulaId, FormulaValue};
use crate::error::{Error, Result};
use crate::ideal::{self, Ideal};
use crate::num::binom;
use crate::paths;
use crate::root_system::{Letter, RootSystem, TypeRank};
use crate::shi::{self, Shape};
use crate::stats::{Method, StatsTable};
use crate::{Count, Table};

/// Source of closed-form values.
pub trait FormulaBook: Sync {
    fn p_a(&self, n: i64, j: i64) -> Result<FormulaValue<Count>>;
    fn p_bc(&self, n: i64, j: i64) -> Result<FormulaValue<Count>>;
    fn p_d(&self, n: i64, j: i64) -> Result<FormulaValue<Count>>;
    fn p_ab(&self, rs: &RootSystem, j: i64) -> Result<FormulaValue<Count>>;
    fn p_zero(&self, rs: &RootSystem) -> Result<FormulaValue<Count>>;
    fn total_ideals(&self, rs: &RootSystem) -> Result<FormulaValue<Count>>;
    fn b_closed(&self, n: i64, h: i64, j: i64) -> Result<FormulaValue<Count>>;
    fn d_sd_degree(&self, n: i64, j: i64) -> Result<FormulaValue<Count>>;
    fn d_eq_degree(&self, n: i64, j: i64) -> Result<FormulaValue<Count>>;

    /// `P_X(j)` for a classical type, or `Unsupported` for E, F, G.
    fn p_x(&self, spec: TypeRank, j: i64) -> Result<FormulaValue<Count>> {
        let n = spec.rank() as i64;
        match spec.letter() {
            Letter::A => self.p_a(n, j),
            Letter::B | Letter::C => self.p_bc(n, j),
            Letter::D => self.p_d(n, j),
            letter => Err(Error::Unsupported {
                letter,
                operation: "closed form for P_X(j)",
            }),
        }
    }
}

fn tag(provenance: FormulaId) -> impl Fn(Count) -> FormulaValue<Count> {
    move |value| FormulaValue { value, provenance }
}

/// The formulas as stated.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exact;

impl FormulaBook for Exact {
    fn p_a(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        cf::p_a(n, j).map(tag(FormulaId::PA))
    }
    fn p_bc(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        cf::p_bc(n, j).map(tag(FormulaId::PBC))
    }
    fn p_d(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        let id = if j == 0 {
            FormulaId::PD0
        } else {
            FormulaId::PD
        };
        cf::p_d(n, j).map(tag(id))
    }
    fn p_ab(&self, rs: &RootSystem, j: i64) -> Result<FormulaValue<Count>> {
        cf::p_ab(rs, j).map(tag(FormulaId::PAb))
    }
    fn p_zero(&self, rs: &RootSystem) -> Result<FormulaValue<Count>> {
        cf::p_zero(rs).map(tag(FormulaId::PZero))
    }
    fn total_ideals(&self, rs: &RootSystem) -> Result<FormulaValue<Count>> {
        cf::total_ideals(rs).map(tag(FormulaId::Total))
    }
    fn b_closed(&self, n: i64, h: i64, j: i64) -> Result<FormulaValue<Count>> {
        cf::b_closed(n, h, j).map(tag(FormulaId::Ballot))
    }
    fn d_sd_degree(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        cf::d_sd_degree(n, j).map(tag(FormulaId::DUnswapped))
    }
    fn d_eq_degree(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        cf::d_eq_degree(n, j).map(tag(FormulaId::DEqual))
    }
}

/// [`Exact`] with one formula corrupted by shifting a single binomial index
/// (or additive constant) by one. Used to check that verification fails.
#[derive(Debug, Clone, Copy)]
pub struct Mutant(pub FormulaId);

impl Mutant {
    fn hit(&self, id: FormulaId) -> bool {
        self.0 == id
    }
}

fn b(a: i64, k: i64) -> Result<Count> {
    binom(a, k)
}

impl FormulaBook for Mutant {
    fn p_a(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::PA) {
            return Exact.p_a(n, j);
        }
        let v = b(2 * n - j, n + 1)? * Count::from((j + 1) as u64);
        let q = &v / Count::from((n + 1) as u64);
        Ok(tag(FormulaId::PA)(q))
    }
    fn p_bc(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::PBC) {
            return Exact.p_bc(n, j);
        }
        b(2 * n - j, n - 1).map(tag(FormulaId::PBC))
    }
    fn p_d(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        match j {
            0 if self.hit(FormulaId::PD0) => Ok(tag(FormulaId::PD0)(
                b(2 * n - 2, n - 2)? + b(2 * n - 3, n - 2)?,
            )),
            1.. if self.hit(FormulaId::PD) => Ok(tag(FormulaId::PD)(
                b(2 * n - 1 - j, n - 2)? + b(2 * n - 3 - j, n - 2)?,
            )),
            _ => Exact.p_d(n, j),
        }
    }
    fn p_ab(&self, rs: &RootSystem, j: i64) -> Result<FormulaValue<Count>> {
        let exact = Exact.p_ab(rs, j)?;
        if self.hit(FormulaId::PAb) && j == 0 {
            return Ok(tag(FormulaId::PAb)(exact.value + Count::one()));
        }
        Ok(exact)
    }
    fn p_zero(&self, rs: &RootSystem) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::PZero) {
            return Exact.p_zero(rs);
        }
        let h = rs.coxeter_number() as u64;
        let num: Count = rs
            .exponents()
            .iter()
            .map(|&e| Count::from(h + e as u64))
            .product();
        Ok(tag(FormulaId::PZero)(num / rs.weyl_order()))
    }
    fn total_ideals(&self, rs: &RootSystem) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::Total) {
            return Exact.total_ideals(rs);
        }
        let h = rs.coxeter_number() as u64;
        let num: Count = rs
            .exponents()
            .iter()
            .map(|&e| Count::from(e as u64 + h + 2))
            .product();
        Ok(tag(FormulaId::Total)(num / rs.weyl_order()))
    }
    fn b_closed(&self, n: i64, h: i64, j: i64) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::Ballot) || n < 0 || h < 0 || j < 0 || (n + h) % 2 != 0 {
            return Exact.b_closed(n, h, j);
        }
        let k = (n + h) / 2;
        let (x, y) = (b(n - j, k - 1)?, b(n - j, k)?);
        if y > x {
            return Err(Error::Negative {
                formula: "b_closed",
            });
        }
        Ok(tag(FormulaId::Ballot)(x - y))
    }
    fn d_sd_degree(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::DUnswapped) {
            return Exact.d_sd_degree(n, j);
        }
        let pos = b(2 * n - j - 2, n)? + b(2 * n - j, n - 1)?;
        let neg = b(2 * n - j - 1, n)?;
        if neg > pos {
            return Err(Error::Negative {
                formula: "d_sd_degree",
            });
        }
        Ok(tag(FormulaId::DUnswapped)(pos - neg))
    }
    fn d_eq_degree(&self, n: i64, j: i64) -> Result<FormulaValue<Count>> {
        if !self.hit(FormulaId::DEqual) {
            return Exact.d_eq_degree(n, j);
        }
        let a = |k: i64| -> Result<Count> {
            if (0..=n - 2).contains(&k) {
                cf::p_a(n - 2, k)
            } else {
                Ok(Count::zero())
            }
        };
        let pos = cf::p_bc::<Count>(n - 1, j).unwrap_or_default() + a(j - 3)?;
        let neg = a(j - 1)?;
        if neg > pos {
            return Err(Error::Negative {
                formula: "d_eq_degree",
            });
        }
        Ok(tag(FormulaId::DEqual)(pos - neg))
    }
}

/// One exact comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub system: Option<TypeRank>,
    pub j: Option<i64>,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "MISMATCH" };
        write!(f, "[{status}] {}", self.name)?;
        if let Some(s) = self.system {
            write!(f, " type={} rank={}", s.letter(), s.rank())?;
        }
        if let Some(j) = self.j {
            write!(f, " j={j}")?;
        }
        write!(f, " lhs={} rhs={}", self.lhs, self.rhs)
    }
}

/// One `(type, rank, j, count, method)` output row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub spec: TypeRank,
    pub j: usize,
    pub count: Count,
    pub method: Method,
}

pub fn table_rows(t: &Table) -> Vec<Row> {
    t.counts
        .iter()
        .enumerate()
        .map(|(j, c)| Row {
            spec: t.spec,
            j,
            count: c.clone(),
            method: t.method,
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub letters: Vec<Letter>,
    pub max_rank: usize,
    /// Also compare the antichain criterion with the central series on
    /// every ideal.
    pub deep: bool,
    /// Ballot formula checked against brute force for lengths up to this.
    pub max_path_length: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            letters: Letter::ALL.to_vec(),
            max_rank: 8,
            deep: false,
            max_path_length: 14,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    pub rows: Vec<Row>,
    pub methods: Vec<Method>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn note_method(&mut self, m: Method) {
        if !self.methods.contains(&m) {
            self.methods.push(m);
        }
    }
}

struct Recorder<'r> {
    report: &'r mut VerifyReport,
    system: Option<TypeRank>,
}

impl Recorder<'_> {
    fn eq<A: fmt::Display + PartialEq>(
        &mut self,
        name: &'static str,
        j: Option<i64>,
        lhs: A,
        rhs: A,
    ) {
        let passed = lhs == rhs;
        self.report.checks.push(CheckOutcome {
            name,
            system: self.system,
            j,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            passed,
        });
    }

    /// `lhs` against a formula that may fail to evaluate; failure to
    /// evaluate is a mismatch.
    fn formula(
        &mut self,
        name: &'static str,
        j: Option<i64>,
        lhs: &Count,
        rhs: Result<FormulaValue<Count>>,
    ) {
        match rhs {
            Ok(v) => self.eq(name, j, lhs.clone(), v.value),
            Err(e) => self.report.checks.push(CheckOutcome {
                name,
                system: self.system,
                j,
                lhs: lhs.to_string(),
                rhs: format!("error: {e}"),
                passed: false,
            }),
        }
    }
}

/// Runs every check applicable to the selected systems plus the lattice-path
/// checks. Errors only on internal failures (invalid root data, an
/// ill-formed diagram); formula disagreements are recorded as failed checks.
pub fn run(opts: &VerifyOptions, book: &dyn FormulaBook) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for spec in TypeRank::all_of(&opts.letters, opts.max_rank) {
        verify_system(spec, opts, book, &mut report)?;
    }
    let classical_max = opts
        .letters
        .iter()
        .filter(|l| l.is_classical())
        .map(|_| opts.max_rank)
        .max();
    verify_paths(opts.max_path_length, classical_max, book, &mut report);
    Ok(report)
}

fn verify_system(
    spec: TypeRank,
    opts: &VerifyOptions,
    book: &dyn FormulaBook,
    report: &mut VerifyReport,
) -> Result<()> {
    let rs = RootSystem::build(spec)?;
    let n = spec.rank();
    let ni = n as i64;
    let table: Table = ideal::stats_table(&rs)?;
    let abelian: Table = ideal::abelian_table(&rs)?;
    report.note_method(Method::Ideals);
    report.note_method(Method::AbelianIdeals);
    report.rows.extend(table_rows(&table));
    report.rows.extend(table_rows(&abelian));

    let mut rec = Recorder {
        report,
        system: Some(spec),
    };
    let inv = rs.invariants_report()?;
    rec.eq(
        "connection index: det(Cartan) = 1 + #{a_i = 1}",
        None,
        inv.connection_index_det,
        inv.connection_index_marks as i64,
    );

    let total = table.total()?;
    rec.formula(
        "total ideals = generalized Catalan number",
        None,
        &total,
        book.total_ideals(&rs),
    );
    rec.formula(
        "P_X(0) = prod(h + e_i - 1) / |W|",
        Some(0),
        &table.counts[0],
        book.p_zero(&rs),
    );
    rec.eq(
        "P_X(rank) = 1",
        Some(ni),
        table.counts[n].clone(),
        Count::one(),
    );

    if spec.letter().is_classical() {
        let mut formula_counts = Vec::with_capacity(n + 1);
        for j in 0..=ni {
            let f = book.p_x(spec, j);
            if let Ok(v) = &f {
                formula_counts.push(v.value.clone());
            }
            rec.formula(
                "P_X(j): enumeration = closed form",
                Some(j),
                &table.counts[j as usize],
                f,
            );
        }
        if formula_counts.len() == n + 1 {
            rec.report.note_method(Method::Formula);
            rec.report.rows.extend(table_rows(&StatsTable {
                spec,
                counts: formula_counts,
                method: Method::Formula,
            }));
        }
        if spec.letter() == Letter::D && n == 3 {
            for j in 0..=ni {
                rec.formula(
                    "D3 = A3 coincidence",
                    Some(j),
                    &table.counts[j as usize],
                    book.p_a(3, j),
                );
            }
        }
    }

    let abelian_total = abelian.total()?;
    rec.eq(
        "number of abelian ideals = 2^rank",
        None,
        abelian_total,
        Count::from(2u32).pow(n as u32),
    );
    for j in 0..=ni {
        rec.formula(
            "abelian ideals with j simple roots",
            Some(j),
            &abelian.counts[j as usize],
            book.p_ab(&rs, j),
        );
    }
    rec.report.rows.extend((0..=n).filter_map(|j| {
        book.p_ab(&rs, j as i64).ok().map(|v| Row {
            spec,
            j,
            count: v.value,
            method: Method::AbelianFormula,
        })
    }));
    rec.report.note_method(Method::AbelianFormula);

    let (too_many_simples, cdr_mismatches) = ideal::par_fold_ideals(
        &rs,
        || (0usize, 0usize),
        |acc, i: Ideal<'_>| {
            if i.is_abelian() && i.simple_count() > 1 {
                acc.0 += 1;
            }
            if opts.deep && i.cdr_index() != i.n_index() {
                acc.1 += 1;
            }
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    rec.eq(
        "abelian ideals contain at most one simple root",
        None,
        too_many_simples,
        0,
    );
    if opts.deep {
        rec.eq(
            "antichain criterion = central series length",
            None,
            cdr_mismatches,
            0,
        );
    }
    for j in 0..n {
        let i = Ideal::principal(&rs, j)?;
        rec.eq(
            "n(i_j) = a_j for principal ideals",
            Some(j as i64 + 1),
            i.n_index() as u32,
            rs.marks()[j],
        );
    }

    if spec.letter().is_classical() {
        verify_diagrams(&rs, book, &table, &mut rec)?;
    }
    if spec.letter() == Letter::A {
        verify_dyck(&rs, book, &mut rec)?;
    }
    Ok(())
}

fn verify_diagrams(
    rs: &RootSystem,
    book: &dyn FormulaBook,
    table: &Table,
    rec: &mut Recorder<'_>,
) -> Result<()> {
    let spec = rs.spec();
    let ni = spec.rank() as i64;
    let ds: shi::DiagramStats<Count> = shi::diagram_stats(rs)?;
    rec.report.note_method(Method::Diagrams);
    rec.report.rows.extend(table_rows(&ds.combined));
    for j in 0..=ni {
        rec.eq(
            "P_X(j): diagrams = enumeration",
            Some(j),
            ds.combined.counts[j as usize].clone(),
            table.counts[j as usize].clone(),
        );
    }
    let Some(d) = ds.type_d else {
        return Ok(());
    };
    let total = table.total()?;
    rec.formula(
        "2|S| - |equal-column subdiagrams| = total ideals",
        None,
        &Count::from(2 * d.subdiagrams - d.equal_column_subdiagrams),
        book.total_ideals(rs),
    );
    rec.eq(
        "both readings cover every ideal",
        None,
        Count::from(d.distinct_ideals),
        total,
    );
    rec.eq(
        "ideals from both readings = equal-column subdiagrams",
        None,
        d.overlap,
        d.equal_column_subdiagrams,
    );
    for j in 0..=ni {
        rec.formula(
            "unswapped subdiagrams in degree j",
            Some(j),
            &d.unswapped.counts[j as usize],
            book.d_sd_degree(ni, j),
        );
        rec.formula(
            "equal-column subdiagrams in degree j",
            Some(j),
            &d.equal_columns.counts[j as usize],
            book.d_eq_degree(ni, j),
        );
    }
    let ending_at_one = (0..=2 * ni - 1).try_fold(Count::zero(), |acc, j| {
        book.b_closed(2 * ni - 1, 1, j).map(|v| acc + v.value)
    });
    rec.formula(
        "subdiagrams containing α_n = paths ending at height 1",
        None,
        &Count::from(d.containing_alpha_n),
        ending_at_one.map(tag(FormulaId::Ballot)),
    );
    Ok(())
}

fn verify_dyck(rs: &RootSystem, book: &dyn FormulaBook, rec: &mut Recorder<'_>) -> Result<()> {
    let n = rs.rank();
    let shape = Shape::new(rs)?;
    let mut seen = HashSet::new();
    let mut bad_returns = 0usize;
    let mut bad_round_trip = 0usize;
    let mut by_returns = vec![0u64; n + 2];
    for s in shape.enumerate_subdiagrams() {
        let ideal = shape.rootset(&s, false)?;
        let path = paths::dyck_from_partition(n, s.prefix())?;
        if path.returns() != ideal.simple_count() + 1 {
            bad_returns += 1;
        }
        if paths::partition_from_dyck(n, &path)? != s.prefix() {
            bad_round_trip += 1;
        }
        by_returns[path.returns()] += 1;
        seen.insert(path);
    }
    let dyck_paths: Vec<_> = paths::enumerate_paths(2 * n + 2)
        .filter(|p| p.is_dyck())
        .collect();
    rec.eq(
        "Dyck encoding: returns - 1 = simple count",
        None,
        bad_returns,
        0,
    );
    rec.eq(
        "Dyck encoding: partition round trip",
        None,
        bad_round_trip,
        0,
    );
    rec.eq(
        "Dyck encoding: injective onto all Dyck paths",
        None,
        seen.len(),
        dyck_paths.len(),
    );
    let path_round_trip = dyck_paths
        .iter()
        .filter(|p| {
            paths::partition_from_dyck(n, p)
                .and_then(|l| paths::dyck_from_partition(n, &l))
                .map_or(true, |q| &q != *p)
        })
        .count();
    rec.eq("Dyck encoding: path round trip", None, path_round_trip, 0);
    let ni = n as i64;
    for j in 0..=ni {
        rec.formula(
            "type-A ideals by returns = ballot number",
            Some(j),
            &Count::from(by_returns[j as usize + 1]),
            book.b_closed(2 * ni + 2, 0, j + 1),
        );
    }
    Ok(())
}

fn verify_paths(
    max_len: usize,
    classical_max: Option<usize>,
    book: &dyn FormulaBook,
    report: &mut VerifyReport,
) {
    report.note_method(Method::Paths);
    let mut rec = Recorder {
        report,
        system: None,
    };
    for len in 0..=max_len {
        let brute = paths::count_table(len);
        let mut total = 0u64;
        for h in 0..=len {
            for j in 0..=len {
                let c = brute.get(&(h, j)).copied().unwrap_or(0);
                total += c;
                rec.formula(
                    "ballot formula = path enumeration",
                    Some(j as i64),
                    &Count::from(c),
                    book.b_closed(len as i64, h as i64, j as i64),
                );
            }
        }
        rec.eq(
            "nonnegative paths of length n = C(n, n/2)",
            None,
            Count::from(total),
            binom::<Count>(len as i64, len as i64 / 2).unwrap_or_default(),
        );
    }
    // Path-side identities behind the B/C and D formulas.
    let Some(top) = classical_max else { return };
    for n in 2..=top as i64 {
        for j in 0..=n {
            let sum = (0..=2 * n).try_fold(Count::zero(), |acc, h| {
                book.b_closed(2 * n, h, j).map(|v| acc + v.value)
            });
            match (sum, book.p_bc(n, j)) {
                (Ok(s), rhs) => rec.formula("sum_h B(2n, h, j) = P_B(j)", Some(j), &s, rhs),
                (Err(e), _) => rec.formula(
                    "sum_h B(2n, h, j) = P_B(j)",
                    Some(j),
                    &Count::zero(),
                    Err(e),
                ),
            }
        }
    }
    for n in 3..=top as i64 {
        for j in 0..=n {
            let lhs = (3..=2 * n - 1)
                .try_fold(Count::zero(), |acc, h| {
                    book.b_closed(2 * n - 1, h, j).map(|v| acc + v.value)
                })
                .and_then(|s| {
                    if j == 0 {
                        Ok(s)
                    } else {
                        book.b_closed(2 * n - 1, 1, j - 1).map(|v| s + v.value)
                    }
                });
            match lhs {
                Ok(l) => rec.formula(
                    "type-D path sum = C(2n-j-2, n-2)",
                    Some(j),
                    &l,
                    book.d_sd_degree(n, j),
                ),
                Err(e) => rec.formula(
                    "type-D path sum = C(2n-j-2, n-2)",
                    Some(j),
                    &Count::zero(),
                    Err(e),
                ),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(letters: &[Letter], max_rank: usize) -> VerifyOptions {
        VerifyOptions {
            letters: letters.to_vec(),
            max_rank,
            deep: true,
            max_path_length: 10,
        }
    }

    #[test]
    fn exact_book_passes() {
        let r = run(&small(&Letter::ALL, 4), &Exact).unwrap();
        assert!(r.passed(), "{}", r.first_failure().unwrap());
        assert!(r.checks.len() > 100);
    }

    #[test]
    fn d3_includes_a3_coincidence() {
        let r = run(&small(&[Letter::D], 3), &Exact).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "D3 = A3 coincidence"));
        assert!(r.passed());
    }

    #[test]
    fn every_mutant_is_caught() {
        for id in FormulaId::ALL {
            let r = run(&small(&Letter::ALL, 5), &Mutant(id)).unwrap();
            assert!(!r.passed(), "mutation of {id} went unnoticed");
        }
    }
}
