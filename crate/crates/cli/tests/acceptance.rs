//! Acceptance suite: fourteen exact checks, one line each.
//!
//! Runs without the libtest harness so the report is always printed:
//! `cargo test -p nilideal --test acceptance`.

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nilideal_core::closed_forms::{self as cf, FormulaId};
use nilideal_core::ideal::{self, par_fold_ideals};
use nilideal_core::paths::{self, LatticePath};
use nilideal_core::shi::{self, Shape};
use nilideal_core::{Letter, RootSystem, Table64, TypeRank};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

const TOTAL_BUDGET: Duration = Duration::from_secs(300);

fn sys(letter: Letter, rank: usize) -> RootSystem {
    RootSystem::build(TypeRank::new(letter, rank).unwrap()).unwrap()
}

fn range(letter: Letter, lo: usize, hi: usize) -> Vec<RootSystem> {
    (lo..=hi).map(|n| sys(letter, n)).collect()
}

/// A1..7, B2..7, C2..7, D3..7, E6..8, F4, G2.
fn catalogue() -> Vec<RootSystem> {
    let mut out = range(Letter::A, 1, 7);
    out.extend(range(Letter::B, 2, 7));
    out.extend(range(Letter::C, 2, 7));
    out.extend(range(Letter::D, 3, 7));
    out.extend(range(Letter::E, 6, 8));
    out.push(sys(Letter::F, 4));
    out.push(sys(Letter::G, 2));
    out
}

fn enumerated(rs: &RootSystem) -> Vec<u64> {
    let t: Table64 = ideal::stats_table(rs).unwrap();
    t.counts
}

fn formula_row(n: usize, f: impl Fn(i64, i64) -> nilideal_core::Result<u64>) -> Vec<u64> {
    (0..=n as i64).map(|j| f(n as i64, j).unwrap()).collect()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    what: impl std::fmt::Display,
    lhs: T,
    rhs: T,
) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

fn within(what: &str, elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.2?}, budget {budget:?}"))
    }
}

fn c1_type_a() -> Check {
    let start = Instant::now();
    for n in 1..=7 {
        expect_eq(
            format!("A{n}"),
            enumerated(&sys(Letter::A, n)),
            formula_row(n, cf::p_a),
        )?;
    }
    within("enumeration", start.elapsed(), Duration::from_secs(1))?;
    Ok("A1..A7 match p_A".into())
}

fn c2_types_bc() -> Check {
    let start = Instant::now();
    for n in 2..=7 {
        let f = formula_row(n, cf::p_bc);
        expect_eq(format!("B{n}"), enumerated(&sys(Letter::B, n)), f.clone())?;
        expect_eq(format!("C{n}"), enumerated(&sys(Letter::C, n)), f)?;
    }
    within("enumeration", start.elapsed(), Duration::from_secs(5))?;
    Ok("B2..B7 and C2..C7 match p_BC".into())
}

fn c3_type_d() -> Check {
    let start = Instant::now();
    for n in 3..=7 {
        expect_eq(
            format!("D{n}"),
            enumerated(&sys(Letter::D, n)),
            formula_row(n, cf::p_d),
        )?;
    }
    expect_eq(
        "D3 vs A3",
        enumerated(&sys(Letter::D, 3)),
        formula_row(3, cf::p_a),
    )?;
    within("enumeration", start.elapsed(), Duration::from_secs(5))?;
    Ok("D3..D7 match p_D; D3 = A3".into())
}

fn c4_catalan_totals(catalogue: &[RootSystem]) -> Check {
    let mut e8_time = Duration::ZERO;
    for rs in catalogue {
        let start = Instant::now();
        let counts = enumerated(rs);
        if rs.spec() == TypeRank::new(Letter::E, 8).unwrap() {
            e8_time = start.elapsed();
        }
        let total: u64 = counts.iter().sum();
        expect_eq(
            format!("{} total", rs.spec()),
            total,
            cf::total_ideals(rs).unwrap(),
        )?;
        expect_eq(
            format!("{} P(0)", rs.spec()),
            counts[0],
            cf::p_zero(rs).unwrap(),
        )?;
    }
    within("E8 enumeration", e8_time, Duration::from_secs(60))?;
    Ok(format!(
        "{} systems; E8 enumerated in {e8_time:.2?}",
        catalogue.len()
    ))
}

fn c5_abelian(catalogue: &[RootSystem]) -> Check {
    for rs in catalogue {
        let t: Table64 = ideal::abelian_table(rs).unwrap();
        let n = rs.rank();
        expect_eq(
            format!("{} abelian total", rs.spec()),
            t.counts.iter().sum::<u64>(),
            1u64 << n,
        )?;
        let f: Vec<u64> = (0..=n as i64).map(|j| cf::p_ab(rs, j).unwrap()).collect();
        expect_eq(format!("{} abelian table", rs.spec()), t.counts.clone(), f)?;
        if rs.spec() == TypeRank::new(Letter::E, 8).unwrap() {
            expect_eq("E8 abelian without simple roots", t.counts[0], 256)?;
        }
    }
    Ok("#abelian = 2^rank and tables match p_ab".into())
}

fn c6_abelian_simple(catalogue: &[RootSystem]) -> Check {
    let mut seen = 0u64;
    for rs in catalogue {
        let (ideals, bad) = par_fold_ideals(
            rs,
            || (0u64, 0u64),
            |acc, i| {
                acc.0 += 1;
                if i.is_abelian() && i.simple_count() > 1 {
                    acc.1 += 1;
                }
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        expect_eq(format!("{} exceptions", rs.spec()), bad, 0)?;
        seen += ideals;
    }
    Ok(format!("{seen} ideals, zero exceptions"))
}

fn c7_principal(catalogue: &[RootSystem]) -> Check {
    for rs in catalogue {
        for j in 0..rs.rank() {
            let i = ideal::principal_ideal(rs, j).unwrap();
            expect_eq(
                format!("{} n(i_{})", rs.spec(), j + 1),
                i.n_index(),
                rs.marks()[j] as usize,
            )?;
        }
    }
    let spot = |l: Letter, n: usize, j: usize| {
        ideal::principal_ideal(&sys(l, n), j - 1).unwrap().n_index()
    };
    for n in 2..=7 {
        expect_eq(format!("C{n} j=1"), spot(Letter::C, n, 1), 2)?;
    }
    expect_eq("D4 j=2", spot(Letter::D, 4, 2), 2)?;
    expect_eq("G2 j=1", spot(Letter::G, 2, 1), 3)?;
    Ok("n(i_j) = a_j everywhere; spot values C_n:2, D4:2, G2:3".into())
}

fn c8_cdr() -> Check {
    let mut systems = range(Letter::A, 1, 5);
    systems.extend(range(Letter::B, 2, 5));
    systems.extend(range(Letter::C, 2, 5));
    systems.extend(range(Letter::D, 3, 5));
    systems.push(sys(Letter::G, 2));
    systems.push(sys(Letter::F, 4));
    let start = Instant::now();
    let mut seen = 0u64;
    for rs in &systems {
        let (ideals, bad) = par_fold_ideals(
            rs,
            || (0u64, 0u64),
            |acc, i| {
                acc.0 += 1;
                if i.cdr_index() != i.n_index() {
                    acc.1 += 1;
                }
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        expect_eq(format!("{} cdr mismatches", rs.spec()), bad, 0)?;
        seen += ideals;
    }
    within("cdr sweep", start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{seen} ideals over {} systems", systems.len()))
}

fn c9_ballot() -> Check {
    let start = Instant::now();
    for n in 0..=14usize {
        let brute = paths::count_table(n);
        for h in 0..=n {
            for j in 0..=n {
                let b = brute.get(&(h, j)).copied().unwrap_or(0);
                let f: u64 = cf::b_closed(n as i64, h as i64, j as i64).unwrap();
                expect_eq(format!("|B_{{{n},{h},{j}}}|"), f, b)?;
                if (n + h) % 2 == 1 {
                    expect_eq(format!("odd parity n={n} h={h} j={j}"), f, 0)?;
                }
            }
        }
    }
    within("path sweep", start.elapsed(), Duration::from_secs(30))?;
    Ok("n <= 14, all h, j".into())
}

fn c10_diagrams() -> Check {
    for l in [Letter::A, Letter::B, Letter::C] {
        let lo = if l == Letter::A { 1 } else { 2 };
        for rs in range(l, lo, 7) {
            let shape = Shape::new(&rs).unwrap();
            let mut per_j = vec![0u64; rs.rank() + 1];
            for s in shape.enumerate_subdiagrams() {
                per_j[shape.simple_count_from_prefix(&s)] += 1;
            }
            expect_eq(format!("{} subdiagrams", rs.spec()), per_j, enumerated(&rs))?;
        }
    }
    for rs in range(Letter::D, 3, 7) {
        let d = shi::diagram_stats::<u64>(&rs).unwrap();
        let parts = d.type_d.unwrap();
        let total: u64 = cf::total_ideals(&rs).unwrap();
        expect_eq(
            format!("{} 2|S| - |D|", rs.spec()),
            (2 * parts.subdiagrams - parts.equal_column_subdiagrams) as u64,
            total,
        )?;
        expect_eq(
            format!("{} combined", rs.spec()),
            d.combined.counts,
            enumerated(&rs),
        )?;
    }
    Ok("A1..7, B/C2..7 per j; D3..7 via 2|S| - |D|".into())
}

fn c11_type_d_parts() -> Check {
    for n in 3..=7usize {
        let rs = sys(Letter::D, n);
        let parts = shi::diagram_stats::<u64>(&rs).unwrap().type_d.unwrap();
        let b = enumerated(&sys(Letter::B, n - 1));
        let a = enumerated(&sys(Letter::A, n - 2));
        let at = |v: &[u64], j: i64| -> i64 {
            usize::try_from(j)
                .ok()
                .and_then(|j| v.get(j))
                .map_or(0, |&x| x as i64)
        };
        for j in 0..=n as i64 {
            let unswapped: u64 =
                nilideal_core::num::binom(2 * n as i64 - j - 2, n as i64 - 2).unwrap();
            expect_eq(
                format!("D{n} unswapped j={j}"),
                parts.unswapped.counts[j as usize],
                unswapped,
            )?;
            let eq = at(&b, j) - at(&a, j - 1) + at(&a, j - 2);
            expect_eq(
                format!("D{n} equal-column j={j}"),
                parts.equal_columns.counts[j as usize] as i64,
                eq,
            )?;
        }
        let ballot: u64 = paths::count_table(2 * n - 1)
            .iter()
            .filter(|((h, _), _)| *h == 1)
            .map(|(_, c)| c)
            .sum();
        expect_eq(
            format!("D{n} containing α_n"),
            parts.containing_alpha_n as u64,
            ballot,
        )?;
    }
    Ok("D3..D7 unswapped, equal-column and α_n counts".into())
}

fn catalan(m: u64) -> u64 {
    (0..m).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn c12_dyck() -> Check {
    for n in 1..=7usize {
        let rs = sys(Letter::A, n);
        let shape = Shape::new(&rs).unwrap();
        let mut images: HashSet<LatticePath> = HashSet::new();
        let subs = shape.enumerate_subdiagrams();
        for s in &subs {
            let p = paths::dyck_from_partition(n, s.prefix()).unwrap();
            let simple = shape.rootset(s, false).unwrap().simple_count();
            expect_eq(
                format!("A{n} returns-1 for {:?}", s.prefix()),
                p.returns() - 1,
                simple,
            )?;
            expect_eq(
                format!("A{n} round trip {:?}", s.prefix()),
                paths::partition_from_dyck(n, &p).unwrap(),
                s.prefix().to_vec(),
            )?;
            images.insert(p);
        }
        expect_eq(format!("A{n} injective"), images.len(), subs.len())?;
        let dyck: HashSet<LatticePath> = paths::enumerate_paths(2 * n + 2)
            .filter(|p| p.is_dyck())
            .collect();
        expect_eq(
            format!("A{n} Catalan"),
            dyck.len() as u64,
            catalan(n as u64 + 1),
        )?;
        expect_eq(format!("A{n} onto"), images == dyck, true)?;
        for p in &dyck {
            let lambda = paths::partition_from_dyck(n, p).unwrap();
            expect_eq(
                format!("A{n} path round trip {p}"),
                &paths::dyck_from_partition(n, &lambda).unwrap(),
                p,
            )?;
        }
    }
    Ok("A1..A7 bijective onto Dyck paths".into())
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn c13_connection_index() -> Check {
    let systems = TypeRank::all_up_to(8);
    let letters: HashSet<Letter> = systems.iter().map(|s| s.letter()).collect();
    expect_eq("families covered", letters.len(), 7)?;
    for spec in &systems {
        let rs = RootSystem::build(*spec).unwrap();
        let d = det(rs.cartan());
        let ones = rs.marks().iter().filter(|&&a| a == 1).count() as i64;
        expect_eq(format!("{spec} det vs marks"), d, 1 + ones)?;
        expect_eq(
            format!("{spec} reported z"),
            rs.connection_index() as i64,
            d,
        )?;
    }
    Ok(format!("{} systems of rank <= 8", systems.len()))
}

fn nilideal(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nilideal"))
        .args(args)
        .args(["--format", "csv", "--no-meta"])
        .output()
        .map_err(|e| e.to_string())?;
    out.status
        .code()
        .ok_or_else(|| "terminated by signal".into())
}

fn c14_cli() -> Check {
    let base = ["verify", "--types", "A,B,C,D,E,F,G", "--max-rank", "8"];
    expect_eq("clean verify exit", nilideal(&base)?, 0)?;
    let runs: Vec<_> = FormulaId::ALL
        .iter()
        .map(|id| {
            let mut args = base.to_vec();
            args.extend(["--mutate", id.as_str()]);
            (id, std::thread::spawn(move || nilideal(&args)))
        })
        .collect();
    for (id, h) in runs {
        expect_eq(
            format!("mutant {} exit", id.as_str()),
            h.join().unwrap()?,
            1,
        )?;
    }
    Ok(format!(
        "exit 0 clean; exit 1 for all {} mutants",
        FormulaId::ALL.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let catalogue = catalogue();
    let criteria: Vec<Criterion<'_>> = vec![
        ("type A table vs closed form", Box::new(c1_type_a)),
        ("types B and C tables vs closed form", Box::new(c2_types_bc)),
        ("type D table vs closed form", Box::new(c3_type_d)),
        (
            "generalized Catalan totals and P(0)",
            Box::new(|| c4_catalan_totals(&catalogue)),
        ),
        (
            "abelian ideals: 2^rank and per-j closed form",
            Box::new(|| c5_abelian(&catalogue)),
        ),
        (
            "abelian ideals hold at most one simple root",
            Box::new(|| c6_abelian_simple(&catalogue)),
        ),
        (
            "nilpotency index of principal ideals = marks",
            Box::new(|| c7_principal(&catalogue)),
        ),
        (
            "antichain criterion = central series length",
            Box::new(c8_cdr),
        ),
        ("ballot formula vs path enumeration", Box::new(c9_ballot)),
        ("staircase diagrams vs ideals", Box::new(c10_diagrams)),
        ("type D diagram intermediates", Box::new(c11_type_d_parts)),
        ("type A Dyck path bijection", Box::new(c12_dyck)),
        (
            "connection index consistency",
            Box::new(c13_connection_index),
        ),
        ("CLI verify contract and mutation test", Box::new(c14_cli)),
    ];
    let mut failures = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        match outcome {
            Ok(note) => println!(
                "criterion {:>2} PASS  {title} ({elapsed:.2?}): {note}",
                k + 1
            ),
            Err(why) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL  {title} ({elapsed:.2?}): {why}",
                    k + 1
                );
            }
        }
    }
    let total = start.elapsed();
    if let Err(why) = within("acceptance suite", total, TOTAL_BUDGET) {
        failures += 1;
        println!("budget FAIL  {why}");
    }
    println!(
        "acceptance: {} of {} criteria passed in {total:.2?}",
        criteria.len() - failures.min(criteria.len()),
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
