//! Closed-form counts, evaluated in exact integer arithmetic.
//!
//! Every division is checked to be exact and every subtraction checked to be
//! nonnegative; a violation is an error, never a rounded or wrapped value.
//! Out-of-range `j` is an error for the public per-type formulas. The
//! type-D intermediates treat out-of-range terms as zero, since that is how
//! they are combined.

use std::fmt;

use crate::error::{Error, Result};
use crate::num::{self, binom, ExactInt};
use crate::root_system::RootSystem;

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// `P_{A_n}(j) = (j+1)/(n+1) · C(2n-j, n)`
    PA,
    /// `P_{B_n}(j) = P_{C_n}(j) = C(2n-j-1, n-1)`
    PBC,
    /// `P_{D_n}(0) = C(2n-2, n-2) + C(2n-3, n-3)`
    PD0,
    /// `P_{D_n}(j) = C(2n-2-j, n-2) + C(2n-3-j, n-2)`, `j ≥ 1`
    PD,
    /// abelian ideals by number of simple roots
    PAb,
    /// `P_X(0) = ∏(h + e_i - 1) / |W|`
    PZero,
    /// `|I(X)| = ∏(e_i + h + 1) / |W|`
    Total,
    /// ballot numbers `|B_{n,h,j}|`
    Ballot,
    /// type-D unswapped subdiagrams in degree `j`
    DUnswapped,
    /// type-D equal-middle-column subdiagrams in degree `j`
    DEqual,
}

impl FormulaId {
    pub const ALL: [FormulaId; 10] = [
        FormulaId::PA,
        FormulaId::PBC,
        FormulaId::PD0,
        FormulaId::PD,
        FormulaId::PAb,
        FormulaId::PZero,
        FormulaId::Total,
        FormulaId::Ballot,
        FormulaId::DUnswapped,
        FormulaId::DEqual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::PA => "p_a",
            FormulaId::PBC => "p_bc",
            FormulaId::PD0 => "p_d0",
            FormulaId::PD => "p_d",
            FormulaId::PAb => "p_ab",
            FormulaId::PZero => "p_zero",
            FormulaId::Total => "total_ideals",
            FormulaId::Ballot => "b_closed",
            FormulaId::DUnswapped => "d_sd_degree",
            FormulaId::DEqual => "d_eq_degree",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FormulaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown formula {s:?}"))
    }
}

/// A closed-form value tagged with the formula that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaValue<T> {
    pub value: T,
    pub provenance: FormulaId,
}

fn check_j(j: i64, n: i64) -> Result<()> {
    if j < 0 || j > n {
        return Err(Error::OutOfRange {
            what: "j",
            value: j,
            range: format!("0..={n}"),
        });
    }
    Ok(())
}

fn check_n(n: i64, min: i64, family: &str) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: format!(">= {min} for type {family}"),
        });
    }
    Ok(())
}

fn int<T: ExactInt>(v: i64, formula: &'static str) -> Result<T> {
    num::from_u64(
        u64::try_from(v).map_err(|_| Error::Negative { formula })?,
        formula,
    )
}

pub fn p_a<T: ExactInt>(n: i64, j: i64) -> Result<T> {
    const F: &str = "p_a";
    check_n(n, 1, "A")?;
    check_j(j, n)?;
    let num = num::mul(&int::<T>(j + 1, F)?, &binom::<T>(2 * n - j, n)?, F)?;
    num::div_exact(&num, &int(n + 1, F)?, F)
}

/// The ballot-difference form `C(2n-j, n) - C(2n-j, n+1)` of [`p_a`].
pub fn p_a_difference<T: ExactInt>(n: i64, j: i64) -> Result<T> {
    check_n(n, 1, "A")?;
    check_j(j, n)?;
    num::sub(
        &binom(2 * n - j, n)?,
        &binom(2 * n - j, n + 1)?,
        "p_a_difference",
    )
}

pub fn p_bc<T: ExactInt>(n: i64, j: i64) -> Result<T> {
    check_n(n, 2, "B/C")?;
    check_j(j, n)?;
    binom(2 * n - j - 1, n - 1)
}

pub fn p_d<T: ExactInt>(n: i64, j: i64) -> Result<T> {
    check_n(n, 3, "D")?;
    check_j(j, n)?;
    if j == 0 {
        num::add(&binom(2 * n - 2, n - 2)?, &binom(2 * n - 3, n - 3)?, "p_d0")
    } else {
        num::add(
            &binom(2 * n - 2 - j, n - 2)?,
            &binom(2 * n - 3 - j, n - 2)?,
            "p_d",
        )
    }
}

/// Abelian ideals containing exactly `j` simple roots.
pub fn p_ab<T: ExactInt>(rs: &RootSystem, j: i64) -> Result<T> {
    const F: &str = "p_ab";
    let n = rs.rank() as i64;
    check_j(j, n)?;
    let z: T = int(rs.connection_index() as i64, F)?;
    match j {
        0 => {
            let two: T = int(2, F)?;
            let pow = (0..n).try_fold(T::one(), |acc, _| num::mul(&acc, &two, F))?;
            num::sub(&num::add(&pow, &T::one(), F)?, &z, F)
        }
        1 => num::sub(&z, &T::one(), F),
        _ => Ok(T::zero()),
    }
}

fn weyl_quotient<T: ExactInt>(
    rs: &RootSystem,
    factor: impl Fn(i64) -> i64,
    formula: &'static str,
) -> Result<T> {
    let mut num = T::one();
    let mut den = T::one();
    for &e in rs.exponents() {
        num = num::mul(&num, &int(factor(e as i64), formula)?, formula)?;
        den = num::mul(&den, &int(e as i64 + 1, formula)?, formula)?;
    }
    num::div_exact(&num, &den, formula)
}

/// Ideals containing no simple root: `∏(h + e_i - 1) / |W|`.
pub fn p_zero<T: ExactInt>(rs: &RootSystem) -> Result<T> {
    let h = rs.coxeter_number() as i64;
    weyl_quotient(rs, |e| h + e - 1, "p_zero")
}

/// Generalized Catalan number `∏(e_i + h + 1) / |W|`.
pub fn total_ideals<T: ExactInt>(rs: &RootSystem) -> Result<T> {
    let h = rs.coxeter_number() as i64;
    weyl_quotient(rs, |e| e + h + 1, "total_ideals")
}

/// `|B_{n,h,j}|`: nonnegative paths of length `n` ending at height `h` with
/// `j` returns. Zero when `n + h` is odd or any argument is negative; the
/// empty path is counted at `n = h = j = 0`.
pub fn b_closed<T: ExactInt>(n: i64, h: i64, j: i64) -> Result<T> {
    if n < 0 || h < 0 || j < 0 || (n + h) % 2 != 0 {
        return Ok(T::zero());
    }
    // the binomial difference is 0 at n = 0, but the empty path exists
    if n == 0 {
        return Ok(if j == 0 { T::one() } else { T::zero() });
    }
    let top = n - (j + 1);
    let k = (n + h) / 2;
    num::sub(&binom(top, k - 1)?, &binom(top, k)?, "b_closed")
}

/// Degree-`j` count of type-D subdiagrams read unswapped, in the telescoped
/// form `C(2n-j-2, n) + C(2n-j-1, n-1) - C(2n-j-1, n)`.
pub fn d_sd_degree<T: ExactInt>(n: i64, j: i64) -> Result<T> {
    const F: &str = "d_sd_degree";
    check_n(n, 3, "D")?;
    check_j(j, n)?;
    let pos = num::add(&binom(2 * n - j - 2, n)?, &binom(2 * n - j - 1, n - 1)?, F)?;
    num::sub(&pos, &binom(2 * n - j - 1, n)?, F)
}

fn or_zero<T: ExactInt>(v: Result<T>) -> Result<T> {
    match v {
        Err(Error::OutOfRange { what: "j", .. }) => Ok(T::zero()),
        other => other,
    }
}

/// Degree-`j` count of type-D subdiagrams with equal middle columns:
/// `P_{B_{n-1}}(j) - P_{A_{n-2}}(j-1) + P_{A_{n-2}}(j-2)`.
pub fn d_eq_degree<T: ExactInt>(n: i64, j: i64) -> Result<T> {
    const F: &str = "d_eq_degree";
    check_n(n, 3, "D")?;
    check_j(j, n)?;
    let b = or_zero(p_bc::<T>(n - 1, j))?;
    let a1 = or_zero(p_a::<T>(n - 2, j - 1))?;
    let a2 = or_zero(p_a::<T>(n - 2, j - 2))?;
    num::sub(&num::add(&b, &a2, F)?, &a1, F)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{Letter, TypeRank};

    fn rs(letter: Letter, rank: usize) -> RootSystem {
        RootSystem::build(TypeRank::new(letter, rank).unwrap()).unwrap()
    }

    fn row(f: impl Fn(i64, i64) -> Result<u64>, n: i64) -> Vec<u64> {
        (0..=n).map(|j| f(n, j).unwrap()).collect()
    }

    #[test]
    fn p_a_values() {
        for n in 1..=10 {
            assert_eq!(p_a::<u64>(n, n).unwrap(), 1);
        }
        assert_eq!(p_a::<u64>(2, 0).unwrap(), 2);
        assert_eq!(p_a::<u64>(4, 0).unwrap(), 14);
        assert!(p_a::<u64>(2, 3).is_err());
    }

    #[test]
    fn p_a_difference_form() {
        for n in 1..=20 {
            for j in 0..=n {
                assert_eq!(
                    p_a::<u64>(n, j).unwrap(),
                    p_a_difference::<u64>(n, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn p_bc_and_p_d_rows() {
        assert_eq!(row(p_bc, 2), vec![3, 2, 1]);
        assert_eq!(row(p_d, 4), vec![20, 16, 9, 4, 1]);
        assert_eq!(row(p_d, 3), row(p_a, 3));
        assert_eq!(row(p_d, 3), vec![5, 5, 3, 1]);
        for n in 3..=12 {
            assert_eq!(p_d::<u64>(n, n).unwrap(), 1);
            assert_eq!(p_bc::<u64>(n, n).unwrap(), 1);
        }
    }

    #[test]
    fn p_bc_zero_matches_product_formula() {
        for n in 2..=8 {
            let b = rs(Letter::B, n as usize);
            assert_eq!(p_bc::<u64>(n, 0).unwrap(), p_zero::<u64>(&b).unwrap());
            assert_eq!(
                p_bc::<u64>(n, 0).unwrap(),
                binom::<u64>(2 * n - 1, n - 1).unwrap()
            );
        }
    }

    #[test]
    fn abelian_formula_values() {
        let a2 = rs(Letter::A, 2);
        assert_eq!(
            (0..=2)
                .map(|j| p_ab::<u64>(&a2, j).unwrap())
                .collect::<Vec<_>>(),
            vec![2, 2, 0]
        );
        let e8 = rs(Letter::E, 8);
        assert_eq!(p_ab::<u64>(&e8, 0).unwrap(), 256);
        assert!((1..=8).all(|j| p_ab::<u64>(&e8, j).unwrap() == 0));
        for spec in TypeRank::all_up_to(8) {
            let sys = RootSystem::build(spec).unwrap();
            let total: u64 = (0..=spec.rank() as i64)
                .map(|j| p_ab::<u64>(&sys, j).unwrap())
                .sum();
            assert_eq!(total, 1 << spec.rank(), "{spec}");
        }
    }

    #[test]
    fn weyl_quotients() {
        assert_eq!(p_zero::<u64>(&rs(Letter::B, 2)).unwrap(), 3);
        assert_eq!(p_zero::<u64>(&rs(Letter::G, 2)).unwrap(), 5);
        assert_eq!(p_zero::<u64>(&rs(Letter::A, 2)).unwrap(), 2);
        assert_eq!(total_ideals::<u64>(&rs(Letter::A, 2)).unwrap(), 5);
        assert_eq!(total_ideals::<u64>(&rs(Letter::D, 4)).unwrap(), 50);
        assert_eq!(total_ideals::<u64>(&rs(Letter::E, 8)).unwrap(), 25080);
    }

    #[test]
    fn ballot_values() {
        assert_eq!(b_closed::<u64>(4, 0, 2).unwrap(), 1);
        assert_eq!(b_closed::<u64>(5, 3, 0).unwrap(), 3);
        assert!((0..6).all(|j| b_closed::<u64>(5, 0, j).unwrap() == 0));
        for n in 1..=8 {
            for j in 0..=n {
                assert_eq!(
                    b_closed::<u64>(2 * n + 2, 0, j + 1).unwrap(),
                    p_a::<u64>(n, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn type_d_intermediates() {
        assert_eq!(d_sd_degree::<u64>(3, 0).unwrap(), 4);
        assert_eq!(d_eq_degree::<u64>(3, 0).unwrap(), 3);
        for n in 3..=10 {
            for j in 0..=n {
                let sd: u64 = d_sd_degree(n, j).unwrap();
                assert_eq!(sd, binom::<u64>(2 * n - j - 2, n - 2).unwrap());
                let eq: u64 = d_eq_degree(n, j).unwrap();
                assert_eq!(2 * sd - eq, p_d::<u64>(n, j).unwrap(), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn formula_ids_round_trip_through_names() {
        for f in FormulaId::ALL {
            assert_eq!(f.as_str().parse::<FormulaId>().unwrap(), f);
        }
    }
}
