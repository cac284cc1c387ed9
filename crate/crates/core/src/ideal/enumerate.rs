use rayon::prelude::*;

use super::Ideal;
use crate::error::Result;
use crate::num::ExactInt;
use crate::parallel;
use crate::root_system::RootSystem;
use crate::rootset::RootSet;
use crate::stats::{Method, StatsTable};

/// Depth-first enumeration of all ideals.
///
/// Roots are decided from the highest index (largest height) down. A root
/// may join only if all of its covers already have, so every branch point
/// yields two distinct ideals and every leaf is an ideal, each exactly once.
pub struct Ideals<'a> {
    rs: &'a RootSystem,
    /// `(undecided, chosen)`: roots `0..undecided` are still open.
    stack: Vec<(usize, RootSet)>,
}

impl<'a> Ideals<'a> {
    fn from_partial(rs: &'a RootSystem, undecided: usize, chosen: RootSet) -> Self {
        Ideals {
            rs,
            stack: vec![(undecided, chosen)],
        }
    }
}

#[inline]
fn expand(
    rs: &RootSystem,
    undecided: usize,
    chosen: RootSet,
    mut push: impl FnMut(usize, RootSet),
) {
    let r = undecided - 1;
    push(r, chosen);
    if rs.covers(r).is_subset(chosen) {
        let mut with = chosen;
        with.insert(r);
        push(r, with);
    }
}

impl<'a> Iterator for Ideals<'a> {
    type Item = Ideal<'a>;

    fn next(&mut self) -> Option<Ideal<'a>> {
        while let Some((undecided, chosen)) = self.stack.pop() {
            if undecided == 0 {
                return Some(Ideal::new_unchecked(self.rs, chosen));
            }
            let stack = &mut self.stack;
            expand(self.rs, undecided, chosen, |u, s| stack.push((u, s)));
        }
        None
    }
}

pub fn enumerate_ideals(rs: &RootSystem) -> Ideals<'_> {
    Ideals::from_partial(rs, rs.len(), RootSet::EMPTY)
}

/// Parallel fold over all ideals. The search tree is split into independent
/// subtrees by fixing the membership of the top roots; `merge` must be
/// associative and commutative.
pub fn par_fold_ideals<A, I, F, M>(rs: &RootSystem, identity: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, Ideal<'_>) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    const TARGET_TASKS: usize = 256;
    let mut frontier = vec![(rs.len(), RootSet::EMPTY)];
    let mut leaves = Vec::new();
    while !frontier.is_empty() && frontier.len() + leaves.len() < TARGET_TASKS {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (u, s) in frontier {
            if u == 0 {
                leaves.push(s);
            } else {
                expand(rs, u, s, |u, s| next.push((u, s)));
            }
        }
        frontier = next;
    }
    parallel::install(|| {
        let from_leaves = leaves.into_par_iter().fold(&identity, |mut acc, s| {
            fold(&mut acc, Ideal::new_unchecked(rs, s));
            acc
        });
        let from_subtrees = frontier.into_par_iter().fold(&identity, |mut acc, (u, s)| {
            for ideal in Ideals::from_partial(rs, u, s) {
                fold(&mut acc, ideal);
            }
            acc
        });
        from_leaves.chain(from_subtrees).reduce(&identity, &merge)
    })
}

fn tally_by_simple_count(rs: &RootSystem, abelian_only: bool) -> Vec<u64> {
    let n = rs.rank();
    par_fold_ideals(
        rs,
        || vec![0u64; n + 1],
        |acc, ideal| {
            if !abelian_only || ideal.is_abelian() {
                acc[ideal.simple_count()] += 1;
            }
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}

/// `P_X(j)` by exhaustive enumeration.
pub fn stats_table<T: ExactInt>(rs: &RootSystem) -> Result<StatsTable<T>> {
    StatsTable::from_u64s(rs.spec(), Method::Ideals, &tally_by_simple_count(rs, false))
}

/// `P_X^ab(j)`: abelian ideals by number of simple roots.
pub fn abelian_table<T: ExactInt>(rs: &RootSystem) -> Result<StatsTable<T>> {
    StatsTable::from_u64s(
        rs.spec(),
        Method::AbelianIdeals,
        &tally_by_simple_count(rs, true),
    )
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::root_system::{Letter, TypeRank};

    fn rs(letter: Letter, rank: usize) -> RootSystem {
        RootSystem::build(TypeRank::new(letter, rank).unwrap()).unwrap()
    }

    /// Every subset of Δ+ tested for upward closure under the root order.
    fn brute_force_ideals(rs: &RootSystem) -> HashSet<RootSet> {
        let n = rs.len();
        assert!(n <= 16);
        (0u128..1 << n)
            .map(RootSet::from_bits)
            .filter(|s| {
                s.iter()
                    .all(|a| (0..n).all(|b| !rs.leq(a, b) || s.contains(b)))
            })
            .collect()
    }

    #[test]
    fn enumeration_matches_subset_brute_force() {
        for (l, r) in [
            (Letter::A, 1),
            (Letter::A, 2),
            (Letter::A, 3),
            (Letter::A, 4),
            (Letter::B, 2),
            (Letter::B, 3),
            (Letter::C, 3),
            (Letter::D, 3),
            (Letter::D, 4),
            (Letter::G, 2),
        ] {
            let sys = rs(l, r);
            let listed: Vec<RootSet> = enumerate_ideals(&sys).map(|i| i.members()).collect();
            let unique: HashSet<RootSet> = listed.iter().copied().collect();
            assert_eq!(unique.len(), listed.len(), "{l}{r}: duplicates");
            assert_eq!(unique, brute_force_ideals(&sys), "{l}{r}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ideals(&rs(Letter::A, 2)).count(), 5);
        assert_eq!(enumerate_ideals(&rs(Letter::B, 2)).count(), 6);
    }

    #[test]
    fn small_tables() {
        let t: StatsTable<u64> = stats_table(&rs(Letter::A, 2)).unwrap();
        assert_eq!(t.counts, vec![2, 2, 1]);
        let t: StatsTable<u64> = stats_table(&rs(Letter::B, 2)).unwrap();
        assert_eq!(t.counts, vec![3, 2, 1]);
        let t: StatsTable<u64> = stats_table(&rs(Letter::D, 4)).unwrap();
        assert_eq!(t.counts, vec![20, 16, 9, 4, 1]);
        let t: StatsTable<u64> = abelian_table(&rs(Letter::A, 2)).unwrap();
        assert_eq!(t.counts, vec![2, 2, 0]);
        let t: StatsTable<u64> = abelian_table(&rs(Letter::G, 2)).unwrap();
        assert_eq!(t.counts, vec![4, 0, 0]);
    }

    #[test]
    fn parallel_fold_sees_every_ideal_once() {
        let sys = rs(Letter::D, 5);
        let serial: HashSet<RootSet> = enumerate_ideals(&sys).map(|i| i.members()).collect();
        let par = par_fold_ideals(
            &sys,
            Vec::new,
            |acc: &mut Vec<RootSet>, i| acc.push(i.members()),
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        assert_eq!(par.len(), serial.len());
        assert_eq!(par.into_iter().collect::<HashSet<_>>(), serial);
    }
}
