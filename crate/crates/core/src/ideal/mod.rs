//! ad-nilpotent ideals as upward-closed sets of positive roots.
//!
//! The Lie bracket is never represented. For root spaces, `[g_α, g_β]` is a
//! nonzero multiple of `g_{α+β}` exactly when `α + β` is a root, so the
//! bracket of two ideals spanned by root spaces is spanned by the root sums
//! that are roots. Everything below (abelianness, the descending central
//! series) is computed on root sets through that reduction.

mod enumerate;
mod nilpotency;

use std::fmt;

pub use enumerate::{abelian_table, enumerate_ideals, par_fold_ideals, stats_table, Ideals};

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::rootset::RootSet;

/// An upward-closed set of positive roots.
#[derive(Clone, Copy)]
pub struct Ideal<'a> {
    rs: &'a RootSystem,
    members: RootSet,
}

impl<'a> Ideal<'a> {
    /// Checks upward closure: every cover `α + α_i` of a member is a member.
    pub fn new(rs: &'a RootSystem, members: RootSet) -> Result<Ideal<'a>> {
        if !members.is_subset(rs.all()) {
            return Err(Error::NotUpwardClosed(
                "index beyond the positive roots".into(),
            ));
        }
        if let Some(a) = members.iter().find(|&a| !rs.covers(a).is_subset(members)) {
            let missing = rs.covers(a).difference(members).iter().next().unwrap_or(a);
            return Err(Error::NotUpwardClosed(format!(
                "{} is a member but {} is not",
                rs.root(a),
                rs.root(missing)
            )));
        }
        Ok(Ideal { rs, members })
    }

    /// Caller guarantees upward closure.
    pub(crate) fn new_unchecked(rs: &'a RootSystem, members: RootSet) -> Ideal<'a> {
        debug_assert!(Ideal::new(rs, members).is_ok());
        Ideal { rs, members }
    }

    pub fn empty(rs: &'a RootSystem) -> Ideal<'a> {
        Ideal {
            rs,
            members: RootSet::EMPTY,
        }
    }

    pub fn full(rs: &'a RootSystem) -> Ideal<'a> {
        Ideal {
            rs,
            members: rs.all(),
        }
    }

    /// `i_j`: all roots `≥ α_j`, for zero-based `j < rank`.
    pub fn principal(rs: &'a RootSystem, j: usize) -> Result<Ideal<'a>> {
        if j >= rs.rank() {
            return Err(Error::OutOfRange {
                what: "simple root index",
                value: j as i64 + 1,
                range: format!("1..={}", rs.rank()),
            });
        }
        Ok(Ideal {
            rs,
            members: rs.up_set(rs.simple_index(j)),
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn members(&self) -> RootSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.members.contains(root)
    }

    pub fn is_subset(&self, other: &Ideal<'_>) -> bool {
        self.members.is_subset(other.members)
    }

    /// `|Π ∩ Φ|`: how many simple roots the ideal contains.
    pub fn simple_count(&self) -> usize {
        self.members.intersection(self.rs.simple_set()).len()
    }

    /// Minimal members under the root order.
    pub fn antichain(&self) -> Antichain<'a> {
        let mut minimal = self.members;
        for a in self.members {
            // everything strictly above a member is not minimal
            let mut above = self.rs.up_set(a);
            above.remove(a);
            minimal = minimal.difference(above);
        }
        Antichain {
            rs: self.rs,
            elements: minimal,
        }
    }

    /// Root-set bracket `[self, other]`: the roots `α + β` with `α ∈ self`,
    /// `β ∈ other`.
    pub fn bracket(&self, other: &Ideal<'_>) -> Ideal<'a> {
        debug_assert!(std::ptr::eq(self.rs, other.rs));
        Ideal {
            rs: self.rs,
            members: nilpotency::bracket_sets(self.rs, self.members, other.members),
        }
    }

    /// `[i, i] = 0`, i.e. no two members (repetition allowed) sum to a root.
    pub fn is_abelian(&self) -> bool {
        nilpotency::bracket_sets(self.rs, self.members, self.members).is_empty()
    }

    /// Number of nonzero terms of `i ⊇ [i,i] ⊇ [[i,i],i] ⊇ …`.
    pub fn n_index(&self) -> usize {
        nilpotency::central_series_length(self.rs, self.members)
    }

    /// Nilpotency index by the antichain criterion: the largest `k` such
    /// that some `k` antichain elements (repetition allowed) sum to
    /// something `≤ θ`.
    pub fn cdr_index(&self) -> usize {
        nilpotency::max_multiset_below_theta(self.rs, self.antichain().elements)
    }
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.rs, other.rs) && self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl std::hash::Hash for Ideal<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({}, ", self.rs.spec())?;
        f.debug_set()
            .entries(self.members.iter().map(|a| self.rs.root(a).to_string()))
            .finish()?;
        write!(f, ")")
    }
}

/// A set of pairwise incomparable positive roots.
#[derive(Clone, Copy)]
pub struct Antichain<'a> {
    rs: &'a RootSystem,
    elements: RootSet,
}

impl<'a> Antichain<'a> {
    pub fn new(rs: &'a RootSystem, elements: RootSet) -> Result<Antichain<'a>> {
        for a in elements {
            for b in elements {
                if a < b && (rs.leq(a, b) || rs.leq(b, a)) {
                    return Err(Error::NotAnAntichain(a, b));
                }
            }
        }
        Ok(Antichain { rs, elements })
    }

    pub fn elements(&self) -> RootSet {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Union of the up-sets of the elements.
    pub fn ideal(&self) -> Ideal<'a> {
        let members = self
            .elements
            .iter()
            .fold(RootSet::EMPTY, |acc, a| acc.union(self.rs.up_set(a)));
        Ideal {
            rs: self.rs,
            members,
        }
    }
}

impl PartialEq for Antichain<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.rs, other.rs) && self.elements == other.elements
    }
}

impl Eq for Antichain<'_> {}

impl fmt::Debug for Antichain<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.elements.iter().map(|a| self.rs.root(a).to_string()))
            .finish()
    }
}

pub fn ideal_from_antichain<'a>(a: &Antichain<'a>) -> Ideal<'a> {
    a.ideal()
}

pub fn antichain_of<'a>(i: &Ideal<'a>) -> Antichain<'a> {
    i.antichain()
}

pub fn principal_ideal(rs: &RootSystem, j: usize) -> Result<Ideal<'_>> {
    Ideal::principal(rs, j)
}
