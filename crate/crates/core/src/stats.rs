use std::fmt;

use crate::error::Result;
use crate::num::{self, ExactInt};
use crate::root_system::TypeRank;

/// The procedure that produced a [`StatsTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed-form evaluation.
    Formula,
    /// Exhaustive enumeration of ideals in the root poset.
    Ideals,
    /// Subdiagrams of the staircase diagram (types A, B, C), or the combined
    /// count `2|S| - |equal-column subdiagrams|` in type D.
    Diagrams,
    /// Type D: subdiagrams read with columns n-1 and n as printed.
    DiagramsUnswapped,
    /// Type D: subdiagrams read with columns n-1 and n exchanged.
    DiagramsSwapped,
    /// Type D: subdiagrams whose middle columns have equal length.
    DiagramsEqualColumns,
    /// Lattice-path statistics.
    Paths,
    /// Abelian ideals only, by enumeration.
    AbelianIdeals,
    /// Abelian ideals only, by closed form.
    AbelianFormula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Ideals => "ideals",
            Method::Diagrams => "diagrams",
            Method::DiagramsUnswapped => "diagrams-unswapped",
            Method::DiagramsSwapped => "diagrams-swapped",
            Method::DiagramsEqualColumns => "diagrams-equal-columns",
            Method::Paths => "paths",
            Method::AbelianIdeals => "abelian-ideals",
            Method::AbelianFormula => "abelian-formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact counts indexed by the number `j` of simple roots, `0 ≤ j ≤ rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsTable<T> {
    pub spec: TypeRank,
    pub counts: Vec<T>,
    pub method: Method,
}

impl<T: ExactInt> StatsTable<T> {
    pub fn zeros(spec: TypeRank, method: Method) -> Self {
        StatsTable {
            spec,
            counts: vec![T::zero(); spec.rank() + 1],
            method,
        }
    }

    pub(crate) fn from_u64s(spec: TypeRank, method: Method, raw: &[u64]) -> Result<Self> {
        let counts = raw
            .iter()
            .map(|&c| num::from_u64(c, "stats table"))
            .collect::<Result<Vec<T>>>()?;
        Ok(StatsTable {
            spec,
            counts,
            method,
        })
    }

    pub fn get(&self, j: usize) -> &T {
        &self.counts[j]
    }

    pub fn total(&self) -> Result<T> {
        self.counts
            .iter()
            .try_fold(T::zero(), |acc, c| num::add(&acc, c, "stats total"))
    }

    /// Same counts, ignoring which method produced them.
    pub fn same_counts(&self, other: &StatsTable<T>) -> bool {
        self.spec == other.spec && self.counts == other.counts
    }
}
