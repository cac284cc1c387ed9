use crate::root_system::RootSystem;
use crate::rootset::RootSet;

pub(super) fn bracket_sets(rs: &RootSystem, left: RootSet, right: RootSet) -> RootSet {
    let mut out = RootSet::EMPTY;
    for a in left {
        for &(b, c) in rs.sums_with(a) {
            if right.contains(b) {
                out.insert(c);
            }
        }
    }
    out
}

pub(super) fn central_series_length(rs: &RootSystem, ideal: RootSet) -> usize {
    let mut term = ideal;
    let mut len = 0;
    while !term.is_empty() {
        len += 1;
        term = bracket_sets(rs, term, ideal);
    }
    len
}

/// Largest `k` such that some multiset of `k` elements of `antichain` has
/// coordinate-wise sum `≤ θ`. Any `k`-fold sum has height `≥ k`, so the
/// search depth never exceeds `height(θ)`.
pub(super) fn max_multiset_below_theta(rs: &RootSystem, antichain: RootSet) -> usize {
    let elems: Vec<&[u32]> = antichain.iter().map(|a| rs.root(a).coeffs()).collect();
    let mut room: Vec<u32> = rs.marks().to_vec();
    best_from(&elems, 0, &mut room)
}

fn best_from(elems: &[&[u32]], start: usize, room: &mut [u32]) -> usize {
    let mut best = 0;
    for (k, e) in elems.iter().enumerate().skip(start) {
        if e.iter().zip(room.iter()).all(|(x, r)| x <= r) {
            for (r, x) in room.iter_mut().zip(e.iter()) {
                *r -= x;
            }
            best = best.max(1 + best_from(elems, k, room));
            for (r, x) in room.iter_mut().zip(e.iter()) {
                *r += x;
            }
        }
    }
    best
}
