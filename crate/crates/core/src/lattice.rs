//! Join/meet tables and lattice-theoretic predicates.
//!
//! Modularity is decided two ways: directly from the modular law, and by
//! Dedekind's criterion (no sublattice isomorphic to the pentagon). The
//! pentagon is called `D_5` in some sources; `N_5` is the common name.

use crate::bits;
use crate::error::{BoundFailure, Error, Result};
use crate::poset::Poset;

/// Default element bound for the exhaustive pentagon search.
pub const DEFAULT_PENTAGON_LIMIT: usize = 40;

/// Outcome of a predicate that can name a counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

/// A poset together with its total join and meet tables.
#[derive(Clone, Debug)]
pub struct LatticeView {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl PartialEq for LatticeView {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

/// Least upper bound of `a` and `b`, or the reason there is none.
fn least_upper_bound(p: &Poset, a: usize, b: usize) -> std::result::Result<usize, BoundFailure> {
    let common: Vec<u64> = p
        .up_set(a)
        .iter()
        .zip(p.up_set(b))
        .map(|(x, y)| x & y)
        .collect();
    if common.iter().all(|&w| w == 0) {
        return Err(BoundFailure::NoUpperBound);
    }
    let least = bits::ones(&common).find(|&z| {
        p.up_set(z)
            .iter()
            .zip(&common)
            .all(|(above_z, c)| c & !above_z == 0)
    });
    least.ok_or(BoundFailure::NoLeastUpperBound)
}

fn greatest_lower_bound(p: &Poset, a: usize, b: usize) -> std::result::Result<usize, BoundFailure> {
    let common: Vec<u64> = p
        .down_set(a)
        .iter()
        .zip(p.down_set(b))
        .map(|(x, y)| x & y)
        .collect();
    if common.iter().all(|&w| w == 0) {
        return Err(BoundFailure::NoLowerBound);
    }
    let greatest = bits::ones(&common).find(|&z| {
        p.down_set(z)
            .iter()
            .zip(&common)
            .all(|(below_z, c)| c & !below_z == 0)
    });
    greatest.ok_or(BoundFailure::NoGreatestLowerBound)
}

impl LatticeView {
    /// Fills the join and meet tables, failing on the first pair (in input
    /// order) that lacks a join or a meet.
    pub fn new(poset: Poset) -> Result<LatticeView> {
        let n = poset.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let fail = |reason| Error::NotALattice {
                    a: poset.label(a).to_string(),
                    b: poset.label(b).to_string(),
                    reason,
                };
                let j = least_upper_bound(&poset, a, b).map_err(fail)?;
                let m = greatest_lower_bound(&poset, a, b).map_err(fail)?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        Ok(LatticeView { poset, join, meet })
    }

    /// Wraps precomputed tables. Callers guarantee they are the lattice
    /// operations of `poset`.
    pub(crate) fn from_tables(poset: Poset, join: Vec<usize>, meet: Vec<usize>) -> LatticeView {
        debug_assert_eq!(join.len(), poset.len() * poset.len());
        debug_assert_eq!(meet.len(), poset.len() * poset.len());
        LatticeView { poset, join, meet }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn join_idx(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    #[inline]
    pub fn meet_idx(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: &str, b: &str) -> Result<&str> {
        let (a, b) = (self.poset.index_of(a)?, self.poset.index_of(b)?);
        Ok(self.poset.label(self.join_idx(a, b)))
    }

    pub fn meet(&self, a: &str, b: &str) -> Result<&str> {
        let (a, b) = (self.poset.index_of(a)?, self.poset.index_of(b)?);
        Ok(self.poset.label(self.meet_idx(a, b)))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.poset.lower_covers(i).is_empty())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.poset.upper_covers(i).is_empty())
    }

    /// Checks `a ∨ (b ∧ c) = (a ∨ b) ∧ c` for every triple with `a ≤ c`.
    /// The witness is the first failing `(a, b, c)` in input order.
    pub fn is_modular_by_identity(&self) -> Verdict<[usize; 3]> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !self.poset.leq_idx(a, c) {
                        continue;
                    }
                    let lhs = self.join_idx(a, self.meet_idx(b, c));
                    let rhs = self.meet_idx(self.join_idx(a, b), c);
                    if lhs != rhs {
                        return Verdict::Violated([a, b, c]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_modular_by_pentagon(&self) -> Result<Verdict<[usize; 5]>> {
        self.is_modular_by_pentagon_bounded(DEFAULT_PENTAGON_LIMIT)
    }

    /// Scans 5-subsets in lexicographic order for one that is closed under
    /// the ambient join and meet and is order-isomorphic to the pentagon.
    pub fn is_modular_by_pentagon_bounded(&self, limit: usize) -> Result<Verdict<[usize; 5]>> {
        let n = self.len();
        if n > limit {
            return Err(Error::SizeLimit {
                operation: "pentagon search",
                size: n,
                limit,
            });
        }
        let mut chosen = [0usize; 5];
        Ok(match self.pentagon_search(&mut chosen, 0, 0) {
            true => Verdict::Violated(chosen),
            false => Verdict::Holds,
        })
    }

    fn pentagon_search(&self, chosen: &mut [usize; 5], depth: usize, start: usize) -> bool {
        if depth == 5 {
            return self.is_pentagon_sublattice(chosen);
        }
        let n = self.len();
        for v in start..n.saturating_sub(4 - depth) {
            chosen[depth] = v;
            // Later picks have larger indices, so a join or meet that falls
            // below `v` and outside the chosen prefix can never be added.
            if self.prefix_closure_broken(&chosen[..=depth]) {
                continue;
            }
            if self.pentagon_search(chosen, depth + 1, v + 1) {
                return true;
            }
        }
        false
    }

    fn prefix_closure_broken(&self, prefix: &[usize]) -> bool {
        let last = *prefix.last().unwrap();
        prefix.iter().any(|&u| {
            [self.join_idx(u, last), self.meet_idx(u, last)]
                .into_iter()
                .any(|z| z < last && !prefix.contains(&z))
        })
    }

    fn is_pentagon_sublattice(&self, set: &[usize; 5]) -> bool {
        for &u in set {
            for &v in set {
                if !set.contains(&self.join_idx(u, v)) || !set.contains(&self.meet_idx(u, v)) {
                    return false;
                }
            }
        }
        // A 5-element lattice is the pentagon iff, after removing its bottom
        // and top, the remaining three elements are a 2-chain plus one
        // element incomparable to both.
        let p = &self.poset;
        let bottom = set
            .iter()
            .copied()
            .find(|&u| set.iter().all(|&v| p.leq_idx(u, v)));
        let top = set
            .iter()
            .copied()
            .find(|&u| set.iter().all(|&v| p.leq_idx(v, u)));
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return false;
        };
        let middle: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&u| u != bottom && u != top)
            .collect();
        if middle.len() != 3 {
            return false;
        }
        let comparable_pairs = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| p.comparable_idx(middle[i], middle[j]))
            .count();
        comparable_pairs == 1
    }

    /// Checks `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for every triple.
    pub fn is_distributive(&self) -> Verdict<[usize; 3]> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet_idx(a, self.join_idx(b, c));
                    let rhs = self.join_idx(self.meet_idx(a, b), self.meet_idx(a, c));
                    if lhs != rhs {
                        return Verdict::Violated([a, b, c]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// Exactly one lower cover.
    pub fn is_join_irreducible(&self, x: &str) -> Result<bool> {
        Ok(self.is_join_irreducible_idx(self.poset.index_of(x)?))
    }

    pub fn is_join_irreducible_idx(&self, x: usize) -> bool {
        self.poset.lower_covers(x).len() == 1
    }

    /// Exactly one upper cover.
    pub fn is_meet_irreducible(&self, x: &str) -> Result<bool> {
        Ok(self.is_meet_irreducible_idx(self.poset.index_of(x)?))
    }

    pub fn is_meet_irreducible_idx(&self, x: usize) -> bool {
        self.poset.upper_covers(x).len() == 1
    }

    pub fn labels_of<const K: usize>(&self, idx: &[usize; K]) -> [&str; K] {
        idx.map(|i| self.poset.label(i))
    }
}

pub fn as_lattice(poset: &Poset) -> Result<LatticeView> {
    LatticeView::new(poset.clone())
}
