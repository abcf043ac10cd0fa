//! Finite posets stored as a cover relation with a materialized order.
//!
//! Elements carry opaque string labels. Internally every element is an index
//! assigned by input order; all chain enumeration and witness reporting is
//! deterministic with respect to that order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::bits::{self, BitMatrix};
use crate::error::{Error, Result};

/// Default element bound for operations that enumerate chains.
pub const DEFAULT_CHAIN_LIMIT: usize = 64;

/// A finite partially ordered set.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    leq: BitMatrix,
    geq: BitMatrix,
    linear_extension: Vec<usize>,
}

/// A strictly increasing sequence of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Chain(pub Vec<usize>);

impl Chain {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    pub fn labels<'a>(&self, poset: &'a Poset) -> Vec<&'a str> {
        self.0.iter().map(|&i| poset.label(i)).collect()
    }
}

impl Poset {
    /// Builds a poset from labels and a generating relation.
    ///
    /// Each pair `(a, b)` asserts `a < b`. Redundant pairs implied by
    /// transitivity are dropped; the stored covers are the transitive
    /// reduction of the relation.
    pub fn from_covers<E, S, C, A, B>(elements: E, covers: C) -> Result<Poset>
    where
        E: IntoIterator<Item = S>,
        S: Into<String>,
        C: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut edges = Vec::new();
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            edges.push((ia, ib));
        }
        Poset::from_index_edges(labels, index, edges)
    }

    /// Builds a poset from labels and index pairs `(a, b)` meaning `a < b`.
    pub(crate) fn from_edges(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Poset> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Poset::from_index_edges(labels, index, edges)
    }

    fn from_index_edges(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Poset> {
        let n = labels.len();
        edges.sort_unstable();
        edges.dedup();
        if let Some(&(a, _)) = edges.iter().find(|(a, b)| a == b) {
            return Err(Error::CycleDetected {
                label: labels[a].clone(),
            });
        }

        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in &edges {
            succ[a].push(b);
            indegree[b] += 1;
        }

        // Kahn's algorithm, always taking the smallest available index.
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() != n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::CycleDetected {
                label: labels[stuck].clone(),
            });
        }

        let mut leq = BitMatrix::new(n);
        for &v in order.iter().rev() {
            leq.set(v, v);
            for &w in &succ[v] {
                leq.or_row(v, w);
            }
        }
        let geq = leq.transpose();

        // (a, b) is a cover iff nothing lies strictly between a and b.
        let covers: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| !bits::ones(leq.row(a)).any(|c| c != a && c != b && leq.get(c, b)))
            .collect();

        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        for v in lower.iter_mut().chain(upper.iter_mut()) {
            v.sort_unstable();
        }

        Ok(Poset {
            labels,
            index,
            covers,
            lower,
            upper,
            leq,
            geq,
            linear_extension: order,
        })
    }

    /// Builds a poset from a full order relation given as a predicate on indices.
    pub(crate) fn from_order_fn(
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Poset> {
        let n = labels.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Poset::from_edges(labels, edges)
    }

    pub fn empty() -> Poset {
        Poset::from_edges(Vec::new(), Vec::new()).expect("empty poset is valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Cover pairs `(a, b)` with `b` covering `a`, sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// A linear extension of the order (every element precedes its upper covers).
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_extension
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq_idx(self.index_of(a)?, self.index_of(b)?))
    }

    #[inline]
    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    #[inline]
    pub fn lt_idx(&self, a: usize, b: usize) -> bool {
        a != b && self.leq.get(a, b)
    }

    #[inline]
    pub fn comparable_idx(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b) || self.leq.get(b, a)
    }

    /// Elements `>= a` as a bit row.
    pub(crate) fn up_set(&self, a: usize) -> &[u64] {
        self.leq.row(a)
    }

    /// Elements `<= a` as a bit row.
    pub(crate) fn down_set(&self, a: usize) -> &[u64] {
        self.geq.row(a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper[i].is_empty())
            .collect()
    }

    pub fn has_unique_minimum(&self) -> bool {
        self.minimal_elements().len() == 1
    }

    pub fn has_unique_maximum(&self) -> bool {
        self.maximal_elements().len() == 1
    }

    /// Number of elements in a largest chain (0 for the empty poset).
    pub fn height(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        for &v in &self.linear_extension {
            longest[v] = 1 + self.lower[v].iter().map(|&u| longest[u]).max().unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    pub(crate) fn check_chain_limit(&self, operation: &'static str, limit: usize) -> Result<()> {
        if self.len() > limit {
            return Err(Error::SizeLimit {
                operation,
                size: self.len(),
                limit,
            });
        }
        Ok(())
    }

    pub fn maximal_chains(&self) -> Result<Vec<Chain>> {
        self.maximal_chains_bounded(DEFAULT_CHAIN_LIMIT)
    }

    /// All maximal chains in lexicographic order of element indices.
    ///
    /// A maximal chain runs from a minimal element to a maximal element
    /// through covers, so a depth-first walk over upper covers finds each
    /// exactly once.
    pub fn maximal_chains_bounded(&self, limit: usize) -> Result<Vec<Chain>> {
        self.check_chain_limit("maximal_chains", limit)?;
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for m in self.minimal_elements() {
            stack.push(m);
            self.extend_maximal(&mut stack, &mut out);
            stack.pop();
        }
        Ok(out)
    }

    fn extend_maximal(&self, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
        let top = *stack.last().expect("nonempty stack");
        if self.upper[top].is_empty() {
            out.push(Chain(stack.clone()));
            return;
        }
        for &next in &self.upper[top] {
            stack.push(next);
            self.extend_maximal(stack, out);
            stack.pop();
        }
    }

    pub fn chains(&self) -> Result<Vec<Chain>> {
        self.chains_bounded(DEFAULT_CHAIN_LIMIT)
    }

    /// Every chain, including the empty one, each listed bottom to top.
    /// The order of the returned list is deterministic.
    pub fn chains_bounded(&self, limit: usize) -> Result<Vec<Chain>> {
        self.check_chain_limit("chains", limit)?;
        let mut out = vec![Chain::default()];
        let mut stack = Vec::new();
        for v in 0..self.len() {
            stack.push(v);
            self.extend_all(&mut stack, &mut out);
            stack.pop();
        }
        Ok(out)
    }

    fn extend_all(&self, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
        out.push(Chain(stack.clone()));
        let top = *stack.last().expect("nonempty stack");
        // Chains are stored in linear-extension order, so only strictly
        // larger elements extend the top.
        let above: Vec<usize> = bits::ones(self.leq.row(top))
            .filter(|&w| w != top)
            .collect();
        for next in above {
            stack.push(next);
            self.extend_all(stack, out);
            stack.pop();
        }
    }

    pub fn maximal_chain_count_through(&self, x: &str) -> Result<u128> {
        Ok(self.maximal_chain_count_through_idx(self.index_of(x)?))
    }

    /// Counts maximal chains containing `x` as (saturated chains from a
    /// minimal element up to `x`) times (saturated chains from `x` up to a
    /// maximal element).
    pub fn maximal_chain_count_through_idx(&self, x: usize) -> u128 {
        let n = self.len();
        let mut below = vec![0u128; n];
        for &v in &self.linear_extension {
            below[v] = if self.lower[v].is_empty() {
                1
            } else {
                self.lower[v].iter().map(|&u| below[u]).sum()
            };
        }
        let mut above = vec![0u128; n];
        for &v in self.linear_extension.iter().rev() {
            above[v] = if self.upper[v].is_empty() {
                1
            } else {
                self.upper[v].iter().map(|&w| above[w]).sum()
            };
        }
        below[x] * above[x]
    }

    /// True iff every maximal chain has the same number of elements.
    pub fn is_pure(&self) -> bool {
        let n = self.len();
        let mut shortest = vec![0usize; n];
        let mut longest = vec![0usize; n];
        for &v in &self.linear_extension {
            if self.lower[v].is_empty() {
                shortest[v] = 1;
                longest[v] = 1;
            } else {
                shortest[v] = 1 + self.lower[v].iter().map(|&u| shortest[u]).min().unwrap();
                longest[v] = 1 + self.lower[v].iter().map(|&u| longest[u]).max().unwrap();
            }
        }
        let tops = self.maximal_elements();
        let lo = tops.iter().map(|&m| shortest[m]).min();
        let hi = tops.iter().map(|&m| longest[m]).max();
        lo == hi
    }

    /// Order-theoretic equality: same labels and the same cover pairs,
    /// irrespective of element order.
    pub fn same_order_as(&self, other: &Poset) -> bool {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        if !self.labels.iter().all(|l| other.contains(l)) {
            return false;
        }
        let mine: HashSet<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.label(a), self.label(b)))
            .collect();
        other
            .covers
            .iter()
            .all(|&(a, b)| mine.contains(&(other.label(a), other.label(b))))
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.same_order_as(other)
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.label(a), self.label(b)))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn labelled(p: &Poset, chains: &[Chain]) -> Vec<Vec<String>> {
        chains
            .iter()
            .map(|c| c.labels(p).into_iter().map(String::from).collect())
            .collect()
    }

    #[test]
    fn singleton() {
        let p = Poset::from_covers(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq("a", "a").unwrap());
        assert!(p.covers().is_empty());
    }

    #[test]
    fn pentagon_order() {
        let p = pentagon();
        assert!(p.leq("0", "1").unwrap());
        assert!(!p.leq("a", "b").unwrap());
        assert!(!p.leq("b", "a").unwrap());
        assert!(p.leq("b", "1").unwrap());
        assert_eq!(p.covers().len(), 5);
    }

    #[test]
    fn two_cycle_rejected() {
        let err = Poset::from_covers(["a", "b"], [("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected { .. }));
    }

    #[test]
    fn self_loop_rejected() {
        let err = Poset::from_covers(["a"], [("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected { .. }));
    }

    #[test]
    fn label_errors() {
        assert_eq!(
            Poset::from_covers(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            Poset::from_covers(["a"], [("a", "z")]).unwrap_err(),
            Error::UnknownLabel("z".into())
        );
        assert_eq!(
            pentagon().leq("a", "nope").unwrap_err(),
            Error::UnknownLabel("nope".into())
        );
    }

    #[test]
    fn redundant_edges_are_reduced() {
        let p = Poset::from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq("a", "c").unwrap());
    }

    #[test]
    fn maximal_chains_small() {
        let c = chain(3);
        assert_eq!(c.maximal_chains().unwrap(), vec![Chain(vec![0, 1, 2])]);

        let p = pentagon();
        assert_eq!(
            labelled(&p, &p.maximal_chains().unwrap()),
            vec![vec!["0", "a", "1"], vec!["0", "b", "c", "1"]]
        );

        let a = antichain(2);
        assert_eq!(
            a.maximal_chains().unwrap(),
            vec![Chain(vec![0]), Chain(vec![1])]
        );
    }

    #[test]
    fn chain_counts_through() {
        assert_eq!(chain(3).maximal_chain_count_through("c1").unwrap(), 1);
        assert_eq!(pentagon().maximal_chain_count_through("0").unwrap(), 2);
        assert_eq!(pentagon().maximal_chain_count_through("a").unwrap(), 1);
        assert_eq!(diamond().maximal_chain_count_through("1").unwrap(), 3);
    }

    #[test]
    fn purity_and_minimum() {
        assert!(chain(3).is_pure());
        assert!(!pentagon().is_pure());
        assert!(diamond().is_pure());
        assert!(Poset::empty().is_pure());

        assert!(pentagon().has_unique_minimum());
        assert!(!antichain(2).has_unique_minimum());
        assert!(!Poset::empty().has_unique_minimum());
    }

    #[test]
    fn size_guard() {
        let big = antichain(DEFAULT_CHAIN_LIMIT + 1);
        assert!(matches!(
            big.maximal_chains(),
            Err(Error::SizeLimit {
                limit: DEFAULT_CHAIN_LIMIT,
                ..
            })
        ));
        assert_eq!(big.maximal_chains_bounded(100).unwrap().len(), 65);
    }

    #[test]
    fn all_chains_of_pentagon() {
        // 1 empty + 5 singletons + 8 pairs + 5 triples + 1 quadruple
        assert_eq!(pentagon().chains().unwrap().len(), 20);
    }

    #[test]
    fn equality_ignores_element_order() {
        let p = Poset::from_covers(["x", "y"], [("x", "y")]).unwrap();
        let q = Poset::from_covers(["y", "x"], [("x", "y")]).unwrap();
        assert_eq!(p, q);
        assert_ne!(p, antichain(2));
        assert_eq!(q.linear_extension(), &[1, 0]);
    }
}
