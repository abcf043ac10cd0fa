//! Divisor lattices and the search for a modular lattice whose h-vector
//! breaks Stanley's inequalities.
//!
//! Take `L` = divisors of `2^s·3^t` with `3 ≤ s ≤ t`. The element `2^s` is
//! join- and meet-irreducible and lies on exactly one maximal chain, so each
//! duplication at `2^s` keeps the lattice modular and raises `h_1` by one
//! while leaving the rest of the h-vector alone. Eventually
//! `h_0 + h_1 > h_s + h_{s-1}`.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::duplication::duplicate_lattice;
use crate::error::{Error, Result};
use crate::lattice::{LatticeView, DEFAULT_PENTAGON_LIMIT};
use crate::order_complex::h_vector_bounded;
use crate::poset::{Poset, DEFAULT_CHAIN_LIMIT};
use crate::stanley::stanley_check;

/// Default bound on the number of divisors a generated lattice may have.
pub const DEFAULT_DIVISOR_LIMIT: usize = 1024;

/// Machine-checkable record of a modular lattice that is not integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleCertificate {
    pub s: u32,
    pub t: u32,
    pub n: usize,
    pub site: String,
    pub site_maximal_chains: u128,
    pub base_h: Vec<BigInt>,
    pub final_h: Vec<BigInt>,
    pub violated_j: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub modularity_witnessed: bool,
    pub element_count: usize,
}

/// Lattice of an exponent box: elements are exponent vectors ordered
/// componentwise, listed by increasing `value`.
fn product_of_chains(
    exponents: &[u32],
    value: impl Fn(&[u32]) -> BigUint,
    label: impl Fn(&[u32]) -> String,
    limit: usize,
) -> Result<LatticeView> {
    let size = exponents
        .iter()
        .try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1))
        .unwrap_or(usize::MAX);
    if size > limit {
        return Err(Error::SizeLimit {
            operation: "divisor lattice",
            size,
            limit,
        });
    }
    let mut points: Vec<Vec<u32>> = vec![Vec::new()];
    for &e in exponents {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=e).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    points.sort_by_cached_key(|p| value(p));

    let index: std::collections::HashMap<&[u32], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for k in 0..p.len() {
            if p[k] < exponents[k] {
                let mut q = p.clone();
                q[k] += 1;
                edges.push((i, index[q.as_slice()]));
            }
        }
    }
    let labels = points.iter().map(|p| label(p)).collect();
    let poset = Poset::from_edges(labels, edges)?;

    let n = points.len();
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for (a, pa) in points.iter().enumerate() {
        for (b, pb) in points.iter().enumerate() {
            let hi: Vec<u32> = pa.iter().zip(pb).map(|(x, y)| *x.max(y)).collect();
            let lo: Vec<u32> = pa.iter().zip(pb).map(|(x, y)| *x.min(y)).collect();
            join[a * n + b] = index[hi.as_slice()];
            meet[a * n + b] = index[lo.as_slice()];
        }
    }
    Ok(LatticeView::from_tables(poset, join, meet))
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn divisor_lattice(m: u64) -> Result<LatticeView> {
    divisor_lattice_bounded(m, DEFAULT_DIVISOR_LIMIT)
}

/// Divisors of `m` under divisibility, labeled by their decimal value.
pub fn divisor_lattice_bounded(m: u64, limit: usize) -> Result<LatticeView> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    let factors = factorize(m);
    let primes: Vec<u64> = factors.iter().map(|&(p, _)| p).collect();
    let exponents: Vec<u32> = factors.iter().map(|&(_, e)| e).collect();
    let value = |e: &[u32]| -> BigUint {
        primes
            .iter()
            .zip(e)
            .map(|(&p, &k)| num_traits::pow(BigUint::from(p), k as usize))
            .product()
    };
    product_of_chains(&exponents, value, |e| value(e).to_string(), limit)
}

/// `2^a·3^b`, with exponent 1 and zero factors elided and `1` for the bottom.
pub fn grid_label(a: u32, b: u32) -> String {
    let factor = |base: u32, e: u32| match e {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{e}")),
    };
    match (factor(2, a), factor(3, b)) {
        (None, None) => "1".to_string(),
        (Some(x), None) | (None, Some(x)) => x,
        (Some(x), Some(y)) => format!("{x}·{y}"),
    }
}

pub fn grid_lattice(s: u32, t: u32) -> Result<LatticeView> {
    grid_lattice_bounded(s, t, DEFAULT_DIVISOR_LIMIT)
}

/// The divisor lattice of `2^s·3^t`, an `(s+1)×(t+1)` grid.
pub fn grid_lattice_bounded(s: u32, t: u32, limit: usize) -> Result<LatticeView> {
    let value = |e: &[u32]| -> BigUint {
        num_traits::pow(BigUint::from(2u32), e[0] as usize)
            * num_traits::pow(BigUint::from(3u32), e[1] as usize)
    };
    product_of_chains(&[s, t], value, |e| grid_label(e[0], e[1]), limit)
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub max_n: usize,
    pub chain_limit: usize,
    pub pentagon_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_n: 1000,
            chain_limit: DEFAULT_CHAIN_LIMIT,
            pentagon_limit: DEFAULT_PENTAGON_LIMIT,
        }
    }
}

/// Smallest `n` with the j-th inequality broken after raising `h_1` by `n`,
/// minimized over `j`. Only valid when `h_1` is absent from every right-hand
/// side, i.e. `s ≥ 3`.
pub fn closed_form_threshold(base_h: &[BigInt]) -> Option<BigInt> {
    let s = base_h.len().checked_sub(1)?;
    let mut lhs = base_h[0].clone();
    let mut rhs = base_h[s].clone();
    let mut best: Option<BigInt> = None;
    for j in 1..=s / 2 {
        lhs += &base_h[j];
        rhs += &base_h[s - j];
        let need: BigInt = (&rhs - &lhs + BigInt::one()).max(BigInt::one());
        best = Some(match best {
            Some(b) if b <= need => b,
            _ => need,
        });
    }
    best
}

struct Threshold {
    n: usize,
    lattice: LatticeView,
    base_h: Vec<BigInt>,
    final_h: Vec<BigInt>,
    site: String,
    site_maximal_chains: u128,
}

/// Duplicates at `2^s` until Stanley's inequalities fail, checking the
/// duplication preconditions (irreducible, pure, on one maximal chain) and
/// the `h_1 + n` increment at every step.
fn search(s: u32, t: u32, opts: &SearchOptions) -> Result<Option<Threshold>> {
    let base = grid_lattice(s, t)?;
    let site = grid_label(s, 0);
    let site_idx = base.poset().index_of(&site)?;
    let site_maximal_chains = base.poset().maximal_chain_count_through_idx(site_idx);

    let base_full = h_vector_bounded(base.poset(), opts.chain_limit)?;
    let base_h = base_full.truncate()?;
    if !stanley_check(&base_h)?.passed {
        return Err(Error::ContractViolation(format!(
            "base h-vector of 2^{s}·3^{t} already fails the inequalities"
        )));
    }

    let mut current = base;
    for n in 1..=opts.max_n {
        let site_now = current.poset().index_of(&site)?;
        let poset = current.poset();
        if !poset.is_pure() || poset.maximal_chain_count_through_idx(site_now) != 1 {
            return Err(Error::ContractViolation(format!(
                "`{site}` is no longer on exactly one maximal chain of a pure poset at step {n}"
            )));
        }
        current = match duplicate_lattice(&current, &site) {
            Ok((next, _)) => next,
            Err(Error::NotIrreducible { .. }) => {
                return Err(Error::IrreducibilityLost {
                    element: site,
                    step: n,
                })
            }
            Err(e) => return Err(e),
        };

        let h = h_vector_bounded(current.poset(), opts.chain_limit)?.truncate()?;
        let mut expected = base_h.clone();
        expected[1] += n;
        if h != expected {
            return Err(Error::ContractViolation(format!(
                "h-vector after {n} duplications is {h:?}, expected {expected:?}"
            )));
        }
        if !stanley_check(&h)?.passed {
            return Ok(Some(Threshold {
                n,
                lattice: current,
                base_h,
                final_h: h,
                site,
                site_maximal_chains,
            }));
        }
    }
    Ok(None)
}

/// Finds the smallest `n ≥ 1` for which `L^[n]` (duplicated at `2^s`) has an
/// h-vector violating Stanley's inequalities, and certifies it.
pub fn find_minimal_n(
    s: u32,
    t: u32,
    opts: &SearchOptions,
) -> Result<Option<CounterexampleCertificate>> {
    if !(3 <= s && s <= t) {
        return Err(Error::InvalidParameters(format!(
            "certificates require 3 <= s <= t, got s = {s}, t = {t}"
        )));
    }
    let Some(found) = search(s, t, opts)? else {
        return Ok(None);
    };

    if let Some(closed) = closed_form_threshold(&found.base_h) {
        if closed != BigInt::from(found.n) {
            return Err(Error::ContractViolation(format!(
                "search found n = {}, closed form gives {closed}",
                found.n
            )));
        }
    }

    let report = stanley_check(&found.final_h)?;
    let v = report
        .first_violation()
        .expect("search stops only on a violation")
        .clone();
    let identity = found.lattice.is_modular_by_identity().holds();
    let pentagon = found
        .lattice
        .is_modular_by_pentagon_bounded(opts.pentagon_limit)?
        .holds();

    Ok(Some(CounterexampleCertificate {
        s,
        t,
        n: found.n,
        site: found.site,
        site_maximal_chains: found.site_maximal_chains,
        base_h: found.base_h,
        final_h: found.final_h,
        violated_j: v.j,
        lhs: v.lhs,
        rhs: v.rhs,
        modularity_witnessed: identity && pentagon,
        element_count: found.lattice.len(),
    }))
}

/// The same search for `2 ≤ s ≤ t`, returning only the threshold. No
/// certificate is issued outside `s ≥ 3`.
pub fn experimental_threshold(s: u32, t: u32, opts: &SearchOptions) -> Result<Option<usize>> {
    if !(2 <= s && s <= t) {
        return Err(Error::InvalidParameters(format!(
            "experimental search requires 2 <= s <= t, got s = {s}, t = {t}"
        )));
    }
    let base_h = h_vector_bounded(grid_lattice(s, t)?.poset(), opts.chain_limit)?.truncate()?;
    let degree = base_h.len() - 1;
    if degree <= 2 {
        // h_1 sits on both sides of every inequality, so raising it changes nothing
        return Ok(None);
    }
    Ok(search(s, t, opts)?.map(|found| found.n))
}

/// Rebuilds `L^[n]` for a certificate, for independent re-verification.
pub fn rebuild_counterexample(s: u32, t: u32, n: usize) -> Result<LatticeView> {
    let base = grid_lattice(s, t)?;
    let (lattice, _) = crate::duplication::iterate_duplication(&base, &grid_label(s, 0), n)?;
    Ok(lattice)
}

impl CounterexampleCertificate {
    /// `final_h = base_h + (0, n, 0, …)` and `lhs > rhs`.
    pub fn is_consistent(&self) -> bool {
        let mut expected = self.base_h.clone();
        if expected.len() < 2 {
            return false;
        }
        expected[1] += self.n;
        expected == self.final_h && self.lhs > self.rhs && self.modularity_witnessed
    }
}
