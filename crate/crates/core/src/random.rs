//! Seeded generators of posets and lattices for property tests.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Same seed and configuration, same sequence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::LatticeView;
use crate::poset::Poset;

const MAX_ATTEMPTS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_elements: usize,
    pub purity_required: bool,
    pub lattice_required: bool,
}

impl GenConfig {
    pub fn new(seed: u64, max_elements: usize) -> Self {
        GenConfig {
            seed,
            max_elements,
            purity_required: false,
            lattice_required: false,
        }
    }

    pub fn pure(mut self) -> Self {
        self.purity_required = true;
        self
    }

    pub fn lattice(mut self) -> Self {
        self.lattice_required = true;
        self
    }
}

/// A finite lattice given by its order matrix, used while composing.
#[derive(Clone, Debug)]
struct Block {
    n: usize,
    leq: Vec<bool>,
}

impl Block {
    fn chain(n: usize) -> Block {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in a..n {
                leq[a * n + b] = true;
            }
        }
        Block { n, leq }
    }

    /// Bottom, `k` pairwise incomparable atoms, top.
    fn diamond(k: usize) -> Block {
        let n = k + 2;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
            leq[a] = true;
            leq[a * n + n - 1] = true;
        }
        Block { n, leq }
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    fn product(&self, other: &Block) -> Block {
        let n = self.n * other.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / other.n, a % other.n);
                let (b1, b2) = (b / other.n, b % other.n);
                leq[a * n + b] = self.le(a1, b1) && other.le(a2, b2);
            }
        }
        Block { n, leq }
    }

    /// Every element of `other` placed above every element of `self`;
    /// with `glue`, the top of `self` and the bottom of `other` are merged.
    fn ordinal_sum(&self, other: &Block, glue: bool) -> Block {
        let shift = if glue { self.n - 1 } else { self.n };
        let n = shift + other.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = match (a < shift, b < shift) {
                    (true, true) => self.le(a, b),
                    (true, false) => true,
                    (false, true) => false,
                    (false, false) => other.le(a - shift, b - shift),
                };
            }
        }
        Block { n, leq }
    }

    fn into_poset(self) -> Result<Poset> {
        let labels = (0..self.n).map(|i| format!("e{i}")).collect();
        Poset::from_order_fn(labels, |a, b| self.le(a, b))
    }
}

/// Stateful generator; successive calls continue the same random stream.
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Generator { cfg, rng }
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    /// A poset honoring the configuration. `lattice_required` yields a
    /// lattice (modular when purity is also required, since modular lattices
    /// are graded).
    pub fn poset(&mut self) -> Result<Poset> {
        let max = self.cfg.max_elements.max(1);
        match (self.cfg.lattice_required, self.cfg.purity_required) {
            (true, true) => Ok(self.modular_lattice()?.into_poset()),
            (true, false) => Ok(self.lattice()?.into_poset()),
            (false, true) => self.graded_poset(max),
            (false, false) => self.dag_poset(max),
        }
    }

    /// Random edges `i -> j` for `i < j` in a shuffled order, then reduced.
    fn dag_poset(&mut self, max: usize) -> Result<Poset> {
        let n = self.rng.random_range(1..=max);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let density: f64 = self.rng.random_range(0.1..0.7);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.rng.random_bool(density) {
                    edges.push((perm[i], perm[j]));
                }
            }
        }
        let labels = (0..n).map(|i| format!("p{i}")).collect();
        Poset::from_edges(labels, edges)
    }

    /// Levels joined only by covers between consecutive levels; every
    /// non-top element has an upper cover and every non-bottom element a
    /// lower cover, so all maximal chains run bottom level to top level.
    fn graded_poset(&mut self, max: usize) -> Result<Poset> {
        let total = self.rng.random_range(1..=max);
        let levels = self.rng.random_range(1..=total);
        let mut sizes = vec![1usize; levels];
        for _ in levels..total {
            let k = self.rng.random_range(0..levels);
            sizes[k] += 1;
        }
        let mut start = Vec::with_capacity(levels);
        let mut acc = 0;
        for &s in &sizes {
            start.push(acc);
            acc += s;
        }
        let mut edges = Vec::new();
        for k in 1..levels {
            let below = start[k - 1]..start[k - 1] + sizes[k - 1];
            let here = start[k]..start[k] + sizes[k];
            let mut has_upper = vec![false; sizes[k - 1]];
            for v in here.clone() {
                let first = self.rng.random_range(below.clone());
                edges.push((first, v));
                has_upper[first - below.start] = true;
                for u in below.clone() {
                    if u != first && self.rng.random_bool(0.35) {
                        edges.push((u, v));
                        has_upper[u - below.start] = true;
                    }
                }
            }
            for (off, covered) in has_upper.into_iter().enumerate() {
                if !covered {
                    let v = self.rng.random_range(here.clone());
                    edges.push((below.start + off, v));
                }
            }
        }
        let labels = (0..total).map(|i| format!("p{i}")).collect();
        Poset::from_edges(labels, edges)
    }

    /// A random lattice: the intersection-closed family generated by random
    /// subsets of a small ground set, plus the full set. Often non-modular.
    pub fn lattice(&mut self) -> Result<LatticeView> {
        let max = self.cfg.max_elements.max(1);
        for _ in 0..MAX_ATTEMPTS {
            let ground = self.rng.random_range(1..=4u32);
            let full = (1u32 << ground) - 1;
            let mut family = vec![full];
            let seeds = self.rng.random_range(0..=ground as usize + 3);
            for _ in 0..seeds {
                let m = self.rng.random_range(0..=full);
                if !family.contains(&m) {
                    family.push(m);
                }
            }
            loop {
                let mut grown = false;
                for i in 0..family.len() {
                    for j in 0..family.len() {
                        let m = family[i] & family[j];
                        if !family.contains(&m) {
                            family.push(m);
                            grown = true;
                        }
                    }
                }
                if !grown {
                    break;
                }
            }
            if family.len() > max {
                continue;
            }
            family.sort_by_key(|&m| (m.count_ones(), m));
            let labels = (0..family.len()).map(|i| format!("e{i}")).collect();
            let poset = Poset::from_order_fn(labels, |a, b| family[a] & !family[b] == 0)?;
            return LatticeView::new(poset)
                .map_err(|e| Error::ContractViolation(format!("closure system: {e}")));
        }
        Err(Error::GenerationFailed {
            attempts: MAX_ATTEMPTS,
        })
    }

    fn block(&mut self, budget: usize, depth: usize) -> Block {
        let choice = if depth == 0 || budget < 4 {
            0
        } else {
            self.rng.random_range(0..5)
        };
        match choice {
            1 if budget >= 5 => Block::diamond(self.rng.random_range(3..=(budget - 2).min(4))),
            2 => {
                let a = self.rng.random_range(2..=budget.min(4));
                let b = self.rng.random_range(2..=(budget / a).max(2));
                Block::chain(a).product(&Block::chain(b))
            }
            3 | 4 => {
                let left = self.block(budget / 2, depth - 1);
                let rest = budget.saturating_sub(left.n).max(1);
                let right = self.block(rest, depth - 1);
                left.ordinal_sum(&right, choice == 3)
            }
            _ => Block::chain(self.rng.random_range(1..=budget.clamp(1, 4))),
        }
    }

    /// A modular lattice built from chains, grids and diamonds by products
    /// and (glued) ordinal sums, then verified against the modular law.
    pub fn modular_lattice(&mut self) -> Result<LatticeView> {
        let max = self.cfg.max_elements.max(1);
        for _ in 0..MAX_ATTEMPTS {
            let block = self.block(max, 3);
            if block.n > max {
                continue;
            }
            let lattice = LatticeView::new(block.into_poset()?)?;
            if lattice.is_modular_by_identity().holds() {
                return Ok(lattice);
            }
        }
        Err(Error::GenerationFailed {
            attempts: MAX_ATTEMPTS,
        })
    }
}

pub fn random_poset(cfg: &GenConfig) -> Result<Poset> {
    if cfg.max_elements == 0 {
        return Err(Error::InvalidParameters(
            "max_elements must be at least 1".into(),
        ));
    }
    Generator::new(cfg.clone()).poset()
}

pub fn random_modular_lattice(cfg: &GenConfig) -> Result<LatticeView> {
    if cfg.max_elements == 0 {
        return Err(Error::InvalidParameters(
            "max_elements must be at least 1".into(),
        ));
    }
    Generator::new(cfg.clone()).modular_lattice()
}

pub fn random_lattice(cfg: &GenConfig) -> Result<LatticeView> {
    if cfg.max_elements == 0 {
        return Err(Error::InvalidParameters(
            "max_elements must be at least 1".into(),
        ));
    }
    Generator::new(cfg.clone()).lattice()
}
