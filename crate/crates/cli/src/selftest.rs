//! Seeded property suite behind `check --selftest`.

use modlat::io::{from_json, ToJson};
use modlat::order_complex::{f_from_h, h_from_f, hilbert_series_check};
use modlat::random::{GenConfig, Generator};
use modlat::{duplicate, duplicate_lattice, f_vector, h_vector, LatticeView};
use serde_json::{json, Value};

#[derive(Default)]
pub struct Tally {
    checked: usize,
    failed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
    }

    fn to_json(&self) -> Value {
        json!({ "checked": self.checked, "failed": self.failed })
    }
}

pub struct Summary {
    seed: u64,
    round_trip: Tally,
    hilbert: Tally,
    increment: Tally,
    modular_duplication: Tally,
    method_agreement: Tally,
}

impl Summary {
    pub fn failures(&self) -> usize {
        self.tallies().iter().map(|(_, t)| t.failed).sum()
    }

    fn tallies(&self) -> [(&'static str, &Tally); 5] {
        [
            ("round_trip", &self.round_trip),
            ("hilbert_series", &self.hilbert),
            ("h1_increment", &self.increment),
            ("modular_duplication", &self.modular_duplication),
            ("method_agreement", &self.method_agreement),
        ]
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("seed".into(), json!(self.seed));
        for (name, tally) in self.tallies() {
            obj.insert(name.into(), tally.to_json());
        }
        Value::Object(obj)
    }
}

fn modular_both_ways(l: &LatticeView) -> modlat::Result<bool> {
    Ok(l.is_modular_by_identity().holds() && l.is_modular_by_pentagon()?.holds())
}

pub fn run(seed: u64, count: usize) -> modlat::Result<Summary> {
    let mut summary = Summary {
        seed,
        round_trip: Tally::default(),
        hilbert: Tally::default(),
        increment: Tally::default(),
        modular_duplication: Tally::default(),
        method_agreement: Tally::default(),
    };

    let mut posets = Generator::new(GenConfig::new(seed, 8));
    for _ in 0..count {
        let p = posets.poset()?;
        let f = f_vector(&p)?;
        let json_ok = from_json(&p.to_json())? == p;
        summary
            .round_trip
            .record(json_ok && f_from_h(&h_from_f(&f)) == f);
        summary.hilbert.record(hilbert_series_check(&p, 9)?);
    }

    let mut pure = Generator::new(GenConfig::new(seed, 10).pure());
    for _ in 0..count {
        let p = pure.poset()?;
        let h = h_vector(&p)?;
        for x in 0..p.len() {
            if p.maximal_chain_count_through_idx(x) != 1 {
                continue;
            }
            let (q, _) = duplicate(&p, p.label(x))?;
            let mut expected = h.entries().to_vec();
            if let Some(h1) = expected.get_mut(1) {
                *h1 += 1;
            }
            summary
                .increment
                .record(h_vector(&q)?.entries() == expected.as_slice());
        }
    }

    let mut modular = Generator::new(GenConfig::new(seed, 12));
    for _ in 0..count {
        let l = modular.modular_lattice()?;
        for x in 0..l.len() {
            if l.is_join_irreducible_idx(x) && l.is_meet_irreducible_idx(x) {
                let ok = match duplicate_lattice(&l, l.poset().label(x)) {
                    Ok((d, _)) => modular_both_ways(&d)?,
                    Err(_) => false,
                };
                summary.modular_duplication.record(ok);
            }
        }
    }

    let mut lattices = Generator::new(GenConfig::new(seed, 12));
    for _ in 0..count {
        let l = lattices.lattice()?;
        let agree = l.is_modular_by_identity().holds() == l.is_modular_by_pentagon()?.holds();
        summary.method_agreement.record(agree);
    }

    Ok(summary)
}
