//! Duplicating an element of a poset.
//!
//! `P_x` adds a clone `x'` of `x`: the order among old elements is unchanged,
//! `b < x'` iff `b < x`, `x' < b` iff `x < b`, and `x`, `x'` are
//! incomparable. When `x` is both join- and meet-irreducible in a lattice,
//! the duplicate is again a lattice, and a modular one if the input was.

use crate::error::{Error, Result};
use crate::lattice::LatticeView;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicationCertificate {
    pub site: String,
    pub new_label: String,
    pub was_join_irreducible: bool,
    pub was_meet_irreducible: bool,
    pub maximal_chains_through_site: u128,
}

/// `x'`, `x''`, … : the first primed label not already in `p`.
fn fresh_label(p: &Poset, site: &str) -> String {
    let mut label = format!("{site}'");
    while p.contains(&label) {
        label.push('\'');
    }
    label
}

pub fn duplicate(p: &Poset, x: &str) -> Result<(Poset, DuplicationCertificate)> {
    let site = p.index_of(x)?;
    let new_label = fresh_label(p, x);
    let clone = p.len();

    let mut labels = p.labels().to_vec();
    labels.push(new_label.clone());
    // x' gets exactly the lower and upper covers of x; the order this
    // generates is the one prescribed for the duplicate.
    let mut edges = p.covers().to_vec();
    edges.extend(p.lower_covers(site).iter().map(|&b| (b, clone)));
    edges.extend(p.upper_covers(site).iter().map(|&c| (clone, c)));
    let dup = Poset::from_edges(labels, edges)?;

    let cert = DuplicationCertificate {
        site: x.to_string(),
        new_label,
        was_join_irreducible: p.lower_covers(site).len() == 1,
        was_meet_irreducible: p.upper_covers(site).len() == 1,
        maximal_chains_through_site: p.maximal_chain_count_through_idx(site),
    };
    Ok((dup, cert))
}

/// Duplicates a join- and meet-irreducible element of a lattice.
pub fn duplicate_lattice(
    l: &LatticeView,
    x: &str,
) -> Result<(LatticeView, DuplicationCertificate)> {
    duplicate_lattice_at_step(l, x, None)
}

fn duplicate_lattice_at_step(
    l: &LatticeView,
    x: &str,
    step: Option<usize>,
) -> Result<(LatticeView, DuplicationCertificate)> {
    let site = l.poset().index_of(x)?;
    let join_irreducible = l.is_join_irreducible_idx(site);
    let meet_irreducible = l.is_meet_irreducible_idx(site);
    if !(join_irreducible && meet_irreducible) {
        return Err(Error::NotIrreducible {
            element: x.to_string(),
            join_irreducible,
            meet_irreducible,
            step,
        });
    }
    let (p, cert) = duplicate(l.poset(), x)?;
    let lattice = LatticeView::new(p).map_err(|e| {
        Error::ContractViolation(format!(
            "duplicating irreducible `{x}` did not give a lattice: {e}"
        ))
    })?;
    Ok((lattice, cert))
}

/// `L^[1] = L_x`, `L^[k] = (L^[k-1])_x`. Irreducibility of `x` is checked
/// again before every step.
pub fn iterate_duplication(
    l: &LatticeView,
    x: &str,
    n: usize,
) -> Result<(LatticeView, Vec<DuplicationCertificate>)> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "number of duplications must be positive".into(),
        ));
    }
    let mut current = l.clone();
    let mut certs = Vec::with_capacity(n);
    for step in 1..=n {
        let (next, cert) = duplicate_lattice_at_step(&current, x, Some(step))?;
        certs.push(cert);
        current = next;
    }
    Ok((current, certs))
}
