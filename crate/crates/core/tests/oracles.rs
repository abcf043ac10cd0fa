//! Worked examples checked against brute-force oracles.

mod common;

use common::*;
use modlat::constructions::{
    closed_form_threshold, divisor_lattice, find_minimal_n, grid_label, grid_lattice,
    rebuild_counterexample, SearchOptions,
};
use modlat::order_complex::{hilbert_function, hilbert_series_check};
use modlat::{duplicate, f_vector, h_vector, iterate_duplication, LatticeView, Poset};

fn pentagon() -> Poset {
    Poset::from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
    )
    .unwrap()
}

#[test]
fn pentagon_chain_statistics() {
    let p = pentagon();
    assert_eq!(f_by_subsets(&p), vec![1, 5, 8, 5, 1]);
    assert_eq!(small(f_vector(&p).unwrap().counts()), f_by_subsets(&p));

    let mut maximal = maximal_chains_by_subsets(&p);
    maximal.sort();
    let ours: Vec<Vec<usize>> = p
        .maximal_chains()
        .unwrap()
        .into_iter()
        .map(|c| {
            let mut v = c.0;
            v.sort();
            v
        })
        .collect();
    assert_eq!(ours, maximal);
    assert!(!p.is_pure());
}

#[test]
fn grid_3_4_h_vector_matches_subset_filter() {
    let l = grid_lattice(3, 4).unwrap();
    let f = f_by_subsets(l.poset());
    assert_eq!(f.len(), 9, "largest chain has 8 elements");
    let h = h_by_formula(&f);
    assert_eq!(h, vec![1, 12, 18, 4, 0, 0, 0, 0, 0]);

    let ours = h_vector(l.poset()).unwrap();
    assert_eq!(small(ours.entries()), h);
    assert_eq!(ours.s(), Some(3));
    assert_eq!(small(&ours.truncate().unwrap()), vec![1, 12, 18, 4]);
}

#[test]
fn grid_3_4_shape() {
    let l = grid_lattice(3, 4).unwrap();
    let p = l.poset();
    assert_eq!(p.len(), 20);
    // s(t+1) + t(s+1)
    assert_eq!(p.covers().len(), 3 * 5 + 4 * 4);
    assert!(p.is_pure());
    assert_eq!(p.height(), 8);
    assert_eq!(p.maximal_chains().unwrap().len(), 35);
    assert!(p.maximal_chains().unwrap().iter().all(|c| c.len() == 8));
    assert!(l.is_distributive().holds());
    assert!(l.is_modular_by_identity().holds());
    assert!(l.is_modular_by_pentagon().unwrap().holds());
}

#[test]
fn site_two_cubed() {
    let l = grid_lattice(3, 4).unwrap();
    let x = grid_label(3, 0);
    assert_eq!(x, "2^3");
    assert_eq!(l.poset().maximal_chain_count_through(&x).unwrap(), 1);
    assert!(l.is_join_irreducible(&x).unwrap());
    assert!(l.is_meet_irreducible(&x).unwrap());
    let i = l.poset().index_of(&x).unwrap();
    let upper: Vec<&str> = l
        .poset()
        .upper_covers(i)
        .iter()
        .map(|&u| l.poset().label(u))
        .collect();
    assert_eq!(upper, ["2^3·3"]);
}

#[test]
fn duplicating_two_cubed() {
    let l = grid_lattice(3, 4).unwrap();
    let (p, cert) = duplicate(l.poset(), "2^3").unwrap();
    assert_eq!(p.len(), 21);
    assert_eq!(cert.new_label, "2^3'");
    for label in ["2^3", "2^3'"] {
        let i = p.index_of(label).unwrap();
        let lower: Vec<&str> = p.lower_covers(i).iter().map(|&u| p.label(u)).collect();
        let upper: Vec<&str> = p.upper_covers(i).iter().map(|&u| p.label(u)).collect();
        assert_eq!(lower, ["2^2"]);
        assert_eq!(upper, ["2^3·3"]);
    }
}

#[test]
fn ten_duplications_give_thirty_element_modular_lattice() {
    let l = grid_lattice(3, 4).unwrap();
    let (l10, certs) = iterate_duplication(&l, "2^3", 10).unwrap();
    assert_eq!(l10.len(), 30);
    assert_eq!(certs.len(), 10);
    assert!(l10.is_modular_by_identity().holds());
    assert!(l10.is_modular_by_pentagon().unwrap().holds());
    assert!(!l10.is_distributive().holds());
}

#[test]
fn increment_law_by_clique_enumeration() {
    let base = grid_lattice(3, 4).unwrap();
    let base_h = h_by_formula(&f_by_cliques(base.poset()));
    let mut current = base;
    for n in 1..=10i128 {
        current = modlat::duplicate_lattice(&current, "2^3").unwrap().0;
        let h = h_by_formula(&f_by_cliques(current.poset()));
        let mut expected = base_h.clone();
        expected[1] += n;
        assert_eq!(h, expected, "n = {n}");
        assert_eq!(small(h_vector(current.poset()).unwrap().entries()), h);
    }
}

/// First `n` at which `h_0 + … + h_j > h_s + … + h_{s-j}` for some j, by
/// scanning `n` upward over oracle-computed vectors.
fn oracle_threshold(base_h: &[i128]) -> (i128, usize, i128, i128) {
    let s = base_h.iter().rposition(|&h| h != 0).unwrap();
    for n in 1.. {
        let mut h = base_h[..=s].to_vec();
        h[1] += n;
        for j in 1..=s / 2 {
            let lhs: i128 = h[..=j].iter().sum();
            let rhs: i128 = h[s - j..=s].iter().sum();
            if lhs > rhs {
                return (n, j, lhs, rhs);
            }
        }
    }
    unreachable!()
}

#[test]
fn certificate_3_4() {
    let base = grid_lattice(3, 4).unwrap();
    let base_h = h_by_formula(&f_by_subsets(base.poset()));
    let (n, j, lhs, rhs) = oracle_threshold(&base_h);
    assert_eq!((n, j, lhs, rhs), (10, 1, 23, 22));
    // closed form from the j = 1 inequality
    assert_eq!(n, (base_h[3] + base_h[2]) - (base_h[0] + base_h[1]) + 1);

    let cert = find_minimal_n(3, 4, &SearchOptions::default())
        .unwrap()
        .unwrap();
    assert_eq!(cert.n as i128, n);
    assert_eq!(small(&cert.base_h), vec![1, 12, 18, 4]);
    assert_eq!(small(&cert.final_h), vec![1, 22, 18, 4]);
    assert_eq!(cert.violated_j, j);
    assert_eq!(small(&[cert.lhs.clone(), cert.rhs.clone()]), vec![lhs, rhs]);
    assert!(cert.modularity_witnessed);
    assert_eq!(cert.element_count, 30);
    assert_eq!(cert.site, "2^3");
    assert_eq!(cert.site_maximal_chains, 1);
    assert!(cert.is_consistent());

    // the 30-element lattice, rebuilt and recounted by clique enumeration
    let l = rebuild_counterexample(3, 4, cert.n).unwrap();
    let h = h_by_formula(&f_by_cliques(l.poset()));
    assert_eq!(&h[..4], &[1, 22, 18, 4]);
    assert!(h[4..].iter().all(|&x| x == 0));
}

#[test]
fn certificate_3_3() {
    let base = grid_lattice(3, 3).unwrap();
    let base_h = h_by_formula(&f_by_subsets(base.poset()));
    assert_eq!(base_h, vec![1, 9, 9, 1, 0, 0, 0, 0]);
    let (n, _, _, _) = oracle_threshold(&base_h);
    assert_eq!(n, (base_h[3] + base_h[2]) - (1 + base_h[1]) + 1);
    assert_eq!(n, 1);

    let cert = find_minimal_n(3, 3, &SearchOptions::default())
        .unwrap()
        .unwrap();
    assert_eq!(cert.n as i128, n);
    assert_eq!(small(&cert.final_h), vec![1, 10, 9, 1]);
    assert_eq!(cert.site_maximal_chains, 1);
    assert!(cert.modularity_witnessed);
}

#[test]
fn certificates_for_several_grids() {
    let opts = SearchOptions {
        pentagon_limit: 80,
        ..SearchOptions::default()
    };
    for (s, t) in [(3, 5), (4, 4), (4, 5)] {
        let base = grid_lattice(s, t).unwrap();
        let base_h = h_by_formula(&f_by_cliques(base.poset()));
        let (n, j, lhs, rhs) = oracle_threshold(&base_h);
        let cert = find_minimal_n(s, t, &opts).unwrap().unwrap();
        assert_eq!(cert.n as i128, n, "(s, t) = ({s}, {t})");
        assert_eq!(cert.violated_j, j);
        assert_eq!(small(&[cert.lhs.clone(), cert.rhs.clone()]), vec![lhs, rhs]);
        assert_eq!(
            closed_form_threshold(&cert.base_h).map(|b| small(&[b])[0]),
            Some(n)
        );
        assert!(cert.modularity_witnessed);
    }
}

#[test]
fn divisor_lattice_of_12() {
    let l = divisor_lattice(12).unwrap();
    // brute-force bounds in the divisibility order
    let nums = [1u32, 2, 3, 4, 6, 12];
    for &a in &nums {
        for &b in &nums {
            let ub: Vec<u32> = nums
                .iter()
                .copied()
                .filter(|&z| z % a == 0 && z % b == 0)
                .collect();
            let lub = *ub
                .iter()
                .find(|&&z| ub.iter().all(|&w| w % z == 0))
                .unwrap();
            let lb: Vec<u32> = nums
                .iter()
                .copied()
                .filter(|&z| a % z == 0 && b % z == 0)
                .collect();
            let glb = *lb
                .iter()
                .find(|&&z| lb.iter().all(|&w| z % w == 0))
                .unwrap();
            assert_eq!(
                l.join(&a.to_string(), &b.to_string()).unwrap(),
                lub.to_string()
            );
            assert_eq!(
                l.meet(&a.to_string(), &b.to_string()).unwrap(),
                glb.to_string()
            );
        }
    }
    assert_eq!(hilbert_function(l.poset(), 1), 6.into());
}

#[test]
fn grid_1_1_is_boolean_square() {
    let l = grid_lattice(1, 1).unwrap();
    assert_eq!(l.len(), 4);
    // d = 3 (1 < 2 < 6), truncated vector (1, 1)
    assert_eq!(
        small(h_vector(l.poset()).unwrap().entries()),
        vec![1, 1, 0, 0]
    );
    assert_eq!(grid_lattice(0, 0).unwrap().len(), 1);
}

#[test]
fn hilbert_series_examples() {
    let antichain = Poset::from_covers(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
    let chain2 = Poset::from_covers(["a", "b"], [("a", "b")]).unwrap();
    for n in 0..6 {
        assert_eq!(
            hilbert_function(&antichain, n),
            multichains_by_enumeration(&antichain, n).into()
        );
        assert_eq!(
            hilbert_function(&chain2, n),
            multichains_by_enumeration(&chain2, n).into()
        );
    }
    assert!(hilbert_series_check(&antichain, 5).unwrap());
    assert!(hilbert_series_check(&chain2, 5).unwrap());
    let grid = grid_lattice(3, 4).unwrap();
    assert!(hilbert_series_check(grid.poset(), 6).unwrap());
    for n in 0..4 {
        assert_eq!(
            hilbert_function(grid.poset(), n),
            multichains_by_enumeration(grid.poset(), n).into()
        );
    }
}

#[test]
fn modular_identity_scan_of_pentagon() {
    let l = LatticeView::new(pentagon()).unwrap();
    // exhaustive oracle over all 125 triples
    let mut failing = Vec::new();
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                if l.poset().leq_idx(a, c)
                    && l.join_idx(a, l.meet_idx(b, c)) != l.meet_idx(l.join_idx(a, b), c)
                {
                    failing.push([a, b, c]);
                }
            }
        }
    }
    assert!(!failing.is_empty());
    assert_eq!(l.is_modular_by_identity().witness(), Some(&failing[0]));
}
