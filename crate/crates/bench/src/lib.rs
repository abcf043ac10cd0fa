//! Fixtures shared by the criterion benchmarks.

use modlat::constructions::{grid_label, grid_lattice};
use modlat::{iterate_duplication, LatticeView};

/// `L^[n]`: the `2^s·3^t` divisor lattice duplicated `n` times at `2^s`.
pub fn duplicated_grid(s: u32, t: u32, n: usize) -> LatticeView {
    let base = grid_lattice(s, t).expect("grid within bounds");
    if n == 0 {
        return base;
    }
    iterate_duplication(&base, &grid_label(s, 0), n)
        .expect("2^s stays irreducible")
        .0
}
