//! Well colorings and the combinatorial knot.
//!
//! The traversal behind the existence theorem alternates π- and ϱ-steps; its
//! cycles are always even, so odd positions go to C1 and even positions to C2.
//! The knot μ follows π on C1 corners and ϱ on C2 corners and conjugates π
//! to ϱ. Any map then factors as its knot times a selfconjugate map.

use crate::error::{Error, Result};
use crate::map::CombMap;
use crate::perm::{Corner, Perm};

/// A 2-coloring of the corners in which every π-pair and ϱ-pair is bichromatic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WellColoring {
    // in_c1[c-1] is true when corner c has color C1
    in_c1: Vec<bool>,
}

impl WellColoring {
    pub fn is_c1(&self, c: Corner) -> bool {
        self.in_c1[c - 1]
    }

    pub fn order(&self) -> usize {
        self.in_c1.len()
    }

    pub fn c1(&self) -> Vec<Corner> {
        (1..=self.in_c1.len()).filter(|&c| self.is_c1(c)).collect()
    }

    pub fn c2(&self) -> Vec<Corner> {
        (1..=self.in_c1.len()).filter(|&c| !self.is_c1(c)).collect()
    }
}

/// A combinatorial knot: μ together with its coloring and the (π, ϱ) it joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Knot {
    pub mu: Perm,
    pub coloring: WellColoring,
    pub pi: Perm,
    pub rho: Perm,
}

/// The canonical well coloring of a map's corners.
///
/// Each traversal cycle starts at the smallest uncolored corner, which is
/// colored C1; steps alternate π (from C1) and ϱ (from C2).
pub fn well_color(map: &CombMap) -> WellColoring {
    let n = map.order();
    let pi = map.n_matching();
    let rho = map.e_matching();
    let mut colored = vec![false; n];
    let mut in_c1 = vec![false; n];
    for start in 1..=n {
        if colored[start - 1] {
            continue;
        }
        let mut c = start;
        let mut odd = true;
        loop {
            colored[c - 1] = true;
            in_c1[c - 1] = odd;
            c = if odd { pi.apply(c) } else { rho.apply(c) };
            odd = !odd;
            if c == start {
                break;
            }
        }
    }
    WellColoring { in_c1 }
}

/// The canonical knot of a map; satisfies `π^μ = ϱ`.
pub fn knot_of(map: &CombMap) -> Knot {
    let coloring = well_color(map);
    let pi = map.n_matching().clone();
    let rho = map.e_matching();
    let images = (1..=map.order())
        .map(|c| {
            if coloring.is_c1(c) {
                pi.apply(c)
            } else {
                rho.apply(c)
            }
        })
        .collect();
    Knot {
        mu: Perm::from_images(images).expect("knot is a bijection"),
        coloring,
        pi,
        rho,
    }
}

impl Knot {
    /// Check the defining invariants: μ follows π on C1 and ϱ on C2,
    /// and conjugates π to ϱ.
    pub fn is_valid(&self) -> bool {
        let n = self.mu.order();
        (1..=n).all(|c| {
            let expect = if self.coloring.is_c1(c) {
                self.pi.apply(c)
            } else {
                self.rho.apply(c)
            };
            self.mu.apply(c) == expect
        }) && self.pi.conjugate(&self.mu).expect("orders match") == self.rho
    }

    /// Reverse the direction of one μ-cycle (0-based index into the canonical
    /// cycle order); the colors on that cycle swap and the result is a knot.
    pub fn reverse_cycle(&self, cycle_index: usize) -> Result<Knot> {
        let cycles = self.mu.cycles();
        let cycle = cycles
            .get(cycle_index)
            .ok_or(Error::BadCycleIndex(cycle_index, cycles.len()))?;
        let mut reversed = cycle.clone();
        reversed[1..].reverse();
        let mut all: Vec<Vec<Corner>> = cycles.clone();
        all[cycle_index] = reversed;
        let mu = Perm::from_cycles(&all, self.mu.order())?;
        let mut in_c1 = (1..=self.mu.order())
            .map(|c| self.coloring.is_c1(c))
            .collect::<Vec<_>>();
        for &c in cycle {
            in_c1[c - 1] = !in_c1[c - 1];
        }
        Ok(Knot {
            mu,
            coloring: WellColoring { in_c1 },
            pi: self.pi.clone(),
            rho: self.rho.clone(),
        })
    }
}

/// Factor a map as knot × selfconjugate: returns `(μ, A)` with `A = μ^{-1}·P`,
/// so the μ-map times the A-map recomposes the input and `A ∈ K_π`.
pub fn decompose(map: &CombMap) -> (Knot, CombMap) {
    let knot = knot_of(map);
    let a = knot
        .mu
        .inverse()
        .compose(map.vertex_permutation())
        .expect("orders match");
    let a_map = CombMap::new(a, map.n_matching().clone()).expect("valid map");
    (knot, a_map)
}
