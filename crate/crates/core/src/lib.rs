//! Combinatorial maps as permutation pairs.
//!
//! A map is a vertex rotation `P` over a fixed next-edge matching `π`; its
//! face permutation is `P·π` and its edges are the transpositions of the
//! e-matching `ϱ = P·π·P^{-1}`. Products are read left to right throughout:
//! `c^(P·Q) = (c^P)^Q`, so `(1 3) · (1 2)(3 4) = (1 4 3 2)`.
//!
//! The crate covers the map group over a fixed `π`, the fixed-edge classes
//! `K_ϱ` and the selfconjugate subgroup `K_π` with its signed-permutation
//! structure, combinatorial knots and the knot × selfconjugate decomposition,
//! isomorphism testing by conjugator search, and the graph reading
//! (vertices, faces, edges, components, Euler characteristic).

pub mod classes;
pub mod error;
pub mod graph;
pub mod iso;
pub mod knot;
pub mod map;
pub mod perm;

pub use error::{Error, Result};
pub use map::{normal_matching, CombMap, EdgePair, MapText};
pub use perm::{cycle_to_transpositions, Corner, Perm};

use rand::seq::SliceRandom;

/// A uniformly random permutation on `1..=n`.
pub fn random_perm<R: rand::Rng>(n: usize, rng: &mut R) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("shuffle is a bijection")
}

/// A uniformly random map over the normal matching on `2m` corners.
pub fn random_map<R: rand::Rng>(m: usize, rng: &mut R) -> CombMap {
    CombMap::new(random_perm(2 * m, rng), normal_matching(m).expect("m >= 1"))
        .expect("valid map")
}
