//! Fixed-edge classes `K_ϱ` and the selfconjugate subgroup `K_π`.
//!
//! `K_π` is the commutant of `π` inside the map group; its elements are in
//! bijection with pairs (permutation of the m π-pairs, m flip bits), so
//! `|K_π| = m!·2^m`, and the `(2m−1)!!` matchings on 2m corners index its
//! left cosets: `(2m−1)!! · m!·2^m = (2m)!`.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::map::CombMap;
use crate::perm::{Corner, Perm};

/// Default cap on exhaustive sweeps over all (2m)! maps.
pub const DEFAULT_ENUM_BOUND: usize = 4;

/// A member of `K_π` encoded as a permutation of the π-pairs plus flip bits.
///
/// Pair `i` of `π` is its i-th transposition ordered by smaller corner
/// (pair i of the normal matching is `(2i−1, 2i)`). `pair_perm` sends pair
/// indices to pair indices; flip `i` is set when the smaller corner of pair
/// `i` maps to the larger corner of its image pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub pair_perm: Perm,
    pub flips: Vec<bool>,
}

/// True iff `P^π = P`, equivalently `e_matching(M) = π`.
pub fn is_selfconjugate(map: &CombMap) -> bool {
    let p = map.vertex_permutation();
    p.conjugate(map.n_matching()).expect("orders match") == *p
}

/// The π-pairs as `(smaller, larger)` corner tuples, sorted by smaller corner.
pub fn pi_pairs(pi: &Perm) -> Vec<(Corner, Corner)> {
    crate::map::matching_pairs(pi)
        .into_iter()
        .map(|e| (e.0, e.1))
        .collect()
}

/// Encode a selfconjugate map as a signed permutation of the π-pairs.
pub fn encode_signed(map: &CombMap) -> Result<SignedPerm> {
    if !is_selfconjugate(map) {
        return Err(Error::NotSelfconjugate);
    }
    let pairs = pi_pairs(map.n_matching());
    let m = pairs.len();
    let mut index_of = HashMap::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index_of.insert(a, i);
        index_of.insert(b, i);
    }
    let p = map.vertex_permutation();
    let mut images = vec![0; m];
    let mut flips = vec![false; m];
    for (i, &(a, _)) in pairs.iter().enumerate() {
        let image = p.apply(a);
        let j = index_of[&image];
        images[i] = j + 1;
        flips[i] = image == pairs[j].1;
    }
    Ok(SignedPerm {
        pair_perm: Perm::from_images(images)?,
        flips,
    })
}

/// Decode a signed permutation back into a member of `K_π`.
pub fn decode_signed(sp: &SignedPerm, pi: &Perm) -> Result<CombMap> {
    let pairs = pi_pairs(pi);
    let m = pairs.len();
    if sp.pair_perm.order() != m || sp.flips.len() != m {
        return Err(Error::OrderMismatch(sp.pair_perm.order(), m));
    }
    let mut images = vec![0; pi.order()];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        let j = sp.pair_perm.apply(i + 1) - 1;
        let (ta, tb) = pairs[j];
        let (ia, ib) = if sp.flips[i] { (tb, ta) } else { (ta, tb) };
        images[a - 1] = ia;
        images[b - 1] = ib;
    }
    CombMap::new(Perm::from_images(images)?, pi.clone())
}

/// All `m!·2^m` selfconjugate maps over `pi`, generated by decoding every
/// signed permutation; no filtering of the full symmetric group is involved.
pub fn enumerate_selfconjugate(pi: &Perm) -> Vec<CombMap> {
    let m = pi.order() / 2;
    let mut out = Vec::new();
    for images in (1..=m).permutations(m) {
        let pair_perm = Perm::from_images(images).expect("valid permutation");
        for mask in 0u64..(1 << m) {
            let flips = (0..m).map(|i| mask >> i & 1 == 1).collect();
            let sp = SignedPerm {
                pair_perm: pair_perm.clone(),
                flips,
            };
            out.push(decode_signed(&sp, pi).expect("decode of valid signed perm"));
        }
    }
    out
}

/// Number of fixed-edge classes: the double factorial `(2m−1)!!`.
pub fn class_count(m: usize) -> u128 {
    (1..=2 * m as u128).step_by(2).product()
}

/// Size of each class: `|K_π| = m!·2^m`.
pub fn class_size(m: usize) -> u128 {
    (1..=m as u128).product::<u128>() << m
}

/// Every permutation of order n, in lexicographic image order.
pub fn all_perms(n: usize) -> impl Iterator<Item = Perm> {
    (1..=n)
        .permutations(n)
        .map(|v| Perm::from_images(v).expect("valid permutation"))
}

/// Every matching on `1..=n` (n even): `(n−1)!!` of them.
pub fn all_matchings(n: usize) -> Vec<Perm> {
    fn go(free: &mut Vec<Corner>, images: &mut Vec<Corner>, out: &mut Vec<Perm>) {
        if free.is_empty() {
            out.push(Perm::from_images(images.clone()).expect("valid matching"));
            return;
        }
        let a = free.remove(0);
        for k in 0..free.len() {
            let b = free.remove(k);
            images[a - 1] = b;
            images[b - 1] = a;
            go(free, images, out);
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    if n % 2 != 0 {
        return out;
    }
    let mut free: Vec<Corner> = (1..=n).collect();
    let mut images: Vec<Corner> = vec![0; n];
    go(&mut free, &mut images, &mut out);
    out
}

/// Group all (2m)! maps over the normal matching by their e-matching.
///
/// Returns `(ϱ, member count)` rows sorted by ϱ's canonical cycle form.
pub fn census(m: usize) -> Result<Vec<(Perm, u64)>> {
    census_with_bound(m, DEFAULT_ENUM_BOUND)
}

pub fn census_with_bound(m: usize, bound: usize) -> Result<Vec<(Perm, u64)>> {
    if m > bound {
        return Err(Error::BoundExceeded(m, bound));
    }
    let pi = crate::map::normal_matching(m)?;
    let mut buckets: HashMap<Perm, u64> = HashMap::new();
    for p in all_perms(2 * m) {
        let rho = CombMap::new(p, pi.clone())?.e_matching();
        *buckets.entry(rho).or_insert(0) += 1;
    }
    let mut rows: Vec<(Perm, u64)> = buckets.into_iter().collect();
    rows.sort_by_key(|(rho, _)| rho.cycle_string());
    Ok(rows)
}

/// e-matching of a product without forming it: `ϱ_{S·T} = ϱ_T^{S^{-1}}`.
pub fn rho_of_product(s: &CombMap, t: &CombMap) -> Result<Perm> {
    if s.n_matching() != t.n_matching() {
        return Err(Error::MatchingMismatch);
    }
    t.e_matching().conjugate(&s.vertex_permutation().inverse())
}

/// The class that the coset `M·K_σ` lands in: `σ^{P^{-1}}`.
pub fn coset_map(map: &CombMap, sigma: &Perm) -> Result<Perm> {
    if !sigma.is_matching() {
        return Err(Error::NotMatching);
    }
    sigma.conjugate(&map.vertex_permutation().inverse())
}
