//! Map isomorphism by conjugator search.
//!
//! Two maps `(P, P·π1)` and `(Q, Q·π2)` are isomorphic when some permutation
//! `A` satisfies `π2^A = π1` and `Q^A = P`. The search enumerates only the
//! candidates satisfying the matching constraint: they form a coset of the
//! commutant of `π2`, of size m!·2^m.

use crate::classes::{enumerate_selfconjugate, pi_pairs};
use crate::error::{Error, Result};
use crate::map::CombMap;
use crate::perm::Perm;

/// Hard cap on the order for witness search.
pub const MAX_SEARCH_ORDER: usize = 12;

/// Sorted cycle lengths, a conjugacy invariant.
fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut lens: Vec<usize> = p.cycles().iter().map(|c| c.len()).collect();
    lens.sort_unstable();
    lens
}

/// One permutation conjugating `from` to `to`, pairing their transpositions
/// in order (both are matchings of equal order, so one always exists).
fn matching_conjugator(from: &Perm, to: &Perm) -> Perm {
    let pairs_from = pi_pairs(from);
    let pairs_to = pi_pairs(to);
    let mut images = vec![0; from.order()];
    for (&(a, b), &(c, d)) in pairs_from.iter().zip(&pairs_to) {
        images[a - 1] = c;
        images[b - 1] = d;
    }
    Perm::from_images(images).expect("pairing is a bijection")
}

/// Search for a witness `A` with `π2^A = π1` and `Q^A = P`.
///
/// Returns `Ok(None)` when the exhausted search space holds no witness;
/// order mismatch and oversize inputs are reported as errors.
pub fn are_isomorphic(m1: &CombMap, m2: &CombMap) -> Result<Option<Perm>> {
    if m1.order() != m2.order() {
        return Err(Error::OrderMismatch(m1.order(), m2.order()));
    }
    if m1.order() > MAX_SEARCH_ORDER {
        return Err(Error::BoundExceeded(m1.order(), MAX_SEARCH_ORDER));
    }
    let p = m1.vertex_permutation();
    let q = m2.vertex_permutation();
    // conjugacy-invariant prefilters
    if cycle_type(p) != cycle_type(q) {
        return Ok(None);
    }
    if cycle_type(&m1.face_permutation()) != cycle_type(&m2.face_permutation()) {
        return Ok(None);
    }
    let base = matching_conjugator(m2.n_matching(), m1.n_matching());
    for member in enumerate_selfconjugate(m2.n_matching()) {
        let a = member.vertex_permutation().compose(&base)?;
        if q.conjugate(&a)? == *p {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Given a valid witness `A` for `(M1, M2)`, report whether both maps lie in
/// one closed class, i.e. whether `A` commutes with `π1`.
pub fn same_class_criterion(m1: &CombMap, m2: &CombMap, a: &Perm) -> Result<bool> {
    let valid = m2.n_matching().conjugate(a)? == *m1.n_matching()
        && m2.vertex_permutation().conjugate(a)? == *m1.vertex_permutation();
    if !valid {
        return Err(Error::InvalidWitness);
    }
    let pi = m1.n_matching();
    Ok(a.compose(pi)? == pi.compose(a)?)
}
