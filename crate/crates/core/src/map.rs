//! Combinatorial maps: a vertex rotation `P` over a fixed next-edge matching `π`.
//!
//! The face permutation `Q = P·π` is derived, never stored. Two maps multiply
//! only over the same `π`; the maps over one fixed `π` form a group isomorphic
//! to the symmetric group on the corners.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Corner, Perm};

/// An unordered pair of corners, stored with the smaller first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgePair(pub Corner, pub Corner);

impl EdgePair {
    fn new(a: Corner, b: Corner) -> EdgePair {
        if a <= b {
            EdgePair(a, b)
        } else {
            EdgePair(b, a)
        }
    }
}

/// A combinatorial map `(P, π)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombMap {
    p: Perm,
    pi: Perm,
}

/// The normal matching `(1 2)(3 4)…(2m−1 2m)`.
pub fn normal_matching(m: usize) -> Result<Perm> {
    if m < 1 {
        return Err(Error::OddOrder(0));
    }
    Perm::from_images((1..=2 * m).map(|c| if c % 2 == 1 { c + 1 } else { c - 1 }).collect())
}

impl CombMap {
    /// Build a map from a vertex permutation and a next-edge matching.
    ///
    /// Any `p` is accepted once `pi` is a matching of the same (even) order;
    /// the differing condition on `(P, P·π)` then holds automatically.
    pub fn new(p: Perm, pi: Perm) -> Result<CombMap> {
        if p.order() != pi.order() {
            return Err(Error::OrderMismatch(p.order(), pi.order()));
        }
        if p.order() % 2 != 0 || p.order() == 0 {
            return Err(Error::OddOrder(p.order()));
        }
        if !pi.is_matching() {
            return Err(Error::NotMatching);
        }
        Ok(CombMap { p, pi })
    }

    /// The identity map `(I, π)`: m isolated edges.
    pub fn identity(pi: Perm) -> Result<CombMap> {
        let n = pi.order();
        CombMap::new(Perm::identity(n), pi)
    }

    /// The identity map over the normal matching on `2m` corners.
    pub fn identity_normal(m: usize) -> Result<CombMap> {
        CombMap::identity(normal_matching(m)?)
    }

    pub fn vertex_permutation(&self) -> &Perm {
        &self.p
    }

    pub fn n_matching(&self) -> &Perm {
        &self.pi
    }

    pub fn order(&self) -> usize {
        self.p.order()
    }

    /// Number of edges m = n/2.
    pub fn edge_count(&self) -> usize {
        self.order() / 2
    }

    /// The face permutation `Q = P·π`.
    pub fn face_permutation(&self) -> Perm {
        self.p.compose(&self.pi).expect("orders match")
    }

    /// The dual map `(Q, P)`, stored as `(P·π, π)`.
    pub fn dual(&self) -> CombMap {
        CombMap {
            p: self.face_permutation(),
            pi: self.pi.clone(),
        }
    }

    /// The reversed map `(P^{-1}, π)`, the group inverse.
    pub fn reverse(&self) -> CombMap {
        CombMap {
            p: self.p.inverse(),
            pi: self.pi.clone(),
        }
    }

    /// Map product `(S·T, π)`; defined only over a shared `π`.
    pub fn multiply(&self, other: &CombMap) -> Result<CombMap> {
        if self.pi != other.pi {
            return Err(Error::MatchingMismatch);
        }
        Ok(CombMap {
            p: self.p.compose(&other.p)?,
            pi: self.pi.clone(),
        })
    }

    /// The e-matching `ϱ = P·π·P^{-1} = π^{P^{-1}}`; satisfies `ϱ·P = P·π`.
    pub fn e_matching(&self) -> Perm {
        self.pi.conjugate(&self.p.inverse()).expect("orders match")
    }

    /// Edges of the map: the transpositions of `ϱ`, sorted by smaller corner.
    pub fn edges(&self) -> Vec<EdgePair> {
        matching_pairs(&self.e_matching())
    }

    /// Next edges of the map: the transpositions of `π`, sorted by smaller corner.
    pub fn next_edges(&self) -> Vec<EdgePair> {
        matching_pairs(&self.pi)
    }

    /// Left-multiply by `(a b)`: union of two vertices at corners `a`, `b`,
    /// or the split of the vertex containing both.
    pub fn apply_transposition(&self, a: Corner, b: Corner) -> Result<CombMap> {
        let t = Perm::transposition(a, b, self.order())?;
        Ok(CombMap {
            p: t.compose(&self.p)?,
            pi: self.pi.clone(),
        })
    }

    /// Serializable exchange form.
    pub fn to_text(&self) -> MapText {
        MapText {
            n: self.order(),
            p: self.p.cycle_string(),
            pi: self.pi.cycle_string(),
        }
    }

    pub fn from_text(text: &MapText) -> Result<CombMap> {
        let p = Perm::parse_cycles(&text.p, text.n)?;
        let pi = Perm::parse_cycles(&text.pi, text.n)?;
        CombMap::new(p, pi)
    }
}

/// The transposition pairs of a matching, sorted by smaller corner.
pub fn matching_pairs(matching: &Perm) -> Vec<EdgePair> {
    let mut pairs: Vec<EdgePair> = matching
        .cycles()
        .into_iter()
        .filter(|c| c.len() == 2)
        .map(|c| EdgePair::new(c[0], c[1]))
        .collect();
    pairs.sort();
    pairs
}

/// Exchange format for a map: `{ "n": 2m, "p": "<cycles>", "pi": "<cycles>" }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapText {
    pub n: usize,
    pub p: String,
    pub pi: String,
}

/// Build the chain `P_0 = I, P_k = t·P_{k-1}` from a transposition sequence.
///
/// The sequence is given in product reading order, leftmost factor first, so
/// the last chain element composes `ts` left to right. Feeding the
/// concatenated [`crate::perm::cycle_to_transpositions`] factorizations of a
/// permutation's cycles reproduces that permutation.
pub fn build_from_transpositions(
    ts: &[(Corner, Corner)],
    pi: Perm,
) -> Result<Vec<CombMap>> {
    let mut chain = vec![CombMap::identity(pi)?];
    // consume from the right so each step is a left-multiplication
    for &(a, b) in ts.iter().rev() {
        let next = chain.last().unwrap().apply_transposition(a, b)?;
        chain.push(next);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycle_to_transpositions;
    use itertools::Itertools;

    fn p(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    fn map(ptext: &str, m: usize) -> CombMap {
        CombMap::new(p(ptext, 2 * m), normal_matching(m).unwrap()).unwrap()
    }

    #[test]
    fn make_map_validates() {
        assert!(CombMap::identity_normal(2).is_ok());
        // the dual of identity: m isolated loops
        let pi = normal_matching(2).unwrap();
        assert!(CombMap::new(pi.clone(), pi).is_ok());
        assert_eq!(
            CombMap::new(Perm::identity(4), p("(1 2 3)", 4)),
            Err(Error::NotMatching)
        );
        assert_eq!(
            CombMap::new(Perm::identity(4), Perm::identity(6)),
            Err(Error::OrderMismatch(4, 6))
        );
    }

    #[test]
    fn normal_matching_pattern() {
        assert_eq!(normal_matching(1).unwrap().cycle_string(), "(1 2)");
        assert_eq!(normal_matching(2).unwrap().cycle_string(), "(1 2)(3 4)");
        assert_eq!(
            normal_matching(3).unwrap().cycle_string(),
            "(1 2)(3 4)(5 6)"
        );
        assert!(normal_matching(0).is_err());
    }

    #[test]
    fn face_permutation_examples() {
        assert_eq!(
            CombMap::identity_normal(2).unwrap().face_permutation(),
            normal_matching(2).unwrap()
        );
        let pi = normal_matching(2).unwrap();
        let loops = CombMap::new(pi.clone(), pi).unwrap();
        assert!(loops.face_permutation().is_identity());
        assert_eq!(map("(1 3)", 2).face_permutation(), p("(1 4 3 2)", 4));
    }

    #[test]
    fn dual_examples() {
        let id = CombMap::identity_normal(2).unwrap();
        assert_eq!(id.dual().vertex_permutation(), id.n_matching());
        assert_eq!(
            map("(1 3)", 2).dual().vertex_permutation(),
            &p("(1 4 3 2)", 4)
        );
        for images in (1..=4usize).permutations(4) {
            let m = CombMap::new(
                Perm::from_images(images).unwrap(),
                normal_matching(2).unwrap(),
            )
            .unwrap();
            assert_eq!(m.dual().dual(), m);
        }
    }

    #[test]
    fn multiply_examples() {
        let id = CombMap::identity_normal(2).unwrap();
        let t = map("(1 3)", 2);
        assert_eq!(id.multiply(&t).unwrap(), t);
        assert_eq!(t.multiply(&t.reverse()).unwrap(), id);
        let prod = map("(1 3)", 2).multiply(&map("(2 4)", 2)).unwrap();
        assert_eq!(prod.vertex_permutation(), &p("(1 3)(2 4)", 4));
        // different n-matchings refuse to multiply
        let other = CombMap::new(Perm::identity(4), p("(1 3)(2 4)", 4)).unwrap();
        assert_eq!(id.multiply(&other), Err(Error::MatchingMismatch));
    }

    #[test]
    fn reverse_examples() {
        let id = CombMap::identity_normal(2).unwrap();
        assert_eq!(id.reverse(), id);
        assert_eq!(map("(1 4 3 2)", 2).reverse(), map("(1 2 3 4)", 2));
        let m = map("(1 4 2)", 2);
        assert_eq!(m.reverse().reverse(), m);
    }

    #[test]
    fn e_matching_examples() {
        let id = CombMap::identity_normal(2).unwrap();
        assert_eq!(id.e_matching(), normal_matching(2).unwrap());
        assert_eq!(map("(1 3)", 2).e_matching(), p("(1 4)(2 3)", 4));
        let pi = normal_matching(2).unwrap();
        let loops = CombMap::new(pi.clone(), pi.clone()).unwrap();
        assert_eq!(loops.e_matching(), pi);
    }

    #[test]
    fn e_matching_satisfies_defining_identity() {
        // ϱ·P = P·π, and ϱ is always a matching
        for images in (1..=6usize).permutations(6) {
            let m = CombMap::new(
                Perm::from_images(images).unwrap(),
                normal_matching(3).unwrap(),
            )
            .unwrap();
            let rho = m.e_matching();
            assert!(rho.is_matching());
            assert_eq!(
                rho.compose(m.vertex_permutation()).unwrap(),
                m.vertex_permutation().compose(m.n_matching()).unwrap()
            );
        }
    }

    #[test]
    fn edges_examples() {
        let id = CombMap::identity_normal(2).unwrap();
        assert_eq!(id.edges(), vec![EdgePair(1, 2), EdgePair(3, 4)]);
        assert_eq!(id.edges(), id.next_edges());
        let t = map("(1 3)", 2);
        assert_eq!(t.edges(), vec![EdgePair(1, 4), EdgePair(2, 3)]);
        assert_eq!(t.edges().len(), t.edge_count());
    }

    #[test]
    fn apply_transposition_unions_or_splits() {
        let id = CombMap::identity_normal(2).unwrap();
        let merged = id.apply_transposition(1, 3).unwrap();
        assert_eq!(merged.vertex_permutation(), &p("(1 3)", 4));
        assert_eq!(merged.apply_transposition(1, 3).unwrap(), id);
        assert_eq!(id.apply_transposition(2, 2), Err(Error::DegeneratePair(2)));
    }

    #[test]
    fn transposition_changes_vertex_count_by_one() {
        for images in (1..=6usize).permutations(6) {
            let m = CombMap::new(
                Perm::from_images(images).unwrap(),
                normal_matching(3).unwrap(),
            )
            .unwrap();
            let before = m.vertex_permutation().cycles().len() as i64;
            for a in 1..=6 {
                for b in (a + 1)..=6 {
                    let after = m
                        .apply_transposition(a, b)
                        .unwrap()
                        .vertex_permutation()
                        .cycles()
                        .len() as i64;
                    assert_eq!((after - before).abs(), 1);
                }
            }
        }
    }

    #[test]
    fn build_chain() {
        let pi = normal_matching(2).unwrap();
        let chain = build_from_transpositions(&[], pi.clone()).unwrap();
        assert_eq!(chain, vec![CombMap::identity_normal(2).unwrap()]);

        // factor every cycle of a target permutation, rebuild it
        let target = p("(1 4 3 2)", 4);
        let ts: Vec<_> = target
            .cycles()
            .iter()
            .flat_map(|c| cycle_to_transpositions(c))
            .collect();
        let chain = build_from_transpositions(&ts, pi).unwrap();
        assert_eq!(chain.len(), ts.len() + 1);
        assert_eq!(chain.last().unwrap().vertex_permutation(), &target);
    }

    #[test]
    fn product_identities_on_duals() {
        // (S, S̄)·(T̄, T) has vertex permutation S·T̄ and face permutation S·T
        let s = map("(1 4 2)", 2);
        let t = map("(2 3)", 2);
        let prod = s.multiply(&t.dual()).unwrap();
        assert_eq!(
            prod.vertex_permutation(),
            &s.vertex_permutation()
                .compose(&t.face_permutation())
                .unwrap()
        );
        assert_eq!(
            prod.face_permutation(),
            s.vertex_permutation()
                .compose(t.vertex_permutation())
                .unwrap()
        );
    }

    #[test]
    fn map_group_mirrors_symmetric_group_n4() {
        // P ↦ (P, π) preserves products, exhaustively at n=4
        let pi = normal_matching(2).unwrap();
        let perms: Vec<Perm> = (1..=4usize)
            .permutations(4)
            .map(|v| Perm::from_images(v).unwrap())
            .collect();
        for a in &perms {
            for b in &perms {
                let ma = CombMap::new(a.clone(), pi.clone()).unwrap();
                let mb = CombMap::new(b.clone(), pi.clone()).unwrap();
                assert_eq!(
                    ma.multiply(&mb).unwrap().vertex_permutation(),
                    &a.compose(b).unwrap()
                );
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let m = map("(1 3)(2 4)", 2);
        let text = m.to_text();
        assert_eq!(text.n, 4);
        assert_eq!(CombMap::from_text(&text).unwrap(), m);
    }
}
