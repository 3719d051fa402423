//! Acceptance suite: every counting theorem and structural law, run at the
//! stated orders with exact expectations. Each test prints one pass line.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rotmap::classes::{
    all_matchings, all_perms, census_with_bound, class_size, coset_map,
    decode_signed, encode_signed, enumerate_selfconjugate, is_selfconjugate,
    rho_of_product, SignedPerm,
};
use rotmap::graph::{euler_characteristic, view};
use rotmap::iso::{are_isomorphic, same_class_criterion};
use rotmap::knot::{decompose, knot_of, well_color};
use rotmap::map::{normal_matching, CombMap};
use rotmap::perm::Perm;
use rotmap::{random_map, random_perm};

fn maps_over_normal(m: usize) -> impl Iterator<Item = CombMap> {
    let pi = normal_matching(m).unwrap();
    all_perms(2 * m).map(move |p| CombMap::new(p, pi.clone()).unwrap())
}

#[test]
fn criterion_01_census_m2() {
    let rows = census_with_bound(2, 4).unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|&(_, c)| c == 8));
    assert_eq!(rows.iter().map(|&(_, c)| c).sum::<u64>(), 24);
    println!("PASS criterion 1: census m=2 has 3 classes of 8, 3*8 = 24");
}

#[test]
fn criterion_02_census_m3_m4() {
    let rows = census_with_bound(3, 4).unwrap();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|&(_, c)| c == 48));
    assert_eq!(rows.iter().map(|&(_, c)| c).sum::<u64>(), 720);

    let rows = census_with_bound(4, 4).unwrap();
    assert_eq!(rows.len(), 105);
    assert!(rows.iter().all(|&(_, c)| c == 384));
    assert_eq!(rows.iter().map(|&(_, c)| c).sum::<u64>(), 40320);
    println!("PASS criterion 2: census m=3 is 15x48=720, m=4 is 105x384=40320");
}

#[test]
fn criterion_03_selfconjugate_group_axioms() {
    for m in 1..=3 {
        let pi = normal_matching(m).unwrap();
        let members = enumerate_selfconjugate(&pi);
        assert_eq!(members.len() as u128, class_size(m));
        assert!(members.iter().any(|mm| mm.vertex_permutation().is_identity()));
        for s in &members {
            assert!(is_selfconjugate(&s.reverse()));
            for t in &members {
                assert!(is_selfconjugate(&s.multiply(t).unwrap()));
            }
        }
        // brute-force filter of all (2m)! permutations by P^pi = P
        let filtered = all_perms(2 * m)
            .filter(|q| q.conjugate(&pi).unwrap() == *q)
            .count();
        assert_eq!(filtered, members.len());
    }
    println!("PASS criterion 3: K_pi closed, contains identity, |K_pi| = m!*2^m for m <= 3");
}

fn check_knot(map: &CombMap) {
    let knot = knot_of(map);
    assert!(knot.is_valid());
    assert_eq!(
        map.n_matching().conjugate(&knot.mu).unwrap(),
        map.e_matching()
    );
    for cycle in knot.mu.cycles() {
        assert_eq!(cycle.len() % 2, 0);
    }
    let col = well_color(map);
    let rho = map.e_matching();
    for c in 1..=map.order() {
        assert_ne!(col.is_c1(c), col.is_c1(map.n_matching().apply(c)));
        assert_ne!(col.is_c1(c), col.is_c1(rho.apply(c)));
    }
}

#[test]
fn criterion_04_knot_correctness() {
    for m in 1..=3 {
        for map in maps_over_normal(m) {
            check_knot(&map);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        check_knot(&random_map(25, &mut rng));
    }
    println!("PASS criterion 4: pi^mu = rho, even cycles, bichromatic pairs (m <= 3 exhaustive, 1000 random at m=25)");
}

#[test]
fn criterion_05_decomposition_sweep_m3() {
    let pi = normal_matching(3).unwrap();
    let mut count = 0;
    for map in maps_over_normal(3) {
        let (knot, a) = decompose(&map);
        assert!(is_selfconjugate(&a));
        let mu_map = CombMap::new(knot.mu.clone(), pi.clone()).unwrap();
        assert_eq!(mu_map.multiply(&a).unwrap(), map);
        count += 1;
    }
    assert_eq!(count, 720);
    println!("PASS criterion 5: all 720 maps at m=3 factor as knot x selfconjugate");
}

#[test]
fn criterion_06_product_ematching_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10_000 {
        let s = random_map(50, &mut rng);
        let t = random_map(50, &mut rng);
        assert_eq!(
            rho_of_product(&s, &t).unwrap(),
            s.multiply(&t).unwrap().e_matching()
        );
    }
    println!("PASS criterion 6: rho(S*T) = rho(T)^(S^-1) on 10^4 random pairs at m=50");
}

#[test]
fn criterion_07_coset_law_m2() {
    let pi = normal_matching(2).unwrap();
    for p in maps_over_normal(2) {
        for sigma in all_matchings(4) {
            let target = coset_map(&p, &sigma).unwrap();
            let k_sigma: Vec<CombMap> = all_perms(4)
                .map(|q| CombMap::new(q, pi.clone()).unwrap())
                .filter(|mm| mm.e_matching() == sigma)
                .collect();
            let mut k_target: Vec<Perm> = all_perms(4)
                .map(|q| CombMap::new(q, pi.clone()).unwrap())
                .filter(|mm| mm.e_matching() == target)
                .map(|mm| mm.vertex_permutation().clone())
                .collect();
            k_target.sort();
            let mut products: Vec<Perm> = k_sigma
                .iter()
                .map(|q| p.multiply(q).unwrap().vertex_permutation().clone())
                .collect();
            products.sort();
            assert_eq!(products, k_target);
        }
    }
    println!("PASS criterion 7: P*K_sigma = K_(sigma^(P^-1)) for every map and matching at m=2");
}

#[test]
fn criterion_08_signed_bijection_m4() {
    use itertools::Itertools;
    let pi = normal_matching(4).unwrap();
    let members = enumerate_selfconjugate(&pi);
    assert_eq!(members.len(), 384);
    for map in &members {
        let sp = encode_signed(map).unwrap();
        assert_eq!(&decode_signed(&sp, &pi).unwrap(), map);
    }
    for images in (1..=4usize).permutations(4) {
        let pair_perm = Perm::from_images(images).unwrap();
        for mask in 0u32..16 {
            let sp = SignedPerm {
                pair_perm: pair_perm.clone(),
                flips: (0..4).map(|i| mask >> i & 1 == 1).collect(),
            };
            let map = decode_signed(&sp, &pi).unwrap();
            assert_eq!(encode_signed(&map).unwrap(), sp);
        }
    }
    println!("PASS criterion 8: signed-permutation encode/decode are mutual inverses on all 384 elements at m=4");
}

#[test]
fn criterion_09_isomorphism_planted_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let m1 = random_map(4, &mut rng);
        let planted = random_perm(8, &mut rng);
        let m2 = CombMap::new(
            m1.vertex_permutation().conjugate(&planted).unwrap(),
            m1.n_matching().conjugate(&planted).unwrap(),
        )
        .unwrap();
        let witness = are_isomorphic(&m1, &m2).unwrap().expect("planted witness");
        let in_commutant = same_class_criterion(&m1, &m2, &witness).unwrap();
        assert_eq!(in_commutant, m1.n_matching() == m2.n_matching());
    }
    println!("PASS criterion 9: 100 planted witnesses at n=8 recovered; witness in K_pi iff pi1 = pi2");
}

#[test]
fn criterion_10_graph_view_sanity() {
    for m in 1..=4 {
        for map in maps_over_normal(m) {
            for chi in euler_characteristic(&map) {
                assert!(chi % 2 == 0 && chi <= 2);
            }
        }
        let id = CombMap::identity_normal(m).unwrap();
        let gv = view(&id);
        assert_eq!(gv.vertices.len(), 2 * m);
        assert_eq!(gv.faces.len(), m);
        assert_eq!(gv.components.len(), m);
        let gd = view(&id.dual());
        assert_eq!(gd.vertices.len(), m);
        assert_eq!(gd.faces.len(), 2 * m);
    }
    println!("PASS criterion 10: chi even and <= 2 for all maps m <= 4; identity = m isolated edges, dual = m loops");
}
