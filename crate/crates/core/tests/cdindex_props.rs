//! Round trips between the ab-index and cd-index, symmetry of eulerian
//! flag h-vectors, and the rewriting witness for non-eulerian inputs.

mod common;

use bshopf_core::building::BuildingSet;
use bshopf_core::cdindex::{ab_index, andre_phi, cd_index, expand_cd, flag_vectors};
use bshopf_core::eulerian::is_eulerian;
use bshopf_core::graphs::{beta_n, graphical, SimpleGraph};
use bshopf_core::subset::submasks;
use bshopf_core::symfunc::Composition;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_eulerian_sweep(count: usize, seed: u64) -> Vec<BuildingSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 40_000 {
        attempts += 1;
        let n = 2 + attempts % 6; // ranks 2..=7
        let b = BuildingSet::closure(&common::random_antichain(&mut rng, n)).unwrap();
        if is_eulerian(&b).unwrap() {
            out.push(b);
        }
    }
    out
}

#[test]
fn cd_expansion_reproduces_ab_index() {
    // both cd routes agree internally; here the expansion and the greedy
    // rewriting of the ab-index must close the triangle
    for b in random_eulerian_sweep(60, 41) {
        let cd = cd_index(&b).unwrap();
        let ab = ab_index(&b).unwrap();
        assert_eq!(expand_cd(&cd).unwrap(), ab, "{b}");
        assert_eq!(ab.to_cd().unwrap(), cd, "{b}");
    }
}

#[test]
fn eulerian_flag_h_vectors_are_symmetric() {
    for b in random_eulerian_sweep(60, 42) {
        let fv = flag_vectors(&b).unwrap();
        for alpha in Composition::all(b.rank()) {
            assert_eq!(fv.eta(&alpha), fv.eta(&alpha.opposite()), "{b} at {alpha}");
        }
        let ab = ab_index(&b).unwrap();
        assert_eq!(ab, ab.swap_letters(), "{b}");
    }
}

#[test]
fn flag_transform_inverts_over_refinement() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for i in 0..80 {
        let n = 1 + i % 7;
        let b = BuildingSet::closure(&common::random_antichain(&mut rng, n)).unwrap();
        let fv = flag_vectors(&b).unwrap();
        for alpha in Composition::all(b.rank()) {
            let mut total = 0i64;
            for beta_mask in submasks(alpha.subset_mask()) {
                total += fv.eta(&Composition::from_subset_mask(b.rank(), beta_mask));
            }
            assert_eq!(total, fv.zeta(&alpha), "{b} at {alpha}");
            if alpha.length() == 1 {
                assert_eq!(fv.eta(&alpha), fv.zeta(&alpha));
            }
        }
    }
}

#[test]
fn non_eulerian_witnesses_are_not_rewritable() {
    let witnesses = [
        graphical(&SimpleGraph::complete(2)).unwrap(),
        graphical(&SimpleGraph::complete(3)).unwrap(),
        graphical(&SimpleGraph::path(3)).unwrap(),
        BuildingSet::discrete(4).connected_hull(),
    ];
    for b in witnesses {
        assert!(!is_eulerian(&b).unwrap());
        assert!(ab_index(&b).unwrap().to_cd().is_none(), "{b}");
    }
}

#[test]
fn andre_polynomials_have_nonnegative_coefficients() {
    for n in 1..=8 {
        let phi = andre_phi(n).unwrap();
        for (w, c) in phi.terms() {
            assert!(c >= 0, "rank {n} word {w}: {c}");
            assert_eq!(w.degree(), n - 1);
        }
    }
}

#[test]
fn inflated_trees_have_cd_indices() {
    // edge inflations of trees by odd amounts are eulerian and rewritable
    for g in [SimpleGraph::path(3), SimpleGraph::path(4), SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()] {
        let b = beta_n(&g, 3).unwrap();
        let cd = cd_index(&b).unwrap();
        assert_eq!(expand_cd(&cd).unwrap(), ab_index(&b).unwrap());
    }
}
