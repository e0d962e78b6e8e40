mod common;

use hammock_core::corpus;
use hammock_core::fincat::nerve;
use hammock_core::hammock::{compose_hammocks, hammock_hom_space, reduce, validate_hammock, Hammock};
use hammock_core::hocolim::{duality_check, SSetDiagram};
use hammock_core::locres::{is_reduced, reduce as reduce_word, Letter};
use hammock_core::sset::snf::smith_normal_form;
use hammock_core::sset::{diagonal, normalized_chain_complex, BiTruncSSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(24)
}

/// Deletes the leftmost cancelling pair until none is left.
fn reduce_naively(mut w: Vec<Letter<u8>>) -> Vec<Letter<u8>> {
    while let Some(i) = w
        .windows(2)
        .position(|p| p[0].gen == p[1].gen && p[0].inverse != p[1].inverse)
    {
        w.drain(i..i + 2);
    }
    w
}

fn letters() -> impl Strategy<Value = Vec<Letter<u8>>> {
    prop::collection::vec(
        (0u8..3, any::<bool>()).prop_map(|(gen, inverse)| Letter { gen, inverse }),
        0..12,
    )
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn zigzag_reduction_is_a_normal_form(w in letters()) {
        let r = reduce_word(w.clone());
        prop_assert!(is_reduced(&r));
        prop_assert_eq!(reduce_word(r.clone()), r.clone());
        prop_assert_eq!(r, reduce_naively(w));
    }

    #[test]
    fn random_diagrams_satisfy_duality(seed in any::<u64>()) {
        let d = random_shape_diagram(&mut rng(seed));
        let x = SSetDiagram::nerve_of(&d, 2).unwrap();
        prop_assert!(duality_check(&x, 2).unwrap());
    }

    #[test]
    fn products_and_diagonals_are_simplicial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (*FIBRES.choose(&mut r).unwrap(), *FIBRES.choose(&mut r).unwrap());
        let p = BiTruncSSet::external_product(&nerve(&cat(a), 2), &nerve(&cat(b), 2)).unwrap();
        let d = diagonal(&p);
        prop_assert!(d.validate().passed(), "{a} x {b}");
        prop_assert_eq!(d.len(1), nerve(&cat(a), 2).len(1) * nerve(&cat(b), 2).len(1));
    }

    #[test]
    fn diagram_functors_compose(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_shape_diagram(&mut r);
        let s = d.shape.clone();
        for f in s.morphism_ids() {
            for g in s.outgoing(s.dst(f)).iter().copied() {
                let gf = s.compose(g, f).unwrap();
                let via = d.functor(f).then(d.functor(g)).unwrap();
                prop_assert_eq!(via.object_map(), d.functor(gf).object_map());
                prop_assert_eq!(via.morphism_map(), d.functor(gf).morphism_map());
            }
        }
    }

    #[test]
    fn hammock_composites_are_reduced_and_valid(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rels = corpus::relcats();
        let (name, rel) = rels.choose(&mut r).unwrap();
        let c = &*rel.cat;
        let objects: Vec<usize> = c.objects().collect();
        let (a, b, e) = (*objects.choose(&mut r).unwrap(), *objects.choose(&mut r).unwrap(), *objects.choose(&mut r).unwrap());
        let w = r.gen_range(0..=2);
        let left = hammock_hom_space(rel, a, b, 2, 2).unwrap();
        let right = hammock_hom_space(rel, b, e, 2, 2).unwrap();
        let (Some(h), Some(k)) = (left.space.keys[w].choose(&mut r), right.space.keys[w].choose(&mut r)) else {
            return Ok(());
        };
        let hk = compose_hammocks(c, h, k).unwrap();
        prop_assert!(hk.is_reduced(c), "{name}: {}", hk.label(c));
        prop_assert_eq!(&reduce(c, &hk), &hk);
        let report = validate_hammock(rel, &hk);
        prop_assert!(report.valid, "{name}: {:?}", report.problems);
        prop_assert_eq!(&compose_hammocks(c, &Hammock::identity(c, a, w), h).unwrap(), h);
        if w > 0 {
            for i in 0..=w {
                prop_assert!(hk.face(c, i).is_reduced(c));
            }
        }
    }

    #[test]
    fn smith_forms_of_nerve_boundaries_verify(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (_, c) = corpus::categories().choose(&mut r).unwrap().clone();
        let cx = normalized_chain_complex(&nerve(&c, 3));
        let n = r.gen_range(1..=2);
        let m = cx.boundaries[n].to_dense();
        prop_assert!(smith_normal_form(&m).verify(&m));
    }
}
