//! Hammocks, their reduction and composition, the hammock hom-spaces of a
//! category with weak equivalences, and special hammocks in a model
//! category.

mod grid;
mod hom;
mod special;

pub use grid::{compose_hammocks, reduce, validate_hammock, Direction, Hammock, HammockReport};
pub use hom::{bound_flags, enumerate_reduced_hammocks, hammock_hom_space, hom_pi0, BoundFlags, HomSpace};
pub use special::{
    naturality_square_check, nerve_t_to_hom, special_vs_reduced_evidence, t_category, t_functoriality,
    NaturalityReport, NerveComparison, SpecialMorphism, SpecialObject, TCategory, TFunctor,
};

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{natural_isomorphism, FinCat};
    use crate::modelcat::{validate_relcat, ModelStructure, RelCat};

    fn minimal(c: FinCat) -> RelCat {
        RelCat::minimal(Arc::new(c))
    }

    fn isos(c: &Arc<FinCat>) -> RelCat {
        let ids: Vec<usize> = c.morphism_ids().filter(|&m| c.is_isomorphism(m)).collect();
        validate_relcat(c.clone(), &ids).unwrap()
    }

    fn all(c: &Arc<FinCat>) -> RelCat {
        validate_relcat(c.clone(), &c.morphism_ids().collect::<Vec<_>>()).unwrap()
    }

    /// Every normal form reachable by applying single reduction steps in any
    /// order.
    fn normal_forms(c: &FinCat, h: &Hammock, out: &mut BTreeSet<Hammock>) {
        let n = h.length();
        let mut moved = false;
        for col in 0..n {
            if h.horizontal.iter().all(|r| c.is_identity(r[col])) {
                moved = true;
                let mut g = h.clone();
                g.directions.remove(col);
                g.horizontal.iter_mut().for_each(|r| {
                    r.remove(col);
                });
                g.vertical.iter_mut().for_each(|r| {
                    r.remove(col + 1);
                });
                normal_forms(c, &g, out);
            }
            if col + 1 < n && h.directions[col] == h.directions[col + 1] {
                moved = true;
                let mut g = h.clone();
                for r in &mut g.horizontal {
                    let (x, y) = (r[col], r[col + 1]);
                    r[col] = match h.directions[col] {
                        Direction::Right => c.compose(y, x),
                        Direction::Left => c.compose(x, y),
                    }
                    .unwrap();
                    r.remove(col + 1);
                }
                g.directions.remove(col + 1);
                g.vertical.iter_mut().for_each(|r| {
                    r.remove(col + 1);
                });
                normal_forms(c, &g, out);
            }
        }
        if !moved {
            out.insert(h.clone());
        }
    }

    #[test]
    fn validation_examples() {
        let c = Arc::new(FinCat::chain(2));
        let rel = all(&c);
        let a = c.morphism_id("01").unwrap();
        assert!(validate_hammock(&rel, &Hammock::arrow(&c, a, 0)).valid);
        let mut bad = Hammock::identity(&c, 0, 0);
        bad.target = 1;
        assert!(!validate_hammock(&rel, &bad).valid);
        let left = Hammock {
            source: 1,
            target: 0,
            directions: vec![Direction::Left],
            horizontal: vec![vec![a]],
            vertical: vec![],
        };
        assert!(validate_hammock(&rel, &left).valid);
        let r = validate_hammock(&minimal(FinCat::chain(2)), &left);
        assert!(!r.valid && r.problems[0].contains("not a weak equivalence"));
    }

    #[test]
    fn reduction_rules() {
        let c = Arc::new(FinCat::chain(3));
        let (f, g, gf) = (
            c.morphism_id("01").unwrap(),
            c.morphism_id("12").unwrap(),
            c.morphism_id("02").unwrap(),
        );
        let h = compose_hammocks(&c, &Hammock::arrow(&c, f, 1), &Hammock::arrow(&c, g, 1)).unwrap();
        assert_eq!(h, Hammock::arrow(&c, gf, 1));
        let id = Hammock::identity(&c, 0, 1);
        assert_eq!(
            compose_hammocks(&c, &id, &Hammock::arrow(&c, f, 1)).unwrap(),
            Hammock::arrow(&c, f, 1)
        );
        let padded = compose_hammocks(&c, &Hammock::arrow(&c, c.identity(0), 1), &Hammock::arrow(&c, f, 1)).unwrap();
        assert_eq!(padded, Hammock::arrow(&c, f, 1));
        assert!(compose_hammocks(&c, &Hammock::arrow(&c, g, 0), &Hammock::arrow(&c, f, 0)).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let i2 = minimal(FinCat::chain(2));
        let hs = enumerate_reduced_hammocks(&i2, 0, 1, 0, 3);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].length(), 1);
        assert!(enumerate_reduced_hammocks(&i2, 1, 1, 0, 3)
            .iter()
            .any(|h| h.length() == 0));
        for w in 0..3 {
            for h in enumerate_reduced_hammocks(&i2, 0, 1, w, 3) {
                assert!(h.horizontal.windows(2).all(|p| p[0] == p[1]));
            }
        }
    }

    #[test]
    fn minimal_hom_spaces_are_discrete() {
        let i2 = minimal(FinCat::chain(2));
        let hom = hammock_hom_space(&i2, 0, 1, 2, 3).unwrap();
        assert!(hom.sset().validate().passed());
        assert_eq!(hom.sset().level_counts(), vec![1, 1, 1]);
        let c = Arc::new(FinCat::chain(3));
        let hom = hammock_hom_space(&isos(&c), 0, 2, 2, 4).unwrap();
        assert_eq!(hom.sset().pi0().count, c.hom(0, 2).len());
        assert!((1..=2).all(|n| hom.sset().nondegenerate(n).is_empty()));
    }

    #[test]
    fn hom_spaces_are_simplicial_and_reduce_is_confluent() {
        let c = Arc::new(FinCat::chain(3));
        let sq = Arc::new(FinCat::poset(&["a", "b", "c", "d"], |x, y| x == y || x == 0 || y == 3));
        for (cat, rel) in [(c.clone(), all(&c)), (c.clone(), isos(&c)), (sq.clone(), all(&sq))] {
            for a in cat.objects() {
                for b in cat.objects() {
                    let hom = hammock_hom_space(&rel, a, b, 2, 3).unwrap();
                    assert!(hom.sset().validate().passed());
                    for level in &hom.space.keys {
                        for h in level {
                            assert!(h.is_reduced(&cat));
                            assert_eq!(reduce(&cat, h), *h);
                            assert!(validate_hammock(&rel, h).valid);
                            for g in [h.clone(), h.degen(&cat, 0)] {
                                let mut nf = BTreeSet::new();
                                let padded =
                                    compose_hammocks(&cat, &Hammock::identity(&cat, a, g.width()), &g).unwrap();
                                normal_forms(&cat, &padded, &mut nf);
                                assert_eq!(nf.len(), 1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weq_all_connects_the_hom_space() {
        let c = Arc::new(FinCat::chain(3));
        let hom = hammock_hom_space(&all(&c), 2, 0, 1, 3).unwrap();
        assert_eq!(hom.sset().pi0().count, 1);
        let flags = bound_flags(&all(&c), &hom).unwrap();
        assert!(flags.pi0_stable);
    }

    #[test]
    fn special_hammocks_for_the_trivial_structure() {
        let c = Arc::new(FinCat::chain(3));
        let m = ModelStructure::trivial(c.clone());
        for a in c.objects() {
            for b in c.objects() {
                let t = t_category(&m, a, b).unwrap();
                assert_eq!(t.objects.len(), c.hom(a, b).len());
                assert_eq!(t.cat.num_morphisms(), t.objects.len());
                if !t.objects.is_empty() {
                    assert!(special_vs_reduced_evidence(&m, a, b, 1, 3).unwrap().holds);
                }
            }
        }
        let cmp = nerve_t_to_hom(&m, 0, 2, 2, 3).unwrap();
        assert!(cmp.map.pi0_bijective());
    }

    #[test]
    fn special_hammocks_for_the_coarse_structure() {
        let c = Arc::new(FinCat::chain(3));
        let m = ModelStructure::coarse(c.clone());
        let t = t_category(&m, 2, 0).unwrap();
        assert!(!t.objects.is_empty());
        let cmp = nerve_t_to_hom(&m, 2, 0, 2, 4).unwrap();
        assert_eq!(cmp.map.source.pi0().count, 1);
        assert_eq!(cmp.map.target.pi0().count, 1);
    }

    #[test]
    fn functoriality_in_both_variables() {
        let c = Arc::new(FinCat::chain(3));
        let m = ModelStructure::trivial(c.clone());
        let id1 = c.identity(1);
        let tf = t_functoriality(&m, id1, id1).unwrap();
        assert_eq!(tf.functor, crate::fincat::Functor::identity(tf.source.cat.clone()));
        let (f, g) = (c.morphism_id("01").unwrap(), c.morphism_id("12").unwrap());
        // T(1,1) → T(0,2) sends the identity hammock to the composite 0 → 2
        let both = t_functoriality(&m, f, g).unwrap();
        let o = both.functor.on_object(0);
        assert_eq!(both.target.objects[o].h, c.morphism_id("02").unwrap());
        let first = t_functoriality(&m, f, id1).unwrap();
        let second = t_functoriality(&m, c.identity(0), g).unwrap();
        let composite = first.functor.then(&second.functor).unwrap();
        assert!(natural_isomorphism(&composite, &both.functor).is_some());
    }

    #[test]
    fn naturality_squares() {
        let c = Arc::new(FinCat::chain(3));
        for m in [ModelStructure::trivial(c.clone()), ModelStructure::coarse(c.clone())] {
            let id1 = c.identity(1);
            let r = naturality_square_check(&m, id1, id1, 1, 0, 3).unwrap();
            assert!(r.strictly_commutes && r.commutes_in_homology);
            let (f, g) = (c.morphism_id("01").unwrap(), c.morphism_id("12").unwrap());
            for (x, y) in [(f, id1), (c.identity(0), g), (f, g)] {
                let r = naturality_square_check(&m, x, y, 1, 0, 3).unwrap();
                assert!(r.commutes_in_homology);
            }
        }
    }
}
