//! Simplicial and cosimplicial objects in a finite model category, Reedy
//! conditions, resolutions, hom-complexes, totalisation, derived
//! hom-spaces and the comparison of their models.

mod compare;
mod complexes;
mod objects;
mod resolution;

pub use compare::{
    comparison_report, cosimplicial_asphericity_check, resolution_asphericity_check, CompareOptions, ComparisonReport,
    NaturalitySample, ResolutionAsphericity, SpaceSummary,
};
pub use complexes::{
    derived_hom, enriched_hom_c, enriched_hom_s, left_hom_complex, middle_double_colimit, right_hom_complex, tot,
    total_hom_complex, weq_preservation_check, weq_preservation_check_cosimplicial, DerivedHom, PreservationReport,
};
pub use objects::{
    is_weakly_constant, is_weakly_constant_cosimplicial, latching_object, matching_object, CosimplicialObj,
    LimitResult, SimplicialObj, WeakConstancy,
};
pub use resolution::{
    build_cosimplicial_resolution, build_simplicial_resolution, constant_simplicial_resolution,
    cosimplicial_resolutions, is_cosimplicial_resolution, is_simplicial_resolution, simplicial_resolutions,
    CosimplicialResolution, ResolutionCertificate, SimplicialResolution,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::corpus;
    use crate::error::Error;
    use crate::hocolim::SSetDiagram;
    use crate::modelcat::{ho_hom_count, ModelStructure};
    use crate::sset::{homology_table, weq_evidence_pair, TruncSSet};

    fn chain3_models() -> [ModelStructure; 2] {
        let c = Arc::new(corpus::chain3());
        [ModelStructure::trivial(c.clone()), ModelStructure::coarse(c)]
    }

    #[test]
    fn constants_are_weakly_constant_with_trivial_latching() {
        let m = &chain3_models()[0];
        let x = SimplicialObj::constant(m.cat.clone(), 1, 3);
        let wc = is_weakly_constant(m, &x);
        assert!(wc.weakly_constant && !wc.tested.is_empty());
        assert_eq!(latching_object(&x, 0).unwrap().apex, 0);
        for n in 1..=3 {
            assert_eq!(latching_object(&x, n).unwrap().apex, 1);
            assert_eq!(matching_object(&x, n).unwrap().apex, 1);
        }
        assert!(matches!(latching_object(&x, 4), Err(Error::Degree { .. })));
        let y = CosimplicialObj::constant(m.cat.clone(), 2, 2);
        assert!(is_weakly_constant_cosimplicial(m, &y).weakly_constant);
        assert_eq!(y.coface(1, 0), m.cat.identity(2));
    }

    #[test]
    fn operators_must_satisfy_the_identities() {
        let c = Arc::new(corpus::walking_iso());
        let (idx, f, g) = (c.identity(0), c.morphism_id("f").unwrap(), c.morphism_id("g").unwrap());
        // X_0 = x, X_1 = y with d_0 = g, d_1 = g and s_0 = f is a valid 1-truncated object
        assert!(SimplicialObj::new(c.clone(), vec![0, 1], vec![vec![], vec![g, g]], vec![vec![f], vec![]]).is_ok());
        // s_0 = id_x cannot even be typed
        assert!(SimplicialObj::new(c.clone(), vec![0, 1], vec![vec![], vec![g, g]], vec![vec![idx], vec![]]).is_err());
        // d_0 s_0 = g f = id fails once d_0 = f g... replaced by a non-inverse
        let c2 = Arc::new(corpus::z2());
        let (e, h) = (0, 1);
        assert!(SimplicialObj::new(c2.clone(), vec![0, 0], vec![vec![], vec![e, h]], vec![vec![e], vec![]]).is_err());
        let ok = SimplicialObj::new(c2.clone(), vec![0, 0], vec![vec![], vec![h, h]], vec![vec![h], vec![]]).unwrap();
        let m = ModelStructure::trivial(c2);
        assert!(is_weakly_constant(&m, &ok).weakly_constant);
    }

    #[test]
    fn resolutions_on_chain3() {
        for m in chain3_models() {
            for b in 0..3 {
                let r = build_simplicial_resolution(&m, b, 2).unwrap();
                assert!(r.certificate.is_resolution, "{:?}", r.certificate);
                assert!(is_simplicial_resolution(&m, &r.object).unwrap().is_resolution);
                let a = build_cosimplicial_resolution(&m, b, 2).unwrap();
                assert!(a.certificate.is_resolution, "{:?}", a.certificate);
                assert!(is_cosimplicial_resolution(&m, &a.object).unwrap().is_resolution);
            }
        }
        // coarse: trivial cofibrations are isomorphisms, and Reedy
        // cofibrancy forces the cosimplicial side onto the initial object
        let coarse = &chain3_models()[1];
        let r = build_simplicial_resolution(coarse, 1, 2).unwrap();
        assert!(r.object.levels().iter().all(|&o| o == 1));
        let a = build_cosimplicial_resolution(coarse, 2, 2).unwrap();
        assert!(a.object.levels().iter().all(|&o| o == 0));
    }

    #[test]
    fn constant_hom_complexes_are_discrete() {
        let m = &chain3_models()[0];
        let c = m.cat.clone();
        for a in 0..3 {
            for b in 0..3 {
                let x = total_hom_complex(
                    &CosimplicialObj::constant(c.clone(), a, 3),
                    &SimplicialObj::constant(c.clone(), b, 3),
                )
                .unwrap();
                assert!(x.validate().passed());
                let hom = c.hom(a, b).len();
                assert_eq!(x.level_counts(), vec![hom; 4]);
                let r = right_hom_complex(a, &SimplicialObj::constant(c.clone(), b, 3)).unwrap();
                assert_eq!(r, x);
            }
        }
    }

    #[test]
    fn totalisation_of_constants_and_simple_diagrams() {
        let j = 2;
        let shape = Arc::new(crate::fincat::truncated_simplex_category(j));
        let y = crate::fincat::nerve(&corpus::z2(), 3);
        let t = tot(&SSetDiagram::constant(shape.clone(), y.clone()), 3).unwrap();
        assert!(t.validate().passed());
        assert_eq!(t.level_counts(), y.level_counts());
        let e = tot(&SSetDiagram::constant(shape.clone(), TruncSSet::empty(3)), 3).unwrap();
        assert!(e.is_empty());
        let p = tot(&SSetDiagram::constant(shape, TruncSSet::point(3)), 3).unwrap();
        assert_eq!(p.level_counts(), vec![1; 4]);
    }

    #[test]
    fn enriched_hom_of_constants() {
        let m = &chain3_models()[0];
        let c = m.cat.clone();
        for (a, b) in [(0, 2), (2, 0), (1, 1)] {
            let s = enriched_hom_s(
                &SimplicialObj::constant(c.clone(), a, 2),
                &SimplicialObj::constant(c.clone(), b, 2),
                2,
            )
            .unwrap();
            let r = right_hom_complex(a, &SimplicialObj::constant(c.clone(), b, 2)).unwrap();
            assert_eq!(s.level_counts(), r.level_counts());
            let cc = enriched_hom_c(
                &CosimplicialObj::constant(c.clone(), a, 2),
                &CosimplicialObj::constant(c.clone(), b, 2),
                2,
            )
            .unwrap();
            assert_eq!(cc.level_counts(), r.level_counts());
        }
    }

    #[test]
    fn derived_hom_counts_homotopy_classes() {
        for m in chain3_models() {
            for a in 0..3 {
                for b in 0..3 {
                    let d = derived_hom(&m, a, b, 2).unwrap();
                    assert!(d.space.validate().passed());
                    assert_eq!(d.space.pi0().count, ho_hom_count(&m, a, b).unwrap(), "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn middle_colimit_of_constants() {
        let m = &chain3_models()[0];
        let c = m.cat.clone();
        let x = middle_double_colimit(
            &CosimplicialObj::constant(c.clone(), 0, 2),
            &SimplicialObj::constant(c.clone(), 2, 2),
            2,
            1,
        )
        .unwrap();
        assert!(x.validate().passed());
        let h = homology_table(&x, 1);
        assert_eq!(h[0].group(), (1, vec![]));
        assert!(h[1].is_zero());
        let empty = middle_double_colimit(
            &CosimplicialObj::constant(c.clone(), 2, 2),
            &SimplicialObj::constant(c, 0, 2),
            2,
            1,
        )
        .unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn asphericity_and_preservation() {
        for m in chain3_models() {
            for b in 0..3 {
                let r = build_simplicial_resolution(&m, b, 2).unwrap();
                let a = resolution_asphericity_check(&m, &r, 1).unwrap();
                assert!(a.aspherical, "{:?}", a.report);
                let p = weq_preservation_check(&m, &r, 1).unwrap();
                assert!(p.holds);
                let cr = build_cosimplicial_resolution(&m, b, 2).unwrap();
                assert!(cosimplicial_asphericity_check(&m, &cr, 1).unwrap().aspherical);
                assert!(weq_preservation_check_cosimplicial(&m, &cr, 1).unwrap().holds);
            }
        }
        // trivial structure on a poset: only identities are weak equivalences
        let r = build_simplicial_resolution(&chain3_models()[0], 1, 2).unwrap();
        assert!(weq_preservation_check(&chain3_models()[0], &r, 1).unwrap().vacuous);
    }

    #[test]
    fn distinct_resolutions_of_the_walking_isomorphism() {
        let m = corpus::model_structure("walking-iso-trivial").unwrap();
        let rs = simplicial_resolutions(&m, 0, 2, 8).unwrap();
        assert!(rs.len() >= 2);
        assert!(rs.iter().all(|r| r.certificate.is_resolution));
        let distinct: Vec<_> = rs
            .iter()
            .filter(|r| r.object.levels() != rs[0].object.levels())
            .collect();
        assert!(!distinct.is_empty());
        let a = build_cosimplicial_resolution(&m, 1, 2).unwrap();
        let x = total_hom_complex(&a.object, &rs[0].object).unwrap();
        let y = total_hom_complex(&a.object, &distinct[0].object).unwrap();
        assert!(weq_evidence_pair(&x, &y, 1).unwrap().holds);
        let p = weq_preservation_check(&m, &rs[0], 1).unwrap();
        assert!(p.holds && !p.vacuous);
    }

    #[test]
    fn comparison_on_chain3() {
        for m in chain3_models() {
            let r = comparison_report(&m, 0, 2, &CompareOptions::default()).unwrap();
            assert!(r.pi0_agree && r.pi0_matches_ho && r.homology_agree, "{r:?}");
            assert!(r.nerve_to_hom.holds);
            assert!(r.naturality.iter().all(|s| s.report.commutes_in_homology));
        }
    }
}
