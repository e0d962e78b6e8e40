//! Free categories on reflexive graphs, the standard free resolution
//! `F_• C`, levelwise localisation by zigzag reduction, simplicial
//! localisation hom-spaces and finite-level fibrancy checks for simplicial
//! presheaves.
//!
//! Conventions: words are read first letter first; face `d_i` of the
//! resolution multiplies out nesting depth `i`, the outermost being `0`,
//! and `s_i` wraps the letters at depth `i`. Length bounds count
//! generators of `C` in the fully flattened word, so every bounded level
//! is closed under the face and degeneracy functors.

mod graph;
mod localize;
mod presheaf;
mod resolution;

pub use graph::{free_category, underlying_reflexive_graph, Edge, FreeCat, Path, ReflGraph};
pub use localize::{
    is_reduced, loc_hom_space, local_confluence_check, localize_free, reduce, zigzag_operators_close, Letter,
    LocHomSpace, LocalizedFreeCat, ZigzagWord,
};
pub use presheaf::{
    hammock_vs_loc_evidence, presheaf_local_fibrancy_evidence, FibrancyReport, HammockVsLoc, KanClause, SimpPresheaf,
    WeqClause,
};
pub use resolution::{
    augmentation, degen_word, face_word, standard_resolution, FreeArrow, ResolutionReport, StandardResolution, Term,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::corpus;
    use crate::fincat::nerve;
    use crate::sset::{SSetMap, TruncSSet};

    #[test]
    fn reflexive_graphs() {
        let g = underlying_reflexive_graph(&corpus::interval());
        assert_eq!((g.vertices.len(), g.generators().count()), (2, 1));
        let g = underlying_reflexive_graph(&corpus::z2());
        assert_eq!((g.vertices.len(), g.generators().count()), (1, 1));
        assert_eq!(g.edges[g.generators().next().unwrap()].name, "g");
        assert_eq!(underlying_reflexive_graph(&corpus::chain3()).generators().count(), 3);
    }

    #[test]
    fn free_categories() {
        let i2 = underlying_reflexive_graph(&corpus::interval());
        for l in 1..4 {
            let f = free_category(&i2, l);
            assert_eq!(f.hom(0, 1).count(), 1);
            assert!(f.complete);
        }
        let z2 = free_category(&underlying_reflexive_graph(&corpus::z2()), 3);
        let labels: Vec<String> = z2.hom(0, 0).map(|p| z2.label(p)).collect();
        assert_eq!(labels, ["ε_*", "⟨g⟩", "⟨g⟩⟨g⟩", "⟨g⟩⟨g⟩⟨g⟩"]);
        assert!(!z2.complete);
        let f0 = free_category(&underlying_reflexive_graph(&corpus::chain3()), 0);
        assert_eq!(f0.words.len(), 3);
        // one more level: words of words
        let f1 = free_category(&free_category(&i2, 2).underlying_graph(), 2);
        assert_eq!(f1.words.len(), 3);
    }

    #[test]
    fn augmentations() {
        let z2 = corpus::z2();
        let f = free_category(&underlying_reflexive_graph(&z2), 3);
        let u = augmentation(&f, &z2).unwrap();
        let gg = f.words.iter().position(|p| p.edges.len() == 2).unwrap();
        assert_eq!(z2.morphism_name(u[gg]), "e");
        assert_eq!(u[0], z2.identity(0));
        let c = corpus::chain3();
        let f = free_category(&underlying_reflexive_graph(&c), 4);
        let u = augmentation(&f, &c).unwrap();
        let two = f.words.iter().position(|p| p.edges.len() == 2).unwrap();
        assert_eq!(c.morphism_name(u[two]), "02");
        assert!(augmentation(&f, &z2).is_err());
    }

    #[test]
    fn standard_resolutions() {
        let i2 = Arc::new(corpus::interval());
        let r = standard_resolution(i2.clone(), 2, 4);
        assert!(r.levels.iter().all(|l| l.len() == 3));
        assert!(r.complete.iter().all(|&c| c));
        let c = Arc::new(corpus::chain3());
        let r = standard_resolution(c.clone(), 2, 4);
        let hom02: Vec<String> = r.levels[0]
            .iter()
            .filter(|f| f.src == 0 && f.dst == 2)
            .map(|f| f.label(&c))
            .collect();
        assert_eq!(hom02.len(), 2, "{hom02:?}");
        let report = r.check_identities();
        assert!(report.passed(), "{:?}", report.failures);
        let z = standard_resolution(Arc::new(corpus::z2()), 2, 3);
        assert!(!z.complete[0]);
        let report = z.check_identities();
        assert!(report.passed() && report.checked > 100, "{:?}", report.failures);
        let w = standard_resolution(Arc::new(corpus::walking_iso()), 2, 3);
        assert!(w.check_identities().passed());
    }

    #[test]
    fn localization_of_free_categories() {
        let i2 = corpus::interval();
        let g = underlying_reflexive_graph(&i2);
        let f = free_category(&g, 3);
        let a = i2.morphism_id("a").unwrap();
        let l = localize_free(&f, &[a], 3).unwrap();
        let back: Vec<&ZigzagWord<usize>> = l.words.iter().filter(|w| w.src == 1 && w.dst == 0).collect();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].letters, [Letter { gen: a, inverse: true }]);
        assert!(local_confluence_check(&l).unwrap() > 0);
        let w = ZigzagWord {
            src: 1,
            dst: 0,
            letters: vec![Letter { gen: a, inverse: true }],
        };
        assert!(w.then(&w.inverse()).unwrap().letters.is_empty());
        let plain = localize_free(&f, &[], 3).unwrap();
        assert_eq!(plain.words.len(), f.words.len());
        assert!(localize_free(&f, &[i2.identity(0)], 3).is_err());
    }

    #[test]
    fn loc_hom_spaces() {
        let ids = corpus::relcat_named("I2-ids").unwrap();
        let h = loc_hom_space(&ids, 0, 1, 3, 4).unwrap();
        assert_eq!(h.sset().level_counts(), vec![1; 4]);
        assert!(h.sset().validate().passed() && h.stable);
        assert_eq!(
            loc_hom_space(&ids, 0, 0, 3, 4).unwrap().sset().level_counts(),
            vec![1; 4]
        );
        assert_eq!(
            loc_hom_space(&ids, 1, 0, 3, 4).unwrap().sset().level_counts(),
            vec![0; 4]
        );
        let inv = corpus::relcat_named("I2-a").unwrap();
        let h = loc_hom_space(&inv, 1, 0, 3, 4).unwrap();
        assert!(h.sset().validate().passed());
        assert_eq!(h.sset().pi0().count, 1);
        let c3 = corpus::relcat_named("chain3-isos").unwrap();
        let h = loc_hom_space(&c3, 0, 2, 3, 4).unwrap();
        assert!(h.sset().validate().passed() && h.stable);
        assert_eq!(h.sset().pi0().count, 1);
        assert!(zigzag_operators_close(&c3, 0, 2, 3, 4));
        let z2 = corpus::relcat_named("Z2-all").unwrap();
        let h = loc_hom_space(&z2, 0, 0, 2, 3).unwrap();
        assert!(h.sset().validate().passed() && !h.stable);
    }

    #[test]
    fn presheaf_fibrancy() {
        let i2 = Arc::new(corpus::interval());
        let r = corpus::relcat_named("I2-ids").unwrap();
        let p = SimpPresheaf::constant(i2.clone(), TruncSSet::point(2));
        assert!(presheaf_local_fibrancy_evidence(&p, &r, 1).unwrap().holds);
        let nz = nerve(&corpus::z2(), 3);
        let p = SimpPresheaf::constant(i2.clone(), nz.clone());
        let rep = presheaf_local_fibrancy_evidence(&p, &r, 2).unwrap();
        assert!(rep.fibrant && rep.weq_clause_vacuous && rep.holds);
        // P(a) collapses H_1 = Z/2
        let ra = corpus::relcat_named("I2-a").unwrap();
        let (p0, p1) = (Arc::new(TruncSSet::point(3)), Arc::new(nz));
        let maps: Vec<SSetMap> = i2
            .morphism_ids()
            .map(|m| match i2.morphism_name(m) {
                "a" => SSetMap::to_point(p1.clone()),
                "id0" => SSetMap::identity(p0.clone()),
                _ => SSetMap::identity(p1.clone()),
            })
            .collect();
        let p = SimpPresheaf::new(i2, vec![p0, p1], maps).unwrap();
        let rep = presheaf_local_fibrancy_evidence(&p, &ra, 2).unwrap();
        assert!(rep.fibrant && !rep.sends_weqs_to_weqs);
        assert!(!rep.weq_clauses[0].evidence.holds && !rep.holds);
    }

    #[test]
    fn hammock_and_loc_agree() {
        for (name, a, b, pi0) in [
            ("I2-ids", 0, 1, 1),
            ("I2-a", 1, 0, 1),
            ("I2-a", 0, 1, 1),
            ("chain3-isos", 1, 0, 0),
        ] {
            let r = corpus::relcat_named(name).unwrap();
            let rep = hammock_vs_loc_evidence(&r, a, b, 3, 4, 2).unwrap();
            assert!(rep.holds, "{name} ({a},{b}): {rep:?}");
            assert_eq!(rep.hammock_pi0, pi0);
        }
        let r = corpus::relcat_named("chain3-isos").unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let rep = hammock_vs_loc_evidence(&r, a, b, 2, 4, 1).unwrap();
                assert!(rep.pi0_agree && rep.loc_stable, "({a},{b}) {rep:?}");
                assert_eq!(rep.loc_pi0, usize::from(a <= b));
            }
        }
    }
}
