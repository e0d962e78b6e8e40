//! Bousfield–Kan colimits and their duals, the duality isomorphism, and
//! homology-level evidence for the diagonal comparison, Thomason's theorem,
//! Quillen's Theorem A and homotopy cofinality.

mod aspherical;
mod bk;
mod diagram;

pub use aspherical::{
    cofinality_asphericity_evidence, grothendieck_functor, is_left_aspherical, is_right_aspherical, quillen_a_evidence,
    AsphericityReport, CofinalityAsphericityReport, CommaCheck, Outcome, QuillenAReport,
};
pub use bk::{
    bk_colim, bk_colim_indexed, bk_colim_map, bk_vs_diagonal_evidence, dual_bk_colim, dual_bk_colim_indexed,
    dual_bk_colim_map, duality_check, homotopical_invariance_check, thomason_evidence, BkSimplex, ComparisonReport,
    InvarianceReport,
};
pub use diagram::{DiagramMap, SSetDiagram};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{chains, nerve, CatDiagram, FinCat, Functor};
    use crate::sset::{homology, SSetMap, TruncSSet};

    fn z2() -> Arc<FinCat> {
        Arc::new(FinCat::group("*", &["e", "g"], |a, b| a ^ b))
    }

    #[test]
    fn constant_point_recovers_the_nerve() {
        let c = FinCat::chain(2);
        let d = SSetDiagram::constant(Arc::new(c.clone()), TruncSSet::point(3));
        let bk = bk_colim(&d, 3).unwrap();
        assert!(bk.validate().passed());
        assert_eq!(bk.len(1), 3);
        assert_eq!(bk.level_counts(), nerve(&c, 3).level_counts());
        let dual = dual_bk_colim(&d, 3).unwrap();
        assert!(dual.validate().passed());
        for n in 0..=3 {
            assert_eq!(dual.len(n), chains(&c, n).len());
        }
    }

    #[test]
    fn point_shape_gives_the_value() {
        let x = TruncSSet::boundary_simplex(2, 2);
        let d = SSetDiagram::constant(Arc::new(FinCat::point()), x.clone());
        assert_eq!(bk_colim(&d, 2).unwrap().level_counts(), x.level_counts());
        assert_eq!(dual_bk_colim(&d, 2).unwrap().level_counts(), x.level_counts());
        assert!(duality_check(&d, 2).unwrap());
    }

    #[test]
    fn nontrivial_maps_and_duality() {
        let g = z2();
        let two = Arc::new(TruncSSet::discrete(&["a".into(), "b".into()], 2));
        let swap = SSetMap::new(two.clone(), two.clone(), vec![vec![1, 0]; 3]).unwrap();
        let d = SSetDiagram::new(g.clone(), vec![two.clone()], vec![SSetMap::identity(two.clone()), swap]).unwrap();
        let bk = bk_colim(&d, 2).unwrap();
        assert!(bk.validate().passed());
        // Z2 acts freely on two points: hocolim is contractible
        assert_eq!(bk.pi0().count, 1);
        assert!(homology(&bk, 1).is_zero());
        assert!(dual_bk_colim(&d, 2).unwrap().validate().passed());
        assert!(duality_check(&d, 2).unwrap());
    }

    #[test]
    fn diagonal_of_a_nerve_row() {
        let nz = nerve(&z2(), 2);
        let x = crate::sset::BiTruncSSet::constant_rows(&nz).unwrap();
        let r = bk_vs_diagonal_evidence(&x, 1).unwrap();
        assert!(r.holds, "{r:?}");
        let y = crate::sset::BiTruncSSet::constant_columns(&nz).unwrap();
        assert!(bk_vs_diagonal_evidence(&y, 1).unwrap().holds);
    }

    #[test]
    fn invariance() {
        let i2 = Arc::new(FinCat::chain(2));
        let d1 = SSetDiagram::constant(i2.clone(), TruncSSet::standard_simplex(1, 2));
        let pt = SSetDiagram::constant(i2.clone(), TruncSSet::point(2));
        let components = (0..2).map(|c| SSetMap::to_point(d1.value(c).clone())).collect();
        let collapse = DiagramMap::new(d1.clone(), pt, components).unwrap();
        assert!(homotopical_invariance_check(&collapse, 1).unwrap().holds);
        assert!(
            homotopical_invariance_check(&DiagramMap::identity(d1), 1)
                .unwrap()
                .holds
        );

        let p = Arc::new(FinCat::point());
        let nz = Arc::new(nerve(&z2(), 3));
        let inc = SSetMap::new(
            Arc::new(TruncSSet::point(3)),
            nz.clone(),
            vec![vec![0], vec![0], vec![0], vec![0]],
        )
        .unwrap();
        let phi = DiagramMap::new(
            SSetDiagram::constant(p.clone(), TruncSSet::point(3)),
            SSetDiagram::constant(p, (*nz).clone()),
            vec![inc],
        )
        .unwrap();
        let r = homotopical_invariance_check(&phi, 1).unwrap();
        assert!(!r.objectwise && !r.holds);
    }

    #[test]
    fn thomason_small_cases() {
        let i2 = Arc::new(FinCat::chain(2));
        let d = CatDiagram::constant(i2, Arc::new(FinCat::point()));
        assert!(thomason_evidence(&d, 1).unwrap().holds);
        let d = CatDiagram::constant(Arc::new(FinCat::point()), z2());
        let r = thomason_evidence(&d, 1).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn asphericity_and_theorem_a() {
        let i2 = Arc::new(FinCat::chain(2));
        let top = Functor::point_at(i2.clone(), 1);
        assert!(is_left_aspherical(&top, 2).unwrap().aspherical);
        assert_eq!(quillen_a_evidence(&top, 2).unwrap().outcome, Outcome::Holds);
        let bottom = Functor::point_at(i2.clone(), 0);
        assert!(!is_left_aspherical(&bottom, 2).unwrap().aspherical);
        // but the bottom inclusion is right aspherical
        assert_eq!(quillen_a_evidence(&bottom, 2).unwrap().outcome, Outcome::Holds);
        let id = Functor::identity(i2.clone());
        assert_eq!(quillen_a_evidence(&id, 2).unwrap().outcome, Outcome::Holds);

        // pt → Z2 is neither
        let into_group = Functor::point_at(z2(), 0);
        let r = quillen_a_evidence(&into_group, 1).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisNotEstablished);
    }

    #[test]
    fn cofinality() {
        let c3 = Arc::new(FinCat::chain(3));
        let i2 = Arc::new(FinCat::chain(2));
        let u = Functor::new(i2.clone(), c3.clone(), vec![0, 1], vec![0, 1, 3]).unwrap();
        let d = CatDiagram::constant(c3.clone(), Arc::new(FinCat::point()));
        // the bottom segment is not left aspherical: (2 ↓ u) is empty
        let r = cofinality_asphericity_evidence(&u, &d, 1).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisNotEstablished);
        let top = Functor::new(i2.clone(), c3.clone(), vec![1, 2], vec![3, 4, 5]).unwrap();
        let r = cofinality_asphericity_evidence(&top, &d, 1).unwrap();
        assert_eq!(r.outcome, Outcome::Holds, "{r:?}");
        let id = Functor::identity(c3.clone());
        let r = cofinality_asphericity_evidence(&id, &d, 1).unwrap();
        assert_eq!(r.outcome, Outcome::Holds);
    }
}
