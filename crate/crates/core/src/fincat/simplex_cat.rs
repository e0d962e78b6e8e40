use std::collections::HashMap;

use crate::fincat::{FinCat, Morphism};
use crate::simplex;

/// The full subcategory `Δ≤k` of the simplex category on `[0], …, [k]`.
///
/// Morphism `[m] → [n]` with values `α(0) … α(m)` is named `m>n:α(0)…α(m)`.
pub fn truncated_simplex_category(k: usize) -> FinCat {
    let objects = (0..=k).map(|n| format!("[{n}]")).collect();
    let mut morphisms = Vec::new();
    let mut maps = Vec::new();
    let mut index = HashMap::new();
    for m in 0..=k {
        for n in 0..=k {
            for alpha in simplex::monotone_maps(m, n) {
                let values: String = alpha.iter().map(|v| v.to_string()).collect();
                index.insert((n, alpha.clone()), morphisms.len());
                morphisms.push(Morphism {
                    name: format!("{m}>{n}:{values}"),
                    src: m,
                    dst: n,
                });
                maps.push(alpha);
            }
        }
    }
    let identities = (0..=k).map(|n| index[&(n, simplex::identity(n))]).collect();
    let ms = morphisms.clone();
    FinCat::from_parts(objects, morphisms, identities, |g, f| {
        index[&(ms[g].dst, simplex::compose(&maps[g], &maps[f]))]
    })
}

/// The monotone map underlying a morphism of [`truncated_simplex_category`].
pub fn monotone_of(c: &FinCat, m: usize) -> Vec<usize> {
    let name = c.morphism_name(m);
    let values = name.split(':').nth(1).expect("simplex category morphism");
    values.bytes().map(|b| (b - b'0') as usize).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_counts() {
        assert_eq!(truncated_simplex_category(0).num_morphisms(), 1);
        let d1 = truncated_simplex_category(1);
        assert_eq!(d1.num_objects(), 2);
        assert_eq!(d1.hom(0, 1).len(), 2);
        assert_eq!(d1.hom(1, 0).len(), 1);
        assert_eq!(d1.hom(1, 1).len(), 3);
        let d2 = truncated_simplex_category(2);
        assert_eq!(d2.hom(2, 2).len(), 10);
        assert!(d2.axiom_violations().is_empty());
        let m = d2.hom(1, 2)[0];
        assert_eq!(monotone_of(&d2, m), vec![0, 0]);
    }
}
