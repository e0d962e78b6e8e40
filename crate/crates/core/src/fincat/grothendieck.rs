//! Lax and oplax colimits of diagrams of categories.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::fincat::{CatDiagram, FinCat, Functor, Morphism};

/// A Grothendieck construction with the bookkeeping needed to compare it
/// with other constructions: objects are `(c, x)`, morphisms `(f, g)`.
#[derive(Clone, Debug)]
pub struct Grothendieck {
    pub cat: Arc<FinCat>,
    pub objects: Vec<(usize, usize)>,
    pub morphisms: Vec<(usize, usize)>,
    /// Projection to the shape (lax) or its opposite (oplax).
    pub projection: Functor,
}

impl Grothendieck {
    pub fn object_index(&self) -> HashMap<(usize, usize), usize> {
        self.objects.iter().enumerate().map(|(i, &p)| (p, i)).collect()
    }

    pub fn morphism_index(&self) -> HashMap<(usize, usize, usize, usize), usize> {
        // keyed by (source object, target object, f, g)
        self.morphisms
            .iter()
            .enumerate()
            .map(|(i, &(f, g))| {
                let m = self.cat.morphism(i);
                ((m.src, m.dst, f, g), i)
            })
            .collect()
    }
}

/// Morphisms `⟨c',x'⟩ → ⟨c,x⟩` are pairs `⟨f : c' → c, g : 𝒳(f)(x') → x⟩`.
pub fn lax_colim(d: &CatDiagram) -> Result<Grothendieck> {
    let shape = &*d.shape;
    let objects: Vec<(usize, usize)> = shape
        .objects()
        .flat_map(|c| d.fibre(c).objects().map(move |x| (c, x)))
        .collect();
    let oindex: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut morphisms = Vec::new();
    let mut ms = Vec::new();
    let mut index = HashMap::new();
    for (i, &(c1, x1)) in objects.iter().enumerate() {
        for &f in shape.outgoing(c1) {
            let c = shape.dst(f);
            let fx1 = d.functor(f).on_object(x1);
            let fib = d.fibre(c);
            for x in fib.objects() {
                for &g in fib.hom(fx1, x) {
                    let j = oindex[&(c, x)];
                    index.insert((i, j, f, g), ms.len());
                    ms.push(Morphism {
                        name: format!("({},{})", shape.morphism_name(f), fib.morphism_name(g)),
                        src: i,
                        dst: j,
                    });
                    morphisms.push((f, g));
                }
            }
        }
    }
    let identities = objects
        .iter()
        .enumerate()
        .map(|(i, &(c, x))| index[&(i, i, shape.identity(c), d.fibre(c).identity(x))])
        .collect();
    let names = objects
        .iter()
        .map(|&(c, x)| format!("({},{})", shape.object_name(c), d.fibre(c).object_name(x)))
        .collect();
    let cat = FinCat::from_parts(names, ms.clone(), identities, |second, first| {
        let (f1, g1) = morphisms[first];
        let (f2, g2) = morphisms[second];
        let c = shape.dst(f2);
        let f = shape.compose(f2, f1).unwrap();
        let g = d.fibre(c).compose(g2, d.functor(f2).on_morphism(g1)).unwrap();
        index[&(ms[first].src, ms[second].dst, f, g)]
    });
    let cat = Arc::new(cat);
    let projection = Functor::new(
        cat.clone(),
        d.shape.clone(),
        objects.iter().map(|p| p.0).collect(),
        morphisms.iter().map(|p| p.0).collect(),
    )?;
    Ok(Grothendieck {
        cat,
        objects,
        morphisms,
        projection,
    })
}

/// Morphisms `⟨c',x'⟩ → ⟨c,x⟩` are pairs `⟨f : c → c', g : x' → 𝒳(f)(x)⟩`.
pub fn oplax_colim(d: &CatDiagram) -> Result<Grothendieck> {
    let shape = &*d.shape;
    let objects: Vec<(usize, usize)> = shape
        .objects()
        .flat_map(|c| d.fibre(c).objects().map(move |x| (c, x)))
        .collect();
    let oindex: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut morphisms = Vec::new();
    let mut ms = Vec::new();
    let mut index = HashMap::new();
    for (i, &(c1, x1)) in objects.iter().enumerate() {
        // f : c → c1
        for &f in shape.incoming(c1) {
            let c = shape.src(f);
            let fib1 = d.fibre(c1);
            for x in d.fibre(c).objects() {
                let fx = d.functor(f).on_object(x);
                for &g in fib1.hom(x1, fx) {
                    let j = oindex[&(c, x)];
                    index.insert((i, j, f, g), ms.len());
                    ms.push(Morphism {
                        name: format!("({},{})", shape.morphism_name(f), fib1.morphism_name(g)),
                        src: i,
                        dst: j,
                    });
                    morphisms.push((f, g));
                }
            }
        }
    }
    let identities = objects
        .iter()
        .enumerate()
        .map(|(i, &(c, x))| index[&(i, i, shape.identity(c), d.fibre(c).identity(x))])
        .collect();
    let names = objects
        .iter()
        .map(|&(c, x)| format!("({},{})", shape.object_name(c), d.fibre(c).object_name(x)))
        .collect();
    let cat = FinCat::from_parts(names, ms.clone(), identities, |second, first| {
        // first: (c'', x'') → (c', x') with f1 : c' → c''
        // second: (c', x') → (c, x) with f2 : c → c'
        let (f1, g1) = morphisms[first];
        let (f2, g2) = morphisms[second];
        let c2 = shape.dst(f1);
        let f = shape.compose(f1, f2).unwrap();
        let g = d.fibre(c2).compose(d.functor(f1).on_morphism(g2), g1).unwrap();
        index[&(ms[first].src, ms[second].dst, f, g)]
    });
    let cat = Arc::new(cat);
    let projection = Functor::new(
        cat.clone(),
        Arc::new(shape.opposite()),
        objects.iter().map(|p| p.0).collect(),
        morphisms.iter().map(|p| p.0).collect(),
    )?;
    Ok(Grothendieck {
        cat,
        objects,
        morphisms,
        projection,
    })
}

/// Whether the fibre of the projection over each shape object is the
/// assigned fibre category (objects and vertical morphisms match exactly).
pub fn fibres_match(d: &CatDiagram, g: &Grothendieck) -> bool {
    let shape = &*d.shape;
    shape.objects().all(|c| {
        let fib = d.fibre(c);
        let objs = g.objects.iter().filter(|p| p.0 == c).count();
        let verticals = g
            .morphisms
            .iter()
            .enumerate()
            .filter(|(_, &(f, _))| f == shape.identity(c))
            .count();
        objs == fib.num_objects() && verticals == fib.num_morphisms()
    })
}

/// Outcome of comparing a Grothendieck construction over `A` with the
/// pullback of the one over `B` along `u`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CofinalityReport {
    pub lax_isomorphism: bool,
    pub oplax_isomorphism: bool,
}

/// Builds `∫_A 𝒳∘u` and the pullback `A ×_B ∫_B 𝒳` (and the oplax
/// analogues over `A^op`, `B^op`) and checks that the canonical comparison
/// `⟨a, x⟩ ↦ ⟨a, ⟨u a, x⟩⟩`, `⟨α, g⟩ ↦ ⟨α, ⟨u α, g⟩⟩` is an isomorphism
/// of categories.
pub fn check_cofinality_pullback(u: &Functor, d: &CatDiagram) -> Result<CofinalityReport> {
    let restricted = d.pull_back(u)?;
    let lax = pullback_comparison(u, &lax_colim(&restricted)?, &lax_colim(d)?);
    let oplax = pullback_comparison(&u.opposite(), &oplax_colim(&restricted)?, &oplax_colim(d)?);
    Ok(CofinalityReport {
        lax_isomorphism: lax,
        oplax_isomorphism: oplax,
    })
}

// `u` is the functor between the bases of the two projections (so `u^op`
// in the oplax case).
fn pullback_comparison(u: &Functor, over_a: &Grothendieck, over_b: &Grothendieck) -> bool {
    let a = &*u.source;
    // pullback objects (a, j) with u(a) = proj(j); morphisms (α, m) with u(α) = proj(m)
    let pb_objects: Vec<(usize, usize)> = a
        .objects()
        .flat_map(|x| {
            over_b
                .objects
                .iter()
                .enumerate()
                .filter(move |(_, p)| p.0 == u.on_object(x))
                .map(move |(j, _)| (x, j))
        })
        .collect();
    let pb_index: HashMap<(usize, usize), usize> = pb_objects.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut pb_morphisms = HashMap::new();
    for alpha in a.morphism_ids() {
        for m in over_b.cat.morphism_ids() {
            if over_b.morphisms[m].0 == u.on_morphism(alpha) {
                let s = pb_index.get(&(a.src(alpha), over_b.cat.src(m)));
                let t = pb_index.get(&(a.dst(alpha), over_b.cat.dst(m)));
                if let (Some(&s), Some(&t)) = (s, t) {
                    pb_morphisms.insert((alpha, m), (s, t));
                }
            }
        }
    }
    let b_objects = over_b.object_index();
    let b_morphisms = over_b.morphism_index();
    // comparison on objects
    let mut obj_image = Vec::with_capacity(over_a.objects.len());
    for &(x, fx) in &over_a.objects {
        let Some(&j) = b_objects.get(&(u.on_object(x), fx)) else {
            return false;
        };
        obj_image.push(pb_index[&(x, j)]);
    }
    let mut seen = vec![false; pb_objects.len()];
    if obj_image.len() != pb_objects.len() || obj_image.iter().any(|&i| std::mem::replace(&mut seen[i], true)) {
        return false;
    }
    // comparison on morphisms, respecting endpoints
    let mut hit = std::collections::HashSet::new();
    for (i, &(alpha, g)) in over_a.morphisms.iter().enumerate() {
        let m = over_a.cat.morphism(i);
        let (s, t) = (obj_image[m.src], obj_image[m.dst]);
        let (bs, bt) = (pb_objects[s].1, pb_objects[t].1);
        let Some(&bm) = b_morphisms.get(&(bs, bt, u.on_morphism(alpha), g)) else {
            return false;
        };
        if pb_morphisms.get(&(alpha, bm)) != Some(&(s, t)) || !hit.insert((alpha, bm)) {
            return false;
        }
    }
    hit.len() == pb_morphisms.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::find_isomorphism;

    fn pt() -> Arc<FinCat> {
        Arc::new(FinCat::point())
    }

    #[test]
    fn point_shape_gives_the_fibre() {
        let z2 = Arc::new(FinCat::group("*", &["e", "g"], |a, b| a ^ b));
        let d = CatDiagram::constant(pt(), z2.clone());
        let lax = lax_colim(&d).unwrap();
        assert!(find_isomorphism(&lax.cat, &z2).is_some());
        let oplax = oplax_colim(&d).unwrap();
        assert!(find_isomorphism(&oplax.cat, &z2).is_some());
    }

    #[test]
    fn constant_point_diagram_recovers_shape_and_opposite() {
        let c = Arc::new(FinCat::chain(3));
        let d = CatDiagram::constant(c.clone(), pt());
        let lax = lax_colim(&d).unwrap();
        assert!(lax.cat.axiom_violations().is_empty());
        assert!(find_isomorphism(&lax.cat, &c).is_some());
        let oplax = oplax_colim(&d).unwrap();
        let op = Arc::new(c.opposite());
        // exact identification: each (f, id) is f read backwards
        assert!(oplax.projection.is_bijective());
        assert_eq!(*oplax.projection.target, *op);
        assert!(fibres_match(&d, &lax) && fibres_match(&d, &oplax));
    }

    #[test]
    fn discrete_shape_is_disjoint_union() {
        let shape = Arc::new(FinCat::discrete(&["p", "q"]));
        let i2 = Arc::new(FinCat::chain(2));
        let d = CatDiagram::new(
            shape,
            vec![i2.clone(), pt()],
            vec![Functor::identity(i2), Functor::identity(pt())],
        )
        .unwrap();
        let oplax = oplax_colim(&d).unwrap();
        assert_eq!(oplax.cat.num_objects(), 3);
        assert_eq!(oplax.cat.num_morphisms(), 4);
    }

    #[test]
    fn cofinality_pullbacks_for_identity_and_inclusions() {
        let c = Arc::new(FinCat::chain(3));
        let z2 = Arc::new(FinCat::group("*", &["e", "g"], |a, b| a ^ b));
        let d = CatDiagram::constant(c.clone(), z2);
        let id = Functor::identity(c.clone());
        let r = check_cofinality_pullback(&id, &d).unwrap();
        assert!(r.lax_isomorphism && r.oplax_isomorphism);
        let i2 = Arc::new(FinCat::chain(2));
        let u = Functor::new(i2, c.clone(), vec![0, 1], vec![0, 1, 3]).unwrap();
        let r = check_cofinality_pullback(&u, &d).unwrap();
        assert!(r.lax_isomorphism && r.oplax_isomorphism);
    }
}
