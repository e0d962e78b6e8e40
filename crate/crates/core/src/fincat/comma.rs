use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor, Morphism};

/// A comma category together with the data of its objects: object `i` is
/// the pair `(pairs[i].0, pairs[i].1)` of an object of the source of `u`
/// and a morphism of the target.
#[derive(Clone, Debug)]
pub struct Comma {
    pub cat: FinCat,
    pub pairs: Vec<(usize, usize)>,
}

/// `(b ↓ u)`: objects `(a, f : b → u a)`, morphisms `α : a → a'` with
/// `u(α) ∘ f = f'`.
pub fn comma_under(u: &Functor, b: usize) -> Result<Comma> {
    let (s, t) = (&*u.source, &*u.target);
    if b >= t.num_objects() {
        return Err(Error::UnknownObject(b.to_string()));
    }
    let pairs: Vec<(usize, usize)> = s
        .objects()
        .flat_map(|a| t.hom(b, u.on_object(a)).iter().map(move |&f| (a, f)))
        .collect();
    build(s, t, pairs, |(_, f), (_, f2), alpha| {
        t.compose(u.on_morphism(alpha), f) == Some(f2)
    })
}

/// `(u ↓ b)`: objects `(a, f : u a → b)`, morphisms `α : a → a'` with
/// `f' ∘ u(α) = f`.
pub fn comma_over(u: &Functor, b: usize) -> Result<Comma> {
    let (s, t) = (&*u.source, &*u.target);
    if b >= t.num_objects() {
        return Err(Error::UnknownObject(b.to_string()));
    }
    let pairs: Vec<(usize, usize)> = s
        .objects()
        .flat_map(|a| t.hom(u.on_object(a), b).iter().map(move |&f| (a, f)))
        .collect();
    build(s, t, pairs, |(_, f), (_, f2), alpha| {
        t.compose(f2, u.on_morphism(alpha)) == Some(f)
    })
}

fn build(
    s: &FinCat,
    t: &FinCat,
    pairs: Vec<(usize, usize)>,
    commutes: impl Fn((usize, usize), (usize, usize), usize) -> bool,
) -> Result<Comma> {
    let objects: Vec<String> = pairs
        .iter()
        .map(|&(a, f)| format!("({},{})", s.object_name(a), t.morphism_name(f)))
        .collect();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    let mut identities = vec![0; pairs.len()];
    for (i, &p) in pairs.iter().enumerate() {
        for (j, &q) in pairs.iter().enumerate() {
            for &alpha in s.hom(p.0, q.0) {
                if commutes(p, q, alpha) {
                    if i == j && s.is_identity(alpha) {
                        identities[i] = morphisms.len();
                    }
                    index.insert((i, j, alpha), morphisms.len());
                    morphisms.push((
                        Morphism {
                            name: format!("{}:{}→{}", s.morphism_name(alpha), objects[i], objects[j]),
                            src: i,
                            dst: j,
                        },
                        alpha,
                    ));
                }
            }
        }
    }
    let under: Vec<usize> = morphisms.iter().map(|(_, a)| *a).collect();
    let ms: Vec<Morphism> = morphisms.into_iter().map(|(m, _)| m).collect();
    let srcs: Vec<(usize, usize)> = ms.iter().map(|m| (m.src, m.dst)).collect();
    let cat = FinCat::from_parts(objects, ms, identities, |g, f| {
        let alpha = s.compose(under[g], under[f]).expect("composable");
        index[&(srcs[f].0, srcs[g].1, alpha)]
    });
    Ok(Comma { cat, pairs })
}

/// An object all of whose outgoing hom-sets are singletons.
pub fn initial_object(c: &FinCat) -> Option<usize> {
    c.objects().find(|&a| c.objects().all(|b| c.hom(a, b).len() == 1))
}

pub fn terminal_object(c: &FinCat) -> Option<usize> {
    c.objects().find(|&b| c.objects().all(|a| c.hom(a, b).len() == 1))
}

/// `u` has a right adjoint iff every `(u ↓ b)` has a terminal object.
pub fn has_right_adjoint(u: &Functor) -> bool {
    u.target.objects().all(|b| {
        comma_over(u, b)
            .map(|c| terminal_object(&c.cat).is_some())
            .unwrap_or(false)
    })
}

/// `u` has a left adjoint iff every `(b ↓ u)` has an initial object.
pub fn has_left_adjoint(u: &Functor) -> bool {
    u.target.objects().all(|b| {
        comma_under(u, b)
            .map(|c| initial_object(&c.cat).is_some())
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn identity_under_has_initial_object() {
        let c = Arc::new(FinCat::chain(3));
        let u = Functor::identity(c.clone());
        for b in c.objects() {
            let comma = comma_under(&u, b).unwrap();
            assert!(comma.cat.axiom_violations().is_empty());
            let i = initial_object(&comma.cat).unwrap();
            assert_eq!(comma.pairs[i], (b, c.identity(b)));
        }
    }

    #[test]
    fn point_into_walking_arrow() {
        let i2 = Arc::new(FinCat::chain(2));
        let at_one = Functor::point_at(i2.clone(), 1);
        let c = comma_under(&at_one, 0).unwrap();
        assert_eq!(c.cat.num_objects(), 1);
        assert_eq!(i2.morphism_name(c.pairs[0].1), "01");

        let at_zero = Functor::point_at(i2.clone(), 0);
        assert_eq!(comma_under(&at_zero, 1).unwrap().cat.num_objects(), 0);
        assert!(comma_under(&at_zero, 5).is_err());
    }

    #[test]
    fn adjoints_of_point_inclusions() {
        let c = Arc::new(FinCat::chain(3));
        let top = Functor::point_at(c.clone(), 2);
        assert!(has_left_adjoint(&top));
        assert!(!has_right_adjoint(&top));
        let bottom = Functor::point_at(c, 0);
        assert!(has_right_adjoint(&bottom));
        assert!(!has_left_adjoint(&bottom));
    }
}
