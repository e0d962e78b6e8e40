use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::FinCat;

/// A functor between finite categories, stored as index maps.
#[derive(Clone, Debug)]
pub struct Functor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    objects: Vec<usize>,
    morphisms: Vec<usize>,
}

impl Functor {
    /// Checks that the maps preserve sources, targets, identities and
    /// composition.
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    ) -> Result<Functor> {
        let f = Functor {
            source,
            target,
            objects,
            morphisms,
        };
        f.check()?;
        Ok(f)
    }

    /// Builds from name pairs; used by file formats and tests.
    pub fn from_names(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        objects: &[(&str, &str)],
        morphisms: &[(&str, &str)],
    ) -> Result<Functor> {
        let mut obj = vec![usize::MAX; source.num_objects()];
        for (a, b) in objects {
            obj[source.object_id(a)?] = target.object_id(b)?;
        }
        let mut mor = vec![usize::MAX; source.num_morphisms()];
        for (a, b) in morphisms {
            mor[source.morphism_id(a)?] = target.morphism_id(b)?;
        }
        // identities may be omitted
        for o in source.objects() {
            let id = source.identity(o);
            if mor[id] == usize::MAX && obj[o] != usize::MAX {
                mor[id] = target.identity(obj[o]);
            }
        }
        Functor::new(source, target, obj, mor)
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&*self.source, &*self.target);
        if self.objects.len() != s.num_objects() || self.morphisms.len() != s.num_morphisms() {
            return Err(Error::Functor("object or morphism map has the wrong size".into()));
        }
        for o in s.objects() {
            if self.objects[o] >= t.num_objects() {
                return Err(Error::Functor(format!("object `{}` is not mapped", s.object_name(o))));
            }
        }
        for m in s.morphism_ids() {
            let fm = self.morphisms[m];
            if fm >= t.num_morphisms() {
                return Err(Error::Functor(format!(
                    "morphism `{}` is not mapped",
                    s.morphism_name(m)
                )));
            }
            if t.src(fm) != self.objects[s.src(m)] || t.dst(fm) != self.objects[s.dst(m)] {
                return Err(Error::Functor(format!(
                    "image of `{}` has the wrong source or target",
                    s.morphism_name(m)
                )));
            }
        }
        for o in s.objects() {
            if self.morphisms[s.identity(o)] != t.identity(self.objects[o]) {
                return Err(Error::Functor(format!(
                    "identity of `{}` is not preserved",
                    s.object_name(o)
                )));
            }
        }
        for (f, g) in s.composable_pairs() {
            let gf = s.compose(g, f).expect("valid category");
            if t.compose(self.morphisms[g], self.morphisms[f]) != Some(self.morphisms[gf]) {
                return Err(Error::Functor(format!(
                    "composite {} ∘ {} is not preserved",
                    s.morphism_name(g),
                    s.morphism_name(f)
                )));
            }
        }
        Ok(())
    }

    pub fn identity(c: Arc<FinCat>) -> Functor {
        Functor {
            objects: c.objects().collect(),
            morphisms: c.morphism_ids().collect(),
            source: c.clone(),
            target: c,
        }
    }

    /// The functor from the terminal category picking out `object`.
    pub fn point_at(target: Arc<FinCat>, object: usize) -> Functor {
        Functor {
            source: Arc::new(FinCat::point()),
            objects: vec![object],
            morphisms: vec![target.identity(object)],
            target,
        }
    }

    /// The constant functor at an object.
    pub fn constant(source: Arc<FinCat>, target: Arc<FinCat>, object: usize) -> Functor {
        Functor {
            objects: vec![object; source.num_objects()],
            morphisms: vec![target.identity(object); source.num_morphisms()],
            source,
            target,
        }
    }

    pub fn on_object(&self, o: usize) -> usize {
        self.objects[o]
    }

    pub fn on_morphism(&self, m: usize) -> usize {
        self.morphisms[m]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphisms
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if *self.target != *other.source {
            return Err(Error::Functor("composite of non-matching functors".into()));
        }
        Ok(Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            morphisms: self.morphisms.iter().map(|&m| other.morphisms[m]).collect(),
        })
    }

    /// The induced functor between opposite categories.
    pub fn opposite(&self) -> Functor {
        Functor {
            source: Arc::new(self.source.opposite()),
            target: Arc::new(self.target.opposite()),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let injective = |v: &[usize], n: usize| {
            let mut seen = vec![false; n];
            v.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        };
        self.objects.len() == self.target.num_objects()
            && self.morphisms.len() == self.target.num_morphisms()
            && injective(&self.objects, self.target.num_objects())
            && injective(&self.morphisms, self.target.num_morphisms())
    }
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        *self.source == *other.source
            && *self.target == *other.target
            && self.objects == other.objects
            && self.morphisms == other.morphisms
    }
}

/// Components of a natural isomorphism `f ⇒ g`, found by backtracking;
/// `None` if the functors are not parallel or no such isomorphism exists.
pub fn natural_isomorphism(f: &Functor, g: &Functor) -> Option<Vec<usize>> {
    if *f.source != *g.source || *f.target != *g.target {
        return None;
    }
    let (c, d) = (&*f.source, &*f.target);
    let mut comp = vec![usize::MAX; c.num_objects()];
    fn natural_at(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor, comp: &[usize], o: usize) -> bool {
        c.morphism_ids().all(|m| {
            let (a, b) = (c.src(m), c.dst(m));
            if a.max(b) != o {
                return true;
            }
            d.compose(comp[b], f.on_morphism(m)) == d.compose(g.on_morphism(m), comp[a])
        })
    }
    fn go(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor, comp: &mut Vec<usize>, o: usize) -> bool {
        if o == c.num_objects() {
            return true;
        }
        for &t in d.hom(f.on_object(o), g.on_object(o)) {
            if !d.is_isomorphism(t) {
                continue;
            }
            comp[o] = t;
            if natural_at(c, d, f, g, comp, o) && go(c, d, f, g, comp, o + 1) {
                return true;
            }
        }
        false
    }
    go(c, d, f, g, &mut comp, 0).then_some(comp)
}

/// Searches for an isomorphism of categories `c → d` by backtracking over
/// object bijections and hom-set bijections. Intended for small inputs.
pub fn find_isomorphism(c: &Arc<FinCat>, d: &Arc<FinCat>) -> Option<Functor> {
    if c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms() {
        return None;
    }
    let n = c.num_objects();
    let mut obj = vec![usize::MAX; n];
    let mut used = vec![false; n];
    find_objects(c, d, 0, &mut obj, &mut used)
}

fn find_objects(
    c: &Arc<FinCat>,
    d: &Arc<FinCat>,
    next: usize,
    obj: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Functor> {
    if next == c.num_objects() {
        // hom-set sizes must agree before searching morphisms
        for a in c.objects() {
            for b in c.objects() {
                if c.hom(a, b).len() != d.hom(obj[a], obj[b]).len() {
                    return None;
                }
            }
        }
        let non_ids: Vec<usize> = c.morphism_ids().filter(|&m| !c.is_identity(m)).collect();
        let mut mor = vec![usize::MAX; c.num_morphisms()];
        let mut used_m = vec![false; d.num_morphisms()];
        for o in c.objects() {
            mor[c.identity(o)] = d.identity(obj[o]);
            used_m[d.identity(obj[o])] = true;
        }
        return find_morphisms(c, d, &non_ids, 0, obj, &mut mor, &mut used_m);
    }
    for t in 0..d.num_objects() {
        if used[t] || c.hom(next, next).len() != d.hom(t, t).len() {
            continue;
        }
        used[t] = true;
        obj[next] = t;
        if let Some(f) = find_objects(c, d, next + 1, obj, used) {
            return Some(f);
        }
        used[t] = false;
    }
    None
}

fn find_morphisms(
    c: &Arc<FinCat>,
    d: &Arc<FinCat>,
    todo: &[usize],
    pos: usize,
    obj: &[usize],
    mor: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Functor> {
    if pos == todo.len() {
        return Functor::new(c.clone(), d.clone(), obj.to_vec(), mor.clone()).ok();
    }
    let m = todo[pos];
    let (a, b) = (obj[c.src(m)], obj[c.dst(m)]);
    for &t in d.hom(a, b) {
        if used[t] {
            continue;
        }
        mor[m] = t;
        // composites among already-assigned morphisms must match
        let consistent = todo[..=pos].iter().all(|&x| {
            c.outgoing(c.dst(x)).iter().all(|&y| {
                let xy = c.compose(y, x).unwrap();
                if mor[y] == usize::MAX || mor[xy] == usize::MAX {
                    return true;
                }
                d.compose(mor[y], mor[x]) == Some(mor[xy])
            })
        });
        if consistent {
            used[t] = true;
            if let Some(f) = find_morphisms(c, d, todo, pos + 1, obj, mor, used) {
                return Some(f);
            }
            used[t] = false;
        }
        mor[m] = usize::MAX;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_isomorphic_to_its_opposite() {
        let c = Arc::new(FinCat::chain(3));
        let op = Arc::new(c.opposite());
        let iso = find_isomorphism(&c, &op).expect("chains are self-dual");
        assert_eq!(iso.on_object(0), 2);
    }

    #[test]
    fn non_isomorphic_categories_are_told_apart() {
        let c = Arc::new(FinCat::chain(2));
        let d = Arc::new(FinCat::discrete(&["x", "y"]));
        assert!(find_isomorphism(&c, &d).is_none());
    }

    #[test]
    fn functor_check_rejects_broken_maps() {
        let c = Arc::new(FinCat::chain(2));
        let d = Arc::new(FinCat::chain(2));
        // object swap without a matching arrow
        let err = Functor::new(c.clone(), d.clone(), vec![1, 0], vec![2, 1, 0]).unwrap_err();
        assert!(matches!(err, Error::Functor(_)));
        assert!(Functor::new(c.clone(), d, vec![0, 1], vec![0, 1, 2]).is_ok());
    }
}
