use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A failed category axiom, with the offending ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateObject(String),
    DuplicateMorphism(String),
    DanglingEndpoint {
        morphism: String,
        object: String,
    },
    MissingIdentity(String),
    IdentityNotEndo {
        object: String,
        morphism: String,
    },
    UnknownMorphismInTable(String),
    NonComposablePair {
        first: String,
        second: String,
    },
    CompositeWrongType {
        first: String,
        second: String,
        composite: String,
    },
    ConflictingComposite {
        first: String,
        second: String,
    },
    MissingComposite {
        first: String,
        second: String,
    },
    IdentityLaw {
        morphism: String,
    },
    NonAssociative {
        f: String,
        g: String,
        h: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            DuplicateObject(o) => write!(f, "duplicate object id `{o}`"),
            DuplicateMorphism(m) => write!(f, "duplicate morphism id `{m}`"),
            DanglingEndpoint { morphism, object } => {
                write!(f, "morphism `{morphism}` refers to unknown object `{object}`")
            }
            MissingIdentity(o) => write!(f, "missing identity for object `{o}`"),
            IdentityNotEndo { object, morphism } => {
                write!(f, "identity `{morphism}` of `{object}` is not an endomorphism of it")
            }
            UnknownMorphismInTable(m) => write!(f, "composition table mentions unknown morphism `{m}`"),
            NonComposablePair { first, second } => {
                write!(f, "non-composable pair in table: `{second}` ∘ `{first}`")
            }
            CompositeWrongType {
                first,
                second,
                composite,
            } => write!(
                f,
                "composite `{composite}` of `{second}` ∘ `{first}` has the wrong source or target"
            ),
            ConflictingComposite { first, second } => {
                write!(f, "conflicting composites declared for `{second}` ∘ `{first}`")
            }
            MissingComposite { first, second } => {
                write!(f, "missing composite for composable pair `{second}` ∘ `{first}`")
            }
            IdentityLaw { morphism } => write!(f, "identity law fails for `{morphism}`"),
            NonAssociative { f: a, g, h } => {
                write!(f, "non-associative table: ({h} ∘ {g}) ∘ {a} ≠ {h} ∘ ({g} ∘ {a})")
            }
        }
    }
}

/// A finite category with an explicit, total composition table.
///
/// Objects and morphisms are addressed by dense indices; their string ids
/// are kept for serialisation and diagnostics.
#[derive(Clone, Debug)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    // (g, f) ↦ g ∘ f
    compose: HashMap<(usize, usize), usize>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    hom: HashMap<(usize, usize), Vec<usize>>,
    object_index: HashMap<String, usize>,
    morphism_index: HashMap<String, usize>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCat {}

impl FinCat {
    /// Assembles a category whose composition is given by a function on
    /// composable pairs `(g, f)`. Used for categories built by the toolkit
    /// itself; the axioms can be re-checked with [`FinCat::axiom_violations`].
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> usize,
    ) -> FinCat {
        let n = objects.len();
        let mut outgoing = vec![Vec::new(); n];
        let mut incoming = vec![Vec::new(); n];
        let mut hom: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            outgoing[m.src].push(i);
            incoming[m.dst].push(i);
            hom.entry((m.src, m.dst)).or_default().push(i);
        }
        let mut table = HashMap::new();
        for mid in 0..n {
            for &f in &incoming[mid] {
                for &g in &outgoing[mid] {
                    table.insert((g, f), compose(g, f));
                }
            }
        }
        let object_index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let morphism_index = morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
        FinCat {
            objects,
            morphisms,
            identities,
            compose: table,
            outgoing,
            incoming,
            hom,
            object_index,
            morphism_index,
        }
    }

    pub fn builder() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = usize> {
        0..self.objects.len()
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = usize> {
        0..self.morphisms.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.morphisms[m].name
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn dst(&self, m: usize) -> usize {
        self.morphisms[m].dst
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].src] == m
    }

    /// `g ∘ f`, defined when `dst(f) = src(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    /// Composite of a path given first-arrow-first. Panics on a
    /// non-composable path.
    pub fn compose_path(&self, path: &[usize]) -> usize {
        let mut acc = path[0];
        for &m in &path[1..] {
            acc = self.compose(m, acc).expect("non-composable path");
        }
        acc
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.hom.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn outgoing(&self, a: usize) -> &[usize] {
        &self.outgoing[a]
    }

    pub fn incoming(&self, b: usize) -> &[usize] {
        &self.incoming[b]
    }

    pub fn object_id(&self, name: &str) -> Result<usize> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism_id(&self, name: &str) -> Result<usize> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    /// Composable pairs `(f, g)` with `f` first.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.morphism_ids()
            .flat_map(move |f| self.outgoing(self.dst(f)).iter().map(move |&g| (f, g)))
    }

    pub fn is_isomorphism(&self, m: usize) -> bool {
        self.inverse(m).is_some()
    }

    pub fn inverse(&self, m: usize) -> Option<usize> {
        let (a, b) = (self.src(m), self.dst(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&n| self.compose(n, m) == Some(self.identity(a)) && self.compose(m, n) == Some(self.identity(b)))
    }

    /// Exhaustive check of the identity and associativity laws.
    pub fn axiom_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for m in self.morphism_ids() {
            let (a, b) = (self.src(m), self.dst(m));
            if self.compose(m, self.identity(a)) != Some(m) || self.compose(self.identity(b), m) != Some(m) {
                out.push(Violation::IdentityLaw {
                    morphism: self.morphism_name(m).to_string(),
                });
            }
        }
        for (f, g) in self.composable_pairs() {
            let gf = match self.compose(g, f) {
                Some(x) => x,
                None => {
                    out.push(Violation::MissingComposite {
                        first: self.morphism_name(f).into(),
                        second: self.morphism_name(g).into(),
                    });
                    continue;
                }
            };
            for &h in self.outgoing(self.dst(g)) {
                let left = self.compose(h, gf);
                let right = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                if left != right || left.is_none() {
                    out.push(Violation::NonAssociative {
                        f: self.morphism_name(f).into(),
                        g: self.morphism_name(g).into(),
                        h: self.morphism_name(h).into(),
                    });
                }
            }
        }
        out
    }

    /// Sources and targets swapped, composition reversed.
    pub fn opposite(&self) -> FinCat {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                src: m.dst,
                dst: m.src,
            })
            .collect();
        FinCat::from_parts(self.objects.clone(), morphisms, self.identities.clone(), |g, f| {
            self.compose(f, g).expect("opposite of a valid category")
        })
    }

    /// Morphisms of `C` are the objects of the arrow category; used for
    /// diagnostics only.
    pub fn describe_morphism(&self, m: usize) -> String {
        let mm = &self.morphisms[m];
        format!("{}: {} → {}", mm.name, self.objects[mm.src], self.objects[mm.dst])
    }

    /// The terminal category.
    pub fn point() -> FinCat {
        FinCat::from_parts(
            vec!["*".into()],
            vec![Morphism {
                name: "id_*".into(),
                src: 0,
                dst: 0,
            }],
            vec![0],
            |_, _| 0,
        )
    }

    /// The empty category.
    pub fn empty() -> FinCat {
        FinCat::from_parts(Vec::new(), Vec::new(), Vec::new(), |_, _| unreachable!())
    }

    /// Discrete category on the given object names.
    pub fn discrete(names: &[&str]) -> FinCat {
        let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism {
                name: format!("id_{o}"),
                src: i,
                dst: i,
            })
            .collect();
        let ids = (0..objects.len()).collect();
        FinCat::from_parts(objects, morphisms, ids, |g, _| g)
    }

    /// The poset `0 < 1 < … < n-1` with morphism ids `ij` for `i ≤ j`
    /// (identities are `ii`).
    pub fn chain(n: usize) -> FinCat {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for i in 0..n {
            for j in i..n {
                index.insert((i, j), morphisms.len());
                morphisms.push(Morphism {
                    name: format!("{i}{j}"),
                    src: i,
                    dst: j,
                });
            }
        }
        let ids = (0..n).map(|i| index[&(i, i)]).collect();
        let ms = morphisms.clone();
        FinCat::from_parts(objects, morphisms, ids, |g, f| index[&(ms[f].src, ms[g].dst)])
    }

    /// A finite poset given by an order relation on `names`.
    pub fn poset(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> FinCat {
        let n = names.len();
        let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    index.insert((i, j), morphisms.len());
                    let name = if i == j {
                        format!("id_{}", names[i])
                    } else {
                        format!("{}<{}", names[i], names[j])
                    };
                    morphisms.push(Morphism { name, src: i, dst: j });
                }
            }
        }
        let ids = (0..n).map(|i| index[&(i, i)]).collect();
        let ms = morphisms.clone();
        FinCat::from_parts(objects, morphisms, ids, |g, f| index[&(ms[f].src, ms[g].dst)])
    }

    /// A finite group as a one-object category, from its multiplication
    /// table on `0..order` (`0` the unit, `mul(a, b) = a·b`).
    pub fn group(name: &str, elements: &[&str], mul: impl Fn(usize, usize) -> usize) -> FinCat {
        let morphisms = elements
            .iter()
            .map(|e| Morphism {
                name: e.to_string(),
                src: 0,
                dst: 0,
            })
            .collect();
        FinCat::from_parts(vec![name.to_string()], morphisms, vec![0], mul)
    }
}

/// String-keyed builder mirroring the JSON category format.
#[derive(Clone, Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: Vec<(String, String)>,
    compose: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn morphism(mut self, name: &str, src: &str, dst: &str) -> Self {
        self.morphisms.push((name.into(), src.into(), dst.into()));
        self
    }

    pub fn identity(mut self, object: &str, morphism: &str) -> Self {
        self.identities.push((object.into(), morphism.into()));
        self
    }

    /// Declares `h = g ∘ f`.
    pub fn compose(mut self, f: &str, g: &str, h: &str) -> Self {
        self.compose.push((f.into(), g.into(), h.into()));
        self
    }

    /// Validates the raw description. Composites with an identity may be
    /// omitted from the table; they are forced by the identity laws. Every
    /// other composable pair must be declared.
    pub fn build(self) -> Result<FinCat> {
        let mut v = Vec::new();
        let mut object_index = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                v.push(Violation::DuplicateObject(o.clone()));
            }
        }
        let mut morphisms = Vec::new();
        let mut morphism_index = HashMap::new();
        for (name, s, d) in &self.morphisms {
            let src = object_index.get(s);
            let dst = object_index.get(d);
            for (end, id) in [(src, s), (dst, d)] {
                if end.is_none() {
                    v.push(Violation::DanglingEndpoint {
                        morphism: name.clone(),
                        object: id.clone(),
                    });
                }
            }
            if let (Some(&src), Some(&dst)) = (src, dst) {
                if morphism_index.insert(name.clone(), morphisms.len()).is_some() {
                    v.push(Violation::DuplicateMorphism(name.clone()));
                }
                morphisms.push(Morphism {
                    name: name.clone(),
                    src,
                    dst,
                });
            }
        }
        let mut identities = vec![None; self.objects.len()];
        for (o, m) in &self.identities {
            let (Some(&oi), Some(&mi)) = (object_index.get(o), morphism_index.get(m)) else {
                v.push(Violation::MissingIdentity(o.clone()));
                continue;
            };
            if morphisms[mi].src != oi || morphisms[mi].dst != oi {
                v.push(Violation::IdentityNotEndo {
                    object: o.clone(),
                    morphism: m.clone(),
                });
                continue;
            }
            identities[oi] = Some(mi);
        }
        for (i, id) in identities.iter().enumerate() {
            if id.is_none()
                && !v
                    .iter()
                    .any(|x| matches!(x, Violation::MissingIdentity(o) if o == &self.objects[i]))
            {
                v.push(Violation::MissingIdentity(self.objects[i].clone()));
            }
        }
        if !v.is_empty() {
            return Err(Error::Category(v));
        }
        let identities: Vec<usize> = identities.into_iter().map(Option::unwrap).collect();

        let mut table: HashMap<(usize, usize), usize> = HashMap::new();
        for (f, g, h) in &self.compose {
            let lookup = |x: &String| morphism_index.get(x).copied();
            let (Some(fi), Some(gi), Some(hi)) = (lookup(f), lookup(g), lookup(h)) else {
                for x in [f, g, h] {
                    if !morphism_index.contains_key(x) {
                        v.push(Violation::UnknownMorphismInTable(x.clone()));
                    }
                }
                continue;
            };
            if morphisms[fi].dst != morphisms[gi].src {
                v.push(Violation::NonComposablePair {
                    first: f.clone(),
                    second: g.clone(),
                });
                continue;
            }
            if morphisms[hi].src != morphisms[fi].src || morphisms[hi].dst != morphisms[gi].dst {
                v.push(Violation::CompositeWrongType {
                    first: f.clone(),
                    second: g.clone(),
                    composite: h.clone(),
                });
                continue;
            }
            if let Some(prev) = table.insert((gi, fi), hi) {
                if prev != hi {
                    v.push(Violation::ConflictingComposite {
                        first: f.clone(),
                        second: g.clone(),
                    });
                }
            }
        }
        // identity composites are forced
        for (mi, m) in morphisms.iter().enumerate() {
            for (key, forced) in [((mi, identities[m.src]), mi), ((identities[m.dst], mi), mi)] {
                match table.get(&key) {
                    Some(&h) if h != forced => v.push(Violation::IdentityLaw {
                        morphism: m.name.clone(),
                    }),
                    _ => {
                        table.insert(key, forced);
                    }
                }
            }
        }
        let mut outgoing = vec![Vec::new(); self.objects.len()];
        for (i, m) in morphisms.iter().enumerate() {
            outgoing[m.src].push(i);
        }
        for (fi, f) in morphisms.iter().enumerate() {
            for &gi in &outgoing[f.dst] {
                if !table.contains_key(&(gi, fi)) {
                    v.push(Violation::MissingComposite {
                        first: f.name.clone(),
                        second: morphisms[gi].name.clone(),
                    });
                }
            }
        }
        if !v.is_empty() {
            return Err(Error::Category(v));
        }
        let cat = FinCat::from_parts(self.objects, morphisms, identities, |g, f| table[&(g, f)]);
        let violations = cat.axiom_violations();
        if violations.is_empty() {
            Ok(cat)
        } else {
            Err(Error::Category(violations))
        }
    }
}
