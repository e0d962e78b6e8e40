use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{monotone_of, nerve, nerve_map, truncated_simplex_category, CatDiagram, FinCat, Functor};
use crate::sset::{BiTruncSSet, SSetMap, TruncSSet};

/// A strict functor from a finite shape category to truncated simplicial
/// sets of a common truncation.
#[derive(Clone, Debug)]
pub struct SSetDiagram {
    pub shape: Arc<FinCat>,
    values: Vec<Arc<TruncSSet>>,
    maps: Vec<SSetMap>,
}

fn same(a: &Arc<TruncSSet>, b: &Arc<TruncSSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn same_levels(f: &SSetMap, g: &SSetMap) -> bool {
    (0..=f.source.k()).all(|n| f.level(n) == g.level(n))
}

impl SSetDiagram {
    pub fn new(shape: Arc<FinCat>, values: Vec<Arc<TruncSSet>>, maps: Vec<SSetMap>) -> Result<SSetDiagram> {
        if values.len() != shape.num_objects() || maps.len() != shape.num_morphisms() {
            return Err(Error::Diagram("wrong number of values".into()));
        }
        if let Some(first) = values.first() {
            if let Some(v) = values.iter().find(|v| v.k() != first.k()) {
                return Err(Error::TruncationMismatch {
                    expected: first.k(),
                    found: v.k(),
                });
            }
        }
        for m in shape.morphism_ids() {
            if !same(&maps[m].source, &values[shape.src(m)]) || !same(&maps[m].target, &values[shape.dst(m)]) {
                return Err(Error::Diagram(format!(
                    "value at `{}` has the wrong source or target",
                    shape.morphism_name(m)
                )));
            }
        }
        for o in shape.objects() {
            let id = &maps[shape.identity(o)];
            if !same_levels(id, &SSetMap::identity(values[o].clone())) {
                return Err(Error::Diagram(format!(
                    "identity of `{}` is not sent to an identity map",
                    shape.object_name(o)
                )));
            }
        }
        for (f, g) in shape.composable_pairs() {
            let gf = shape.compose(g, f).expect("composable");
            if !same_levels(&maps[f].then(&maps[g])?, &maps[gf]) {
                return Err(Error::Diagram(format!(
                    "composite {} ∘ {} is not preserved",
                    shape.morphism_name(g),
                    shape.morphism_name(f)
                )));
            }
        }
        Ok(SSetDiagram { shape, values, maps })
    }

    /// Every object sent to `value`, every morphism to the identity.
    pub fn constant(shape: Arc<FinCat>, value: TruncSSet) -> SSetDiagram {
        let value = Arc::new(value);
        let id = SSetMap::identity(value.clone());
        SSetDiagram {
            values: vec![value; shape.num_objects()],
            maps: vec![id; shape.num_morphisms()],
            shape,
        }
    }

    /// `N ∘ 𝒳` truncated at `k`.
    pub fn nerve_of(d: &CatDiagram, k: usize) -> Result<SSetDiagram> {
        let shape = d.shape.clone();
        let values: Vec<Arc<TruncSSet>> = shape.objects().map(|c| Arc::new(nerve(d.fibre(c), k))).collect();
        let maps = shape
            .morphism_ids()
            .map(|m| {
                let f = nerve_map(d.functor(m), k)?;
                let levels = (0..=k).map(|n| f.level(n).to_vec()).collect();
                SSetMap::new(values[shape.src(m)].clone(), values[shape.dst(m)].clone(), levels)
            })
            .collect::<Result<_>>()?;
        Ok(SSetDiagram { shape, values, maps })
    }

    /// The rows `[p] ↦ X_{p,•}` of a bisimplicial set as a diagram over
    /// `(Δ≤k)^op`.
    pub fn rows_of(x: &BiTruncSSet) -> Result<SSetDiagram> {
        let k = x.k();
        let delta = truncated_simplex_category(k);
        let shape = Arc::new(delta.opposite());
        let values: Vec<Arc<TruncSSet>> = (0..=k).map(|p| Arc::new(x.row(p))).collect();
        let maps = shape
            .morphism_ids()
            .map(|m| {
                // α : [p'] → [p] in Δ is [p] → [p'] in the shape
                let alpha = monotone_of(&delta, m);
                let (p, p2) = (shape.src(m), shape.dst(m));
                let levels = (0..=k)
                    .map(|q| (0..x.len(p, q)).map(|s| x.horizontal_apply(&alpha, p, q, s)).collect())
                    .collect();
                SSetMap::new(values[p].clone(), values[p2].clone(), levels)
            })
            .collect::<Result<_>>()?;
        Ok(SSetDiagram { shape, values, maps })
    }

    pub fn k(&self) -> usize {
        self.values.first().map_or(0, |v| v.k())
    }

    pub fn value(&self, c: usize) -> &Arc<TruncSSet> {
        &self.values[c]
    }

    pub fn map(&self, m: usize) -> &SSetMap {
        &self.maps[m]
    }

    /// Objectwise opposite `X^op`.
    pub fn opposite(&self) -> SSetDiagram {
        let values: Vec<Arc<TruncSSet>> = self.values.iter().map(|v| Arc::new(v.opposite())).collect();
        let maps = self
            .shape
            .morphism_ids()
            .map(|m| {
                let f = &self.maps[m];
                let levels = (0..=f.source.k()).map(|n| f.level(n).to_vec()).collect();
                SSetMap::new(
                    values[self.shape.src(m)].clone(),
                    values[self.shape.dst(m)].clone(),
                    levels,
                )
                .expect("opposites of simplicial maps are simplicial")
            })
            .collect();
        SSetDiagram {
            shape: self.shape.clone(),
            values,
            maps,
        }
    }

    /// Restriction along `u : A → shape`.
    pub fn pull_back(&self, u: &Functor) -> Result<SSetDiagram> {
        if *u.target != *self.shape {
            return Err(Error::Diagram(
                "restriction along a functor with the wrong target".into(),
            ));
        }
        Ok(SSetDiagram {
            shape: u.source.clone(),
            values: u
                .source
                .objects()
                .map(|o| self.values[u.on_object(o)].clone())
                .collect(),
            maps: u
                .source
                .morphism_ids()
                .map(|m| self.maps[u.on_morphism(m)].clone())
                .collect(),
        })
    }
}

/// A natural transformation `φ : X ⇒ Y` of simplicial-set diagrams.
#[derive(Clone, Debug)]
pub struct DiagramMap {
    pub source: SSetDiagram,
    pub target: SSetDiagram,
    components: Vec<SSetMap>,
}

impl DiagramMap {
    pub fn new(source: SSetDiagram, target: SSetDiagram, components: Vec<SSetMap>) -> Result<DiagramMap> {
        if *source.shape != *target.shape {
            return Err(Error::Diagram("diagrams of different shapes".into()));
        }
        let shape = &source.shape;
        if components.len() != shape.num_objects() {
            return Err(Error::Diagram("one component per object required".into()));
        }
        for c in shape.objects() {
            if !same(&components[c].source, source.value(c)) || !same(&components[c].target, target.value(c)) {
                return Err(Error::Diagram(format!(
                    "component at `{}` has the wrong source or target",
                    shape.object_name(c)
                )));
            }
        }
        for m in shape.morphism_ids() {
            let (c, c2) = (shape.src(m), shape.dst(m));
            let upper = source.map(m).then(&components[c2])?;
            let lower = components[c].then(target.map(m))?;
            if !same_levels(&upper, &lower) {
                return Err(Error::Diagram(format!(
                    "not a natural transformation: square at `{}` does not commute",
                    shape.morphism_name(m)
                )));
            }
        }
        Ok(DiagramMap {
            source,
            target,
            components,
        })
    }

    pub fn identity(d: SSetDiagram) -> DiagramMap {
        let components = d.values.iter().map(|v| SSetMap::identity(v.clone())).collect();
        DiagramMap {
            source: d.clone(),
            target: d,
            components,
        }
    }

    pub fn component(&self, c: usize) -> &SSetMap {
        &self.components[c]
    }

    /// `ψ ∘ φ`.
    pub fn then(&self, psi: &DiagramMap) -> Result<DiagramMap> {
        let components = self
            .components
            .iter()
            .zip(&psi.components)
            .map(|(f, g)| f.then(g))
            .collect::<Result<_>>()?;
        DiagramMap::new(self.source.clone(), psi.target.clone(), components)
    }
}
