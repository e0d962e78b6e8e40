use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor};

/// A strict functor from a finite shape category to finite categories.
#[derive(Clone, Debug)]
pub struct CatDiagram {
    pub shape: Arc<FinCat>,
    fibres: Vec<Arc<FinCat>>,
    functors: Vec<Functor>,
}

impl CatDiagram {
    pub fn new(shape: Arc<FinCat>, fibres: Vec<Arc<FinCat>>, functors: Vec<Functor>) -> Result<CatDiagram> {
        if fibres.len() != shape.num_objects() || functors.len() != shape.num_morphisms() {
            return Err(Error::Diagram("wrong number of values".into()));
        }
        for m in shape.morphism_ids() {
            let f = &functors[m];
            if *f.source != *fibres[shape.src(m)] || *f.target != *fibres[shape.dst(m)] {
                return Err(Error::Diagram(format!(
                    "value at `{}` has the wrong source or target",
                    shape.morphism_name(m)
                )));
            }
        }
        for o in shape.objects() {
            if functors[shape.identity(o)] != Functor::identity(fibres[o].clone()) {
                return Err(Error::Diagram(format!(
                    "identity of `{}` is not sent to an identity functor",
                    shape.object_name(o)
                )));
            }
        }
        for (f, g) in shape.composable_pairs() {
            let gf = shape.compose(g, f).unwrap();
            let composite = functors[f].then(&functors[g])?;
            if composite != functors[gf] {
                return Err(Error::Diagram(format!(
                    "composite {} ∘ {} is not preserved",
                    shape.morphism_name(g),
                    shape.morphism_name(f)
                )));
            }
        }
        Ok(CatDiagram {
            shape,
            fibres,
            functors,
        })
    }

    /// The diagram with every value the given category and every morphism
    /// sent to the identity functor.
    pub fn constant(shape: Arc<FinCat>, value: Arc<FinCat>) -> CatDiagram {
        let id = Functor::identity(value.clone());
        CatDiagram {
            fibres: vec![value; shape.num_objects()],
            functors: vec![id; shape.num_morphisms()],
            shape,
        }
    }

    pub fn fibre(&self, c: usize) -> &Arc<FinCat> {
        &self.fibres[c]
    }

    pub fn functor(&self, m: usize) -> &Functor {
        &self.functors[m]
    }

    /// Restriction along `u : A → shape`.
    pub fn pull_back(&self, u: &Functor) -> Result<CatDiagram> {
        if *u.target != *self.shape {
            return Err(Error::Diagram(
                "restriction along a functor with the wrong target".into(),
            ));
        }
        let a = u.source.clone();
        let fibres = a.objects().map(|o| self.fibres[u.on_object(o)].clone()).collect();
        let functors = a
            .morphism_ids()
            .map(|m| self.functors[u.on_morphism(m)].clone())
            .collect();
        Ok(CatDiagram {
            shape: a,
            fibres,
            functors,
        })
    }
}
