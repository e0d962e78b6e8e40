//! Finite categories, functors, diagrams of categories, comma categories,
//! nerves and Grothendieck constructions.

mod category;
mod comma;
mod diagram;
mod functor;
mod grothendieck;
mod nerve;
mod simplex_cat;

pub use category::{CategoryBuilder, FinCat, Morphism, Violation};
pub use comma::{comma_over, comma_under, has_left_adjoint, has_right_adjoint, initial_object, terminal_object, Comma};
pub use diagram::CatDiagram;
pub use functor::{find_isomorphism, natural_isomorphism, Functor};
pub use grothendieck::{
    check_cofinality_pullback, fibres_match, lax_colim, oplax_colim, CofinalityReport, Grothendieck,
};
pub use nerve::{chains, nerve, nerve_indexed, nerve_map, nerve_opposite_iso, Chain};
pub use simplex_cat::{monotone_of, truncated_simplex_category};
