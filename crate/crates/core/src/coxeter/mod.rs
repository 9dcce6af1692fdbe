//! Crystallographic realizations of Coxeter systems.
//!
//! A [`CoxeterSystem`] carries a Coxeter matrix together with an integer
//! Cartan matrix `a_st = <α_s^∨, α_t>`. The simple reflections act on the
//! root lattice by `σ_s(α_t) = α_t - a_st α_s`, and an [`Element`] of `W` is
//! stored as the integer matrix of that action (column `j` is the image of
//! `α_j`). Equality of elements is equality of matrices.

mod element;
mod presets;
mod root;
mod system;

pub use element::Element;
pub use presets::{preset, PRESET_NAMES};
pub use root::Root;
pub use system::{CoxeterSystem, INFINITY};
