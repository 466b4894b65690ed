//! Set algebra over the non-standard unit interval `]0^-, 1^+[`.
//!
//! Every element of a set carries three independent component subsets —
//! membership T, indeterminacy I and non-membership F — each a finite union
//! of closed intervals whose endpoints may sit infinitesimally below 0 or
//! above 1. Nothing ties the three components together: their sums may fall
//! short of 1 (incomplete information), hit it exactly (consistent), or
//! exceed it (paraconsistent), which is what separates this model from
//! intuitionistic fuzzy sets.
//!
//! The crate provides:
//!
//! - [`hyperreal`]: scalars `r + k·ε` with a total order, arithmetic and
//!   unit clamping;
//! - [`ndset`]: canonical interval unions with Minkowski arithmetic;
//! - [`neutroset`]: records, sets over a universe, the set operations and
//!   n-ary relations;
//! - [`taxonomy`]: classification of records into the generalization
//!   lattice, with over/under flags;
//! - [`dsl`]: a small script language (and its JSON-facing values) for
//!   declaring and querying sets.
//!
//! Set-level operations map independently over universe elements; with the
//! default `parallel` feature that map runs on rayon, without it the same
//! code runs sequentially.

pub mod dsl;
mod error;
pub mod hyperreal;
pub mod ndset;
pub mod neutroset;
mod parallel;
pub mod taxonomy;

pub use error::Error;
pub use hyperreal::NonStdValue;
pub use ndset::{IntervalUnion, NsInterval};
pub use neutroset::{
    cartesian, set_apply, set_is_subset, Element, NeutroRelation, NeutroSet, NeutroTriple, SetOp,
};
pub use taxonomy::{
    classify_point, classify_triple, is_ifs_representable, Classification, Flag, Label,
};

pub type Result<T> = std::result::Result<T, Error>;
