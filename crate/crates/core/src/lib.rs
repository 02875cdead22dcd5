//! Prime spectra, structure sheaves and word equations for finite G-groups.
pub mod cli;
pub mod corpus;
pub mod dimension;
pub mod equations;
pub mod error;
pub mod galois;
pub mod ggroup;
pub mod group;
pub mod limits;
pub mod sheaf;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use ggroup::{DomainCouple, GGroup, Ideal, PrimeIdeal, QuotientGGroup, TopCouple, ZeroDivisorMode};
pub use limits::Limits;
pub use spectrum::{induced_map, nil_homeo_check, ClosedSet, NilHomeoReport, PointSet, SpecSpace};
