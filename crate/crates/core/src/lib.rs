//! Exact computations for finite linear groups of small degree: simple-group
//! orders, admissibility bounds, socle candidates for prime degree, low-degree
//! representation data, the extraspecial normalizer construction, induced
//! characters and the embedded classification tables.

pub mod arith;
pub mod catalog;
pub mod characters;
pub mod extraspecial;
pub mod lowdeg;
pub mod bounds;
pub mod search;
pub mod socles;
pub mod tables;
