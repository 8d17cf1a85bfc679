//! Computational engine for higher Nakayama algebras and the triangulation
//! combinatorics of cyclic polytopes.
//!
//! The library constructs finite based categories from Kupisch series,
//! performs exact homological computations over prime fields (resolutions,
//! Ext, higher translates, global and dominant dimension, cluster-tilting
//! certification), and realizes the dictionary between interval modules and
//! simplices, tilting collections and triangulations, mutation and bistellar
//! flip.

pub mod error;
pub mod exactla;
pub mod oset;
pub mod algebra;
pub mod oracle;
pub mod homcalc;
pub mod tilting;
pub mod cycpoly;
pub mod bridge;
pub mod suite;

pub use error::{Error, Result};
