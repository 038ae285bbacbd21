//! speq: a computational workbench for valued quivers and species over
//! finite fields.
//!
//! The crate folds, unfolds and crushes quivers, computes tensor-algebra and
//! Frobenius fixed-point data, enumerates root systems and classifies
//! representation type, brute-forces indecomposable representations and Hall
//! numbers, and realizes the twisted Ringel-Hall algebra with verification
//! of the quantum Serre relations and the bialgebra compatibility conditions.
//!
//! Major pieces:
//! - [`quiver`]: quivers, valued quivers of both flavors, automorphisms,
//!   paths, folding/unfolding, crushing, and valued-quiver morphisms
//! - [`gf`]: exact GF(p^n) arithmetic with deterministic moduli, embeddings,
//!   Frobenius, and tensor decompositions of field extensions
//! - [`species`]: finite-field species, tensor-algebra graded dimensions,
//!   crushed-species isomorphism, Frobenius fixed-point verification, and
//!   scalar-extension quivers
//! - [`forms`]: Euler/symmetric/Tits forms, generalized Cartan matrices,
//!   Weyl reflections, bounded root enumeration, stable elements, and
//!   representation-type classification
//! - [`rep`]: representations, Hom spaces, indecomposability, exhaustive
//!   enumeration into canonical isomorphism classes, submodule lattices,
//!   Hall numbers, and automorphism twists
//! - [`hall`]: the twisted Ringel-Hall algebra over `Z[v]/(v² − q)`, Green's
//!   comultiplication and form, quantum binomials, and Serre relations
//! - [`json`]: the file formats used by the command-line front end
//! - [`catalog`]: ready-made quivers and species used in tests and the guide
//!
//! Everything is exact: field arithmetic is polynomial arithmetic over
//! GF(p), scalars are rationals or elements of `Z[v]/(v² − q)`, and every
//! enumeration is exhaustive behind an explicit cap.

pub mod catalog;
pub mod error;
pub mod forms;
pub mod gf;
pub mod hall;
pub mod json;
pub mod linalg;
pub mod quiver;
pub mod rational;
pub mod rep;
pub mod species;
pub mod testutil;

pub use error::{Error, Result};
