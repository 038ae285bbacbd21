//! Doc-test harness for the guide: each chapter of `book/` is included as a
//! documented module, so every fenced Rust block in the book compiles and
//! runs under `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/quivers-and-folding.md")]
pub mod quivers_and_folding {}

#[doc = include_str!("../../../book/src/finite-fields.md")]
pub mod finite_fields {}

#[doc = include_str!("../../../book/src/species-and-tensor-algebras.md")]
pub mod species_and_tensor_algebras {}

#[doc = include_str!("../../../book/src/frobenius.md")]
pub mod frobenius {}

#[doc = include_str!("../../../book/src/roots-and-forms.md")]
pub mod roots_and_forms {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}

#[doc = include_str!("../../../book/src/hall-algebras.md")]
pub mod hall_algebras {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
