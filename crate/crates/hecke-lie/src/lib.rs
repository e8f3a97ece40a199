//! Infinitesimal Hecke Lie algebras of finite complex reflection groups.
//!
//! Everything is computed exactly over cyclotomic fields. The layers build on
//! each other: [`exactnum`] scalars, [`matlin`] linear algebra, [`groupkit`]
//! finite matrix groups, [`repkit`] representations, [`liecore`] Lie closures,
//! [`heckelie`] the Hecke-algebra driver, [`generic`] parameter genericity and
//! [`adpoly`] the Ad/ad polynomial identities.

pub mod adpoly;
pub mod exactnum;
pub mod generic;
pub mod groupkit;
pub mod heckelie;
pub mod liecore;
pub mod matlin;
pub mod repkit;

mod error;
pub use error::{Error, Result};
