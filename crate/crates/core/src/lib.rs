//! Twisted and twisted-skew group rings `K^α[G; σ]` over finite fields
//! `K = F_{p^m}`, the linear codes carried by their one-sided ideals, and
//! exhaustive desk-scale checks of the structure theorems about them.

pub mod error;
pub mod abelianize;
pub mod catalog;
pub mod cli;
pub mod checkable;
pub mod codes;
pub mod crossed;
pub mod gf;
pub mod groups;
pub mod hatgroup;
pub mod linalg;
pub mod ring;
pub mod suite;

pub use error::{Error, Result};
