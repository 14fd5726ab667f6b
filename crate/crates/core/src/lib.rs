//! Exact computations with Ringel–Hall algebras of finite-dimensional algebras over small
//! prime fields, localized Hall algebras of 2-periodic complexes of projectives, and the
//! embedding of the former into the latter.

pub mod algdef;
pub mod builtin;
pub mod cpx2;
pub mod error;
pub mod ffalg;
pub mod hall;
pub mod modcat;
pub mod quiver;
pub mod verify;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
