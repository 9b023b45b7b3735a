//! Numerical semigroups: direct invariants (Frobenius number, genus, gaps,
//! pseudo-Frobenius numbers, type), the monomial-matrix exponents of
//! non-symmetric three-generated semigroups, classification of
//! pseudo-symmetric `⟨a, b, c⟩` by Frobenius number, and simple semigroups.
//!
//! ```
//! use numsg::Semigroup;
//!
//! let h = Semigroup::new(&[4, 11, 13]).unwrap();
//! assert_eq!(h.frobenius(), 18);
//! assert_eq!(h.genus(), 10);
//! assert!(h.is_pseudo_symmetric());
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod herzog;
pub mod semigroup;
pub mod simple;

pub use error::{Error, Result};
pub use herzog::{Branch, HerzogExponents, PfData};
pub use semigroup::{AperyTable, PfSet, Semigroup};
