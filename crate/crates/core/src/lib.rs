//! Factor-closed binary languages built from the recursive word family
//! `α_{i+1} = α_i^{s_i} ᾱ_i^{s_i}`, their encoding as rightward-yearning pin
//! sequences, and exhaustive enumeration of the permutation classes those
//! pin sequences generate.
//!
//! Module map:
//! - [`words`]: binary words, the `α_i` family, language slices and the
//!   length at which two languages first differ.
//! - [`pins`]: the pin alphabet, `ρ`, pin languages and the permutations
//!   `ψ°` (origin dropped) and `ψ•` (origin kept).
//! - [`perm`]: permutations, containment, `⊕` and `⊞`.
//! - [`classes`]: class slices, counts, enumeration divergence and growth
//!   rate lower bounds.
//! - [`sadic`]: the S-adic view of the same languages and factor complexity.
//! - [`oracle`]: slow, independent reference computations used to
//!   cross-check the above.
//! - [`verify`]: named reproduction checks grouped into suites.

pub mod classes;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod pins;
pub mod sadic;
pub mod verify;
pub mod words;

pub use classes::{ClassEnumerator, ClassSlice, EnumerationDivergence, DEFAULT_MAX_N};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use pins::{PinLanguage, PinLetter, PinWord};
pub use sadic::{DirectiveWord, Morphism};
pub use verify::{Check, Suite, SuiteSelection};
pub use words::{BinaryWord, SequenceSpec};
