//! Regular and indeterminate strings under the transitive-triples definition.
//!
//! A letter is a nonempty set of characters (or the `*` don't-care); two
//! letters match when their sets intersect. A string is *regular* when the
//! match relation over its positions is transitive, even when some letters
//! hold several characters, and *indeterminate* otherwise. The crate
//! provides:
//!
//! - [`IndetString`]: parsing of the `a{a,c}b` text format, a compact
//!   integer-code representation with indeterminate-letter tables, and a
//!   binary serialization ([`codec`]);
//! - [`regularity`]: a linear-time regularity test returning the lex-least
//!   isomorphic scope-1 string, a match-matrix variant, quick screens, and
//!   transitive closure of reflexive-symmetric relations;
//! - [`palindrome`]: maximal palindrome arrays over the `#`-expanded string,
//!   feasibility checking, and reverse engineering of a feasible array into
//!   a lex-least regular string or, failing that, an indeterminate one;
//! - [`oracles`]: brute-force reference implementations used to validate
//!   the fast paths;
//! - [`generate`]: seeded random generators for the property suites.
//!
//! Positions, ranks and codes are 1-based throughout, matching the usual
//! conventions for these arrays.
//!
//! ```
//! use indetstr::{Alphabet, IndetString};
//! use indetstr::regularity::regular_check;
//!
//! let alphabet = Alphabet::new("abcd".chars()).unwrap();
//! let x = IndetString::parse("a{a,c}b{a,d}bb", &alphabet).unwrap();
//! let witness = regular_check(&x).expect("all triples are transitive");
//! assert_eq!(witness.y, vec![1, 1, 2, 1, 2, 2]);
//! ```

pub mod alphabet;
pub mod codec;
mod error;
pub mod generate;
pub mod letter;
pub mod oracles;
pub mod palindrome;
pub mod regularity;
pub mod string;

pub use alphabet::Alphabet;
pub use error::{Error, Infeasibility, Result};
pub use letter::{letters_match, Letter};
pub use string::{Encoding, IndetString};
