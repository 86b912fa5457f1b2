//! Exact combinatorics for stable ranges of FI-modules.
//!
//! Partitions and symmetric-group characters, character polynomials,
//! closed-form stable-range tuples, sharpness witnesses, coinvariant
//! algebras and configuration-space formulas. All arithmetic is exact.

pub mod caps;
pub mod charpoly;
pub mod coinv;
pub mod config;
pub mod error;
pub mod exact;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod ranges;
pub mod symchar;
pub mod verify;
pub mod witness;

pub use caps::Caps;
pub use charpoly::{CharContext, CharPoly, Degree};
pub use coinv::MultiDegree;
pub use config::ConfigParams;
pub use error::{Error, Result};
pub use exact::Rational;
pub use partition::{Characteristic, Partition};
pub use ranges::{HypTriple, LiteratureRanges, StableRanges};
pub use symchar::ClassFunction;
pub use witness::{Witness, WitnessKind};
