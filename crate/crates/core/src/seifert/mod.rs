//! Seifert-fibered spaces: invariants, presentations, reversible families and
//! exact element arithmetic when the base has boundary.
//!
//! Generators are named `a1, b1, …` (handles), `x1, …` (crosscaps), `c1, …`
//! (exceptional fibers), `d1, …` (boundary loops) and `h` (regular fiber).

mod data;
mod families;
mod group;
mod presentation;
mod torsion;

pub use data::{parse_seifert, ExceptionalFiber, SeifertData};
pub use families::{classify_reversible_families, BaseSurface, Family, ReversibleFamilyReport};
pub use group::{reversible_seifert, reversible_seifert_word, scan_reverser, SeifertGroup};
pub use presentation::{presentation, quotient_presentation, quotient_scheme, Presentation, QuotientScheme, RawWord, Relation};
pub use torsion::{gen_n_certificate, trefoil_to_braid, GenNCertificate};
