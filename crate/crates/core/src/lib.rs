//! Value sets of polynomials over finite fields.
//!
//! The crate computes image cardinalities `N_f = #{f(x) : x in F_q}` exactly
//! and assembles the pieces behind the `sqrt(q)` error bounds for generic
//! polynomials: fiber-product curve counts, permutation-module
//! multiplicities of `S_d`, tame Artin L-function degrees, and the exact
//! rational constants of the quartic estimate.

pub mod artin;
pub mod bounds;
pub mod curves;
pub mod error;
pub mod ffield;
pub mod sweep;
pub mod symrep;
pub mod valueset;

pub use artin::{l_degree_table, ramification_profile, LDegreeTable, RamificationProfile};
pub use bounds::{mu, quartic_ledger, quartic_verdict, theorem_constant, BoundReport, Rational};
pub use curves::{count_t2, count_t3, count_t4, t2_l_polynomial, u_of, CurveCounts, LPolynomial};
pub use error::{Error, Result};
pub use ffield::{make_extension, make_prime_field, FieldCtx, FieldElem, UniPoly};
pub use symrep::{partitions, repr_table, Partition, ReprTable};
pub use valueset::{preimage_spectrum, tuple_counts, CycleCensus, GenericityVerdict, PreimageSpectrum};
