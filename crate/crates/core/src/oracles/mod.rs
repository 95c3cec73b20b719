//! Independent reference computations used to check the constructions.

pub mod field;
pub mod mixed_volume;
pub mod quotient;
pub mod sylvester;

pub use field::{ff_det, is_prime, PrimeField, DEFAULT_PRIME};
pub use mixed_volume::{degree_audit, mixed_volume, mixed_volume_permanent, multihomo_mixed_volume};
pub use quotient::{verify_quotient, QuotientOptions, QuotientReport};
pub use sylvester::{sylvester_matrix, sylvester_resultant};
