pub mod code;
pub mod distance;
pub mod error;
pub mod field;
pub mod format;
pub mod maps;
pub mod poly;
pub mod ring;
pub mod search;
pub mod repro;
pub mod ring_code;
pub mod skew;

pub use code::{LinearCode, ShiftMap};
pub use error::{Error, Result};
pub use field::{Elem, FieldAutomorphism, FieldOp, FieldSpec};
pub use maps::MapMatrix;
pub use ring::{RingAutomorphism, RingElement, RingSpec};
pub use ring_code::{RingLinearCode, RingTwist};
pub use skew::{monic_right_divisors, Containment, SkewPoly, TwistContext};
