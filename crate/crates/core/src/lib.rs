//! Exact construction of q-Boole, q-Euler and q-Changhee polynomial families
//! as canonical elements of Q(q) and Q(q)[x], with executable verifiers for
//! the identities relating them.

pub mod combinatorics;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod identities;
pub mod powerseries;
pub mod ring;

pub use combinatorics::{StirlingTable, XPoly};
pub use error::{Error, Result};
pub use families::{
    classical_limit, ClassicalValue, Context, Family, FamilyValue, Path, QAlgebra, Value, XArg,
};
pub use identities::{
    verify, verify_in, verify_suite, Counterexample, IdentityId, IdentityReport, Ranges, Status,
    XMode,
};
pub use exactnum::{BigRational, Poly, QPoly, QRatFunc};
pub use powerseries::FormalSeries;
pub use ring::Ring;
