//! Exact symbolic computation for basic T-Lie algebras (generalized Lie
//! color algebras): presymmetry / symmetry / pseudobracket / bracket data
//! over Laurent-polynomial scalars, axiom verification with explicit
//! counterexample witnesses, PBW normal forms in universal enveloping
//! algebras, and PBW-basis certification through the action on the
//! q-symmetric algebra.
//!
//! Everything is exact: coefficients live in `Q[q^{±1}, p^{±1}]` with
//! arbitrary-precision rationals, and every pass/fail decision is an exact
//! algebraic statement, never a numerical approximation.
//!
//! The crate is organized around the life cycle of an algebra:
//!
//! * [`scalar`] — the coefficient ring (exact Laurent polynomials).
//! * [`algebra`] — [`algebra::TLieSpec`]: ordered basis, grading, and the
//!   four structure maps, with antisymmetry built into the derived tables.
//! * [`axioms`] — per-axiom checks, adequacy and braid checks, and the
//!   aggregated [`axioms::VerificationReport`].
//! * [`enveloping`] — rewriting to PBW normal form in `U(L)`, monomial
//!   enumeration, the diamond (confluence) check, and truncated ideal
//!   membership with certificates.
//! * [`symrep`] — the representation of `L` on its q-symmetric algebra and
//!   the PBW linear-independence certificate built from it.
//! * [`catalog`] — built-in algebras: classical and color Lie algebras, the
//!   q-deformed upper/lower triangular algebras, their pseudobracket-free
//!   variant, and the two-parameter deformation families.
//! * [`cli`] — the `tlie` command-line surface, expression parsing, and the
//!   algebra description file format.
//!
//! See the crate examples for runnable walkthroughs of each capability
//! (`cargo run --example verify_axioms`, `--example pbw_failure`, ...).

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod cli;
pub mod enveloping;
pub mod fraction;
pub mod linalg;
pub mod scalar;
pub mod symrep;

pub use algebra::{BasisElement, BasisId, RawTLieSpec, TLieSpec, TensorPoly, Word};
pub use axioms::{CheckId, CheckStatus, VerificationReport};
pub use enveloping::{PbwMonomial, PbwPoly};
pub use scalar::{LaurentScalar, Rational};

#[cfg(test)]
mod send_sync {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    /// Specs and polynomials are immutable after construction and may be
    /// shared freely between worker threads.
    #[test]
    fn shared_types_are_send_and_sync() {
        assert_send_sync::<TLieSpec>();
        assert_send_sync::<TensorPoly>();
        assert_send_sync::<LaurentScalar>();
        assert_send_sync::<PbwPoly>();
    }
}
