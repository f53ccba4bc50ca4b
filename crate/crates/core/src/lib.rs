//! Exact-arithmetic toolkit for the representation theory of the symmetric
//! group: diagonal matrix units via the Jucys-Murphy recurrence, irreducible
//! characters, the consecutive-evaluation fusion product, and Yang-Baxter
//! verification through the tensor-space action.
//!
//! Everything algebraic is computed over arbitrary-precision rationals;
//! floating point appears only in the seminormal-basis oracle that
//! cross-checks the exact results.

pub mod algebra;
pub mod error;
pub mod fusion;
pub mod perm;
pub mod tensor;
pub mod units;
pub mod verify;
pub mod young;

pub use algebra::{GAPolynomial, GroupAlgebraElement, Rational};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use verify::Check;
pub use young::{Partition, StandardTableau};

#[cfg(test)]
mod thread_safety {
    // values are immutable after construction; sharing across threads is
    // part of the contract
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Permutation>();
        assert_send_sync::<crate::GroupAlgebraElement>();
        assert_send_sync::<crate::GAPolynomial>();
        assert_send_sync::<crate::Partition>();
        assert_send_sync::<crate::StandardTableau>();
        assert_send_sync::<crate::tensor::TensorOperator>();
    }
}
