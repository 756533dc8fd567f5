//! Exact integer and Gaussian-integer arithmetic.

mod arith;
mod gaussian;
mod int;
mod prime;

pub use arith::{
    coprime, exact_kth_root, first_shared_factor, gcd, gcd_u128, integer_kth_root,
    pairwise_coprime, pow, CoprimeWitness,
};
pub(crate) use arith::pow_unchecked;
pub use gaussian::{
    gaussian_coprime, gaussian_factorize, gaussian_gcd, gaussian_square_root,
    GaussianFactorization, GaussianInt,
};
pub use int::{ExactInt, ParseExactIntError};
pub use prime::{
    factorize, is_prime, is_prime_u64, mod4_class, Factorization, Mod4Class,
    PROBABLE_PRIME_ROUNDS, RHO_ITERATION_CAP, TRIAL_DIVISION_LIMIT,
};
