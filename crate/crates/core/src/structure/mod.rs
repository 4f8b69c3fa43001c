//! Divisors of zero, idempotents and nilpotents: predicates, constructors,
//! normal forms and seeded generators.

mod construct;
pub mod generate;
mod normalize;
mod predicates;

pub use construct::{make_idempotent, make_nilpotent, make_zero_divisor};
pub use generate::{
    random_idempotent, random_nilpotent, random_root_of_minus_one, random_zero_divisor,
    root_of_minus_one_from, Generator, Seed,
};
pub use normalize::{
    decompose_zero_divisor, normalize_nilpotent, normalize_to_idempotent, square_scaling_check,
    NilpotentNormalForm, ZeroDivisorDecomposition,
};
pub use predicates::{
    classify, is_idempotent, is_nilpotent, is_pure, is_root_of_minus_one, is_zero_divisor,
    is_zero_divisor_hamilton, Classification,
};
