//! Factorization and norm-form solvers.

pub mod factor;
pub mod forms;

pub use factor::{
    factorize, factorize_with_bound, is_prime, is_prime_u128, primes_below, residue,
    split_valuation, Factorization, DEFAULT_BOUND_BITS,
};
pub use forms::{
    classify_prime, four_squares_q8, n2_form_solutions, norm_sum_split, normform_1mod12,
    normform_7mod12, normform_odd, p12_class, search2, search4, search_bound, shells, two_squares_doubled,
    NormForm, NormFormSolution, P12Class, PrimeClass,
};
