//! 4-chains: bi-infinite integer sequences whose consecutive pairs solve
//! one of four simultaneous cubic Diophantine systems
//! `x | y^3 + y^a + 1`, `y | x^3 + x^b + 1` with a, b in {1, 2}.
//!
//! The crate builds and verifies finite chain windows, discovers sibling
//! chains through a shared element, constructs third chains from two
//! matching triples with a machine-checkable certificate, classifies
//! forbidden moduli, and provides exhaustive brute-force search oracles.

pub mod arith;
pub mod chain;
pub mod json;
pub mod residues;
pub mod search;
pub mod triples;

pub use arith::{
    divisors, exact_div, factorize, gcd, is_prime, ArithError, FactorConfig, Factorization, Int,
};
pub use chain::{
    check_system, cubic, least_element, same_chain, ChainError, ChainWindow, LeastElementReport,
    SolutionPair, SystemLabel, Triple,
};
pub use residues::{
    forbidden_moduli, max_zero_free_run, mod3_run_bound, modulus_report, ModulusReport,
    ResidueError,
};
pub use search::{
    equal_consecutive_chains, equal_consecutive_pairs, palindromic_solutions, search_box,
    EqualConsecutiveChain, PalindromicSolution, SearchResult,
};
pub use triples::{
    corollary8_test, find_siblings, lemma7_test, theorem10_criterion, third_chain, SiblingReport,
    ThirdChainCertificate, TripleError,
};
