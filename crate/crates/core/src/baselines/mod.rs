//! Independent reference methods: exhaustive enumeration, bipartite
//! matching and a SAT encoding with a small complete solver.

pub mod enumerate;
pub mod matching;
pub mod sat;

pub use enumerate::{count_tilings, enumerate, enumerate_with, Enumeration};
pub use matching::{matching_solve, NoPerfectMatching};
pub use sat::{dpll_solve, dpll_solve_guarded, sat_encode, Cnf, DPLL_GUARD};
