//! Divided differences, Demazure and Demazure–Lusztig operators, and the
//! recursive constructions built from them.

mod demazure;
mod recursion;

pub use demazure::{demazure_pi, demazure_theta, divided_difference, pi_t, theta_t, OperatorKind, OperatorWord};
pub use recursion::{
    atom_operator_construction, basement_permute, knop_sahi_shift, macdonald_recursive, macdonald_recursive_cached,
    monotone_pairs, Direction, RecursionCache,
};
