//! Integral matrix models of representations of `S_n`: the standard lattice
//! `Λ_r` in the `ε_i = e_i - e_{r+1}` basis, trace-free endomorphisms, and
//! the coinvariants of the long cycle.

mod coinvariants;
mod rep;

pub use coinvariants::{sigma_coinvariants, verify_sigma_formula, Coinvariants};
pub use rep::{end0_action, multiplicity, rep_character, standard_rep, IntegerRep};
