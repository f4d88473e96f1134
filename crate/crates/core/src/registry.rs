//! Named, runtime-selectable strategies: H¹ solvers and coefficient modules.
//!
//! ```
//! use rigidlab_core::registry::{coefficient_modules, h1_solvers};
//! use rigidlab_core::semidirect::{gamma_presentation, Case};
//!
//! let p = gamma_presentation(2, Case::Quasi).unwrap();
//! let module = coefficient_modules().get("end0").unwrap().build(&p).unwrap();
//! let h1 = h1_solvers().get("fox").unwrap().solve(&p, &module).unwrap();
//! assert_eq!(h1.dimension, 1);
//! ```

use crate::cohomology::{fox_cocycle_h1, h1_dim_hs, CohomologyResult, GModule};
use crate::error::{Error, Result};
use crate::intrep::{end0_action, standard_rep, IntegerRep};
use crate::semidirect::Presentation;

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
}

/// Computes `H¹(Γ, M)` from a presentation and a module over it.
pub trait H1Solver: Strategy {
    fn solve(&self, presentation: &Presentation, module: &GModule) -> Result<CohomologyResult>;
}

/// An `S_{r+1}`-module, pulled back to `Γ_r` along the projection.
pub trait CoefficientModule: Strategy {
    fn sym_rep(&self, r: usize) -> Result<IntegerRep>;

    fn build(&self, presentation: &Presentation) -> Result<GModule> {
        GModule::pulled_back(presentation, self.name(), &self.sym_rep(presentation.rank)?)
    }
}

/// Strategies in registration order, looked up by name.
pub struct Registry<T: ?Sized + Strategy> {
    kind: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Strategy> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry { kind, entries: Vec::new() }
    }

    pub fn register(&mut self, entry: Box<T>) -> Result<()> {
        if self.entries.iter().any(|e| e.name() == entry.name()) {
            return Err(Error::input(format!("{} {:?} is already registered", self.kind, entry.name())));
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(Box::as_ref)
            .ok_or_else(|| {
                Error::input(format!(
                    "unknown {} {name:?}; available: {}",
                    self.kind,
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(Box::as_ref)
    }
}

pub struct HsFormula;

impl Strategy for HsFormula {
    fn name(&self) -> &'static str {
        "hs"
    }

    fn description(&self) -> &'static str {
        "equivariant homomorphisms from the lattice (modules trivial on the lattice only)"
    }
}

impl H1Solver for HsFormula {
    fn solve(&self, presentation: &Presentation, module: &GModule) -> Result<CohomologyResult> {
        h1_dim_hs(presentation, module)
    }
}

pub struct FoxCalculus;

impl Strategy for FoxCalculus {
    fn name(&self) -> &'static str {
        "fox"
    }

    fn description(&self) -> &'static str {
        "kernel of the Fox-derivative system modulo coboundaries"
    }
}

impl H1Solver for FoxCalculus {
    fn solve(&self, presentation: &Presentation, module: &GModule) -> Result<CohomologyResult> {
        fox_cocycle_h1(presentation, module)
    }
}

pub struct End0;

impl Strategy for End0 {
    fn name(&self) -> &'static str {
        "end0"
    }

    fn description(&self) -> &'static str {
        "trace-zero endomorphisms of the standard representation, by conjugation"
    }
}

impl CoefficientModule for End0 {
    fn sym_rep(&self, r: usize) -> Result<IntegerRep> {
        end0_action(&standard_rep(r)?)
    }
}

pub struct Standard;

impl Strategy for Standard {
    fn name(&self) -> &'static str {
        "standard"
    }

    fn description(&self) -> &'static str {
        "the standard representation tensored with Q"
    }
}

impl CoefficientModule for Standard {
    fn sym_rep(&self, r: usize) -> Result<IntegerRep> {
        standard_rep(r)
    }
}

pub struct Trivial;

impl Strategy for Trivial {
    fn name(&self) -> &'static str {
        "trivial"
    }

    fn description(&self) -> &'static str {
        "the trivial module Q"
    }
}

impl CoefficientModule for Trivial {
    fn sym_rep(&self, r: usize) -> Result<IntegerRep> {
        IntegerRep::trivial(r + 1)
    }
}

pub fn h1_solvers() -> Registry<dyn H1Solver> {
    let mut reg: Registry<dyn H1Solver> = Registry::new("H1 method");
    reg.register(Box::new(HsFormula)).expect("fresh registry");
    reg.register(Box::new(FoxCalculus)).expect("fresh registry");
    reg
}

pub fn coefficient_modules() -> Registry<dyn CoefficientModule> {
    let mut reg: Registry<dyn CoefficientModule> = Registry::new("module");
    reg.register(Box::new(End0)).expect("fresh registry");
    reg.register(Box::new(Standard)).expect("fresh registry");
    reg.register(Box::new(Trivial)).expect("fresh registry");
    reg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        assert_eq!(h1_solvers().names(), vec!["hs", "fox"]);
        assert_eq!(coefficient_modules().names(), vec!["end0", "standard", "trivial"]);
        let err = h1_solvers().get("spectral").err().unwrap();
        assert!(err.to_string().contains("hs, fox"));
    }

    #[test]
    fn duplicate_rejected() {
        let mut reg = h1_solvers();
        assert!(reg.register(Box::new(FoxCalculus)).is_err());
    }
}
