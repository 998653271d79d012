//! A deliberately broken process, used as a negative control for the suites.

use omega_forge_core::omega::{OmegaOperator, Process};
use omega_forge_core::{Polynomial, Result, Var};

use crate::config::FaultKind;

/// Wraps the Cayley process and perturbs its output according to `kind`.
#[derive(Clone, Debug)]
pub struct FaultyProcess {
    inner: OmegaOperator,
    kind: FaultKind,
}

impl FaultyProcess {
    pub fn new(inner: OmegaOperator, kind: FaultKind) -> Self {
        FaultyProcess { inner, kind }
    }

    pub fn kind(&self) -> FaultKind {
        self.kind
    }
}

impl Process for FaultyProcess {
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn character(&self) -> &Polynomial {
        self.inner.character()
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let clean = self.inner.apply(f)?;
        match self.kind {
            // ∂/∂x11 keeps the y-degree of a translate, Ω·det does not
            FaultKind::FirstRule => Ok(&clean + &f.partial_derivative(Var::x(1, 1))?),
        }
    }
}
