"""Finite BCK-modules and the Baig topologies of their submodule chains."""

from ._core import (
    AbelianGroup,
    AxiomViolation,
    BaigTopology,
    BckAlgebra,
    BckModule,
    CarrierTooLarge,
    Dss,
    Error,
    Instance,
    ModuleHom,
    NotASubmodule,
    NotBoundedImplicative,
    ParseError,
    TopologizedHom,
    UsageError,
    ValidationError,
    build_baig,
    chain_algebra,
    enumerate_homs,
    enumeration_bound,
    run_suite,
    scalar_module_over_c2,
    self_module,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
