"""Thermal pairwise entanglement in three-qubit Heisenberg rings."""

from ._core import (  # noqa: F401
    DomainError,
    ModelKind,
    ModelSpec,
    NumericError,
    SpinThermalError,
    analytic_eigenstates,
    analytic_energies,
    build_hamiltonian,
    concurrence_closed_form,
    concurrence_general,
    concurrence_numeric,
    cyclic_shift,
    delta_boundary,
    eigenvalues,
    gibbs_density,
    hermitian_eigen,
    partial_trace,
    partition_function,
    sweep,
    xstate_params,
    xx_critical,
    xxx_field_threshold,
    xxz_critical,
    zero_temperature_concurrence,
)

__version__ = "0.1.0"
