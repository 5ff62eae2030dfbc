"""Knapsack portfolio selection with the quantum-walk-mixer QAOA.

Thin wrapper over the C++ core. The heavy lifting (statevector simulation,
feasibility oracle, walk mixer, optimizer) lives in the compiled module.
"""

from ._core import (
    KnapsackInstance,
    approximation_ratio,
    encode_to_knapsack,
    fixture,
    fixture_names,
    is_feasible,
    load_expected_returns,
    optimize,
    qubit_count,
    run,
    run_report_json,
    solve_brute_force,
    solve_dp,
    total_value,
)

__all__ = [
    "KnapsackInstance",
    "approximation_ratio",
    "encode_to_knapsack",
    "fixture",
    "fixture_names",
    "is_feasible",
    "load_expected_returns",
    "optimize",
    "qubit_count",
    "run",
    "run_report_json",
    "solve_brute_force",
    "solve_dp",
    "total_value",
]

__version__ = "0.1.0"
