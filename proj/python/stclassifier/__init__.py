# This code is licensed under the Apache License, Version 2.0. You may obtain
# a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

"""Swap-test quantum classifier: simulation core bindings.

The heavy lifting lives in the C++ extension ``stclassifier._core``; this
package re-exports its surface.
"""

from ._core import (  # noqa: F401
    Dataset,
    FitResult,
    Outcome,
    SimulatorError,
    TestPoint,
    assign_label,
    encode_amplitude,
    estimate_resources,
    fit_curve,
    forking_expectation,
    helstrom_expectation,
    kernel_oracle,
    noisy_toy_expectation,
    run_hadamard,
    run_swaptest,
    toy_dataset,
    toy_expectation,
    toy_test,
    transpile_toy_counts,
)

__all__ = [
    "Dataset",
    "FitResult",
    "Outcome",
    "SimulatorError",
    "TestPoint",
    "assign_label",
    "encode_amplitude",
    "estimate_resources",
    "fit_curve",
    "forking_expectation",
    "helstrom_expectation",
    "kernel_oracle",
    "noisy_toy_expectation",
    "run_hadamard",
    "run_swaptest",
    "toy_dataset",
    "toy_expectation",
    "toy_test",
    "transpile_toy_counts",
]
