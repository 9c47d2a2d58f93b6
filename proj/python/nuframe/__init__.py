"""Matrix-valued frames of non-uniform shifts on l^2(Lambda, M_n).

Thin layer over the compiled core: objects are passed through as bound C++
types, reports come back as dictionaries decoded from the core's JSON.
"""

import json

from . import _core
from ._core import (
    FrameSystem,
    MatrixSeq,
    NuframeError,
    SpectralLattice,
    SpectrumStep,
    bessel_sufficient_bound,
    counterexample,
    envelope_sup_norm,
    exam1,
    exam1_perturbed,
    feasibility,
    fixture_names,
    frame_sum,
    frame_sum_spectral,
    gamma_gram,
    gamma_matrix,
    identity_residual,
    onb_fixture,
    phase_vector,
    singular_values,
    stacked_operator,
)

__version__ = _core.__version__

__all__ = [
    "FrameSystem",
    "MatrixSeq",
    "NuframeError",
    "SpectralLattice",
    "SpectrumStep",
    "bessel_sufficient_bound",
    "counterexample",
    "envelope_sup_norm",
    "exam1",
    "exam1_perturbed",
    "feasibility",
    "fixture",
    "fixture_names",
    "frame_bounds",
    "frame_sum",
    "frame_sum_spectral",
    "gamma_gram",
    "gamma_matrix",
    "identity_residual",
    "onb_fixture",
    "perturb",
    "phase_vector",
    "run_cli",
    "singular_values",
    "stacked_operator",
]


def fixture(name):
    """System document (dict) for a named fixture, as `examples export` writes it."""
    return json.loads(_core.fixture_json(name))


def frame_bounds(system, grid=1024, refine=0, threads=0):
    """Gamma-sweep frame bound report as a dict."""
    return json.loads(_core.frame_bounds_json(system, grid, refine, threads))


def perturb(F, G, *, a0, b0, mode="absolute", grid=4096):
    """Perturbation audit report as a dict."""
    return json.loads(_core.perturb_json(F, G, mode, a0, b0, grid))


def run_cli(args):
    """Runs the CLI in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
