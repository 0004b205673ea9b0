"""Integrated information, Hamiltonian separability, and autonomy measures.

Thin Python facade over the C++ extension; see the function docstrings on
the extension module for details.
"""

try:
    from . import _perceptronium as _core  # installed layout
except ImportError:  # build-tree layout: extension on sys.path directly
    import _perceptronium as _core

_EXPORTS = [
    "FactorShape",
    "InvalidStateError",
    "ShapeError",
    "apodized_state",
    "classical_phi",
    "energy_coherence",
    "evolve",
    "hs_decompose",
    "integration_energy",
    "kron",
    "lattice_dispersion",
    "lattice_normal_modes",
    "linear_entropy",
    "mutual_information",
    "overlap_fn",
    "ptrace_first",
    "ptrace_second",
    "quantum_phi",
    "qubit_oscillator",
    "shannon_entropy",
    "sliding_simulation",
    "von_neumann_entropy",
    "young_phi",
]

globals().update({name: getattr(_core, name) for name in _EXPORTS})
__version__ = _core.__version__
__all__ = _EXPORTS + ["__version__"]
