"""Exact interlace, Martin, Tutte-Martin and delta-matroid polynomials.

Thin wrapper over the compiled extension; polynomials come back as plain
dicts mapping exponents (or exponent pairs) to Python integers.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - in-tree builds put _core on sys.path
    from _core import *  # noqa: F401,F403

__all__ = [
    "q_nullity",
    "q_twovar",
    "q_global",
    "martin_directed",
    "martin_undirected",
    "euler_circuit_count",
    "interlace_graph_of_word",
    "tutte",
    "tm_graphic",
    "adjacency_delta_matroid",
    "q_delta",
    "q_delta_global",
    "symmetric_exchange",
    "run_checks",
]
