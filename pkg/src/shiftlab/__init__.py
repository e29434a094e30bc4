"""shiftlab: desk-scale constructions for symbolic dynamical systems.

Subpackages follow the build's module map:

- :mod:`shiftlab.seqcore` -- words, eventually periodic points, shift metric
- :mod:`shiftlab.systems` -- language oracles for the supported shift spaces
- :mod:`shiftlab.graphview` -- lazily enumerated labelled graphs and counts
- :mod:`shiftlab.simplexmetrics` -- finitely supported measures, exact dbar
- :mod:`shiftlab.orbitlab` -- closing, linking, convex approximation, generic prefixes
- :mod:`shiftlab.harness` -- reproducible experiments; :mod:`shiftlab.cli` wraps them
"""

from .seqcore import EpSeq, rho, lex_compare, shift, primitive_root

__all__ = ["EpSeq", "rho", "lex_compare", "shift", "primitive_root"]
