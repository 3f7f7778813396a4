"""Exact size-Ramsey calculator for cliques versus stripes.

Computes R-hat(K_n, tK_2) exactly via clique-composition minimization,
verifies small arrowing instances by exhaustive search, and certifies the
decoloring lemmas behind the lower bounds.
"""

__version__ = "0.1.0"
