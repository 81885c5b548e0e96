"""Exact-arithmetic toolkit for moduli of G-constellations.

Subpackages cover cyclotomic/polynomial arithmetic (exactmath), finite
matrix groups and their characters (grouprep), McKay quivers with pinned
equivariant bases (mckay), rational cones and exact linear programming
(cones), determinantal semi-invariants (semiinv), embeddings, GIT chambers
and birational bookkeeping (moduli), and the command-line surface (cli).
"""

__version__ = "1.0.0"
