"""Invariant theory workbench for the rank-3 Jordan algebras H3(F_C).

Modules: ``exact`` (Q(i) arithmetic, dual numbers, exact rank), ``comp``
(complexified composition algebras), ``jordan`` (the algebras V0..V3),
``models`` (matrix models and group actions), ``lie`` (Lie algebra of the
determinant-preserving group), ``inv`` (invariant generators), ``dim``
(exact dimension counts), ``realize`` (numerical constructions) and
``cli``.
"""

__version__ = "0.1.0"
