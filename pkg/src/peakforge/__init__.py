"""Exact computer algebra for noncommutative symmetric functions, free
quasi-symmetric functions, the level-2 Mantaci-Reutenauer algebra, and the
higher-order peak subalgebra scans built on top of them.

Coefficients live in one of three exact fields: the rationals, the rational
function field Q(q), or a cyclotomic field Q(zeta_r).  No floating point is
used anywhere.
"""

__version__ = "0.1.0"
