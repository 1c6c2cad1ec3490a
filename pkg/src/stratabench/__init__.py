"""Exact computer algebra for Gorenstein stable surfaces with K^2 = 1,
chi = 2: canonical-ring models, bi-double covers, fibration numerics,
gluing combinatorics, quartic implicitization and the symmetric-square
pipeline."""

__version__ = "0.1.0"
