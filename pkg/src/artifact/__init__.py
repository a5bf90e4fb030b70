"""Exact computations with higher Specht polynomials and their stable limits."""

__version__ = "0.1.0"
