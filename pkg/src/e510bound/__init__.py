"""Exact computations for E(5,10), its generalized Verma modules and the
degree bounds on their singular vectors."""

__version__ = "0.1.0"
