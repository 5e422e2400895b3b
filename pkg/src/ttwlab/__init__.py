"""Exact operator algebra for the TTW family of planar quantum Hamiltonians."""

__version__ = "0.1.0"
