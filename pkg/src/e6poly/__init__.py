"""Exact construction and verification of the 27-dimensional basic E6
module inside the E7 root lattice, the cubic invariant of its polynomial
algebra, and the resulting graded decomposition."""

__version__ = "0.1.0"
