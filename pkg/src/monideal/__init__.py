"""Combinatorics of monomial ideals: Borel-type classes, d-fixed ideals, regularity, socles, Hilbert functions and generic initial ideals of complete intersections."""

__version__ = "0.1.0"
