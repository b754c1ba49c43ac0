"""Parking functions, Cayley permutations, labeled forests and their statistics."""

__version__ = "0.1.0"
