"""Chern-Schwartz-MacPherson cycles of matroids."""

__version__ = "0.1.0"
