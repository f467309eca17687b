"""Exact tree-width parameters, 1-completions, Burling constructions and their verification."""

__version__ = "0.1.0"
