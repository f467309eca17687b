"""Exact solvers for alpha, chi, omega, treewidth and the tree-parameters, plus brute-force oracles.

Import from the submodules.
"""
