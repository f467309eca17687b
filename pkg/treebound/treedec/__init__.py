"""Tree-decompositions: the value type, axiom validation, bag parameters, pullback and simplification.

Import from the submodules; ``parameters`` depends on the solvers package.
"""
