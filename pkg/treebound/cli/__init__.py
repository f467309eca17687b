"""Command-line front end: gen, solve, validate, weights, verify."""
