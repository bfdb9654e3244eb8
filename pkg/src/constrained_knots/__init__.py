"""Constrained knots in lens spaces: parameters, Floer data, presentations, surgeries."""

__version__ = "0.1.0"
