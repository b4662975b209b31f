"""Numerics for minimal-length GUP models in momentum space."""

__version__ = "0.1.0"
