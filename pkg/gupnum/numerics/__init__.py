"""Numerical core: state evaluation, quadrature, overlaps, operators, transforms."""
