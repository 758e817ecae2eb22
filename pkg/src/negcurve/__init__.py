"""Exact toolkit for negative curves on blow-ups of monomial-curve Ehrhart rings."""

__version__ = "0.1.0"
