"""Monogenity of a parametric family of cyclic sextic fields."""

__version__ = "0.1.0"
