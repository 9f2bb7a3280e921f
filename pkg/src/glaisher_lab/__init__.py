"""Constructive verification of Glaisher-type trigonometric/hyperbolic integrals."""

__version__ = "0.1.0"
