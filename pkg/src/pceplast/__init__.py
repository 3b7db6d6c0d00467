"""Polynomial-chaos uncertainty propagation through a J2 material point."""

__version__ = "0.1.0"
