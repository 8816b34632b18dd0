"""Irreducibility of exterior and symmetric squares of Lie algebra representations."""

__version__ = "0.1.0"
