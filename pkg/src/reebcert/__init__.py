"""Exact certificates for closed Reeb orbits on Legendrian surgery diagrams."""

__version__ = "0.1.0"
