"""Exact construction and verification of multiplier bimonoids in braided
monoidal categories of graded vector spaces."""

__version__ = "0.1.0"
