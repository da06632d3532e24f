"""Exact verification of weak bimonoids in duoidal categories of vector spaces."""

__version__ = "0.1.0"
