"""Dual-rail cluster states in the frequency comb of a bimodally pumped OPO."""

__version__ = "0.1.0"
