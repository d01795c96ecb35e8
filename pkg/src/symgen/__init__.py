"""Exact and Monte Carlo tools for random generation of A_n and S_n."""

__version__ = "0.1.0"
