"""Euler's criterion of prime order l via Jacobi sums and power residue symbols."""

__version__ = "0.1.0"
