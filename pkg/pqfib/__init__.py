"""pqfib - (p,q)-deformed Fibonacci and Lucas polynomials, exact and verified."""

__version__ = "0.1.0"
