"""Exact discriminants and real-root counts for quadrinomials x^n + t(x^2 + a x + b)."""

__version__ = "0.1.0"
