"""Exact-arithmetic engine for two-cocycles and cleft extensions of Hopf
algebras in left braided categories."""

__version__ = "0.1.0"
