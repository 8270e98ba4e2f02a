"""Exact computations with modules over Schur algebras in positive characteristic."""
__version__ = "0.1.0"
