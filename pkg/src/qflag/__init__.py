"""Quantum groups at roots of unity: modules, braid operators and the covering of the quantized flag manifold."""
__version__ = "0.1.0"
