"""Exact canonical models of the Heisenberg and Weil representations
over small odd prime fields."""

__version__ = "0.1.0"
