"""Momentum bispinors, two-qubit entanglement and momentum twistor geometry."""

__version__ = "0.1.0"
