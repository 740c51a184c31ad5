"""Symmetric v_3 configurations and the upper embeddability of their Levi graphs."""

__version__ = "0.1.0"
