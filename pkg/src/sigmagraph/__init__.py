"""Non-generating graphs of 2-generated finite groups, computed from Cayley tables."""

__version__ = "0.1.0"
