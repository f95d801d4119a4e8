"""Computational companion for the block of hooks in degree p."""

__version__ = "0.1.0"
