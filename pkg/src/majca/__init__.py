"""Majority and minority cellular automata on rings."""

__version__ = "0.1.0"
