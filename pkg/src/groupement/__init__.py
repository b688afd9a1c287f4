"""Groupements: categories without identity axioms, as executable finite structures."""

__version__ = "0.1.0"
