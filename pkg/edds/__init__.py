"""Exact doubly dominating sets on graphs and their subdivision, Mycielskian and middle transforms."""

__version__ = "1.0.0"
