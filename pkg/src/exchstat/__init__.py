"""Exact audits of particle exchange statistics over integer partitions."""

__version__ = "0.1.0"
