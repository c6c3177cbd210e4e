"""Exact virtual machine and symbolic analyzer for real-number register programs."""

__version__ = "0.1.0"
