"""Exact weighted path homology for path complexes, digraphs and directed hypergraphs."""

__version__ = "0.1.0"
