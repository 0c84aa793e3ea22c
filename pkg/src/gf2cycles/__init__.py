"""Mod-2 cycle spaces of graphs, graph products, deleted squares and 2-hypergraphs."""

__version__ = "0.1.0"
