"""Exact desk-scale certification of Camina/Gagola pairs, character
tables by the Dixon method, and Suzuki 2-group automorphisms."""

__version__ = "0.1.0"
