# -*- coding: utf-8 -*-
"""
Degenerate Eulerian Identity Verifier

Exact computation of classical and λ-degenerate Eulerian polynomials,
numbers and their relatives, with an executable catalog of the identities
that connect them.
"""

__version__ = "0.1.0"
