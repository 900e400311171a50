"""
tiedlinks — exact Homflypt-type invariants of tied singular links from braid words.

The four invariants Φ, Ψ (over u) and Φ′, Ψ′ (over v) are computed as
rescaled Markov traces of the bt-algebra image of a tied singular braid.
"""

__version__ = "0.1.0"
