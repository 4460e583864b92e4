"""Exact arithmetic for the Motzkin algebra M_k(x), its cell modules and its Schur-Weyl duality."""

__version__ = '2026.10.0'
