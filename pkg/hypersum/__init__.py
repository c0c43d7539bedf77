"""Exact hypergeometric summation and identity verification for Django."""

__version__ = '0.1.0'
