"""Exact verification engine for a family of q-series polynomial identities:
generating functions, factorizations, exact limits, divisibility scans, and
Hankel determinants, all over big-integer arithmetic."""

__version__ = "0.1.0"
