"""Exact symbolic verification of singular-vector families, their sl(2)
ladder structure, and branching bookkeeping for scalar-induced modules.

Everything runs over the exact rational-function field in the formal weights;
there is no floating point anywhere.
"""

__version__ = "0.1.0"
