"""Executable algebra for linear codes over finite module alphabets.

The package builds finite rings and modules as explicit operation tables,
computes socle and automorphism data, evaluates Hamming / symmetrized /
annihilator-symmetrized weight compositions, and runs verifiers and
counterexample constructions for the extension property of such codes.
"""

__version__ = "0.1.0"

REPORT_VERSION = "eplab/1"
