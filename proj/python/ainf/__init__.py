"""Quantum cluster combinatorics of the type A-infinity lattice."""

from _ainf import *  # noqa: F401,F403
