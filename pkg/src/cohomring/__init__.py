"""Graded-ring and polynomial quotient arithmetic.

The layers build on each other: coefficient rings, direct sums in sparse
and dense form, graded multiplication, polynomial representations,
rewrite bases and quotient rings, and finally a catalog of cohomology
rings of classical spaces presented both ways.
"""

from .rings import IntegerRing, ModularRing, RingDescriptor, parse_ring, ring_make

__all__ = [
    "IntegerRing",
    "ModularRing",
    "RingDescriptor",
    "parse_ring",
    "ring_make",
]
