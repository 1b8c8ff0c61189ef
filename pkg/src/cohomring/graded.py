"""Multiplication on direct sums, one homogeneous pair at a time.

A GradedMul packages the bilinear data of a graded ring: how to multiply a
coefficient sitting at index i with one sitting at index j to get the
coefficient at i+j, and which term acts as the unit. Polynomial rings use
plain coefficient multiplication; the cohomology catalog supplies structure
constants instead.
"""

from dataclasses import dataclass
from typing import Any, Callable

from . import instrument
from .dsum import ConstantFamily, DenseSeq, SparseSum
from .errors import IndexMismatchError
from .rings import Ring


@dataclass(frozen=True)
class GradedMul:
    monoid: Any
    family: Any
    term_mul: Callable  # (i, x, j, y) -> coefficient at combine(i, j)
    unit_index: Any
    unit_coeff: Any


def coefficient_mul(monoid, ring: Ring) -> GradedMul:
    """The GradedMul of a polynomial ring: indices add, coefficients multiply."""
    return GradedMul(
        monoid=monoid,
        family=ConstantFamily(ring),
        term_mul=lambda i, x, j, y: ring.mul(x, y),
        unit_index=monoid.unit(),
        unit_coeff=ring.one,
    )


def one(m: GradedMul) -> SparseSum:
    return SparseSum.single(m.monoid, m.family, m.unit_index, m.unit_coeff)


def mul_sparse(a: SparseSum, b: SparseSum, m: GradedMul) -> SparseSum:
    """Product over all term pairs, collected by combined index."""
    if a.monoid != m.monoid or b.monoid != m.monoid or a.family != m.family or b.family != m.family:
        raise IndexMismatchError("operands do not match the graded multiplication")
    combine = m.monoid.combine
    term_mul = m.term_mul
    return SparseSum.from_terms(
        m.monoid,
        m.family,
        (
            (combine(i, j), term_mul(i, x, j, y))
            for i, x in a.terms
            for j, y in b.terms
        ),
    )


def mul_dense(f: DenseSeq, g: DenseSeq, m: GradedMul) -> DenseSeq:
    """Convolution: result[n] = sum of term_mul(i, f[i], n-i, g[n-i]).

    The result carries len(f) + len(g) - 1 positions, enough for every
    product of in-range indices; all higher positions are zero anyway.
    """
    if f.family != m.family or g.family != m.family:
        raise IndexMismatchError("operands do not match the graded multiplication")
    fc, gc = f.coeffs, g.coeffs
    if not fc or not gc:
        return DenseSeq(m.family, ())
    length = len(fc) + len(gc) - 1
    instrument.bump("dense_positions", length)
    fam = m.family
    term_mul = m.term_mul
    out = []
    for n in range(length):
        acc = fam.zero(n)
        lo = max(0, n - len(gc) + 1)
        hi = min(n, len(fc) - 1)
        for i in range(lo, hi + 1):
            acc = fam.add(n, acc, term_mul(i, fc[i], n - i, gc[n - i]))
        out.append(acc)
    return DenseSeq(m.family, tuple(out))


def check_laws(m: GradedMul, triples) -> list:
    """Ring-law violations of mul_sparse over the given (a, b, c) triples.

    Checks left/right distributivity over +, associativity, and the unit
    acting as identity on both sides. Returns a list of law names that
    failed; empty means every sampled instance held.
    """
    failed = []
    u = one(m)

    def note(name, ok):
        if not ok and name not in failed:
            failed.append(name)

    for a, b, c in triples:
        ab = mul_sparse(a, b, m)
        note("left-distributivity", mul_sparse(a + b, c, m) == mul_sparse(a, c, m) + mul_sparse(b, c, m))
        note("right-distributivity", mul_sparse(a, b + c, m) == ab + mul_sparse(a, c, m))
        note("associativity", mul_sparse(ab, c, m) == mul_sparse(a, mul_sparse(b, c, m), m))
        note("left-unit", mul_sparse(u, a, m) == a)
        note("right-unit", mul_sparse(a, u, m) == a)
    return failed
