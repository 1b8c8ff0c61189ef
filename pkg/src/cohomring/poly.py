"""Polynomial representations over a coefficient ring.

Univariate polynomials come in three interchangeable forms:

  * sparse: a SparseSum over natural degrees (term list);
  * dense: a DenseSeq of coefficients, trailing zeros immaterial;
  * normal: a coefficient tuple whose last entry is nonzero, so the
    degree and leading coefficient can be read off the end.

Multivariate polynomials are SparseSums over exponent vectors. convert()
moves between the univariate forms without changing the polynomial.

Dense multiplication packs coefficients into slots of one big integer and
lets the interpreter's native multiplication do the convolution (Kronecker
substitution), which keeps products of degree ~10^4 well under a second.
The schoolbook convolution in graded.mul_dense stays available as the
independent reference.
"""

from dataclasses import dataclass
from typing import Iterable

from . import graded, instrument
from .dsum import (
    NAT,
    ConstantFamily,
    DenseSeq,
    ExpIndex,
    NatIndex,
    SparseSum,
    from_dense,
    to_dense,
)
from .errors import (
    ArityMismatchError,
    IndexMismatchError,
    ZeroPolynomialError,
)
from .rings import IntegerRing, ModularRing, Ring

# ---------------------------------------------------------------- construction


def uni_sparse(ring: Ring, terms: Iterable) -> SparseSum:
    """Univariate sparse polynomial from (degree, coefficient) pairs."""
    fam = ConstantFamily(ring)
    return SparseSum.from_terms(NAT, fam, ((e, ring.normalize(c)) for e, c in terms))


def x_power(ring: Ring, e: int, c: int = 1) -> SparseSum:
    """The monomial c*X^e."""
    return SparseSum.single(NAT, ConstantFamily(ring), e, ring.normalize(c))


def uni_dense(ring: Ring, coeffs: Iterable) -> DenseSeq:
    return DenseSeq.of(ConstantFamily(ring), (ring.normalize(c) for c in coeffs))


def multi(ring: Ring, arity: int, terms) -> SparseSum:
    """Multivariate polynomial from {exponent-vector: coefficient} or pairs."""
    items = terms.items() if hasattr(terms, "items") else terms
    fam = ConstantFamily(ring)
    return SparseSum.from_terms(
        ExpIndex(arity), fam, ((tuple(e), ring.normalize(c)) for e, c in items)
    )


def variable(ring: Ring, arity: int, i: int, c: int = 1) -> SparseSum:
    """The i-th variable (0-based) as a polynomial."""
    exps = tuple(1 if k == i else 0 for k in range(arity))
    return SparseSum.single(ExpIndex(arity), ConstantFamily(ring), exps, ring.normalize(c))


def constant(ring: Ring, arity: int, c: int) -> SparseSum:
    return SparseSum.single(ExpIndex(arity), ConstantFamily(ring), (0,) * arity, ring.normalize(c))


@dataclass(frozen=True)
class UniNormal:
    """Univariate coefficients with the invariant: empty, or last entry nonzero."""

    ring: Ring
    coeffs: tuple

    @staticmethod
    def make(ring: Ring, coeffs: Iterable) -> "UniNormal":
        out = [ring.normalize(c) for c in coeffs]
        while out and out[-1] == 0:
            out.pop()
        return UniNormal(ring, tuple(out))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree_and_lead(self) -> tuple:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return len(self.coeffs) - 1, self.coeffs[-1]

    def __add__(self, other: "UniNormal") -> "UniNormal":
        if not isinstance(other, UniNormal):
            return NotImplemented
        if self.ring != other.ring:
            raise IndexMismatchError("operands over different rings")
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.ring.add(out[i], c)
        return UniNormal.make(self.ring, out)

    def __neg__(self) -> "UniNormal":
        return UniNormal(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __sub__(self, other: "UniNormal") -> "UniNormal":
        if not isinstance(other, UniNormal):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "UniNormal") -> "UniNormal":
        if not isinstance(other, UniNormal):
            return NotImplemented
        if self.ring != other.ring:
            raise IndexMismatchError("operands over different rings")
        return UniNormal.make(self.ring, _dense_mul_coeffs(self.ring, self.coeffs, other.coeffs))


def normalize_dense(f) -> UniNormal:
    """Strip trailing zeros from a dense polynomial."""
    if isinstance(f, DenseSeq):
        return UniNormal.make(f.family.ring, f.coeffs)
    raise TypeError("normalize_dense expects a DenseSeq")


def degree_and_lead(p) -> tuple:
    """(degree, leading coefficient); raises ZeroPolynomialError on zero."""
    if isinstance(p, UniNormal):
        return p.degree_and_lead()
    if isinstance(p, DenseSeq):
        return normalize_dense(p).degree_and_lead()
    if isinstance(p, SparseSum):
        if not p.terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return p.terms[-1]
    raise TypeError(f"not a univariate polynomial: {p!r}")


# ------------------------------------------------------------- multiplication


def _pack(coeffs, slot_bytes: int) -> int:
    buf = b"".join(c.to_bytes(slot_bytes, "little") for c in coeffs)
    return int.from_bytes(buf, "little")


def _convolve_nonneg(a, b, slot_bytes: int) -> list:
    """Exact convolution of nonnegative sequences via one integer product.

    slot_bytes must accommodate the largest convolution sum, so slots
    cannot carry into each other.
    """
    out_len = len(a) + len(b) - 1
    prod = _pack(a, slot_bytes) * _pack(b, slot_bytes)
    raw = prod.to_bytes(slot_bytes * (len(a) + len(b)), "little")
    return [
        int.from_bytes(raw[k * slot_bytes : (k + 1) * slot_bytes], "little")
        for k in range(out_len)
    ]


def _slot_bytes_for(bound: int) -> int:
    return max(1, (bound.bit_length() + 7) // 8)


def _dense_mul_coeffs(ring: Ring, a: tuple, b: tuple) -> list:
    if not a or not b:
        return []
    instrument.bump("dense_positions", len(a) + len(b) - 1)
    width = min(len(a), len(b))
    if isinstance(ring, ModularRing):
        bound = width * (ring.n - 1) * (ring.n - 1)
        sb = _slot_bytes_for(bound)
        return [c % ring.n for c in _convolve_nonneg(a, b, sb)]
    # over the integers, split by sign: (a+ - a-)(b+ - b-)
    ap = [c if c > 0 else 0 for c in a]
    an = [-c if c < 0 else 0 for c in a]
    bp = [c if c > 0 else 0 for c in b]
    bn = [-c if c < 0 else 0 for c in b]
    big = max(max(map(abs, a)), 1) * max(max(map(abs, b)), 1) * width
    sb = _slot_bytes_for(big)
    pp = _convolve_nonneg(ap, bp, sb)
    nn = _convolve_nonneg(an, bn, sb)
    pn = _convolve_nonneg(ap, bn, sb)
    np_ = _convolve_nonneg(an, bp, sb)
    return [pp[k] + nn[k] - pn[k] - np_[k] for k in range(len(pp))]


def mul(p, q):
    """Product of two polynomials in the same representation."""
    if isinstance(p, SparseSum) and isinstance(q, SparseSum):
        if not isinstance(p.family, ConstantFamily):
            raise IndexMismatchError("not a polynomial: coefficients vary by index")
        m = graded.coefficient_mul(p.monoid, p.family.ring)
        return graded.mul_sparse(p, q, m)
    if isinstance(p, DenseSeq) and isinstance(q, DenseSeq):
        if p.family != q.family:
            raise IndexMismatchError("operands over different rings")
        ring = p.family.ring
        return DenseSeq(p.family, tuple(_dense_mul_coeffs(ring, p.coeffs, q.coeffs)))
    if isinstance(p, UniNormal) and isinstance(q, UniNormal):
        return p * q
    raise TypeError(f"cannot multiply {type(p).__name__} with {type(q).__name__}")


def ring_pow(ring: Ring, x: int, e: int) -> int:
    """x^e by repeated squaring."""
    acc = ring.one
    base = ring.normalize(x)
    while e:
        if e & 1:
            acc = ring.mul(acc, base)
        base = ring.mul(base, base)
        e >>= 1
    return acc


# ------------------------------------------------------------------ evaluation


def uni_eval(p, x: int) -> int:
    """Evaluate a univariate polynomial at the point x."""
    if isinstance(p, SparseSum):
        ring = p.family.ring
        acc = ring.zero
        for e, c in p.terms:
            acc = ring.add(acc, ring.mul(c, ring_pow(ring, x, e)))
        return acc
    if isinstance(p, (DenseSeq, UniNormal)):
        ring = p.family.ring if isinstance(p, DenseSeq) else p.ring
        acc = ring.zero
        for c in reversed(p.coeffs):
            acc = ring.add(ring.mul(acc, x), c)
        return acc
    raise TypeError(f"not a univariate polynomial: {p!r}")


def multi_eval(p: SparseSum, xs) -> int:
    """Evaluate a multivariate polynomial at the point vector xs."""
    if not isinstance(p.monoid, ExpIndex):
        raise TypeError("multi_eval expects an exponent-vector polynomial")
    if len(xs) != p.monoid.arity:
        raise ArityMismatchError(f"{p.monoid.arity} variables, {len(xs)} values")
    ring = p.family.ring
    acc = ring.zero
    for exps, c in p.terms:
        term = c
        for x, e in zip(xs, exps):
            if e:
                term = ring.mul(term, ring_pow(ring, x, e))
        acc = ring.add(acc, term)
    return acc


# ------------------------------------------------------------------ conversion


def convert(p, target: str):
    """Move a univariate polynomial between "sparse", "dense", and "normal"."""
    if target not in ("sparse", "dense", "normal"):
        raise ValueError(f"unknown representation {target!r}")
    if isinstance(p, SparseSum):
        if not isinstance(p.monoid, NatIndex):
            raise TypeError("convert handles univariate polynomials only")
        dense = to_dense(p)
    elif isinstance(p, DenseSeq):
        dense = p
    elif isinstance(p, UniNormal):
        dense = DenseSeq(ConstantFamily(p.ring), p.coeffs)
    else:
        raise TypeError(f"not a univariate polynomial: {p!r}")
    if target == "dense":
        return dense
    if target == "sparse":
        return from_dense(dense)
    return normalize_dense(dense)


def uni_to_multi(p: SparseSum) -> SparseSum:
    """Reindex a univariate sparse polynomial as a one-variable MultiPoly."""
    fam = p.family
    return SparseSum(ExpIndex(1), fam, tuple(((e,), c) for e, c in p.terms))


def multi_to_uni(p: SparseSum) -> SparseSum:
    """Inverse of uni_to_multi; needs arity exactly 1."""
    if not isinstance(p.monoid, ExpIndex) or p.monoid.arity != 1:
        raise ArityMismatchError("only one-variable polynomials flatten to univariate")
    return SparseSum(NAT, p.family, tuple((e[0], c) for e, c in p.terms))


# ------------------------------------------------------------------- rendering


def default_names(arity: int) -> tuple:
    if arity == 1:
        return ("X",)
    return tuple(f"X{i + 1}" for i in range(arity))


def _term_body(c_abs: int, factors: list) -> str:
    parts = [name if e == 1 else f"{name}^{e}" for name, e in factors]
    if not parts:
        return str(c_abs)
    if c_abs == 1:
        return "*".join(parts)
    return "*".join([str(c_abs)] + parts)


def render(p, names=None) -> str:
    """Canonical text form: terms ascending, "+"/"-" separated.

    Coefficient 1 and exponent 1 are left implicit, so a term looks like
    "X^2", "3*X1*X2^4", or a bare integer for the constant term.
    """
    if isinstance(p, (DenseSeq, UniNormal)):
        p = convert(p, "sparse")
    if not isinstance(p, SparseSum):
        raise TypeError(f"cannot render {p!r}")
    if isinstance(p.monoid, ExpIndex):
        arity = p.monoid.arity
        names = tuple(names) if names else default_names(arity)
        if len(names) != arity:
            raise ArityMismatchError(f"{arity} variables, {len(names)} names")
        unpack = lambda exps: [(names[i], e) for i, e in enumerate(exps) if e]
    else:
        names = tuple(names) if names else ("X",)
        unpack = lambda e: [(names[0], e)] if e else []
    if p.is_zero():
        return "0"
    pieces = []
    for idx, c in p.terms:
        body = _term_body(abs(c), unpack(idx))
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


def render_dense(p) -> str:
    coeffs = p.coeffs if isinstance(p, (DenseSeq, UniNormal)) else to_dense(p).coeffs
    return "[" + ", ".join(str(c) for c in coeffs) + "]"
