"""Coefficient rings: the integers and the integers modulo n.

Ring elements are plain Python ints. A Ring object supplies the operations
and the canonical representative convention: modular elements live in
[0, n), integer elements are themselves. Every element handed to a ring
method is normalized first, so callers may pass any int.
"""

from dataclasses import dataclass

from . import instrument
from .errors import InvalidModulusError


@dataclass(frozen=True)
class RingDescriptor:
    """What ring to build: kind is "integers" or "modular"."""

    kind: str
    modulus: int | None = None


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; the base set covers every n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Ring:
    """Shared interface; see IntegerRing and ModularRing."""

    def normalize(self, a: int) -> int:
        raise NotImplementedError

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.normalize(1)

    def add(self, a: int, b: int) -> int:
        return self.normalize(a + b)

    def sub(self, a: int, b: int) -> int:
        return self.normalize(a - b)

    def neg(self, a: int) -> int:
        return self.normalize(-a)

    def mul(self, a: int, b: int) -> int:
        instrument.bump("coeff_mul")
        return self.normalize(a * b)

    def is_zero(self, a: int) -> bool:
        return self.normalize(a) == 0

    def try_invert(self, a: int) -> int | None:
        """Multiplicative inverse of a, or None when a is not a unit."""
        raise NotImplementedError

    @property
    def is_field(self) -> bool:
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def descriptor(self) -> RingDescriptor:
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(Ring):
    def normalize(self, a: int) -> int:
        return a

    def try_invert(self, a: int) -> int | None:
        return a if a in (1, -1) else None

    @property
    def is_field(self) -> bool:
        return False

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def descriptor(self) -> RingDescriptor:
        return RingDescriptor("integers")

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class ModularRing(Ring):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidModulusError(f"modulus must be at least 2, got {self.n}")

    def normalize(self, a: int) -> int:
        return a % self.n

    def try_invert(self, a: int) -> int | None:
        a = a % self.n
        g, x, _ = _extended_gcd(a, self.n)
        if g != 1:
            return None
        return x % self.n

    @property
    def is_field(self) -> bool:
        return _is_prime(self.n)

    @property
    def characteristic(self) -> int:
        return self.n

    @property
    def descriptor(self) -> RingDescriptor:
        return RingDescriptor("modular", self.n)

    def __str__(self) -> str:
        return f"Z{self.n}"


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def ring_make(d: RingDescriptor) -> Ring:
    if d.kind == "integers":
        return IntegerRing()
    if d.kind == "modular":
        if d.modulus is None:
            raise InvalidModulusError("modular descriptor needs a modulus")
        return ModularRing(d.modulus)
    raise InvalidModulusError(f"unknown ring kind {d.kind!r}")


def parse_ring(text: str) -> Ring:
    """Accepts "Z", "Zn", and "Z/n" (n >= 2)."""
    t = text.strip()
    if t == "Z":
        return IntegerRing()
    body = None
    if t.startswith("Z/"):
        body = t[2:]
    elif t.startswith("Z"):
        body = t[1:]
    if body and body.isdigit():
        return ModularRing(int(body))
    raise InvalidModulusError(f"cannot read ring {text!r}; expected Z, Zn, or Z/n")
