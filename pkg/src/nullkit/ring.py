"""Exact arithmetic over Z, Z_m and GF(p^k).

Elements are represented by canonical integer payloads so that equality is
structural and elements can be used as dict keys:

* ``Integers``: the integer itself.
* ``IntegersMod(m)``: the residue in ``[0, m)``.
* ``GaloisField(p, k, modulus)``: the coefficient vector ``(c_0, ..., c_{k-1})``
  of the residue polynomial in ``t``, packed as ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.
  Ascending payload order is therefore the lexicographic order of the vectors
  read from the top coefficient down, e.g. ``0, 1, t, t+1`` in GF(4).

A ring object does all arithmetic on payloads.  :class:`RingElement` binds a
payload to its ring for operator-style use.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator, Sequence

from .errors import DomainError, RingMismatch

# Conway polynomials, ascending coefficients, for p^k <= 64 with k >= 2.
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}

_TABLE_LIMIT = 256


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of ``m >= 1`` by trial division."""
    if m < 1:
        raise DomainError(f"cannot factor {m}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def radical(m: int) -> int:
    return math.prod(factorize(m))


class Ring:
    """Common interface of the supported rings.  Subclasses are frozen dataclasses."""

    zero = 0
    one = 1

    # -- arithmetic on payloads -------------------------------------------
    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise DomainError("negative exponent")
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def sum(self, values) -> int:
        return reduce(self.add, values, self.zero)

    def prod(self, values) -> int:
        return reduce(self.mul, values, self.one)

    def scalar(self, n: int) -> int:
        """The image ``n * 1`` of an integer."""
        raise NotImplementedError

    def coerce(self, value) -> int:
        """Validate/normalize a raw payload (or JSON form) into canonical form."""
        raise NotImplementedError

    # -- structure ---------------------------------------------------------
    def try_invert(self, a: int) -> int | None:
        raise NotImplementedError

    def is_unit(self, a: int) -> bool:
        return self.try_invert(a) is not None

    def is_zero_divisor(self, a: int) -> bool:
        raise NotImplementedError

    def is_nilpotent(self, a: int) -> bool:
        raise NotImplementedError

    @property
    def size(self) -> int | None:
        """Number of elements, ``None`` for Z."""
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def is_integral_domain(self) -> bool:
        raise NotImplementedError

    @property
    def is_field(self) -> bool:
        raise NotImplementedError

    def elements(self) -> list[int]:
        raise NotImplementedError

    # -- I/O ----------------------------------------------------------------
    def to_json(self) -> dict:
        raise NotImplementedError

    def element_to_json(self, a: int):
        return a

    def element_from_json(self, obj) -> int:
        return self.coerce(obj)

    def format(self, a: int) -> str:
        return str(a)

    def __call__(self, value) -> "RingElement":
        return RingElement(self, self.coerce(value))


@dataclass(frozen=True)
class Integers(Ring):
    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        if e < 0:
            raise DomainError("negative exponent")
        return a**e

    def scalar(self, n):
        return int(n)

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"not an integer: {value!r}")
        return value

    def try_invert(self, a):
        return a if a in (1, -1) else None

    def is_zero_divisor(self, a):
        return False

    def is_nilpotent(self, a):
        return a == 0

    @property
    def size(self):
        return None

    @property
    def characteristic(self):
        return 0

    @property
    def is_integral_domain(self):
        return True

    @property
    def is_field(self):
        return False

    def elements(self):
        raise DomainError("infinite ring")

    def to_json(self):
        return {"kind": "Z"}

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class IntegersMod(Ring):
    m: int
    _radical: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {self.m!r}")
        object.__setattr__(self, "_radical", radical(self.m))

    def add(self, a, b):
        s = a + b
        return s - self.m if s >= self.m else s

    def neg(self, a):
        return self.m - a if a else 0

    def sub(self, a, b):
        s = a - b
        return s + self.m if s < 0 else s

    def mul(self, a, b):
        return a * b % self.m

    def pow(self, a, e):
        if e < 0:
            raise DomainError("negative exponent")
        return pow(a, e, self.m)

    def scalar(self, n):
        return int(n) % self.m

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"not an integer residue: {value!r}")
        return value % self.m

    def try_invert(self, a):
        if math.gcd(a, self.m) != 1:
            return None
        return pow(a, -1, self.m)

    def is_zero_divisor(self, a):
        return a != 0 and math.gcd(a, self.m) > 1

    def is_nilpotent(self, a):
        return a % self._radical == 0

    @property
    def size(self):
        return self.m

    @property
    def characteristic(self):
        return self.m

    @property
    def is_integral_domain(self):
        return is_prime(self.m)

    @property
    def is_field(self):
        return self.is_integral_domain

    def elements(self):
        return list(range(self.m))

    def to_json(self):
        return {"kind": "Zm", "m": self.m}

    def __str__(self):
        return f"Z_{self.m}"


def _poly_divmod_fp(num: list[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of ``num`` modulo monic ``den`` over F_p (ascending lists)."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for k in range(dd + 1):
                num[i - dd + k] = (num[i - dd + k] - c * den[k]) % p
    return [c % p for c in num[:dd]] if dd else []


def _is_irreducible_fp(poly: Sequence[int], p: int) -> bool:
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if not any(_poly_divmod_fp(poly, divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class GaloisField(Ring):
    """GF(p^k) as F_p[t]/(modulus).  ``modulus`` is monic, ascending coefficients."""

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None
    _q: int = field(init=False, repr=False, compare=False)
    _add_table: list | None = field(init=False, repr=False, compare=False)
    _mul_table: list | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, k = self.p, self.k
        if not is_prime(p):
            raise DomainError(f"GF characteristic must be prime, got {p}")
        if k < 1:
            raise DomainError("GF degree k must be >= 1")
        mod = self.modulus
        if mod is None:
            mod = (0, 1) if k == 1 else CONWAY_POLYNOMIALS.get((p, k))
            if mod is None:
                raise DomainError(f"no built-in modulus for GF({p}^{k}); supply one")
        mod = tuple(int(c) for c in mod)
        if len(mod) != k + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
            raise DomainError("modulus must be monic of degree k with coefficients in [0, p)")
        if not _is_irreducible_fp(mod, p):
            raise DomainError(f"modulus {list(mod)} is reducible over F_{p}")
        object.__setattr__(self, "modulus", mod)
        q = p**k
        object.__setattr__(self, "_q", q)
        object.__setattr__(self, "_add_table", None)
        object.__setattr__(self, "_mul_table", None)
        if q <= _TABLE_LIMIT:
            elems = range(q)
            add_t = [[self._add_slow(a, b) for b in elems] for a in elems]
            mul_t = [[self._mul_slow(a, b) for b in elems] for a in elems]
            object.__setattr__(self, "_add_table", add_t)
            object.__setattr__(self, "_mul_table", mul_t)

    # payload <-> coefficient vector
    def to_vector(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_vector(self, vec: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(vec))

    def _add_slow(self, a, b):
        va, vb = self.to_vector(a), self.to_vector(b)
        return self.from_vector([x + y for x, y in zip(va, vb)])

    def _mul_slow(self, a, b):
        va, vb = self.to_vector(a), self.to_vector(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] += x * y
        return self.from_vector(_poly_divmod_fp(prod, self.modulus, self.p))

    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a):
        return self.from_vector([-c for c in self.to_vector(a)])

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def scalar(self, n):
        return int(n) % self.p

    def coerce(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) != self.k:
                raise DomainError(f"GF({self._q}) element needs {self.k} coefficients")
            return self.from_vector(value)
        if self.k == 1 and isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < self._q:
            raise DomainError(f"not a GF({self._q}) payload: {value!r}")
        return value

    def try_invert(self, a):
        if a == 0:
            return None
        return self.pow(a, self._q - 2)

    def is_zero_divisor(self, a):
        return False

    def is_nilpotent(self, a):
        return a == 0

    @property
    def size(self):
        return self._q

    @property
    def characteristic(self):
        return self.p

    @property
    def is_integral_domain(self):
        return True

    @property
    def is_field(self):
        return True

    def elements(self):
        return list(range(self._q))

    def to_json(self):
        return {"kind": "GF", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def element_to_json(self, a):
        return self.to_vector(a)

    def element_from_json(self, obj):
        if isinstance(obj, int) and self.k == 1:
            return obj % self.p
        if not isinstance(obj, (list, tuple)):
            raise DomainError("GF elements serialize as coefficient lists")
        return self.coerce(obj)

    def format(self, a):
        parts = []
        for i, c in reversed(list(enumerate(self.to_vector(a)))):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) or "0"

    def __str__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


def ring_from_json(obj: dict) -> Ring:
    kind = obj.get("kind")
    if kind == "Z":
        return Integers()
    if kind == "Zm":
        return IntegersMod(int(obj["m"]))
    if kind == "GF":
        mod = obj.get("modulus")
        return GaloisField(int(obj["p"]), int(obj.get("k", 1)), tuple(mod) if mod is not None else None)
    raise DomainError(f"unknown ring kind {kind!r}")


def solve_scalar(ring: Ring, a: int, b: int) -> int:
    """Some ``c`` with ``a * c == b``; raises DomainError if none exists."""
    inv = ring.try_invert(a)
    if inv is not None:
        return ring.mul(inv, b)
    if isinstance(ring, Integers):
        if a != 0 and b % a == 0:
            return b // a
        if a == 0 and b == 0:
            return 0
        raise DomainError(f"{a} does not divide {b}")
    for c in ring.elements():
        if ring.mul(a, c) == b:
            return c
    raise DomainError(f"{ring.format(a)} does not divide {ring.format(b)} in {ring}")


@dataclass(frozen=True)
class RingElement:
    """A payload tagged with its ring."""

    ring: Ring
    value: int

    def _check(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            return RingElement(self.ring, self.ring.scalar(other))
        if other.ring != self.ring:
            raise RingMismatch()
        return other

    def __add__(self, other):
        return ring_add(self, self._check(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ring_add(self, ring_neg(self._check(other)))

    def __rsub__(self, other):
        return ring_add(self._check(other), ring_neg(self))

    def __mul__(self, other):
        return ring_mul(self, self._check(other))

    __rmul__ = __mul__

    def __neg__(self):
        return ring_neg(self)

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.value, e))

    def __bool__(self):
        return self.value != self.ring.zero

    def __repr__(self):
        return f"{self.ring.format(self.value)} in {self.ring}"


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch()
    return RingElement(a.ring, a.ring.add(a.value, b.value))


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise RingMismatch()
    return RingElement(a.ring, a.ring.mul(a.value, b.value))


def ring_neg(a: RingElement) -> RingElement:
    return RingElement(a.ring, a.ring.neg(a.value))


def try_invert(a: RingElement) -> RingElement | None:
    """Multiplicative inverse, or ``None`` if ``a`` is not a unit."""
    inv = a.ring.try_invert(a.value)
    return None if inv is None else RingElement(a.ring, inv)


def is_zero_divisor(a: RingElement) -> bool:
    return a.ring.is_zero_divisor(a.value)


def is_nilpotent(a: RingElement) -> bool:
    return a.ring.is_nilpotent(a.value)


def enumerate_elements(ring: Ring) -> list[RingElement]:
    return [RingElement(ring, v) for v in ring.elements()]


def iter_elements(ring: Ring) -> Iterator[int]:
    return iter(ring.elements())
