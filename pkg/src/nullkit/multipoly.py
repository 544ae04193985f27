"""Sparse multivariate polynomials over a :class:`~nullkit.ring.Ring`.

A polynomial is a map from exponent tuples to nonzero coefficient payloads.
Iteration, printing and JSON output follow ascending lexicographic order of
the exponent tuples, so output is reproducible.
"""
from __future__ import annotations

import math
import re
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, RingMismatch
from .ring import Integers, Ring, RingElement, ring_from_json

MINUS_INFINITY = float("-inf")
"""Degree of the zero polynomial."""

MultiIndex = tuple  # tuple[int, ...]


def _unwrap(ring: Ring, c) -> int:
    if isinstance(c, RingElement):
        if c.ring != ring:
            raise RingMismatch()
        return c.value
    return ring.coerce(c)


class MultiPoly:
    __slots__ = ("ring", "nvars", "_terms", "_hash")

    def __init__(self, ring: Ring, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 0:
            raise DomainError("nvars must be non-negative")
        clean: dict[tuple[int, ...], int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise DomainError(f"bad exponent {exp} for {nvars} variables")
            v = ring.add(clean.get(exp, ring.zero), _unwrap(ring, c))
            if v == ring.zero:
                clean.pop(exp, None)
            else:
                clean[exp] = v
        self.ring = ring
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, nvars: int, terms: dict) -> "MultiPoly":
        # trusted constructor: keys valid, values canonical and nonzero
        self = object.__new__(cls)
        self.ring, self.nvars, self._terms, self._hash = ring, nvars, terms, None
        return self

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring, nvars: int) -> "MultiPoly":
        return cls._raw(ring, nvars, {})

    @classmethod
    def constant(cls, ring: Ring, nvars: int, c) -> "MultiPoly":
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ring: Ring, nvars: int) -> "MultiPoly":
        return cls.constant(ring, nvars, ring.one)

    @classmethod
    def variable(cls, ring: Ring, nvars: int, j: int) -> "MultiPoly":
        """The variable ``X_{j+1}`` (``j`` is 0-based)."""
        if not 0 <= j < nvars:
            raise DomainError(f"variable index {j} out of range")
        exp = [0] * nvars
        exp[j] = 1
        return cls._raw(ring, nvars, {tuple(exp): ring.one})

    @classmethod
    def monomial(cls, ring: Ring, exp: Sequence[int], c=None) -> "MultiPoly":
        return cls(ring, len(exp), {tuple(exp): ring.one if c is None else c})

    @classmethod
    def linear(cls, ring: Ring, coeffs: Sequence[int], const: int = 0) -> "MultiPoly":
        """``sum_j coeffs[j] X_j + const`` from payloads."""
        n = len(coeffs)
        terms: dict = {}
        for j, a in enumerate(coeffs):
            e = [0] * n
            e[j] = 1
            terms[tuple(e)] = a
        terms[(0,) * n] = const
        return cls(ring, n, terms)

    # -- access ----------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        """Copy of the term map, sorted lexicographically by exponent."""
        return {e: self._terms[e] for e in sorted(self._terms)}

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, delta: Sequence[int]) -> int:
        return self._terms.get(tuple(delta), self.ring.zero)

    def total_degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self._terms)

    def partial_degree(self, j: int):
        """Degree in ``X_{j+1}`` (``j`` is 0-based)."""
        if not self._terms:
            return MINUS_INFINITY
        return max(e[j] for e in self._terms)

    def partial_degrees(self) -> tuple:
        return tuple(self.partial_degree(j) for j in range(self.nvars))

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch()
        if other.nvars != self.nvars:
            raise DomainError("variable count mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        R = self.ring
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = R.add(out.get(e, R.zero), c)
            if v == R.zero:
                out.pop(e, None)
            else:
                out[e] = v
        return MultiPoly._raw(R, self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        R = self.ring
        return MultiPoly._raw(R, self.nvars, {e: R.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(_unwrap(self.ring, other))
        self._check(other)
        R = self.ring
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = R.add(out.get(e, R.zero), R.mul(c1, c2))
        return MultiPoly._raw(R, self.nvars, {e: c for e, c in out.items() if c != R.zero})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise DomainError("negative power")
        result = MultiPoly.one(self.ring, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        R = self.ring
        c = _unwrap(R, c)
        out = {}
        for e, v in self._terms.items():
            w = R.mul(c, v)
            if w != R.zero:
                out[e] = w
        return MultiPoly._raw(R, self.nvars, out)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.nvars, tuple(sorted(self._terms.items()))))
        return self._hash

    # -- evaluation and substitution -------------------------------------
    def evaluate(self, point: Sequence) -> int:
        if len(point) != self.nvars:
            raise DomainError(f"point has {len(point)} coordinates, expected {self.nvars}")
        R = self.ring
        pt = [_unwrap(R, x) for x in point]
        powers: list[dict[int, int]] = [{} for _ in pt]
        total = R.zero
        for exp, c in self._terms.items():
            v = c
            for j, k in enumerate(exp):
                if k:
                    pk = powers[j].get(k)
                    if pk is None:
                        pk = powers[j][k] = R.pow(pt[j], k)
                    v = R.mul(v, pk)
            total = R.add(total, v)
        return total

    __call__ = evaluate

    def substitute_shift(self, j: int, c) -> "MultiPoly":
        """Substitute ``X_{j+1} := X_{j+1} + c``."""
        R = self.ring
        c = _unwrap(R, c)
        if not 0 <= j < self.nvars:
            raise DomainError(f"variable index {j} out of range")
        out: dict = {}
        for exp, a in self._terms.items():
            k = exp[j]
            for i in range(k + 1):
                coef = R.mul(a, R.mul(R.scalar(math.comb(k, i)), R.pow(c, k - i)))
                if coef == R.zero:
                    continue
                e = exp[:j] + (i,) + exp[j + 1 :]
                out[e] = R.add(out.get(e, R.zero), coef)
        return MultiPoly._raw(R, self.nvars, {e: v for e, v in out.items() if v != R.zero})

    def map_coefficients(self, ring: Ring, f) -> "MultiPoly":
        """Apply ``f`` to each coefficient, landing in ``ring``."""
        return MultiPoly(ring, self.nvars, {e: f(c) for e, c in self._terms.items()})

    # -- I/O --------------------------------------------------------------
    def to_json(self) -> dict:
        R = self.ring
        return {
            "nvars": self.nvars,
            "ring": R.to_json(),
            "terms": [{"exp": list(e), "coef": R.element_to_json(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: dict, ring: Ring | None = None) -> "MultiPoly":
        if ring is None:
            ring = ring_from_json(obj["ring"])
        n = int(obj["nvars"])
        terms: dict = {}
        for t in obj.get("terms", []):
            exp = tuple(t["exp"])
            c = ring.element_from_json(t["coef"])
            terms[exp] = ring.add(terms.get(exp, ring.zero), c)
        return cls(ring, n, terms)

    def __str__(self):
        if not self._terms:
            return "0"
        R = self.ring
        parts = []
        for exp, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                f"X{j + 1}" if k == 1 else f"X{j + 1}^{k}" for j, k in enumerate(exp) if k
            )
            cs = R.format(c)
            if not mono:
                parts.append(cs)
            elif c == R.one:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self}, {self.ring}, nvars={self.nvars})"


# Spec-style functional aliases ------------------------------------------


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_neg(p: MultiPoly) -> MultiPoly:
    return -p


def poly_scale(p: MultiPoly, c) -> MultiPoly:
    return p.scale(c)


def evaluate(p: MultiPoly, point: Sequence) -> int:
    return p.evaluate(point)


def coefficient(p: MultiPoly, delta: Sequence[int]) -> int:
    return p.coefficient(delta)


def total_degree(p: MultiPoly):
    return p.total_degree()


def partial_degree(p: MultiPoly, j: int):
    return p.partial_degree(j)


def substitute_shift(p: MultiPoly, j: int, c) -> MultiPoly:
    return p.substitute_shift(j, c)


def product(polys: Iterable[MultiPoly], ring: Ring, nvars: int) -> MultiPoly:
    result = MultiPoly.one(ring, nvars)
    for q in polys:
        result = result * q
    return result


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(X(?:\^(\d+))?)?")


def parse_univariate(text: str, ring: Ring) -> MultiPoly:
    """Parse a single-variable expression such as ``"X^3-2X^2-X+2"``.

    Integer coefficients are mapped through ``ring.scalar``.
    """
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty polynomial")
    terms: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or (pos and not m.group(1)):
            raise DomainError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, digits, var, power = m.groups()
        if not digits and not var:
            raise DomainError(f"cannot parse polynomial {text!r} at position {pos}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = (int(power) if power else 1) if var else 0
        terms[(k,)] = ring.add(terms.get((k,), ring.zero), ring.scalar(c))
        pos = m.end()
    return MultiPoly(ring, 1, terms)


def integers_poly(terms: Mapping[Sequence[int], int], nvars: int) -> MultiPoly:
    return MultiPoly(Integers(), nvars, terms)
