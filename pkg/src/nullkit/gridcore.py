"""d-grids ``X = X_1 x ... x X_n``, their normalizer ``N`` and Lagrange tables ``psi``.

For an axis ``X_j`` and ``x`` in it, ``N_j(x) = prod_{x' != x} (x - x')`` and
``psi^j_{delta, x}`` is the coefficient of ``X^delta`` in
``prod_{x' != x} (X - x')``.  Both are tensor products over the axes, so only
the per-axis tables are stored.
"""
from __future__ import annotations

import enum
import itertools
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterator, Sequence

from .errors import DomainError, SizeGuardError
from .multipoly import MultiPoly
from .ring import Integers, Ring, solve_scalar

DEFAULT_MAX_GRID_POINTS = 2**20

Point = tuple  # tuple of payloads


class GridClass(str, enum.Enum):
    DIVISION = "division"
    INTEGRAL_NOT_DIVISION = "integral_not_division"
    AFFINE_NOT_INTEGRAL = "affine_not_integral"
    NOT_AFFINE = "not_affine"

    @property
    def is_integral(self) -> bool:
        return self in (GridClass.DIVISION, GridClass.INTEGRAL_NOT_DIVISION)


class _Rationals:
    """Arithmetic adapter so the tensor routines can run over Q."""

    zero = Fraction(0)
    one = Fraction(1)
    add = staticmethod(operator.add)
    mul = staticmethod(operator.mul)


RATIONALS = _Rationals()


def univariate_from_roots(ring: Ring, roots: Sequence[int]) -> list[int]:
    """Ascending coefficients of ``prod (X - r)``."""
    coeffs = [ring.one]
    for r in roots:
        nr = ring.neg(r)
        new = [ring.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = ring.add(new[i + 1], c)
            new[i] = ring.add(new[i], ring.mul(c, nr))
        coeffs = new
    return coeffs


def mode_products(values: list, shape: Sequence[int], mats: Sequence, arith) -> list:
    """Apply ``mats[j]`` (rows x shape[j]) along axis ``j`` of a row-major tensor."""
    shape = list(shape)
    cur = values
    for j, mat in enumerate(mats):
        if mat is None:
            continue
        outer = math.prod(shape[:j])
        inner = math.prod(shape[j + 1 :])
        cols = shape[j]
        rows = len(mat)
        nxt = [arith.zero] * (outer * rows * inner)
        for o in range(outer):
            src = o * cols * inner
            dst = o * rows * inner
            for r, row in enumerate(mat):
                base = dst + r * inner
                for c, m in enumerate(row):
                    if m == arith.zero:
                        continue
                    s = src + c * inner
                    for i in range(inner):
                        v = cur[s + i]
                        if v != arith.zero:
                            nxt[base + i] = arith.add(nxt[base + i], arith.mul(m, v))
        cur = nxt
        shape[j] = rows
    return cur


class Grid:
    """A d-grid over a ring.  Immutable; per-axis constants are computed eagerly."""

    def __init__(self, ring: Ring, axes: Sequence[Sequence], max_points: int | None = DEFAULT_MAX_GRID_POINTS):
        clean = []
        for j, axis in enumerate(axes):
            vals = tuple(ring.coerce(v) if not isinstance(v, (list, tuple)) else ring.element_from_json(v) for v in axis)
            if not vals:
                raise DomainError(f"axis {j + 1} is empty")
            if len(set(vals)) != len(vals):
                raise DomainError(f"axis {j + 1} contains a duplicate element")
            clean.append(vals)
        size = math.prod(len(a) for a in clean)
        if max_points is not None and size > max_points:
            raise SizeGuardError(f"grid has {size} points, limit is {max_points}")
        self.ring = ring
        self.axes: tuple[tuple[int, ...], ...] = tuple(clean)
        self.n = len(clean)
        self.d: tuple[int, ...] = tuple(len(a) - 1 for a in clean)
        self.shape: tuple[int, ...] = tuple(len(a) for a in clean)
        self.size = size
        self._pos = [{v: i for i, v in enumerate(a)} for a in clean]
        self.N_axes: tuple[tuple[int, ...], ...] = tuple(
            tuple(ring.prod(ring.sub(x, y) for y in a if y != x) for x in a) for a in clean
        )
        # psi_axes[j][delta][i] = psi^j_{delta, axes[j][i]}
        self.psi_axes = tuple(self._axis_psi(a) for a in clean)

    def _axis_psi(self, axis: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        R = self.ring
        cols = [univariate_from_roots(R, [y for y in axis if y != x]) for x in axis]
        return tuple(tuple(col[delta] for col in cols) for delta in range(len(axis)))

    # -- points ----------------------------------------------------------
    def points(self) -> Iterator[Point]:
        return itertools.product(*self.axes)

    def index(self, point: Sequence[int]) -> int:
        if len(point) != self.n:
            raise DomainError("point dimension mismatch")
        idx = 0
        for j, v in enumerate(point):
            i = self._pos[j].get(v)
            if i is None:
                raise DomainError(f"point {tuple(point)} is not in the grid")
            idx = idx * self.shape[j] + i
        return idx

    def __contains__(self, point) -> bool:
        return len(point) == self.n and all(v in self._pos[j] for j, v in enumerate(point))

    @property
    def sigma_d(self) -> int:
        return sum(self.d)

    # -- constants -------------------------------------------------------
    def N(self, point: Sequence[int]) -> int:
        R = self.ring
        return R.prod(self.N_axes[j][self._pos[j][v]] for j, v in enumerate(point))

    @cached_property
    def N_values(self) -> list[int]:
        R = self.ring
        out = [R.one]
        for col in self.N_axes:
            out = [R.mul(a, b) for a in out for b in col]
        return out

    def psi(self, delta: Sequence[int], point: Sequence[int]) -> int:
        R = self.ring
        if any(not 0 <= e <= dj for e, dj in zip(delta, self.d)):
            return R.zero
        return R.prod(self.psi_axes[j][delta[j]][self._pos[j][v]] for j, v in enumerate(point))

    def lagrange_polynomial(self, point: Sequence[int]) -> MultiPoly:
        if point not in self:
            raise DomainError(f"point {tuple(point)} is not in the grid")
        R = self.ring
        per_axis = [
            [(k, self.psi_axes[j][k][self._pos[j][v]]) for k in range(self.d[j] + 1)]
            for j, v in enumerate(point)
        ]
        terms = {}
        for combo in itertools.product(*per_axis):
            c = R.prod(c for _, c in combo)
            if c != R.zero:
                terms[tuple(k for k, _ in combo)] = c
        return MultiPoly._raw(R, self.n, terms)

    @cached_property
    def pi_N(self) -> int:
        """Product of N(x) over all grid points."""
        R = self.ring
        total = R.one
        for j, col in enumerate(self.N_axes):
            reps = self.size // self.shape[j]
            total = R.mul(total, R.pow(R.prod(col), reps))
        return total

    @cached_property
    def grid_class(self) -> GridClass:
        R = self.ring
        diffs = [R.sub(x, y) for a in self.axes for x, y in itertools.combinations(a, 2)]
        if all(R.is_unit(t) for t in diffs):
            return GridClass.DIVISION
        if all(not R.is_zero_divisor(t) for t in diffs):
            return GridClass.INTEGRAL_NOT_DIVISION
        if isinstance(R, Integers) or not R.is_nilpotent(self.pi_N):
            return GridClass.AFFINE_NOT_INTEGRAL
        return GridClass.NOT_AFFINE

    @property
    def is_integral(self) -> bool:
        return self.grid_class.is_integral

    def require_integral(self):
        if not self.is_integral:
            raise DomainError(f"grid not integral ({self.grid_class.value})")

    # -- evaluation ------------------------------------------------------
    def values_of(self, P: MultiPoly) -> list[int]:
        """``P(x)`` for every grid point, in enumeration order."""
        if P.ring != self.ring or P.nvars != self.n:
            raise DomainError("polynomial does not match grid")
        R = self.ring
        items = P.items()
        if not items:
            return [R.zero] * self.size
        maxdeg = [max(e[j] for e, _ in items) for j in range(self.n)]
        powtab = [
            [[R.pow(v, k) for k in range(maxdeg[j] + 1)] for v in axis] for j, axis in enumerate(self.axes)
        ]
        out = []
        add, mul, zero = R.add, R.mul, R.zero
        for idx in itertools.product(*(range(s) for s in self.shape)):
            rows = [powtab[j][i] for j, i in enumerate(idx)]
            total = zero
            for exp, c in items:
                v = c
                for row, k in zip(rows, exp):
                    if k:
                        v = mul(v, row[k])
                total = add(total, v)
            out.append(total)
        return out

    def grid_map(self, P: MultiPoly) -> "GridMap":
        return GridMap(self, self.values_of(P))

    # -- inverse-N bookkeeping -------------------------------------------
    def inverse_N_weights(self):
        """``(arith, weights)`` with ``weights[i] = N(x_i)^{-1}``.

        Over Z the weights are Fractions and ``arith`` is rational arithmetic;
        over finite rings they are ring payloads.  Raises if some N(x) is not
        a unit in a finite ring.
        """
        R = self.ring
        if isinstance(R, Integers):
            return RATIONALS, [Fraction(1, v) for v in self.N_values]
        inv_axes = []
        for col in self.N_axes:
            row = [R.try_invert(v) for v in col]
            if any(v is None for v in row):
                raise DomainError("N(x) is not invertible on this grid")
            inv_axes.append(row)
        out = [R.one]
        for col in inv_axes:
            out = [R.mul(a, b) for a in out for b in col]
        return R, out

    def divide_by_N(self, values: Sequence[int]):
        """``(arith, N^{-1} values)``; rationals over Z, scan-solve for non-units."""
        R = self.ring
        if isinstance(R, Integers):
            return RATIONALS, [Fraction(v, nv) for v, nv in zip(values, self.N_values)]
        try:
            arith, w = self.inverse_N_weights()
            return arith, [R.mul(a, b) for a, b in zip(w, values)]
        except DomainError:
            return R, [solve_scalar(R, nv, v) for nv, v in zip(self.N_values, values)]

    def to_ring(self, value) -> int:
        """Bring a value produced under :meth:`inverse_N_weights` back into the ring."""
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise DomainError(f"result {value} is not integral")
            return int(value)
        return value

    def psi_matrices(self, arith=None):
        if arith is RATIONALS:
            return [[[Fraction(c) for c in row] for row in m] for m in self.psi_axes]
        return [[list(row) for row in m] for m in self.psi_axes]

    # -- I/O ----------------------------------------------------------------
    def to_json(self) -> dict:
        R = self.ring
        return {"ring": R.to_json(), "axes": [[R.element_to_json(v) for v in a] for a in self.axes]}

    @classmethod
    def from_json(cls, obj: dict, max_points: int | None = DEFAULT_MAX_GRID_POINTS) -> "Grid":
        from .ring import ring_from_json

        ring = ring_from_json(obj["ring"])
        axes = [[ring.element_from_json(v) for v in a] for a in obj["axes"]]
        return cls(ring, axes, max_points=max_points)

    def __eq__(self, other):
        return isinstance(other, Grid) and self.ring == other.ring and self.axes == other.axes

    def __hash__(self):
        return hash((self.ring, self.axes))

    def __repr__(self):
        R = self.ring
        axes = " x ".join("{" + ",".join(R.format(v) for v in a) + "}" for a in self.axes)
        return f"Grid({axes} over {R})"


class GridMap:
    """A total map ``X -> R`` stored in enumeration order."""

    __slots__ = ("grid", "values")

    def __init__(self, grid: Grid, values: Sequence[int]):
        if len(values) != grid.size:
            raise DomainError(f"grid map needs {grid.size} values, got {len(values)}")
        self.grid = grid
        self.values = [grid.ring.coerce(v) for v in values]

    @classmethod
    def from_function(cls, grid: Grid, f: Callable[[Point], int]) -> "GridMap":
        return cls(grid, [f(x) for x in grid.points()])

    @classmethod
    def from_dict(cls, grid: Grid, mapping: dict) -> "GridMap":
        vals = [grid.ring.zero] * grid.size
        seen = set()
        for pt, v in mapping.items():
            i = grid.index(tuple(pt))
            seen.add(i)
            vals[i] = grid.ring.coerce(v)
        if len(seen) != grid.size:
            raise DomainError("grid map is not total")
        return cls(grid, vals)

    @classmethod
    def indicator(cls, grid: Grid, point: Sequence[int]) -> "GridMap":
        vals = [grid.ring.zero] * grid.size
        vals[grid.index(point)] = grid.ring.one
        return cls(grid, vals)

    def __getitem__(self, point) -> int:
        return self.values[self.grid.index(point)]

    def items(self):
        return zip(self.grid.points(), self.values)

    def support(self) -> set:
        z = self.grid.ring.zero
        return {x for x, v in self.items() if v != z}

    def __eq__(self, other):
        return isinstance(other, GridMap) and self.grid == other.grid and self.values == other.values

    def to_json(self) -> list:
        R = self.grid.ring
        return [
            {"point": [R.element_to_json(c) for c in x], "value": R.element_to_json(v)} for x, v in self.items()
        ]

    @classmethod
    def from_json(cls, grid: Grid, obj: list) -> "GridMap":
        R = grid.ring
        mapping = {}
        for entry in obj:
            mapping[tuple(R.element_from_json(c) for c in entry["point"])] = R.element_from_json(entry["value"])
        return cls.from_dict(grid, mapping)


@dataclass(frozen=True)
class GridConstants:
    N: GridMap
    psi_axes: tuple

    def psi(self, delta: Sequence[int], point: Sequence[int]) -> int:
        return self.N.grid.psi(delta, point)

    def table(self) -> Iterator[tuple[tuple, Point, int]]:
        """All ``(delta, x, psi_{delta,x})`` with ``delta <= d``."""
        g = self.N.grid
        for delta in itertools.product(*(range(k + 1) for k in g.d)):
            for x in g.points():
                yield delta, x, g.psi(delta, x)


# Functional interface -----------------------------------------------------


def build_grid(ring: Ring, axes: Sequence[Sequence], max_points: int | None = DEFAULT_MAX_GRID_POINTS) -> Grid:
    return Grid(ring, axes, max_points=max_points)


def enumerate_points(grid: Grid) -> list[Point]:
    return list(grid.points())


def compute_N(grid: Grid) -> GridMap:
    return GridMap(grid, grid.N_values)


def compute_psi(grid: Grid) -> GridConstants:
    return GridConstants(compute_N(grid), grid.psi_axes)


def lagrange_polynomial(grid: Grid, point: Sequence[int]) -> MultiPoly:
    return grid.lagrange_polynomial(point)


def classify_grid(grid: Grid) -> GridClass:
    return grid.grid_class


class NFamily(str, enum.Enum):
    ROOTS_OF_UNITY = "roots_of_unity"  # X_j = E_{d+1}, integral domain
    FIELD_MINUS_ZERO = "field_minus_zero"  # X_j + {0} is a finite subfield
    ROOTS_WITH_ZERO = "roots_with_zero"  # X_j = E_d + {0}, integral domain
    FIELD = "field"  # X_j is a finite subfield
    INTEGER_RANGE = "integer_range"  # X_j = {0, ..., d} in Z
    SHIFT = "shift"  # X_j = base + alpha


def _is_subfield(ring: Ring, elems: Sequence[int]) -> bool:
    s = set(elems)
    if ring.zero not in s or ring.one not in s:
        return False
    for a in s:
        if ring.neg(a) not in s:
            return False
        if a != ring.zero:
            inv = ring.try_invert(a)
            if inv is None or inv not in s:
                return False
        for b in s:
            if ring.add(a, b) not in s or ring.mul(a, b) not in s:
                return False
    return True


def n_specialization(
    ring: Ring,
    axis: Sequence[int],
    family: NFamily | str,
    base: Sequence[int] | None = None,
    alpha: int | None = None,
) -> dict[int, int]:
    """Closed-form ``N_j`` on one axis for the special families.

    Returns ``{x: N_j(x)}``.  The axis is checked against the family first.
    For ``SHIFT`` pass the unshifted ``base`` axis and the shift ``alpha``;
    the values are read off the base axis.
    """
    family = NFamily(family)
    R = ring
    axis = [R.coerce(v) for v in axis]
    if len(set(axis)) != len(axis) or not axis:
        raise DomainError("axis must be non-empty and duplicate-free")
    d = len(axis) - 1

    def mismatch(why: str):
        return DomainError(f"axis does not match family {family.value}: {why}")

    if family is NFamily.ROOTS_OF_UNITY:
        if not R.is_integral_domain:
            raise mismatch("ring is not an integral domain")
        l = d + 1
        if any(R.pow(x, l) != R.one for x in axis):
            raise mismatch(f"not all elements are {l}-th roots of unity")
        # l distinct roots of X^l - 1 in a domain are all of E_l
        return {x: R.mul(R.scalar(d + 1), R.try_invert(x)) for x in axis}
    if family is NFamily.FIELD_MINUS_ZERO:
        if R.zero in axis or not _is_subfield(R, axis + [R.zero]):
            raise mismatch("axis plus 0 is not a subfield")
        return {x: R.neg(R.try_invert(x)) for x in axis}
    if family is NFamily.ROOTS_WITH_ZERO:
        if not R.is_integral_domain:
            raise mismatch("ring is not an integral domain")
        if R.zero not in axis:
            raise mismatch("0 missing")
        rest = [x for x in axis if x != R.zero]
        if any(R.pow(x, d) != R.one for x in rest):
            raise mismatch(f"nonzero elements are not {d}-th roots of unity")
        return {x: (R.neg(R.one) if x == R.zero else R.scalar(d)) for x in axis}
    if family is NFamily.FIELD:
        if not _is_subfield(R, axis):
            raise mismatch("axis is not a subfield")
        return {x: R.neg(R.one) for x in axis}
    if family is NFamily.INTEGER_RANGE:
        if not isinstance(R, Integers) or sorted(axis) != list(range(d + 1)):
            raise mismatch("axis is not {0, ..., d} in Z")
        return {x: (-1) ** (d + x) * (math.factorial(d) // math.comb(d, x)) for x in axis}
    # SHIFT
    if base is None or alpha is None:
        raise DomainError("shift family needs base axis and alpha")
    base = [R.coerce(v) for v in base]
    alpha = R.coerce(alpha)
    if sorted(R.add(b, alpha) for b in base) != sorted(axis):
        raise mismatch("axis is not base + alpha")
    base_grid = Grid(R, [base])
    return {R.add(b, alpha): base_grid.N_axes[0][i] for i, b in enumerate(base)}
