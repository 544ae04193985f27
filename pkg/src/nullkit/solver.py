"""Problems with explicit solution sets, impressions on grids and algebraic solutions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

from .errors import DomainError, TheoremViolated
from .gridcore import Grid
from .interpolate import psi_transform
from .multipoly import MultiPoly

SCAN_VALUES_LIMIT = 5


@dataclass(frozen=True)
class Problem:
    solutions: frozenset
    trivial: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "solutions", frozenset(self.solutions))
        object.__setattr__(self, "trivial", frozenset(self.trivial))
        if not self.trivial <= self.solutions:
            raise DomainError("trivial solutions must be solutions")


@dataclass(frozen=True)
class Impression:
    grid: Grid
    chi: Mapping[Hashable, tuple] = field(hash=False)

    def __post_init__(self):
        self.grid.require_integral()
        for s, x in self.chi.items():
            if tuple(x) not in self.grid:
                raise DomainError(f"chi({s!r}) = {x} is not a grid point")

    @property
    def ring(self):
        return self.grid.ring

    def image(self, tokens) -> set:
        try:
            return {tuple(self.chi[s]) for s in tokens}
        except KeyError as exc:
            raise DomainError(f"chi undefined on {exc.args[0]!r}") from None


@dataclass(frozen=True)
class AlgebraicSolutionCheck:
    describes: bool
    degree_ok: bool
    head_ok: bool

    @property
    def ok(self) -> bool:
        return self.describes and self.degree_ok and self.head_ok

    def to_json(self) -> dict:
        return {"describes": self.describes, "degreeOk": self.degree_ok, "headOk": self.head_ok}


def _support(grid: Grid, P: MultiPoly) -> set:
    z = grid.ring.zero
    return {x for x, v in zip(grid.points(), grid.values_of(P)) if v != z}


def is_describing(P: MultiPoly, prob: Problem, imp: Impression) -> bool:
    return imp.image(prob.solutions) == _support(imp.grid, P)


def _inverse_N_sum(grid: Grid, P: MultiPoly, points) -> object:
    """``sum_{x in points} N(x)^{-1} P(x)`` (rational over Z)."""
    arith, w = grid.inverse_N_weights()
    total = arith.zero
    for x in points:
        i = grid.index(x)
        v = P.evaluate(x)
        total = arith.add(total, arith.mul(w[i], v))
    return total


def check_algebraic_solution(P: MultiPoly, prob: Problem, imp: Impression) -> AlgebraicSolutionCheck:
    grid = imp.grid
    describes = is_describing(P, prob, imp)
    deg = P.total_degree()
    if not prob.trivial:
        degree_ok = deg <= grid.sigma_d
        head_ok = P.coefficient(grid.d) != grid.ring.zero
    else:
        degree_ok = deg < grid.sigma_d
        total = _inverse_N_sum(grid, P, sorted(imp.image(prob.trivial)))
        head_ok = total != 0
    return AlgebraicSolutionCheck(describes, degree_ok, head_ok)


def _candidate_values(grid: Grid) -> list[int]:
    R = grid.ring
    if R.size is None:
        vals = []
        for k in range(1, SCAN_VALUES_LIMIT + 1):
            vals += [k, -k]
        return vals
    return [v for v in R.elements() if v != R.zero]


def _choose_values(R, free_count: int, target_sum, candidates) -> list[int] | None:
    """Nonzero values ``v_1..v_free`` (all 1 except at most two) summing to ``target_sum``.

    ``target_sum is None`` means only nonzero sum is required.
    """
    one = R.one
    if free_count == 0:
        return [] if target_sum in (None, R.zero) else None
    base = [one] * free_count
    fixed = R.scalar(free_count - 2) if free_count >= 2 else R.zero
    if target_sum is None:
        s = R.scalar(free_count)
        if s != R.zero:
            return base
        fixed1 = R.scalar(free_count - 1)
        for v in candidates:
            if R.add(fixed1, v) != R.zero:
                return base[:-1] + [v]
        return None
    if R.scalar(free_count) == target_sum:
        return base
    if free_count == 1:
        return [target_sum] if target_sum != R.zero else None
    for v in candidates:
        last = R.sub(R.sub(target_sum, fixed), v)
        if last != R.zero:
            return base[:-2] + [v, last]
    return None


def construct_algebraic_solution(prob: Problem, imp: Impression) -> MultiPoly:
    """Interpolated algebraic solution ``P = sum_x y(x) L_{X,x}`` for a problem with a nontrivial solution.

    ``y`` is supported on ``chi(S)``; it is 1 almost everywhere, with at most
    two designated points per block adjusted so that the required sums work out.
    """
    grid = imp.grid
    R = grid.ring
    if prob.solutions == prob.trivial:
        raise DomainError("no algebraic solution under this impression: the problem has no nontrivial solution")
    img_s = imp.image(prob.solutions)
    img_t = imp.image(prob.trivial)
    rest = sorted(img_s - img_t)
    triv = sorted(img_t)
    if R.size == 2:
        parity_ok = (len(img_s) + 1) % 2 == len(img_t) % 2 == (1 if prob.trivial else 0)
        if not parity_ok:
            raise DomainError("no algebraic solution under this impression: parity condition fails over a 2-element ring")
    elif not rest:
        raise DomainError("no algebraic solution under this impression: chi(S) == chi(St)")
    cands = _candidate_values(grid)
    y = [R.zero] * grid.size
    if not prob.trivial:
        vals = _choose_values(R, len(rest), None, cands)
        if vals is None:
            raise DomainError("no algebraic solution under this impression")
        for x, v in zip(rest, vals):
            y[grid.index(x)] = v
    else:
        t_vals = _choose_values(R, len(triv), None, cands)
        if t_vals is None:
            raise DomainError("no algebraic solution under this impression")
        t_sum = R.sum(t_vals)
        r_vals = _choose_values(R, len(rest), R.neg(t_sum), cands)
        if r_vals is None:
            raise DomainError("no algebraic solution under this impression")
        for x, v in zip(triv, t_vals):
            y[grid.index(x)] = v
        for x, v in zip(rest, r_vals):
            y[grid.index(x)] = v
    P = psi_transform(grid, y)
    check = check_algebraic_solution(P, prob, imp)
    if not check.ok:
        raise TheoremViolated(f"constructed polynomial fails the check: {check}")
    return P


def problem_from_json(obj: dict, grid: Grid) -> tuple[Problem, Impression]:
    R = grid.ring
    prob = Problem(frozenset(obj["solutions"]), frozenset(obj.get("trivial", [])))
    chi = {s: tuple(R.element_from_json(c) for c in pt) for s, pt in obj["chi"].items()}
    return prob, Impression(grid, chi)
