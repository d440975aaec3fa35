"""Proper representations of m by an indefinite form.

Each residue n with n^2 = disc (mod |m|) attaches the form
[m, n, (n^2-disc)/m]; a substitution carrying f onto the attached form
yields one class of solutions, the orbit of its first column under a
transported stabilizer generator.  The classes partition all proper
representations, so bounded enumeration of each class recovers exactly
the solutions in a box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgument, InternalLimit, NotDivisible, ZeroTarget
from .forms import Form, act, stabilizer_generator
from .forms import equivalent_sl as _equivalent_sl
from .lattice import Mat2

_ENUM_CAP = 10**6


def residue_classes(delta: int, m: int) -> list[int]:
    """All n in [0, |m|) with n^2 = delta (mod |m|), by exhaustive scan."""
    if m == 0:
        raise ZeroTarget("m = 0 has no residue classes")
    mm = abs(m)
    return [n for n in range(mm) if (n * n - delta) % mm == 0]


def attach_form(n: int, m: int, delta: int) -> Form:
    """The form [m, n, (n^2 - delta)/m] of discriminant delta."""
    if m == 0:
        raise ZeroTarget("m = 0 attaches no form")
    if (n * n - delta) % m != 0:
        raise NotDivisible(f"{m} does not divide {n}^2 - {delta}")
    return Form(m, n, (n * n - delta) // m)


@dataclass(frozen=True)
class RepClass:
    """One class of proper representations: base solution plus the
    transported stabilizer generator whose orbit fills the class."""

    n: int
    attached: Form
    base_matrix: Mat2
    base_solution: tuple[int, int]
    automorph: Mat2


@dataclass(frozen=True)
class SolveReport:
    form: Form
    m: int
    delta: int
    classes: tuple[RepClass, ...]


def solve_proper(f: Form, m: int, cap: int | None = None) -> SolveReport:
    """Find every class of proper representations of m by f."""
    if m == 0:
        raise ZeroTarget("m = 0 is out of scope")
    delta = f.disc
    classes = []
    for n in residue_classes(delta, m):
        fn = attach_form(n, m, delta)
        h0 = _equivalent_sl(f, fn, cap)
        if h0 is None:
            continue
        a = stabilizer_generator(fn, cap)
        b = h0 * a * h0.inv()
        sol = h0.first_column()
        assert f(*sol) == m and math.gcd(*sol) == 1
        assert act(f, b) == f
        classes.append(RepClass(n, fn, h0, sol, b))
    return SolveReport(form=f, m=m, delta=delta, classes=tuple(classes))


def _walk(start: tuple[int, int], step: Mat2, bound: int, out: set) -> None:
    """Collect +-step^k(start), k >= 0, inside the max-norm box.

    The step matrix is hyperbolic (|trace| >= 3), so along the walk each
    coordinate is c1*L^k + c2*L^(-k) with real L > 1: its absolute value
    dips at most once and then grows forever.  Once both coordinates have
    stopped shrinking and the point left the box, nothing later re-enters.
    """
    prev = None
    cur = start
    for _ in range(_ENUM_CAP):
        inside = max(abs(cur[0]), abs(cur[1])) <= bound
        if inside:
            out.add(cur)
            out.add((-cur[0], -cur[1]))
        if prev is not None and not inside:
            if abs(cur[0]) >= abs(prev[0]) and abs(cur[1]) >= abs(prev[1]):
                return
        prev = cur
        cur = step.apply(*cur)
    raise InternalLimit("solution walk failed to leave the box")


def enumerate_solutions(cls: RepClass, bound: int) -> list[tuple[int, int]]:
    """All solutions +-B^k * base with max(|x|, |y|) <= bound, sorted by
    (|x|, x, y)."""
    if bound < 1:
        raise InvalidArgument(f"bound must be >= 1, got {bound}")
    b = cls.automorph
    if b.trace < 0:
        b = -b  # same +- orbit, positive trace keeps growth monotone
    found: set[tuple[int, int]] = set()
    _walk(cls.base_solution, b, bound, found)
    _walk(b.inv().apply(*cls.base_solution), b.inv(), bound, found)
    return sorted(found, key=lambda p: (abs(p[0]), p[0], p[1]))


def verify_representation(f: Form, m: int, x: int, y: int) -> tuple[bool, bool]:
    """(is a representation, is a proper representation)."""
    is_rep = f(x, y) == m
    return is_rep, is_rep and math.gcd(abs(x), abs(y)) == 1


def proper_residue(f: Form, m: int, x: int, y: int) -> int:
    """Residue class of a proper representation: extend (x, y) to a
    determinant 1 matrix and read the middle coefficient mod |m|."""
    is_rep, is_proper = verify_representation(f, m, x, y)
    if not is_proper:
        raise InvalidArgument(f"({x}, {y}) is not a proper representation of {m}")
    g, s, t = _egcd(x, y)
    assert g == 1
    h = Mat2(x, -t, y, s)
    assert h.det == 1
    return act(f, h).b % abs(m)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with a*s + b*t = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
