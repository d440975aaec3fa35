"""Continued-fraction groupoid machinery on quadratic irrationals.

The derivative map x -> 1/(x - floor(x)) generates, for each point x, one
arrow gamma(x) from x' to x with matrix [[floor(x),1],[1,0]].  Words in
these arrows form a groupoid whose morphisms have a unique reduced shape:
descend i steps along the source orbit, then ascend j steps along the
target orbit.  ``normal_form`` recovers that shape for any unimodular
class, ``compose``/``invert`` work directly on reduced shapes, and
``free_extend`` maps a reduced word into any caller-supplied groupoid.

Orbits are eventually periodic because every point here has degree 2 over
the rationals; indexing past the recorded tail wraps around the cycle, so
loop powers are plain (i, j) pairs with large indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ComposeMismatch, DiscriminantMismatch, InternalLimit, InvalidArgument
from .exact import QuadIrr, qi_floor
from .lattice import Mat2, PMat, mobius_apply, pmat_canon

DEFAULT_CAP = 10**6


def generator_matrix(a: int) -> Mat2:
    """[[a,1],[1,0]], determinant -1."""
    return Mat2(a, 1, 1, 0)


def derivative(x: QuadIrr) -> tuple[int, QuadIrr]:
    """Partial quotient floor(x) and next complete quotient 1/(x - floor(x))."""
    a = qi_floor(x)
    frac = x - a
    return a, frac.inverse()


@dataclass(frozen=True)
class Orbit:
    """Derivative trace of a point: preperiod, cycle, quotients, and the
    cumulative matrices A_k with x = A_k * x_k (A_0 = I)."""

    point: QuadIrr
    preperiod: tuple[QuadIrr, ...]
    cycle: tuple[QuadIrr, ...]
    quotients: tuple[int, ...]
    cum: tuple[Mat2, ...]

    @property
    def pre_len(self) -> int:
        return len(self.preperiod)

    @property
    def cycle_len(self) -> int:
        return len(self.cycle)

    @property
    def length(self) -> int:
        return len(self.preperiod) + len(self.cycle)

    def point_at(self, k: int) -> QuadIrr:
        """Complete quotient x_k; indices past the tail wrap around the cycle."""
        n = self.pre_len
        if k < n:
            return self.preperiod[k]
        return self.cycle[(k - n) % self.cycle_len]

    def quotient_at(self, k: int) -> int:
        n = self.pre_len
        if k < n:
            return self.quotients[k]
        return self.quotients[n + (k - n) % self.cycle_len]


@lru_cache(maxsize=None)
def _orbit_cached(x: QuadIrr, cap: int) -> Orbit:
    pts: list[QuadIrr] = []
    quots: list[int] = []
    cum: list[Mat2] = [Mat2.identity()]
    seen: dict[QuadIrr, int] = {}
    cur = x
    while cur not in seen:
        if len(pts) >= cap:
            raise InternalLimit(f"orbit of {cur} exceeded {cap} steps")
        seen[cur] = len(pts)
        pts.append(cur)
        a, cur_next = derivative(cur)
        quots.append(a)
        cum.append(cum[-1] * generator_matrix(a))
        cur = cur_next
    k = seen[cur]
    return Orbit(
        point=x,
        preperiod=tuple(pts[:k]),
        cycle=tuple(pts[k:]),
        quotients=tuple(quots),
        cum=tuple(cum[: len(pts)]),
    )


def orbit(x: QuadIrr, cap: int | None = None) -> Orbit:
    """Iterate the derivative until a complete quotient repeats."""
    return _orbit_cached(x, DEFAULT_CAP if cap is None else cap)


def _cum_extend(orb: Orbit, mats: list[Mat2], upto: int) -> None:
    """Grow a cumulative-matrix list (seeded from orb.cum) through index upto."""
    while len(mats) <= upto:
        k = len(mats) - 1
        mats.append(mats[k] * generator_matrix(orb.quotient_at(k)))


def _cum_at(orb: Orbit, k: int) -> Mat2:
    if k < len(orb.cum):
        return orb.cum[k]
    mats = list(orb.cum)
    _cum_extend(orb, mats, k)
    return mats[k]


@dataclass(frozen=True)
class Morphism:
    """Reduced word from source to target: i descent steps on the source
    orbit, j ascent steps on the target orbit, matrix = B_j * A_i^(-1)."""

    source: QuadIrr
    target: QuadIrr
    i: int
    j: int
    mat: PMat
    src_orbit: Orbit = field(compare=False, repr=False)
    tgt_orbit: Orbit = field(compare=False, repr=False)

    def __post_init__(self):
        assert self.i >= 0 and self.j >= 0
        assert self.src_orbit.point == self.source
        assert self.tgt_orbit.point == self.target
        assert self.src_orbit.point_at(self.i) == self.tgt_orbit.point_at(self.j)
        if self.i > 0 and self.j > 0:
            assert self.src_orbit.point_at(self.i - 1) != self.tgt_orbit.point_at(self.j - 1)
        if self.i == 0 and self.j == 0:
            assert self.mat == PMat.identity() and self.source == self.target
        assert self.mat.det == (-1) ** (self.i + self.j)
        assert mobius_apply(self.mat, self.source) == self.target

    @property
    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0

    def __str__(self):
        return f"{self.source} --({self.i},{self.j})--> {self.target}"


def _reduced(src_orb: Orbit, tgt_orb: Orbit, i: int, j: int, mat: PMat | None = None) -> Morphism:
    """Cancel the common tail, then build the morphism (matrix from the
    orbits unless one is supplied)."""
    while i > 0 and j > 0 and src_orb.point_at(i - 1) == tgt_orb.point_at(j - 1):
        i -= 1
        j -= 1
    if mat is None:
        mat = PMat(_cum_at(tgt_orb, j) * _cum_at(src_orb, i).inv())
    return Morphism(src_orb.point, tgt_orb.point, i, j, mat, src_orb, tgt_orb)


def identity_morphism(x: QuadIrr, cap: int | None = None) -> Morphism:
    orb = orbit(x, cap)
    return Morphism(x, x, 0, 0, PMat.identity(), orb, orb)


def hom_base(x: QuadIrr, y: QuadIrr, cap: int | None = None) -> Morphism | None:
    """Some morphism from x to y, or None when their cycles are disjoint.

    Meets the two orbits at the first complete quotient of x that also
    occurs on the orbit of y, then reduces.
    """
    if x.delta != y.delta:
        raise DiscriminantMismatch(f"delta {x.delta} vs {y.delta}")
    ox, oy = orbit(x, cap), orbit(y, cap)
    where = {pt: idx for idx, pt in enumerate(oy.preperiod + oy.cycle)}
    for i in range(ox.length):
        j = where.get(ox.point_at(i))
        if j is not None:
            return _reduced(ox, oy, i, j)
    return None


def hom_in_H(x: QuadIrr, y: QuadIrr, cap: int | None = None) -> Morphism | None:
    """A determinant +1 morphism from x to y, if one exists.

    When the base morphism has determinant -1, one extra turn around the
    shared cycle fixes the sign iff the cycle length is odd.
    """
    base = hom_base(x, y, cap)
    if base is None:
        return None
    if base.mat.det == 1:
        return base
    cyc = base.src_orbit.cycle_len
    assert cyc == base.tgt_orbit.cycle_len
    if cyc % 2 == 0:
        return None
    return compose(base, cycle_loop(x, 1, cap))


def cycle_loop(x: QuadIrr, winding: int = 1, cap: int | None = None) -> Morphism:
    """Loop at x that descends to the cycle, winds around it, and returns."""
    if winding < 1:
        raise InvalidArgument("winding must be >= 1")
    orb = orbit(x, cap)
    i = orb.pre_len
    return _reduced(orb, orb, i, i + winding * orb.cycle_len)


def normal_form(g: Mat2 | PMat, x: QuadIrr, cap: int | None = None) -> Morphism:
    """The unique reduced morphism from x with matrix class g.

    Scans index pairs (i, j) in increasing i+j over the (unrolled) orbits
    of x and y = g*x, keeping pairs whose complete quotients meet, whose
    previous quotients differ, and whose orbit matrix equals g.  The scan
    window starts at the combined orbit lengths and doubles until found;
    termination is guaranteed, so the cap only traps bugs.
    """
    g = pmat_canon(g)
    limit = DEFAULT_CAP if cap is None else cap
    y = mobius_apply(g, x)
    ox, oy = orbit(x, cap), orbit(y, cap)
    acum: list[Mat2] = list(ox.cum)
    bcum: list[Mat2] = list(oy.cum)
    ainv: list[Mat2] = []
    window = ox.length + oy.length
    s = 0
    while True:
        if window > limit:
            raise InternalLimit(f"normal form of {g} at {x} not found within window {limit}")
        _cum_extend(ox, acum, window)
        _cum_extend(oy, bcum, window)
        while len(ainv) < len(acum):
            ainv.append(acum[len(ainv)].inv())
        while s <= window:
            for j in range(s + 1):
                i = s - j
                if ox.point_at(i) != oy.point_at(j):
                    continue
                if i > 0 and j > 0 and ox.point_at(i - 1) == oy.point_at(j - 1):
                    continue
                if PMat(bcum[j] * ainv[i]) == g:
                    return Morphism(x, y, i, j, g, ox, oy)
            s += 1
        window *= 2


def normal_form_candidates(g: Mat2 | PMat, x: QuadIrr, max_sum: int) -> list[tuple[int, int]]:
    """All (i, j) with i+j <= max_sum passing the three normal-form tests.

    Diagnostic used to confirm uniqueness of the reduced shape.
    """
    g = pmat_canon(g)
    y = mobius_apply(g, x)
    ox, oy = orbit(x), orbit(y)
    acum: list[Mat2] = list(ox.cum)
    bcum: list[Mat2] = list(oy.cum)
    _cum_extend(ox, acum, max_sum)
    _cum_extend(oy, bcum, max_sum)
    ainv = [m.inv() for m in acum]
    out = []
    for s in range(max_sum + 1):
        for j in range(s + 1):
            i = s - j
            if ox.point_at(i) != oy.point_at(j):
                continue
            if i > 0 and j > 0 and ox.point_at(i - 1) == oy.point_at(j - 1):
                continue
            if PMat(bcum[j] * ainv[i]) == g:
                out.append((i, j))
    return out


def morphism_matrix(m: Morphism) -> PMat:
    """Evaluate the reduced word from its orbits; equals m.mat."""
    out = Mat2.identity()
    for k in range(m.j):
        out = out * generator_matrix(m.tgt_orbit.quotient_at(k))
    for k in reversed(range(m.i)):
        out = out * generator_matrix(m.src_orbit.quotient_at(k)).inv()
    return PMat(out)


def compose(m2: Morphism, m1: Morphism) -> Morphism:
    """Reduced form of m2 after m1 (endpoints must chain)."""
    if m1.target != m2.source:
        raise ComposeMismatch(f"cannot compose: {m1.target} != {m2.source}")
    i = m1.i + max(0, m2.i - m1.j)
    j = m2.j + max(0, m1.j - m2.i)
    return _reduced(m1.src_orbit, m2.tgt_orbit, i, j, m2.mat * m1.mat)


def invert(m: Morphism) -> Morphism:
    """Swap endpoints and descent/ascent counts; matrix inverts."""
    return Morphism(m.target, m.source, m.j, m.i, m.mat.inv(), m.tgt_orbit, m.src_orbit)


def free_extend(target, m: Morphism):
    """Push a reduced word through an arrow evaluator into another groupoid.

    ``target`` must provide identity(object), compose(g2, g1), invert(g),
    and arrow(vertex) giving the image of the arrow into that vertex.
    """
    acc = target.identity(m.source)
    for k in range(m.i):
        acc = target.compose(target.invert(target.arrow(m.src_orbit.point_at(k))), acc)
    for k in reversed(range(m.j)):
        acc = target.compose(target.arrow(m.tgt_orbit.point_at(k)), acc)
    return acc


class AdditiveIntegers:
    """Target groupoid: one object, integers under addition, arrow -> 1."""

    def identity(self, obj):
        return 0

    def compose(self, g2, g1):
        return g2 + g1

    def invert(self, g):
        return -g

    def arrow(self, vertex):
        return 1


class ProjectiveMatrices:
    """Target groupoid: arrow -> the sign class of its generator matrix."""

    def identity(self, obj):
        return PMat.identity()

    def compose(self, g2, g1):
        return g2 * g1

    def invert(self, g):
        return g.inv()

    def arrow(self, vertex):
        return PMat(generator_matrix(qi_floor(vertex)))
