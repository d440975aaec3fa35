"""Binary quadratic forms [a,b,c] meaning a*X^2 + 2b*X*Y + c*Y^2.

The middle coefficient is stored halved (even-middle convention), so the
discriminant is b^2 - a*c, here always positive and nonsquare.  Forms carry
a right substitution action of GL(2,Z); each form corresponds to the
quadratic irrational (-b - sqrt(disc))/a, and a substitution h acts on
roots as the inverse Mobius map.  That correspondence turns SL-equivalence
of forms into existence of a determinant +1 morphism between root orbits,
and form stabilizers into cycle loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DiscriminantMismatch, InvalidDiscriminant, NotAFormRoot
from .exact import QuadIrr, check_discriminant, is_square
from .groupoid import cycle_loop, hom_in_H
from .lattice import Mat2, PMat


@dataclass(frozen=True)
class Form:
    """Indefinite integral form [a, b, c] with nonsquare b^2 - a*c > 0."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        d = self.b * self.b - self.a * self.c
        if d <= 0 or is_square(d):
            raise InvalidDiscriminant(
                f"form [{self.a},{self.b},{self.c}] has discriminant {d}; "
                "need positive nonsquare"
            )

    @property
    def disc(self) -> int:
        return self.b * self.b - self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + 2 * self.b * x * y + self.c * y * y

    def __str__(self):
        return f"[{self.a},{self.b},{self.c}]"


def disc(f: Form) -> int:
    return f.disc


def act(f: Form, h: Mat2 | PMat) -> Form:
    """Right substitution action X -> p*X'+q*Y', Y -> r*X'+s*Y'."""
    m = h.rep if isinstance(h, PMat) else h
    a2 = f(m.p, m.r)
    b2 = f.a * m.p * m.q + f.b * (m.p * m.s + m.q * m.r) + f.c * m.r * m.s
    c2 = f(m.q, m.s)
    return Form(a2, b2, c2)


def root(f: Form) -> QuadIrr:
    """The quadratic irrational (-b - sqrt(disc)) / a."""
    return QuadIrr(f.disc, Fraction(-f.b, f.a), Fraction(-1, f.a))


def form_from_root(x: QuadIrr) -> Form:
    """The unique form whose root is x; inverse of ``root``."""
    a = -1 / x.v
    if a.denominator != 1:
        raise NotAFormRoot(f"{x}: leading coefficient {a} is not an integer")
    b = -x.u * a
    if b.denominator != 1:
        raise NotAFormRoot(f"{x}: middle coefficient {b} is not an integer")
    c = Fraction(int(b) * int(b) - x.delta, int(a))
    if c.denominator != 1:
        raise NotAFormRoot(f"{x}: trailing coefficient {c} is not an integer")
    f = Form(int(a), int(b), int(c))
    assert root(f) == x
    return f


def equivalent_sl(f1: Form, f2: Form, cap: int | None = None) -> Mat2 | None:
    """Some h in SL(2,Z) with act(f1, h) = f2, or None.

    A determinant +1 morphism g between the roots gives h = g^(-1); either
    sign lift works because the action ignores sign.
    """
    if f1.disc != f2.disc:
        raise DiscriminantMismatch(f"disc {f1.disc} vs {f2.disc}")
    g = hom_in_H(root(f1), root(f2), cap)
    if g is None:
        return None
    h = g.mat.rep.inv()
    assert act(f1, h) == f2
    return h


def stabilizer_generator(f: Form, cap: int | None = None) -> Mat2:
    """A non-trivial substitution fixing f whose sign class generates the
    full determinant +1 stabilizer.

    The loop around the cycle at the root (doubled when the cycle length is
    odd, to land back on determinant +1), transported along the preperiod.
    """
    x = root(f)
    loop = cycle_loop(x, 1, cap)
    if loop.mat.det != 1:
        loop = cycle_loop(x, 2, cap)
    h = loop.mat.rep
    assert act(f, h) == f
    assert h != Mat2.identity() and h != -Mat2.identity()
    return h


def pell_fundamental(delta: int, cap: int | None = None) -> tuple[int, int]:
    """Minimal t, u >= 1 with t^2 - delta*u^2 = 1, read off the stabilizer
    generator of [1, 0, -delta]."""
    check_discriminant(delta)
    h = stabilizer_generator(Form(1, 0, -delta), cap)
    t = abs(h.trace) // 2
    u = abs(h.r)
    assert t * t - delta * u * u == 1
    return t, u
