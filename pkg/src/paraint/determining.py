"""Determining equations and compatibility conditions for third-order
integral candidates of parabolic-separable Hamiltonians.

Everything here evaluates *residuals*: the left-minus-right side of each
condition, exactly.  A candidate (potential, constants, G functions) defines
a bona fide integral precisely when every residual is structurally zero.

The module covers the parabolic system itself (four determining equations and
the linear compatibility condition on the potential), the nonlinear
compatibility conditions obtained by eliminating the G functions, and the
Cartesian and polar coordinate gates used by the classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebra import (
    AlgebraError,
    Polynomial,
    RationalFunction,
    gen,
    one,
    zero,
)
from .extension import TowerElement, as_tower
from .phase import IntegralSpec

__all__ = [
    "ExcludedBranch",
    "FQuad",
    "Residuals",
    "f_quad",
    "h_terms",
    "phi",
    "residuals",
    "linear_cc",
    "nonlinear_data",
    "nonlinear_residuals",
    "cartesian_f",
    "cartesian_cc",
    "cartesian_odes",
    "polar_f",
    "polar_cc",
    "mirror_map",
    "A_NAMES",
]

XI = gen("xi")
ETA = gen("eta")
HBAR = gen("hbar")
R2 = XI**2 + ETA**2

A_NAMES = ("A300", "A210", "A201", "A120", "A111", "A102", "A030", "A021", "A012", "A003")
A_INDEX = {
    (3, 0, 0): "A300",
    (2, 1, 0): "A210",
    (2, 0, 1): "A201",
    (1, 2, 0): "A120",
    (1, 1, 1): "A111",
    (1, 0, 2): "A102",
    (0, 3, 0): "A030",
    (0, 2, 1): "A021",
    (0, 1, 2): "A012",
    (0, 0, 3): "A003",
}


class ExcludedBranch(AlgebraError):
    """Raised when a precondition of the nonlinear elimination fails
    (V_eta or h5 vanishes identically)."""


def _a_values(A) -> dict:
    """Normalize constants to a name -> RationalFunction map.

    Accepts a mapping keyed by (j,k,l) tuples or by names, or an
    IntegralSpec.  Missing constants are zero; by default each constant is
    its own symbolic generator.
    """
    if isinstance(A, IntegralSpec):
        A = A.A
    out = {name: zero for name in A_NAMES}
    for key, val in (A or {}).items():
        name = A_INDEX[key] if isinstance(key, tuple) else key
        v = val if isinstance(val, RationalFunction) else RationalFunction.constant(val)
        out[name] = v
    return out


def symbolic_A() -> dict:
    return {name: gen(name) for name in A_NAMES}


@dataclass(frozen=True)
class FQuad:
    """The four structure polynomials of the momentum-cubed part."""

    F1: RationalFunction
    F2: RationalFunction
    F3: RationalFunction
    F4: RationalFunction

    def as_tuple(self):
        return (self.F1, self.F2, self.F3, self.F4)


def f_quad(A=None) -> FQuad:
    """Structure polynomials, linear in the ten constants."""
    a = _a_values(A) if A is not None else symbolic_A()
    xi, eta = XI, ETA
    r2 = R2
    F1 = (
        eta**3 * a["A003"]
        + xi * eta**2 * a["A012"]
        + xi**3 * a["A030"]
        - eta**3 * r2 * a["A102"] / 2
        - xi * eta**2 * r2 * a["A111"] / 2
        - eta * xi**2 * r2 * a["A120"] / 2
        + eta**3 * r2**2 * a["A201"] / 4
        + xi * eta**2 * r2**2 * a["A210"] / 4
        - eta**3 * r2**3 * a["A300"] / 8
        + xi**2 * eta * a["A021"]
    )
    F2 = (
        3 * xi * eta**2 * a["A003"]
        - eta * (eta**2 - 2 * xi**2) * a["A012"]
        - 3 * xi**2 * eta * a["A030"]
        - xi * eta**2 * r2 * a["A102"] / 2
        + eta**3 * r2 * a["A111"] / 2
        + xi * (xi**2 + 2 * eta**2) * r2 * a["A120"] / 2
        - xi * eta**2 * r2**2 * a["A201"] / 4
        - eta * (eta**2 + 2 * xi**2) * r2**2 * a["A210"] / 4
        + 3 * xi * eta**2 * r2**3 * a["A300"] / 8
        - xi * (2 * eta**2 - xi**2) * a["A021"]
    )
    F3 = (
        3 * xi**2 * eta * a["A003"]
        - xi * (2 * eta**2 - xi**2) * a["A012"]
        + 3 * xi * eta**2 * a["A030"]
        + eta * xi**2 * r2 * a["A102"] / 2
        + xi**3 * r2 * a["A111"] / 2
        - eta * (eta**2 + 2 * xi**2) * r2 * a["A120"] / 2
        - eta * xi**2 * r2**2 * a["A201"] / 4
        + xi * (xi**2 + 2 * eta**2) * r2**2 * a["A210"] / 4
        - 3 * eta * xi**2 * r2**3 * a["A300"] / 8
        + eta * (eta**2 - 2 * xi**2) * a["A021"]
    )
    F4 = (
        xi**3 * a["A003"]
        - xi**2 * eta * a["A012"]
        - eta**3 * a["A030"]
        + xi**3 * r2 * a["A102"] / 2
        - eta * xi**2 * r2 * a["A111"] / 2
        + xi * eta**2 * r2 * a["A120"] / 2
        + xi**3 * r2**2 * a["A201"] / 4
        - eta * xi**2 * r2**2 * a["A210"] / 4
        + xi**3 * r2**3 * a["A300"] / 8
        + xi * eta**2 * a["A021"]
    )
    return FQuad(F1, F2, F3, F4)


def mirror_map(f: RationalFunction) -> RationalFunction:
    """xi <-> eta together with A_jkl -> (-1)^(j+k) A_jkl."""
    binding = {"xi": ETA, "eta": XI}
    for (j, k, l), name in A_INDEX.items():
        if (j + k) % 2:
            binding[name] = -gen(name)
    return f.substitute(binding)


def h_terms(F: FQuad, V) -> tuple:
    """Source terms of the three first-order determining equations."""
    V = as_tower(V)
    Vx = V.diff("xi")
    Vy = V.diff("eta")
    h1 = (3 * F.F1 * Vx + F.F2 * Vy) / R2
    h2 = (2 * F.F2 * Vx + 2 * F.F3 * Vy) / R2
    h3 = (F.F3 * Vx + 3 * F.F4 * Vy) / R2
    return h1, h2, h3


def phi(F: FQuad, V, A=None) -> TowerElement:
    """The quantum correction entering the zeroth-order determining equation."""
    a = _a_values(A) if A is not None else symbolic_A()
    V = as_tower(V)
    xi, eta, r2 = XI, ETA, R2
    Vx = V.diff("xi")
    Vy = V.diff("eta")
    Vxx = Vx.diff("xi")
    Vxy = Vx.diff("eta")
    Vyy = Vy.diff("eta")
    Vxxx = Vxx.diff("xi")
    Vxxy = Vxx.diff("eta")
    Vxyy = Vxy.diff("eta")
    Vyyy = Vyy.diff("eta")
    F1, F2, F3, F4 = F.as_tuple()
    third = (F1 * Vxxx + F2 * Vxxy + F3 * Vxyy + F4 * Vyyy) / r2**2
    second = (
        (3 * xi * F1 + 2 * eta * F2 - xi * F3) * Vxx
        + (eta * F1 - xi * F2 - eta * F3 + xi * F4) * Vxy
        + (eta * F2 - 2 * xi * F3 - 3 * eta * F4) * Vyy
    ) / r2**3
    first_x = (
        (3 * (xi**2 - eta**2) * (F1 - F3) + 6 * xi * eta * (F2 - F4)) / r2**4
        - 4 * a["A300"] * eta * r2
        + 2 * a["A201"] * (xi + eta)
    )
    first_y = (
        (6 * xi * eta * (F1 - F3) - 3 * (xi**2 - eta**2) * (F2 - F4)) / r2**4
        - 4 * a["A300"] * xi * r2
        - 2 * a["A201"] * (xi + eta)
    )
    return third + second - Vx * first_x - Vy * first_y


@dataclass(frozen=True)
class Residuals:
    """Left-minus-right of the determining equations plus the linear
    compatibility condition; all structurally zero iff the candidate is an
    integral."""

    r1: TowerElement
    r2: TowerElement
    r3: TowerElement
    r4: TowerElement
    cc: TowerElement

    def all_zero(self) -> bool:
        return all(r.is_zero() for r in (self.r1, self.r2, self.r3, self.r4, self.cc))

    def status(self) -> dict:
        return {
            name: getattr(self, name).is_zero()
            for name in ("r1", "r2", "r3", "r4", "cc")
        }


def residuals(V, spec: IntegralSpec, hbar: str = "symbolic") -> Residuals:
    """Evaluate the full determining system for one candidate.

    ``hbar`` is ``"symbolic"`` for the quantum system or ``"zero"`` for the
    classical one (where the quantum correction drops out).
    """
    if hbar not in ("symbolic", "zero"):
        raise AlgebraError("hbar must be 'symbolic' or 'zero'")
    V = as_tower(V)
    F = f_quad(spec.A)
    h1, h2, h3 = h_terms(F, V)
    G1, G2, _, _ = spec.g_functions()
    if hbar == "zero":
        G1 = G1.substitute({"hbar": zero})
        G2 = G2.substitute({"hbar": zero})
    Vx = V.diff("xi")
    Vy = V.diff("eta")
    rot = (XI * G1 - ETA * G2) / R2
    r1 = G1.diff("xi") - rot - h1
    r2 = G1.diff("eta") + G2.diff("xi") - 2 * ((ETA * G1 + XI * G2) / R2) - h2
    r3 = G2.diff("eta") + rot - h3
    r4 = G1 * Vx + G2 * Vy
    if hbar == "symbolic":
        r4 = r4 - phi(F, V, spec.A) * (HBAR**2 / 4)
    cc = linear_cc(V, spec.A)
    return Residuals(r1, r2, r3, r4, cc)


def linear_cc(V, A=None) -> TowerElement:
    """Linear compatibility condition on the potential (left-hand side).

    Vanishes identically exactly when the three first-order determining
    equations are mutually consistent for the given constants.
    """
    a = _a_values(A) if A is not None else symbolic_A()
    F = f_quad(a)
    V = as_tower(V)
    xi, eta, r2 = XI, ETA, R2
    F1, F2, F3, F4 = F.as_tuple()
    Vx = V.diff("xi")
    Vy = V.diff("eta")
    Vxx = Vx.diff("xi")
    Vxy = Vx.diff("eta")
    Vyy = Vy.diff("eta")
    Vxxx = Vxx.diff("xi")
    Vxxy = Vxx.diff("eta")
    Vxyy = Vxy.diff("eta")
    Vyyy = Vyy.diff("eta")

    d = RationalFunction.diff
    F1e, F2x, F2e = d(F1, "eta"), d(F2, "xi"), d(F2, "eta")
    F3x, F3e, F4x = d(F3, "xi"), d(F3, "eta"), d(F4, "xi")

    out = F3 * Vxxx + (3 * F4 - 2 * F2) * Vxxy + (3 * F1 - 2 * F3) * Vxyy + F2 * Vyyy
    out = out + (2 * (F3x - F2e) - (3 * xi * F1 - 6 * eta * F2 + 7 * xi * F3) / r2) * Vxx
    out = out + (2 * (F2e - F3x) - (3 * eta * F4 - 6 * xi * F3 + 7 * eta * F2) / r2) * Vyy
    out = out + (
        2 * (3 * F1e - F2x - F3e + 3 * F4x)
        - (21 * eta * F1 - 5 * eta * F3 - 5 * xi * F2 + 21 * xi * F4) / r2
    ) * Vxy

    A_coef = (
        d(F2e, "eta")
        - 2 * d(F3e, "xi")
        + 3 * d(F4x, "xi")
        + (
            -7 * eta * F2e
            - xi * F2x
            + 6 * xi * F3e
            + 6 * eta * F3x
            - 3 * eta * d(F4, "eta")
            - 21 * xi * F4x
        )
        / r2
        + 2
        * (21 * xi**2 * F4 + F2 * xi**2 + 7 * eta**2 * F2 - 12 * xi * eta * F3 + 3 * F4 * eta**2)
        / r2**2
    )
    B_coef = (
        3 * d(F1e, "eta")
        - 2 * d(F2e, "xi")
        + d(F3x, "xi")
        - (
            21 * eta * F1e
            + 3 * xi * d(F1, "xi")
            - 6 * xi * F2e
            - 6 * eta * F2x
            + eta * F3e
            + 7 * xi * F3x
        )
        / r2
        + 2
        * (F3 * eta**2 + 3 * F1 * xi**2 + 21 * eta**2 * F1 - 12 * xi * eta * F2 + 7 * xi**2 * F3)
        / r2**2
    )
    return out + Vy * A_coef + Vx * B_coef


# ---------------------------------------------------------------------------
# nonlinear compatibility (elimination of the G functions)


def _rational_V(V) -> RationalFunction:
    t = as_tower(V)
    if not t.is_rational():
        raise ExcludedBranch("nonlinear elimination needs a rational potential")
    return t.rational_part()


def nonlinear_data(V, A=None, hbar: str = "symbolic") -> tuple:
    """Closed forms (h4, h5, G1, G2) of the eliminated system.

    Raises :class:`ExcludedBranch` when V_eta or h5 vanishes identically,
    which is the excluded branch of the elimination.
    """
    V = _rational_V(V)
    a = _a_values(A) if A is not None else symbolic_A()
    F = f_quad(a)
    h1, h2, h3 = (h.as_rational() for h in h_terms(F, V))
    Phi = phi(F, V, a).as_rational()
    if hbar == "zero":
        h2q = zero
    else:
        h2q = HBAR**2
    Vx = V.diff("xi")
    Vy = V.diff("eta")
    if Vy.is_zero():
        raise ExcludedBranch("V_eta vanishes identically")
    Vxx = Vx.diff("xi")
    Vxy = Vx.diff("eta")
    Vyy = Vy.diff("eta")
    Phix = Phi.diff("xi")
    Phiy = Phi.diff("eta")
    h4 = R2 * (
        4 * h3 * Vy**3
        + 4 * h2 * Vx * Vy**2
        + 4 * h1 * Vx**2 * Vy
        - h2q * Vy**2 * Phiy
        - h2q * Vx * Vy * Phix
        - h2q * (Vyy * Vy - Vxy * Vx) * Phi
    ) + 4 * ETA * Vx**2 - 4 * ETA * Vy**2 - 8 * XI * Vy * Vx
    h5 = 4 * R2 * (Vx * Vy * (Vxx - Vyy) + (Vy**2 - Vx**2) * Vxy) + 4 * (
        ETA * Vx - XI * Vy
    ) * (Vx**2 + Vy**2)
    if h5.is_zero():
        raise ExcludedBranch("h5 vanishes identically")
    G1 = h4 / h5
    G2 = (h5 * h2q * Phi - 4 * Vx * h4) / (4 * h5 * Vy)
    return h4, h5, G1, G2


def nonlinear_residuals(V, A=None, hbar: str = "symbolic") -> tuple:
    """Left-minus-right of the three eliminated compatibility conditions."""
    V = _rational_V(V)
    a = _a_values(A) if A is not None else symbolic_A()
    F = f_quad(a)
    h1, h2, h3 = (h.as_rational() for h in h_terms(F, V))
    Phi = phi(F, V, a).as_rational()
    h2q = zero if hbar == "zero" else HBAR**2
    h4, h5, G1, G2 = nonlinear_data(V, a, hbar)
    Vx = V.diff("xi")
    Vy = V.diff("eta")
    n1 = G1.diff("xi") + (ETA * h2q * h5 * Phi + 4 * h4 * (XI * Vy + ETA * Vx)) / (
        4 * h5 * Vy * R2
    ) - h1
    n2 = (
        G1.diff("eta")
        + G2.diff("xi")
        + (XI * h2q * h5 * Phi + 4 * h4 * (ETA * Vy - XI * Vx)) / (2 * h5 * Vy * R2)
        - h2
    )
    n3 = G2.diff("eta") - (ETA * h2q * h5 * Phi + 4 * h4 * (XI * Vy + ETA * Vx)) / (
        4 * h5 * Vy * R2
    ) - h3
    return n1, n2, n3


# ---------------------------------------------------------------------------
# Cartesian gate


X = gen("x")
Y = gen("y")


def cartesian_f(A=None) -> FQuad:
    """Structure polynomials of the Cartesian-separable gate."""
    a = _a_values(A) if A is not None else symbolic_A()
    x, y = X, Y
    F1 = a["A300"] * y**3 + a["A210"] * y**2 - a["A120"] * y + a["A030"]
    F2 = (
        3 * a["A300"] * x * y**2
        - 2 * a["A210"] * x * y
        + a["A201"] * y**2
        + a["A120"] * x
        - a["A111"] * y
        + a["A021"]
    )
    F3 = (
        -3 * a["A300"] * x**2 * y
        + a["A210"] * x**2
        - 2 * a["A201"] * x * y
        + a["A111"] * x
        - a["A102"] * y
        + a["A012"]
    )
    F4 = a["A300"] * x**3 + a["A201"] * x**2 + a["A102"] * x + a["A003"]
    return FQuad(F1, F2, F3, F4)


def cartesian_cc(W1x, W2y, A=None) -> RationalFunction:
    """Compatibility residual for V = W1(x) + W2(y) (left minus right)."""
    F = cartesian_f(A)
    W1x = W1x if isinstance(W1x, RationalFunction) else RationalFunction.constant(W1x)
    W2y = W2y if isinstance(W2y, RationalFunction) else RationalFunction.constant(W2y)
    F1, F2, F3, F4 = F.as_tuple()
    d = RationalFunction.diff
    w1p = W1x.diff("x")
    w2p = W2y.diff("y")
    lhs = (
        -F3 * w1p.diff("x", 2)
        + 2 * (d(F2, "y") - d(F3, "x")) * w1p.diff("x")
        - (3 * d(d(F1, "y"), "y") - 2 * d(d(F2, "x"), "y") + d(d(F3, "x"), "x")) * w1p
    )
    rhs = (
        F2 * w2p.diff("y", 2)
        + (d(F2, "y") - d(F3, "x")) * w2p.diff("y")
        + (d(d(F2, "y"), "y") - 2 * d(d(F3, "x"), "y") + 3 * d(d(F4, "x"), "x")) * w2p
    )
    return lhs - rhs


def cartesian_odes(A=None) -> list:
    """The four linear ODE operators implied by the Cartesian gate.

    Returned as lists of (polynomial coefficient, derivative order); the
    first two act on W1(x), the last two on W2(y).
    """
    a = _a_values(A) if A is not None else symbolic_A()
    x, y = X, Y
    w11 = [
        (3 * a["A300"] * x**2 + 2 * a["A201"] * x + a["A102"], 5),
        (36 * a["A300"] * x + 12 * a["A201"], 4),
        (84 * a["A300"], 3),
    ]
    w12 = [
        (-a["A111"] * x - a["A210"] * x**2 - a["A012"], 5),
        (-12 * a["A210"] * x - 6 * a["A111"], 4),
        (-28 * a["A210"], 3),
    ]
    w21 = [
        (3 * a["A300"] * y**2 - 2 * a["A210"] * y + a["A120"], 5),
        (36 * a["A300"] * y - 12 * a["A210"], 4),
        (90 * a["A300"], 3),
    ]
    w22 = [
        (a["A201"] * y**2 - a["A111"] * y + a["A021"], 5),
        (12 * a["A201"] * y - 6 * a["A111"], 4),
        (30 * a["A201"], 3),
    ]
    return [w11, w12, w21, w22]


# ---------------------------------------------------------------------------
# polar gate


RR = gen("r")
CT = gen("ct")
ST = gen("st")


def trig_reduce(f: RationalFunction) -> RationalFunction:
    """Normal form for trigonometric polynomials: eliminate st^k for k >= 2
    through st^2 = 1 - ct^2, so zero testing stays decidable."""
    num = f.numerator()
    den = f.denominator()

    def reduce_poly(p: Polynomial) -> RationalFunction:
        out = zero
        st2 = one - gen("ct") ** 2
        for exps, coeff in p.coefficients():
            term = RationalFunction.constant(coeff)
            for k, e in enumerate(exps):
                name = _gen_name(k)
                if not e:
                    continue
                if name == "st":
                    term = term * st2 ** (e // 2) * (gen("st") ** (e % 2))
                else:
                    term = term * gen(name) ** e
            out = out + term
        return out

    return reduce_poly(num) / reduce_poly(den)


def _gen_name(k: int) -> str:
    from .algebra import GENERATORS

    return GENERATORS[k]


def _dtheta(f: RationalFunction) -> RationalFunction:
    """d/dtheta on the (ct, st) chart: ct' = -st, st' = ct."""
    return trig_reduce(f.diff("ct") * (-ST) + f.diff("st") * CT)


def polar_f(A=None) -> FQuad:
    """Structure functions of the polar gate, in (r, ct, st)."""
    a = _a_values(A) if A is not None else symbolic_A()
    A1 = (a["A030"] - a["A012"]) / 4
    A2 = (a["A021"] - a["A003"]) / 4
    A3 = (3 * a["A030"] + a["A012"]) / 4
    A4 = (3 * a["A003"] + a["A021"]) / 4
    B1 = (a["A120"] - a["A102"]) / 2
    B2 = a["A111"] / 2
    B0 = (a["A120"] + a["A102"]) / 2
    C1 = a["A210"]
    C2 = a["A201"]
    D0 = a["A300"]
    ct, st, r = CT, ST, RR
    cos2 = 2 * ct**2 - 1
    sin2 = 2 * st * ct
    cos3 = 4 * ct**3 - 3 * ct
    sin3 = trig_reduce(3 * st - 4 * st**3)
    F1 = A1 * cos3 + A2 * sin3 + A3 * ct + A4 * st
    F2 = (-3 * A1 * sin3 + 3 * A2 * cos3 - A3 * ct + A4 * st) / r + B1 * cos2 + B2 * sin2 + B0
    F3 = (
        (-3 * A1 * cos3 - 3 * A2 * sin3 + A3 * ct + A4 * st) / r**2
        + (-2 * B1 * sin2 + 2 * B2 * cos2) / r
        + C1 * ct
        + C2 * st
    )
    F4 = (
        (A1 * sin3 - A2 * cos3 - A3 * st + A4 * ct) / r**3
        - (B1 * cos2 + B2 * sin2 + B0) / r**2
        - (C1 * st - C2 * ct) / r
        + D0
    )
    return FQuad(trig_reduce(F1), trig_reduce(F2), trig_reduce(F3), trig_reduce(F4))


def polar_cc(R, S, A=None) -> RationalFunction:
    """Compatibility residual for V = R(r) + S(theta)/r^2.

    ``R`` is rational in r; ``S`` is a trigonometric polynomial in (ct, st)
    under the Pythagorean rewrite.
    """
    F = polar_f(A)
    F1, F2, F3, F4 = F.as_tuple()
    r = RR
    R = R if isinstance(R, RationalFunction) else RationalFunction.constant(R)
    S = trig_reduce(S if isinstance(S, RationalFunction) else RationalFunction.constant(S))
    Rp = R.diff("r")
    Rpp = Rp.diff("r")
    Rppp = Rpp.diff("r")
    Sp = _dtheta(S)
    Spp = _dtheta(Sp)
    Sppp = _dtheta(Spp)
    d = RationalFunction.diff
    F1t = _dtheta(F1)
    F1tt = _dtheta(F1t)
    F2t = _dtheta(F2)
    F2tt = _dtheta(F2t)
    F2r = d(F2, "r")
    F3r = d(F3, "r")
    F3rr = d(F3r, "r")
    F3rt = _dtheta(F3r)
    F2rt = d(F2t, "r")
    F4r = d(F4, "r")
    F4rr = d(F4r, "r")
    out = (
        r**4 * F3 * Rppp
        + (2 * r**4 * F3r - 2 * r**2 * F2t + 3 * r * (2 * r**2 * F3 - F1)) * Rpp
        + (r**4 * F3rr + 2 * r**2 * (3 * F3r + 3 * F3 - F2rt) - 4 * r * F2t + 3 * F1tt) * Rp
        + F2 * Sppp / r**2
        - (2 * r**3 * F3r - 2 * r * F2t + 6 * F1) * Spp / r**3
        + (
            3 * r**5 * F4rr
            + 6 * r**4 * F4r
            - 2 * r**3 * F3rt
            + 3 * r**2 * F2r
            + r * (F2tt - 2 * F2)
            - 12 * F1t
        )
        * Sp
        / r**3
        - (
            2 * r**4 * F3rr
            - 12 * r**3 * F3r
            + 4 * r**2 * (3 * F3r - F2rt)
            + 4 * r * F2t
            + 6 * F1tt
            + 18 * F1
        )
        * S
        / r**3
    )
    return trig_reduce(out)
