"""Phase-space observables and quantum differential operators.

Classical observables are polynomials in the Cartesian momenta (p1, p2) with
exact rational-function coefficients; the coefficient chart is either
Cartesian (x1, x2) or parabolic (xi, eta), related by x1 = (xi^2-eta^2)/2,
x2 = xi*eta.  Poisson brackets are canonical Cartesian brackets; for
parabolic-chart coefficients the x-derivatives are taken through the inverse
Jacobian, which keeps everything rational.

Quantum operators are finite sums c(xi,eta) * d^a/dxi^a d^b/deta^b in normal
form (coefficients to the left), with hbar a symbolic generator inside the
coefficients.  Composition expands derivatives past coefficients by the
Leibniz rule; commutators and anticommutators are built from it.

Two convention switches are exposed and fixed once by calibration against
the verified catalog (see :mod:`paraint.catalog`):

* ``hamiltonian_half``: kinetic term -hbar^2/(2(xi^2+eta^2)) (Delta) vs the
  same without the 1/2;
* ``anticommutator_half``: {A,B} = (AB+BA)/2 vs AB+BA when assembling
  integral candidates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .algebra import (
    AlgebraError,
    GaussianRational,
    Polynomial,
    RationalFunction,
    gen,
    one,
    zero,
)
from .extension import ExtElement, TowerElement, as_tower

__all__ = [
    "PhaseError",
    "ClassicalObservable",
    "QuantumOperator",
    "IntegralSpec",
    "Conventions",
    "poisson_bracket",
    "op_compose",
    "op_commutator",
    "op_anticommutator",
    "build_X",
    "classical_limit",
    "hamiltonian",
    "hamiltonian_classical",
    "parabolic_momenta",
    "angular_momentum_op",
    "second_order_integral_Y",
    "separable_potential",
]

_I = GaussianRational(0, 1)
XI = gen("xi")
ETA = gen("eta")
HBAR = gen("hbar")
R2 = XI**2 + ETA**2


class PhaseError(AlgebraError):
    """Chart mismatches, non-polynomial hbar limits, and similar misuse."""


# ---------------------------------------------------------------------------
# classical observables


class ClassicalObservable:
    """Polynomial in (p1, p2) with rational-function coefficients."""

    __slots__ = ("chart", "terms")

    def __init__(self, terms: Mapping[tuple, RationalFunction] | None = None, chart: str = "parabolic"):
        if chart not in ("parabolic", "cartesian"):
            raise PhaseError(f"unknown chart {chart!r}")
        self.chart = chart
        self.terms = {k: v for k, v in (terms or {}).items() if not _rf(v).is_zero()}

    @staticmethod
    def coefficient_observable(r, chart: str = "parabolic") -> "ClassicalObservable":
        return ClassicalObservable({(0, 0): _rf(r)}, chart)

    @staticmethod
    def momentum(i: int, chart: str = "parabolic") -> "ClassicalObservable":
        key = (1, 0) if i == 1 else (0, 1)
        return ClassicalObservable({key: one}, chart)

    def momentum_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: tuple) -> RationalFunction:
        return self.terms.get(key, zero)

    def _check(self, other: "ClassicalObservable"):
        if self.chart != other.chart:
            raise PhaseError(f"chart mismatch: {self.chart} vs {other.chart}")

    def __add__(self, other):
        if not isinstance(other, ClassicalObservable):
            other = ClassicalObservable.coefficient_observable(other, self.chart)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, zero) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return ClassicalObservable(out, self.chart)

    __radd__ = __add__

    def __neg__(self):
        return ClassicalObservable({k: -v for k, v in self.terms.items()}, self.chart)

    def __sub__(self, other):
        if not isinstance(other, ClassicalObservable):
            other = ClassicalObservable.coefficient_observable(other, self.chart)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ClassicalObservable):
            other = ClassicalObservable.coefficient_observable(other, self.chart)
        self._check(other)
        out: dict = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, zero) + v1 * v2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return ClassicalObservable(out, self.chart)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ClassicalObservable.coefficient_observable(1, self.chart)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, ClassicalObservable):
            return self.chart == other.chart and (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.chart, frozenset(self.terms.items())))

    # -- chart machinery ------------------------------------------------------

    def _dx(self, coeff: RationalFunction, i: int) -> RationalFunction:
        """d(coeff)/dx_i in this chart, always a rational function."""
        if self.chart == "cartesian":
            return coeff.diff("xi" if i == 1 else "eta")
        cx = coeff.diff("xi")
        ce = coeff.diff("eta")
        if i == 1:
            return (XI * cx - ETA * ce) / R2
        return (ETA * cx + XI * ce) / R2

    def to_parabolic(self) -> "ClassicalObservable":
        if self.chart == "parabolic":
            return self
        binding = {"xi": (XI**2 - ETA**2) / 2, "eta": XI * ETA}
        return ClassicalObservable(
            {k: v.substitute(binding) for k, v in self.terms.items()}, "parabolic"
        )

    def eval_float(self, values: Mapping[str, complex], p1: complex, p2: complex) -> complex:
        total = 0j
        for (a, b), c in self.terms.items():
            total += c.eval_float(values) * p1**a * p2**b
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            mon = "".join(["*p1^%d" % a if a else "", "*p2^%d" % b if b else ""])
            parts.append(f"({self.terms[(a, b)]!r}){mon}")
        return " + ".join(parts)


def _rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction.from_polynomial(v)
    return RationalFunction.constant(v)


def poisson_bracket(f: ClassicalObservable, g: ClassicalObservable) -> ClassicalObservable:
    """{f, g} = sum_i df/dx_i dg/dp_i - df/dp_i dg/dx_i (canonical, Cartesian)."""
    if f.chart != g.chart:
        raise PhaseError(f"chart mismatch: {f.chart} vs {g.chart}")
    out = ClassicalObservable({}, f.chart)
    for (a1, b1), c1 in f.terms.items():
        for (a2, b2), c2 in g.terms.items():
            # i = 1
            if a2:
                out += ClassicalObservable(
                    {(a1 + a2 - 1, b1 + b2): f._dx(c1, 1) * c2 * a2}, f.chart
                )
            if a1:
                out += ClassicalObservable(
                    {(a1 - 1 + a2, b1 + b2): -(c1 * a1) * g._dx(c2, 1)}, f.chart
                )
            # i = 2
            if b2:
                out += ClassicalObservable(
                    {(a1 + a2, b1 + b2 - 1): f._dx(c1, 2) * c2 * b2}, f.chart
                )
            if b1:
                out += ClassicalObservable(
                    {(a1 + a2, b1 - 1 + b2): -(c1 * b1) * g._dx(c2, 2)}, f.chart
                )
    return out


# ---------------------------------------------------------------------------
# quantum operators


class QuantumOperator:
    """Normal-ordered sum of coeff(xi,eta) * d^a_xi d^b_eta terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, TowerElement | ExtElement | RationalFunction] | None = None):
        self.terms = {}
        for k, v in (terms or {}).items():
            t = as_tower(v)
            if not t.is_zero():
                self.terms[k] = t

    @staticmethod
    def multiplication(c) -> "QuantumOperator":
        return QuantumOperator({(0, 0): as_tower(c)})

    @staticmethod
    def derivative(a: int, b: int, coeff=1) -> "QuantumOperator":
        return QuantumOperator({(a, b): as_tower(_rf(coeff))})

    @staticmethod
    def identity() -> "QuantumOperator":
        return QuantumOperator.multiplication(one)

    def order(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: tuple) -> TowerElement:
        return self.terms.get(key, as_tower(zero))

    def __add__(self, other):
        if not isinstance(other, QuantumOperator):
            other = QuantumOperator.multiplication(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return QuantumOperator(out)

    __radd__ = __add__

    def __neg__(self):
        return QuantumOperator({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QuantumOperator):
            other = QuantumOperator.multiplication(other)
        return self + (-other)

    def __mul__(self, scalar):
        s = as_tower(scalar) if not isinstance(scalar, QuantumOperator) else None
        if s is None:
            raise PhaseError("use op_compose for operator products")
        return QuantumOperator({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        return op_compose(self, other)

    def __eq__(self, other):
        if isinstance(other, QuantumOperator):
            return (self - other).is_zero()
        return NotImplemented

    def apply_to(self, f: TowerElement | ExtElement | RationalFunction) -> TowerElement:
        """Apply the operator to a function of (xi, eta)."""
        f = as_tower(f)
        out = as_tower(zero)
        for (a, b), c in self.terms.items():
            out = out + c * f.diff("xi", a).diff("eta", b) if a or b else out + c * f
        return out

    def substitute(self, bindings) -> "QuantumOperator":
        return QuantumOperator({k: v.substitute(bindings) for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            ds = ("*Dxi^%d" % a if a else "") + ("*Deta^%d" % b if b else "")
            parts.append(f"({self.terms[(a, b)]!r}){ds}")
        return " + ".join(parts)


def op_compose(A: QuantumOperator, B: QuantumOperator) -> QuantumOperator:
    """Normal-ordered product AB (Leibniz expansion of derivatives past coefficients)."""
    out = QuantumOperator()
    acc: dict = {}
    for (a1, b1), cA in A.terms.items():
        for (a2, b2), cB in B.terms.items():
            # move d^a1 d^b1 past cB
            derivs = {}
            for i in range(a1 + 1):
                di = cB.diff("xi", i) if i else cB
                for j in range(b1 + 1):
                    dij = di.diff("eta", j) if j else di
                    if dij.is_zero():
                        continue
                    w = comb(a1, i) * comb(b1, j)
                    key = (a1 - i + a2, b1 - j + b2)
                    term = cA * dij * w
                    s = acc.get(key)
                    acc[key] = term if s is None else s + term
    for key, v in acc.items():
        if not v.is_zero():
            out = out + QuantumOperator({key: v})
    return out


def op_commutator(A: QuantumOperator, B: QuantumOperator) -> QuantumOperator:
    return op_compose(A, B) - op_compose(B, A)


def op_anticommutator(A: QuantumOperator, B: QuantumOperator) -> QuantumOperator:
    return op_compose(A, B) + op_compose(B, A)


# ---------------------------------------------------------------------------
# the coordinate operators and Hamiltonians


def parabolic_momenta() -> tuple:
    """(p1, p2) as parabolic-coordinate operators."""
    w = -_I * HBAR / R2
    p1 = QuantumOperator({(1, 0): as_tower(w * XI), (0, 1): as_tower(-w * ETA)})
    p2 = QuantumOperator({(1, 0): as_tower(w * ETA), (0, 1): as_tower(w * XI)})
    return p1, p2


def angular_momentum_op() -> QuantumOperator:
    """L3 = x1 p2 - x2 p1 = (i hbar / 2)(eta d_xi - xi d_eta).

    Calibration pins this orientation: with it, the separation integral as
    printed commutes with H, and the verified catalog constants label the
    momentum structures identically (no sign map).
    """
    w = _I * HBAR / 2
    return QuantumOperator({(1, 0): as_tower(w * ETA), (0, 1): as_tower(-w * XI)})


@dataclass(frozen=True)
class Conventions:
    """Operator-normalization switches, fixed once by catalog calibration.

    Calibration (the separation integral Y and the verified catalog) lands on
    hamiltonian_half = False: the kinetic term carries no 1/2, and the
    classical limit of H is p1^2 + p2^2 + V.  ``anticommutator_half`` only
    rescales assembled integrals, so zero tests cannot distinguish it; it
    defaults to the plain sum AB + BA.
    """

    hamiltonian_half: bool = False
    anticommutator_half: bool = False

    def anti(self, A: QuantumOperator, B: QuantumOperator) -> QuantumOperator:
        s = op_anticommutator(A, B)
        if self.anticommutator_half:
            s = s * RationalFunction.constant(GaussianRational(1) / GaussianRational(2))
        return s


DEFAULT_CONVENTIONS = Conventions()


def hamiltonian(V, conventions: Conventions = DEFAULT_CONVENTIONS) -> QuantumOperator:
    """H = -hbar^2/(xi^2+eta^2)(d_xi^2 + d_eta^2) (maybe halved) + V."""
    c = -(HBAR**2) / R2
    if conventions.hamiltonian_half:
        c = c / 2
    return QuantumOperator({(2, 0): as_tower(c), (0, 2): as_tower(c), (0, 0): as_tower(V)})


def hamiltonian_classical(V, conventions: Conventions = DEFAULT_CONVENTIONS) -> ClassicalObservable:
    """Classical Hamiltonian matching the operator convention in force."""
    kin = one / 2 if conventions.hamiltonian_half else one
    return ClassicalObservable({(2, 0): kin, (0, 2): kin, (0, 0): _rf_or_rational(V)}, "parabolic")


def _rf_or_rational(V) -> RationalFunction:
    t = as_tower(V)
    if not t.is_rational():
        raise PhaseError("classical observables need rational coefficients")
    return t.rational_part()


def separable_potential(W1, W2) -> TowerElement:
    """V = (W1(xi) + W2(eta)) / (xi^2 + eta^2)."""
    return (as_tower(W1) + as_tower(W2)) / R2


def second_order_integral_Y(W1, W2) -> QuantumOperator:
    """Y = L3 p2 + p2 L3 + (xi^2 W2(eta) - eta^2 W1(xi)) / (xi^2+eta^2)."""
    _, p2 = parabolic_momenta()
    L3 = angular_momentum_op()
    w = (XI**2 * as_tower(W2) - ETA**2 * as_tower(W1)) / R2
    return op_compose(L3, p2) + op_compose(p2, L3) + QuantumOperator.multiplication(w)


# ---------------------------------------------------------------------------
# integral candidates


@dataclass(frozen=True)
class IntegralSpec:
    """Data of one third-order integral candidate.

    ``A`` maps momentum-structure indices (j, k, l) with j + k + l = 3 to
    constant coefficients.  ``G1``/``G2`` are the first-order part in the
    rotated form; ``killing`` adds the standard symmetry generators
    (rotation, x-translation, y-translation).
    """

    A: Mapping[tuple, RationalFunction] = field(default_factory=dict)
    G1: object = zero
    G2: object = zero
    killing: tuple = (0, 0, 0)
    label: str = ""

    def is_trivial(self) -> bool:
        return (
            all(_rf(v).is_zero() for v in self.A.values())
            and all(_rf(k).is_zero() for k in self.killing)
            and as_tower(self.G1).is_zero()
            and as_tower(self.G2).is_zero()
        )

    def g_functions(self) -> tuple:
        """Killing-augmented (G1, G2) and the rotated (g1, g2) multipliers."""
        G1 = as_tower(self.G1)
        G2 = as_tower(self.G2)
        k1, k2, k3 = (_rf(k) for k in self.killing)
        if not k1.is_zero():
            G1 = G1 + (-k1 * ETA * R2 / 2)
            G2 = G2 + (k1 * XI * R2 / 2)
        if not k2.is_zero():
            G1 = G1 + k2 * XI
            G2 = G2 + (-k2 * ETA)
        if not k3.is_zero():
            G1 = G1 + k3 * ETA
            G2 = G2 + k3 * XI
        g1 = (XI * G1 - ETA * G2) / R2
        g2 = (ETA * G1 + XI * G2) / R2
        return G1, G2, g1, g2


def build_X(spec: IntegralSpec, conventions: Conventions = DEFAULT_CONVENTIONS) -> QuantumOperator:
    """Assemble the third-order candidate from its constants and G functions.

    X = sum A_jkl {L3^j, p1^k p2^l} + ({g1, p1} + {g2, p2})/2.  The relative
    1/2 on the first-order part is calibrated: it is the unique weight for
    which the verified catalog satisfies [H, X] = 0 with the G functions
    that solve the determining equations.  ``anticommutator_half`` rescales
    the whole candidate and cannot affect any zero test.
    """
    p1, p2 = parabolic_momenta()
    L3 = angular_momentum_op()
    X = QuantumOperator()
    for (j, k, l), val in spec.A.items():
        v = _rf(val)
        if v.is_zero():
            continue
        if j + k + l != 3:
            raise PhaseError(f"A indices must sum to 3, got {(j, k, l)}")
        P = QuantumOperator.identity()
        for _ in range(j):
            P = op_compose(P, L3)
        Q = QuantumOperator.identity()
        for _ in range(k):
            Q = op_compose(Q, p1)
        for _ in range(l):
            Q = op_compose(Q, p2)
        X = X + op_anticommutator(P, Q) * v
    _, _, g1, g2 = spec.g_functions()
    half = RationalFunction.constant(GaussianRational(1) / GaussianRational(2))
    if not g1.is_zero():
        X = X + op_anticommutator(QuantumOperator.multiplication(g1), p1) * half
    if not g2.is_zero():
        X = X + op_anticommutator(QuantumOperator.multiplication(g2), p2) * half
    if conventions.anticommutator_half:
        X = X * half
    return X


# ---------------------------------------------------------------------------
# classical limit


def classical_limit(A: QuantumOperator) -> ClassicalObservable:
    """Principal-symbol limit: d_xi -> (i/hbar)(xi p1 + eta p2),
    d_eta -> (i/hbar)(-eta p1 + xi p2), then hbar -> 0 exactly."""
    rho_xi = ClassicalObservable({(1, 0): XI * one, (0, 1): ETA * one}, "parabolic")
    rho_eta = ClassicalObservable({(1, 0): -ETA * one, (0, 1): XI * one}, "parabolic")
    out = ClassicalObservable({}, "parabolic")
    for (a, b), c in A.terms.items():
        if not c.is_rational():
            raise PhaseError("classical limit needs rational coefficients")
        r = c.rational_part() * RationalFunction.constant(_I**(a + b))
        r = r / HBAR ** (a + b) if a + b else r
        out += ClassicalObservable.coefficient_observable(r) * rho_xi**a * rho_eta**b
    # exact hbar -> 0; a pole in hbar means the operator was not admissible
    try:
        final = ClassicalObservable(
            {k: v.substitute({"hbar": zero}) for k, v in out.terms.items()}, "parabolic"
        )
    except AlgebraError as exc:
        raise PhaseError(f"negative power of hbar in classical limit: {exc}") from exc
    return final
