"""Differential field tower adjoining S = sqrt(x^2+B) and L = log(x+S).

For each coordinate (xi with constant B1, eta with constant B2) the tower
adjoins S with S' = x/S (rewritten into the basis via S^2 = x^2+B) and
L with L' = 1/S.  The degenerate branch B = 0 collapses S to x and stores
a + c*log(x) instead.

Zero testing relies on the generic linear independence of the basis
monomials S1^e1 * S2^e2 * L1^m1 * L2^m2 over the rational-function field;
the degenerate parameter value B = 0 that would break it is routed to the
dedicated log branch instead.

:class:`ExtElement` is the single-coordinate element with at most first
powers of L (all the cataloged potentials live here).  :class:`TowerElement`
is the underlying engine: it supports the product of both coordinate towers
and arbitrary L powers, which the classification machinery needs when it
clears denominators in the nonlinear compatibility conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Union

from .algebra import (
    AlgebraError,
    RationalFunction,
    gen,
    one,
    zero,
)

__all__ = [
    "ExtensionError",
    "Extension",
    "TowerContext",
    "TowerElement",
    "ExtElement",
    "as_tower",
    "ext_derivative",
    "ext_is_zero",
    "sqrt_element",
    "log_element",
]

Scalar = Union[RationalFunction, int]


class ExtensionError(AlgebraError):
    """Raised on operations outside the tower's closure."""


@dataclass(frozen=True)
class Extension:
    """Extension data for one coordinate: S = sqrt(var^2 + B), L = log(var+S).

    ``log_degenerate`` marks the B = 0 branch where the stored transcendental
    is log(var) itself and no square root is adjoined.
    """

    B: RationalFunction
    log_degenerate: bool = False

    def __post_init__(self):
        if self.log_degenerate and not self.B.is_zero():
            raise ExtensionError("log-degenerate branch requires B = 0")


@dataclass(frozen=True)
class TowerContext:
    """Which extensions are active over each coordinate (None = rational)."""

    xi: Extension | None = None
    eta: Extension | None = None

    def merge(self, other: "TowerContext") -> "TowerContext":
        def pick(a, b, which):
            if a is None:
                return b
            if b is None or a == b:
                return a
            raise ExtensionError(f"incompatible {which} towers: {a} vs {b}")

        return TowerContext(pick(self.xi, other.xi, "xi"), pick(self.eta, other.eta, "eta"))

    def ext(self, var: str) -> Extension | None:
        return self.xi if var == "xi" else self.eta


RATIONAL_CTX = TowerContext()

# basis exponent key: (s_xi, l_xi, s_eta, l_eta)
_ONE = (0, 0, 0, 0)


class TowerElement:
    """Element of the (product) tower: sum of r * S1^e1 L1^m1 S2^e2 L2^m2."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: TowerContext, terms: dict | None = None):
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def rational(r: Scalar, ctx: TowerContext = RATIONAL_CTX) -> "TowerElement":
        r = _as_rf(r)
        return TowerElement(ctx, {_ONE: r} if not r.is_zero() else {})

    @staticmethod
    def sqrt(var: str, B: Scalar) -> "TowerElement":
        """The adjoined square root S = sqrt(var^2 + B)."""
        ext = Extension(_as_rf(B))
        ctx = TowerContext(xi=ext) if var == "xi" else TowerContext(eta=ext)
        key = (1, 0, 0, 0) if var == "xi" else (0, 0, 1, 0)
        return TowerElement(ctx, {key: one})

    @staticmethod
    def log(var: str, B: Scalar | None) -> "TowerElement":
        """L = log(var + sqrt(var^2+B)), or log(var) when B is None/0."""
        if B is None or _as_rf(B).is_zero():
            ext = Extension(zero, log_degenerate=True)
        else:
            ext = Extension(_as_rf(B))
        ctx = TowerContext(xi=ext) if var == "xi" else TowerContext(eta=ext)
        key = (0, 1, 0, 0) if var == "xi" else (0, 0, 0, 1)
        return TowerElement(ctx, {key: one})

    # -- helpers -------------------------------------------------------------

    def _coerced(self, other) -> tuple:
        if not isinstance(other, TowerElement):
            other = TowerElement.rational(other)
        ctx = self.ctx.merge(other.ctx)
        return ctx, other

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(k == _ONE for k in self.terms)

    def rational_part(self) -> RationalFunction:
        return self.terms.get(_ONE, zero)

    def as_rational(self) -> RationalFunction:
        if not self.is_rational():
            raise ExtensionError("element has irrational components")
        return self.rational_part()

    def log_degree(self) -> int:
        return max((k[1] + k[3] for k in self.terms), default=0)

    def coefficient(self, key: tuple) -> RationalFunction:
        return self.terms.get(key, zero)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        ctx, other = self._coerced(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, zero) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TowerElement(ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TowerElement):
            other = TowerElement.rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        ctx, other = self._coerced(other)
        sq = {
            "xi": None if ctx.xi is None else gen("xi") ** 2 + ctx.xi.B,
            "eta": None if ctx.eta is None else gen("eta") ** 2 + ctx.eta.B,
        }
        out: dict = {}
        for (e1, m1, f1, n1), va in self.terms.items():
            for (e2, m2, f2, n2), vb in other.terms.items():
                r = va * vb
                e, f = e1 + e2, f1 + f2
                if e == 2:
                    r = r * sq["xi"]
                    e = 0
                if f == 2:
                    r = r * sq["eta"]
                    f = 0
                key = (e, m1 + m2, f, n1 + n2)
                s = out.get(key, zero) + r
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return TowerElement(ctx, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by rational elements or single sqrt-monomial terms.

        1/S is in the tower (S/(x^2+B)), so divisors of the shape r * S1^e1 *
        S2^e2 are invertible; anything with a logarithm or several terms is
        not, and raises.
        """
        if isinstance(other, TowerElement):
            if other.is_rational():
                other = other.as_rational()
            elif len(other.terms) == 1:
                ((e1, m1, e2, m2), r), = other.terms.items()
                if m1 or m2:
                    raise ExtensionError("division by a logarithmic tower element")
                ctx = self.ctx.merge(other.ctx)
                inv = TowerElement(ctx, {(e1, 0, e2, 0): one / r})
                if e1:
                    inv = inv / (gen("xi") ** 2 + ctx.xi.B)
                if e2:
                    inv = inv / (gen("eta") ** 2 + ctx.eta.B)
                return self * inv
            else:
                raise ExtensionError("division by a multi-term tower element")
        r = _as_rf(other)
        return TowerElement(self.ctx, {k: v / r for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ExtensionError("negative powers of tower elements")
        result = TowerElement.rational(1, self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (TowerElement, RationalFunction, int)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus ----------------------------------------------------------------

    def diff(self, var: str, order: int = 1) -> "TowerElement":
        out = self
        for _ in range(order):
            out = _tower_diff(out, var)
        return out

    def substitute(self, bindings: Mapping[str, RationalFunction]) -> "TowerElement":
        """Substitute into the rational coefficients (not into S or L)."""
        for v in ("xi", "eta"):
            ext = self.ctx.ext(v)
            if ext is not None and (v in bindings or _mentions(ext.B, bindings)):
                raise ExtensionError(f"substitution touches the {v}-tower data")
        return TowerElement(
            self.ctx, {k: c.substitute(bindings) for k, c in self.terms.items()}
        )

    def eval_float(self, values: Mapping[str, complex]) -> complex:
        """Floating-point evaluation; S and L take their principal values."""
        import cmath

        def sq_log(var):
            ext = self.ctx.ext(var)
            x = complex(values[var])
            if ext is None:
                return None, None
            if ext.log_degenerate:
                return x, cmath.log(x)
            B = ext.B.eval_float(values)
            s = cmath.sqrt(x * x + B)
            return s, cmath.log(x + s)

        s1, l1 = sq_log("xi")
        s2, l2 = sq_log("eta")
        total = 0j
        for (e1, m1, e2, m2), r in self.terms.items():
            val = complex(r.eval_float(values))
            if e1:
                val *= s1
            if m1:
                val *= l1**m1
            if e2:
                val *= s2
            if m2:
                val *= l2**m2
            total += val
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        names = _basis_names(self.ctx)
        parts = []
        for key in sorted(self.terms):
            label = "*".join(n for n, on in zip(names, _expanded(key)) if on)
            c = self.terms[key]
            parts.append(f"({c!r})" + (f"*{label}" if label else ""))
        return " + ".join(parts)


def _mentions(r: RationalFunction, bindings) -> bool:
    from .algebra import GENERATORS, _unpack  # noqa: internal reuse

    names = set(bindings)
    for p in (r.numerator(), r.denominator()):
        for m in p.terms:
            for k, e in enumerate(_unpack(m)):
                if e and GENERATORS[k] in names:
                    return True
    return False


def _expanded(key):
    e1, m1, e2, m2 = key
    return (e1, m1, e2, m2)


def _basis_names(ctx: TowerContext):
    def pair(var):
        ext = ctx.ext(var)
        if ext is None:
            return (f"S_{var}", f"log_{var}")
        if ext.log_degenerate:
            return (f"S_{var}", f"log({var})")
        b = repr(ext.B)
        return (f"sqrt({var}^2+{b})", f"log({var}+sqrt({var}^2+{b}))")

    sx, lx = pair("xi")
    se, le = pair("eta")
    return (sx, lx, se, le)


def _tower_diff(el: TowerElement, var: str) -> TowerElement:
    ctx = el.ctx
    ext = ctx.ext(var)
    x = gen(var)
    out: dict = {}

    def bump(key, val):
        if val.is_zero():
            return
        s = out.get(key, zero) + val
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    if var == "xi":
        pos = lambda e, m, k: (e, m, k[2], k[3])
        cur = lambda k: (k[0], k[1])
    else:
        pos = lambda e, m, k: (k[0], k[1], e, m)
        cur = lambda k: (k[2], k[3])

    if ext is None:
        for k, r in el.terms.items():
            bump(k, r.diff(var))
        return TowerElement(ctx, out)

    if ext.log_degenerate:
        for k, r in el.terms.items():
            e, m = cur(k)
            bump(k, r.diff(var))
            if m:
                bump(pos(e, m - 1, k), r * m / x)
        return TowerElement(ctx, out)

    x2B = x**2 + ext.B
    for k, r in el.terms.items():
        e, m = cur(k)
        bump(k, r.diff(var))
        if e:
            # (r*S)' -> S' = x/S = x*S/(x^2+B)
            bump(k, r * x / x2B)
        if m:
            # L' = 1/S = S/(x^2+B); S*L' = 1
            if e:
                bump(pos(0, m - 1, k), r * m)
            else:
                bump(pos(1, m - 1, k), r * m / x2B)
    return TowerElement(ctx, out)


def as_tower(x) -> TowerElement:
    if isinstance(x, TowerElement):
        return x
    if isinstance(x, ExtElement):
        return x._el
    return TowerElement.rational(_as_rf(x))


def _as_rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    from .algebra import RationalFunction as RF

    return RF.constant(v)


# ---------------------------------------------------------------------------


class ExtElement:
    """Single-coordinate tower element a + b*S + c*L + d*S*L.

    The log-degenerate branch (B = 0) stores a + c*log(var).  Products that
    would need L^2 or that mix the xi- and eta-towers raise
    :class:`ExtensionError`; the classification code uses the raw
    :class:`TowerElement` engine where such products are legitimate.
    """

    __slots__ = ("_el", "var")

    def __init__(self, el: TowerElement | RationalFunction | int, var: str | None = None):
        el = as_tower(el)
        active = [v for v in ("xi", "eta") if el.ctx.ext(v) is not None]
        if len(active) > 1:
            raise ExtensionError("mixing xi-tower and eta-tower elements")
        if var is None:
            var = active[0] if active else "xi"
        if el.log_degree() > 1:
            raise ExtensionError("ExtElement stores first powers of the logarithm only")
        self._el = el
        self.var = var

    # -- basis coefficient views -------------------------------------------

    def _key(self, s: int, l: int) -> tuple:
        return (s, l, 0, 0) if self.var == "xi" else (0, 0, s, l)

    @property
    def a(self) -> RationalFunction:
        return self._el.coefficient(self._key(0, 0))

    @property
    def b(self) -> RationalFunction:
        return self._el.coefficient(self._key(1, 0))

    @property
    def c(self) -> RationalFunction:
        return self._el.coefficient(self._key(0, 1))

    @property
    def d(self) -> RationalFunction:
        return self._el.coefficient(self._key(1, 1))

    @property
    def branch(self) -> str:
        ext = self._el.ctx.ext(self.var)
        if ext is not None and ext.log_degenerate:
            return "log-degenerate"
        return "generic"

    def tower(self) -> TowerElement:
        return self._el

    # -- arithmetic -----------------------------------------------------------

    def _wrap(self, el: TowerElement) -> "ExtElement":
        return ExtElement(el, self.var)

    def __add__(self, other):
        return self._wrap(self._el + as_tower(other))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self._el)

    def __sub__(self, other):
        return self._wrap(self._el - as_tower(other))

    def __rsub__(self, other):
        return self._wrap(as_tower(other) - self._el)

    def __mul__(self, other):
        return self._wrap(self._el * as_tower(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self._el / (as_tower(other) if isinstance(other, ExtElement) else other))

    def __pow__(self, n: int):
        return self._wrap(self._el**n)

    def __eq__(self, other):
        if isinstance(other, (ExtElement, TowerElement, RationalFunction, int)):
            return (self._el - as_tower(other)).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self._el)

    def is_zero(self) -> bool:
        return self._el.is_zero()

    def diff(self, var: str, order: int = 1) -> "ExtElement":
        return self._wrap(self._el.diff(var, order))

    def substitute(self, bindings) -> "ExtElement":
        return self._wrap(self._el.substitute(bindings))

    def eval_float(self, values) -> complex:
        return self._el.eval_float(values)

    def is_rational(self) -> bool:
        return self._el.is_rational()

    def as_rational(self) -> RationalFunction:
        return self._el.as_rational()

    def __repr__(self):
        return repr(self._el)


def sqrt_element(var: str, B: Scalar) -> ExtElement:
    """S = sqrt(var^2+B) as an ExtElement (generic branch)."""
    return ExtElement(TowerElement.sqrt(var, B), var)


def log_element(var: str, B: Scalar | None = None) -> ExtElement:
    """L = log(var+sqrt(var^2+B)); B = None or 0 gives log(var)."""
    return ExtElement(TowerElement.log(var, B), var)


def ext_derivative(e: ExtElement, var: str) -> ExtElement:
    """Exact derivative re-expressed in the {1, S, L, S*L} basis."""
    return e.diff(var)


def ext_is_zero(e: ExtElement | TowerElement) -> bool:
    """True iff every basis coefficient is the zero rational function."""
    return as_tower(e).is_zero()
