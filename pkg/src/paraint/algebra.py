"""Exact sparse multivariate polynomial and rational-function arithmetic.

The coefficient field is the Gaussian rationals Q(i); symbolic parameters
(coupling constants, integral coefficients, separation constants) are ring
generators alongside the coordinates, so "an expression vanishes identically"
always means coefficient-wise vanishing as a polynomial identity in every
parameter.

Representation notes:

* A monomial is a single Python integer: the exponent of generator ``k``
  occupies the 16-bit field ``[16*k, 16*k+16)``.  Monomial multiplication is
  integer addition; divisibility is a guard-bit subtraction (exponents must
  stay below 2**15, far above anything this package produces).
* Coefficients are ``gmpy2.mpq`` when real, ``(mpq, mpq)`` pairs when they
  carry an imaginary part.  :class:`GaussianRational` is the public view.
* Denominators are kept factored.  Each distinct factor polynomial is
  registered once (monic under graded lex, unit content) and a rational
  function's denominator is a multiset of factor ids.  Cancellation is trial
  division of the numerator by registered factors, so no general multivariate
  gcd is needed on the hot path; novel user-supplied divisors are factored
  once at registration.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence, Union

from gmpy2 import mpq

__all__ = [
    "AlgebraError",
    "DivisionByZero",
    "SingularSubstitution",
    "GaussianRational",
    "GENERATORS",
    "Polynomial",
    "RationalFunction",
    "arith",
    "partial_derivative",
    "substitute",
    "poly",
    "rf",
    "gen",
    "one",
    "zero",
]


class AlgebraError(Exception):
    """Base class for exact-arithmetic failures."""


class DivisionByZero(AlgebraError):
    """Raised when dividing by the zero polynomial or rational function."""


class SingularSubstitution(AlgebraError):
    """Raised when a substitution annihilates a denominator."""

    def __init__(self, binding: str):
        self.binding = binding
        super().__init__(f"substitution {binding} makes a denominator vanish")


# ---------------------------------------------------------------------------
# coefficient arithmetic: mpq for real values, (re, im) mpq pairs otherwise

_Q0 = mpq(0)
_Q1 = mpq(1)

Coef = Union[mpq, tuple]


def _c_norm(re, im) -> Coef:
    return mpq(re) if not im else (mpq(re), mpq(im))


def _c_add(a: Coef, b: Coef) -> Coef:
    ta = type(a) is tuple
    tb = type(b) is tuple
    if not (ta or tb):
        return a + b
    ar, ai = a if ta else (a, _Q0)
    br, bi = b if tb else (b, _Q0)
    return _c_norm(ar + br, ai + bi)


def _c_mul(a: Coef, b: Coef) -> Coef:
    ta = type(a) is tuple
    tb = type(b) is tuple
    if not (ta or tb):
        return a * b
    ar, ai = a if ta else (a, _Q0)
    br, bi = b if tb else (b, _Q0)
    return _c_norm(ar * br - ai * bi, ar * bi + ai * br)


def _c_neg(a: Coef) -> Coef:
    if type(a) is tuple:
        return (-a[0], -a[1])
    return -a


def _c_inv(a: Coef) -> Coef:
    if type(a) is tuple:
        n = a[0] * a[0] + a[1] * a[1]
        return _c_norm(a[0] / n, -a[1] / n)
    if not a:
        raise DivisionByZero("1/0 in coefficient field")
    return 1 / a


def _c_is_zero(a: Coef) -> bool:
    if type(a) is tuple:
        return not a[0] and not a[1]
    return not a


def _c_key(a: Coef):
    # deterministic sort key (re, im) used by the serializer
    if type(a) is tuple:
        return (a[0], a[1])
    return (a, _Q0)


class GaussianRational:
    """An element of Q(i) in canonical reduced form.

    Both parts are arbitrary-precision rationals kept reduced by ``mpq``;
    equality is structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussianRational is immutable")

    def _raw(self) -> Coef:
        return _c_norm(self.re, self.im)

    @staticmethod
    def _from_raw(c: Coef) -> "GaussianRational":
        if type(c) is tuple:
            return GaussianRational(c[0], c[1])
        return GaussianRational(c)

    def __add__(self, other):
        if not isinstance(other, (GaussianRational, int, type(_Q0))):
            return NotImplemented
        other = other if isinstance(other, GaussianRational) else GaussianRational(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (GaussianRational, int, type(_Q0))):
            return NotImplemented
        return self + (-(other if isinstance(other, GaussianRational) else GaussianRational(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (GaussianRational, int, type(_Q0))):
            return NotImplemented
        other = other if isinstance(other, GaussianRational) else GaussianRational(other)
        return GaussianRational._from_raw(_c_mul(self._raw(), other._raw()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (GaussianRational, int, type(_Q0))):
            return NotImplemented
        other = other if isinstance(other, GaussianRational) else GaussianRational(other)
        if other.is_zero():
            raise DivisionByZero("division by zero Gaussian rational")
        return self * GaussianRational._from_raw(_c_inv(other._raw()))

    def __pow__(self, n: int):
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_Q0))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


I = GaussianRational(0, 1)

# ---------------------------------------------------------------------------
# the fixed generator list (defines packing layout and the graded-lex order)

GENERATORS: tuple = tuple(
    ["xi", "eta", "hbar", "alpha", "beta", "gamma", "B1", "B2"]
    + ["cm6", "cm4", "cm2"]
    + [f"c{j}" for j in range(17)]
    + ["dm6", "dm4", "dm2"]
    + [f"d{j}" for j in range(17)]
    + ["alpha1", "alpha2", "beta1", "beta2"]
    + ["A300", "A210", "A201", "A120", "A111", "A102", "A030", "A021", "A012", "A003"]
    + ["k1", "k2", "k3"]
    # auxiliary charts: Cartesian (x, y) and polar (r, ct = cos theta,
    # st = sin theta) used by the coordinate-gate conditions
    + ["x", "y", "r", "ct", "st"]
)

NGEN = len(GENERATORS)
_GIDX = {name: k for k, name in enumerate(GENERATORS)}
_W = 16
_GUARD = sum(1 << (_W * k + _W - 1) for k in range(NGEN))
_FIELD = (1 << _W) - 1


def _pack(exps: Mapping[int, int]) -> int:
    m = 0
    for k, e in exps.items():
        if e:
            m |= e << (_W * k)
    return m


def _unpack(m: int) -> tuple:
    out = [0] * NGEN
    k = 0
    while m:
        out[k] = m & _FIELD
        m >>= _W
        k += 1
    return tuple(out)


def _mono_divides(a: int, b: int) -> bool:
    """True if monomial ``a`` divides ``b`` (componentwise exponents)."""
    return ((b | _GUARD) - a) & _GUARD == _GUARD


def _grlex_key(m: int):
    e = _unpack(m)
    return (sum(e), e)


# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse multivariate polynomial over Q(i) on the fixed generator list.

    ``terms`` maps packed exponent monomials to nonzero coefficients; no zero
    coefficient is ever stored, so structural equality is value equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None, _trusted: bool = False):
        if terms is None:
            terms = {}
        if not _trusted:
            terms = {m: c for m, c in terms.items() if not _c_is_zero(c)}
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c) -> "Polynomial":
        c = _coef_of(c)
        return Polynomial({} if _c_is_zero(c) else {0: c}, _trusted=True)

    @staticmethod
    def generator(name: str) -> "Polynomial":
        return Polynomial({1 << (_W * _GIDX[name]): _Q1}, _trusted=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def is_real(self) -> bool:
        return all(type(c) is not tuple for c in self.terms.values())

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise AlgebraError("not a constant polynomial")
        return GaussianRational._from_raw(self.terms.get(0, _Q0))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one generator; zero poly has degree 0."""
        if not self.terms:
            return 0
        if name is None:
            return max(sum(_unpack(m)) for m in self.terms)
        k = _GIDX[name]
        return max((m >> (_W * k)) & _FIELD for m in self.terms)

    def coefficients(self) -> Iterable[tuple]:
        """Iterate (exponent tuple, GaussianRational) pairs, grlex descending."""
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            yield _unpack(m), GaussianRational._from_raw(self.terms[m])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if not _coercible(other) or isinstance(other, RationalFunction):
                return NotImplemented
            other = Polynomial.constant(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            s = _c_add(out.get(m, _Q0), c)
            if _c_is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: _c_neg(c) for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            if not _coercible(other) or isinstance(other, RationalFunction):
                return NotImplemented
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if not _coercible(other) or isinstance(other, RationalFunction):
                return NotImplemented
            other = Polynomial.constant(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial()
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            if type(cb) is tuple:
                for ma, ca in a.items():
                    m = ma + mb
                    s = _c_add(get(m, _Q0), _c_mul(ca, cb))
                    if _c_is_zero(s):
                        out.pop(m, None)
                    else:
                        out[m] = s
            else:
                for ma, ca in a.items():
                    m = ma + mb
                    cur = get(m, _Q0)
                    if type(ca) is tuple or type(cur) is tuple:
                        s = _c_add(cur, _c_mul(ca, cb))
                    else:
                        s = cur + ca * cb
                    if _c_is_zero(s):
                        out.pop(m, None)
                    else:
                        out[m] = s
        return Polynomial({m: c for m, c in out.items() if not _c_is_zero(c)}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative power of a polynomial; use RationalFunction")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, GaussianRational, type(_Q0))):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus / evaluation ---------------------------------------------

    def diff(self, name: str) -> "Polynomial":
        k = _GIDX[name]
        shift = _W * k
        out = {}
        for m, c in self.terms.items():
            e = (m >> shift) & _FIELD
            if e:
                out[m - (1 << shift)] = _c_mul(c, mpq(e))
        return Polynomial(out, _trusted=True)

    def eval_poly(self, values: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Simultaneous substitution of polynomials for generators."""
        idx = {_GIDX[n]: v for n, v in values.items()}
        pows: dict = {}

        def power(k: int, e: int) -> Polynomial:
            key = (k, e)
            if key not in pows:
                pows[key] = idx[k] ** e
            return pows[key]

        out = Polynomial()
        for m, c in self.terms.items():
            term = Polynomial.constant(GaussianRational._from_raw(c))
            rest = 0
            k = 0
            mm = m
            while mm:
                e = mm & _FIELD
                if e:
                    if k in idx:
                        term = term * power(k, e)
                    else:
                        rest |= e << (_W * k)
                mm >>= _W
                k += 1
            if rest:
                term = term * Polynomial({rest: _Q1}, _trusted=True)
            out = out + term
        return out

    def eval_float(self, values: Mapping[str, complex]) -> complex:
        """Numerical evaluation; every generator present must have a value."""
        idx = {}
        for n, v in values.items():
            idx[_GIDX[n]] = complex(v)
        total = 0j
        for m, c in self.terms.items():
            if type(c) is tuple:
                val = complex(float(c[0]), float(c[1]))
            else:
                val = complex(float(c))
            k = 0
            mm = m
            while mm:
                e = mm & _FIELD
                if e:
                    if k not in idx:
                        raise AlgebraError(f"no value for generator {GENERATORS[k]}")
                    val *= idx[k] ** e
                mm >>= _W
                k += 1
            total += val
        return total

    # -- leading data / division -------------------------------------------

    def leading(self) -> tuple:
        """(monomial, coefficient) of the grlex-leading term."""
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def monic(self) -> tuple:
        """Return (scale, monic polynomial) with grlex-leading coefficient 1."""
        m, c = self.leading()
        inv = _c_inv(c)
        return GaussianRational._from_raw(c), Polynomial(
            {mm: _c_mul(cc, inv) for mm, cc in self.terms.items()}, _trusted=True
        )

    def monomial_content(self) -> int:
        """Largest monomial dividing every term (packed)."""
        if not self.terms:
            return 0
        fields = None
        for m in self.terms:
            e = _unpack(m)
            fields = e if fields is None else tuple(map(min, fields, e))
            if not any(fields):
                return 0
        return _pack({k: e for k, e in enumerate(fields) if e})

    def divide_monomial(self, mono: int) -> "Polynomial":
        return Polynomial({m - mono: c for m, c in self.terms.items()}, _trusted=True)

    def exact_div(self, g: "Polynomial") -> "Polynomial | None":
        """Exact division self/g, or None if g does not divide self."""
        if g.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if g.is_constant():
            inv = _c_inv(g.terms[0])
            return Polynomial({m: _c_mul(c, inv) for m, c in self.terms.items()}, _trusted=True)
        rem = dict(self.terms)
        mg, cg = g.leading()
        cg_inv = _c_inv(cg)
        gterms = list(g.terms.items())
        q: dict = {}
        # bounded by the number of quotient terms; admissible order => terminates
        while rem:
            m = max(rem, key=_grlex_key)
            if not _mono_divides(mg, m):
                return None
            qm = m - mg
            qc = _c_mul(rem[m], cg_inv)
            q[qm] = qc
            for mm, cc in gterms:
                key = qm + mm
                s = _c_add(rem.get(key, _Q0), _c_neg(_c_mul(qc, cc)))
                if _c_is_zero(s):
                    rem.pop(key, None)
                else:
                    rem[key] = s
        return Polynomial(q, _trusted=True)

    def conjugate(self) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            out[m] = (c[0], -c[1]) if type(c) is tuple else c
        return Polynomial(out, _trusted=True)

    # -- printing ------------------------------------------------------------

    def __repr__(self):
        return poly_str(self)


def _coef_of(c) -> Coef:
    if isinstance(c, GaussianRational):
        return c._raw()
    if type(c) is tuple:
        return _c_norm(c[0], c[1])
    return mpq(c)


def _coef_str(c: Coef) -> str:
    g = GaussianRational._from_raw(c)
    return repr(g)


def poly_str(p: Polynomial) -> str:
    """Deterministic text form: graded-lex descending, explicit ^ and *."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.coefficients():
        factors = []
        for k, e in enumerate(exps):
            if e:
                factors.append(GENERATORS[k] if e == 1 else f"{GENERATORS[k]}^{e}")
        if not factors:
            parts.append(_coef_str(c._raw()))
        elif c == 1:
            parts.append("*".join(factors))
        elif c == GaussianRational(-1):
            parts.append("-" + "*".join(factors))
        else:
            parts.append(_coef_str(c._raw()) + "*" + "*".join(factors))
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") and not t.startswith("(-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# denominator factor registry


class _FactorRegistry:
    """Registry of monic, content-free denominator factors.

    Factor ids are dense integers; ``by_hash`` maps a polynomial to its id so
    the same factor is never registered twice.  The generators themselves are
    pre-registered (ids 0..NGEN-1) because coordinate powers are by far the
    most common denominators.
    """

    def __init__(self):
        self.polys: list[Polynomial] = []
        self.by_hash: dict = {}
        for name in GENERATORS:
            self._add(Polynomial.generator(name))

    def _add(self, p: Polynomial) -> int:
        fid = self.by_hash.get(p)
        if fid is None:
            fid = len(self.polys)
            self.polys.append(p)
            self.by_hash[p] = fid
        return fid

    def register(self, p: Polynomial) -> tuple:
        """Factor ``p`` and return (scale, ((factor_id, exp), ...)).

        ``p`` must be nonzero.  The scale times the product of the factors
        reproduces ``p`` exactly.
        """
        if p.is_zero():
            raise DivisionByZero("cannot register zero as a denominator factor")
        scale = GaussianRational(1)
        out: dict[int, int] = {}
        mono = p.monomial_content()
        if mono:
            p = p.divide_monomial(mono)
            k = 0
            mm = mono
            while mm:
                e = mm & _FIELD
                if e:
                    out[k] = out.get(k, 0) + e
                mm >>= _W
                k += 1
        c, p = p.monic()
        scale = scale * c
        if p.is_constant():
            return scale, tuple(sorted(out.items()))
        fid = self.by_hash.get(p)
        if fid is not None:
            out[fid] = out.get(fid, 0) + 1
            return scale, tuple(sorted(out.items()))
        for fac, mult in self._split(p):
            c, fac = fac.monic()
            scale = scale * c**mult
            fid = self._add(fac)
            out[fid] = out.get(fid, 0) + mult
        return scale, tuple(sorted(out.items()))

    def _split(self, p: Polynomial) -> list:
        """Factor a monic content-free polynomial into irreducibles.

        Falls back to sympy for genuinely new factor polynomials; inputs here
        are small (denominators are built from short expressions, never from
        bulk numerators).
        """
        if len(p.terms) > 400:
            # guarded: treat as atomic rather than risk a factorization blowup
            return [(p, 1)]
        try:
            return _sympy_factor(p)
        except Exception:
            return [(p, 1)]

    def poly_of(self, fid: int) -> Polynomial:
        return self.polys[fid]


def _sympy_factor(p: Polynomial) -> list:
    import sympy

    used = sorted({k for m in p.terms for k, e in enumerate(_unpack(m)) if e})
    syms = {k: sympy.Symbol(GENERATORS[k]) for k in used}
    expr = 0
    complex_coeffs = not p.is_real()
    for m, c in p.terms.items():
        g = GaussianRational._from_raw(c)
        co = sympy.Rational(str(g.re)) + sympy.Rational(str(g.im)) * sympy.I
        term = co
        for k, e in enumerate(_unpack(m)):
            if e:
                term *= syms[k] ** e
        expr += term
    kwargs = {"gaussian": True} if complex_coeffs else {}
    _, factors = sympy.factor_list(expr, *[syms[k] for k in used], **kwargs)
    out = []
    for fac, mult in factors:
        fp = sympy.Poly(fac, *[syms[k] for k in used])
        q = Polynomial()
        names = [str(s) for s in fp.gens]
        for mono_exps, co in fp.terms():
            co = sympy.nsimplify(co)
            re, im = co.as_real_imag()
            coeff = GaussianRational(mpq(re.p, re.q), mpq(im.p, im.q))
            packed = _pack({_GIDX[names[j]]: e for j, e in enumerate(mono_exps) if e})
            q = q + Polynomial({packed: coeff._raw()})
        out.append((q, mult))
    return out


_REGISTRY = _FactorRegistry()


# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials, canonically reduced.

    Invariants: the denominator is nonzero, monic under graded lex, stored as
    a multiset of registered irreducible factors none of which divides the
    numerator, and gcd(numerator, denominator) = 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: tuple = (), _trusted: bool = False):
        if not _trusted:
            num, den = _cancel(num, den)
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_polynomial(p: Polynomial) -> "RationalFunction":
        return RationalFunction(p, (), _trusted=True)

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction(Polynomial.constant(c), (), _trusted=True)

    @staticmethod
    def generator(name: str) -> "RationalFunction":
        return RationalFunction(Polynomial.generator(name), (), _trusted=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise AlgebraError("not a constant")
        return self.num.constant_value()

    def numerator(self) -> Polynomial:
        return self.num

    def denominator(self) -> Polynomial:
        return _den_poly(self.den)

    # -- field operations ------------------------------------------------------

    def __add__(self, other):
        if not _coercible(other):
            return NotImplemented
        other = _as_rf(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        lcm, up_a, up_b = _den_lcm(self.den, other.den)
        num = self.num * _den_poly(up_a) + other.num * _den_poly(up_b)
        return RationalFunction(num, lcm)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _trusted=True)

    def __sub__(self, other):
        if not _coercible(other):
            return NotImplemented
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not _coercible(other):
            return NotImplemented
        other = _as_rf(other)
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction(Polynomial(), (), _trusted=True)
        # cross-cancel before multiplying to keep numerators small
        na, db = _cancel(self.num, other.den)
        nb, da = _cancel(other.num, self.den)
        return RationalFunction(na * nb, _den_mul(da, db), _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _coercible(other):
            return NotImplemented
        other = _as_rf(other)
        if other.num.is_zero():
            raise DivisionByZero("division by zero rational function")
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def reciprocal(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("reciprocal of zero")
        scale, factors = _REGISTRY.register(self.num)
        num = _den_poly(self.den) * RationalFunction.constant(
            GaussianRational(1) / scale
        ).num
        return RationalFunction(num, factors)

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        result = RationalFunction.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Polynomial, int, GaussianRational)):
            other = _as_rf(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    # -- calculus ------------------------------------------------------------

    def diff(self, name: str, order: int = 1) -> "RationalFunction":
        if order < 1:
            raise AlgebraError("derivative order must be a positive integer")
        out = self
        for _ in range(order):
            out = _diff_once(out, name)
        return out

    def substitute(self, bindings: Mapping[str, "RationalFunction | Polynomial | int"]) -> "RationalFunction":
        """Exact simultaneous substitution; errors if a denominator vanishes."""
        vals = {n: _as_rf(v) for n, v in bindings.items()}
        num = _poly_subst(self.num, vals)
        den = RationalFunction.constant(1)
        for fid, e in self.den:
            fv = _poly_subst(_REGISTRY.poly_of(fid), vals)
            if fv.is_zero():
                raise SingularSubstitution(
                    ", ".join(f"{n} -> {v!r}" for n, v in bindings.items())
                )
            den = den * fv**e
        if den.is_zero():
            raise SingularSubstitution(str(dict(bindings)))
        return num / den

    def is_real(self) -> bool:
        return self.num.is_real() and all(
            _REGISTRY.poly_of(fid).is_real() for fid, _ in self.den
        )

    def eval_float(self, values: Mapping[str, complex]) -> complex:
        den = 1 + 0j
        for fid, e in self.den:
            den *= _REGISTRY.poly_of(fid).eval_float(values) ** e
        if den == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.eval_float(values) / den

    def __repr__(self):
        if not self.den:
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.denominator())})"


_SCALARS = (int, GaussianRational, type(_Q0))


def _coercible(v) -> bool:
    return isinstance(v, (RationalFunction, Polynomial) + _SCALARS)


def _as_rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction.from_polynomial(v)
    return RationalFunction.constant(v)


def _poly_subst(p: Polynomial, vals: Mapping[str, RationalFunction]) -> RationalFunction:
    pows: dict = {}

    def power(name: str, e: int) -> RationalFunction:
        key = (name, e)
        if key not in pows:
            pows[key] = vals[name] ** e
        return pows[key]

    out = RationalFunction.constant(0)
    for m, c in p.terms.items():
        term = RationalFunction.constant(GaussianRational._from_raw(c))
        rest = 0
        k = 0
        mm = m
        while mm:
            e = mm & _FIELD
            if e:
                name = GENERATORS[k]
                if name in vals:
                    term = term * power(name, e)
                else:
                    rest |= e << (_W * k)
            mm >>= _W
            k += 1
        if rest:
            term = term * RationalFunction(Polynomial({rest: _Q1}, _trusted=True), (), _trusted=True)
        out = out + term
    return out


def _den_poly(den: tuple) -> Polynomial:
    out = Polynomial.constant(1)
    for fid, e in den:
        out = out * _REGISTRY.poly_of(fid) ** e
    return out


def _den_mul(a: tuple, b: tuple) -> tuple:
    d = dict(a)
    for fid, e in b:
        d[fid] = d.get(fid, 0) + e
    return tuple(sorted(d.items()))


def _den_lcm(a: tuple, b: tuple) -> tuple:
    da, db = dict(a), dict(b)
    lcm = dict(da)
    for fid, e in db.items():
        lcm[fid] = max(lcm.get(fid, 0), e)
    up_a = tuple(sorted((fid, e - da.get(fid, 0)) for fid, e in lcm.items() if e > da.get(fid, 0)))
    up_b = tuple(sorted((fid, e - db.get(fid, 0)) for fid, e in lcm.items() if e > db.get(fid, 0)))
    return tuple(sorted(lcm.items())), up_a, up_b


def _cancel(num: Polynomial, den: tuple) -> tuple:
    """Cancel registered denominator factors out of the numerator."""
    if num.is_zero():
        return num, ()
    out = []
    for fid, e in den:
        f = _REGISTRY.poly_of(fid)
        while e > 0:
            q = num.exact_div(f)
            if q is None:
                break
            num = q
            e -= 1
        if e:
            out.append((fid, e))
    return num, tuple(out)


def _diff_once(f: RationalFunction, name: str) -> RationalFunction:
    dnum = f.num.diff(name)
    if not f.den:
        return RationalFunction(dnum, (), _trusted=True)
    # d(n/D) = n'/D - n * sum_i e_i f_i' / (f_i D)
    out = RationalFunction(dnum, f.den)
    for fid, e in f.den:
        fp = _REGISTRY.poly_of(fid).diff(name)
        if fp.is_zero():
            continue
        den = _den_mul(f.den, ((fid, 1),))
        out = out + RationalFunction(f.num * fp * Polynomial.constant(-e), den)
    return out


# ---------------------------------------------------------------------------
# module-level operation surface


def gen(name: str) -> RationalFunction:
    """The generator ``name`` as a rational function."""
    return RationalFunction.generator(name)


def poly(spec: Mapping[str, int] | str, coeff=1) -> Polynomial:
    """Convenience constructor: ``poly({'xi': 2, 'eta': 1}, coeff)``."""
    if isinstance(spec, str):
        spec = {spec: 1}
    packed = _pack({_GIDX[n]: e for n, e in spec.items()})
    c = _coef_of(coeff)
    return Polynomial({packed: c} if not _c_is_zero(c) else {}, _trusted=True)


def rf(spec, coeff=1) -> RationalFunction:
    return RationalFunction.from_polynomial(poly(spec, coeff))


one = RationalFunction.constant(1)
zero = RationalFunction.constant(0)


def arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Exact field arithmetic; ``op`` is one of add/sub/mul/div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise AlgebraError(f"unknown operation {op!r}")


def partial_derivative(f: RationalFunction, var: str, order: int = 1) -> RationalFunction:
    """Exact iterated partial derivative with respect to one generator."""
    if var not in _GIDX:
        raise AlgebraError(f"unknown generator {var!r}")
    return f.diff(var, order)


def substitute(f: RationalFunction, bindings: Mapping[str, RationalFunction]) -> RationalFunction:
    return f.substitute(bindings)
