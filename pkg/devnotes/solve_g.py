"""Dev: solve the first-order system for the G functions with a rational
ansatz, then pin the remaining freedom via the operator commutator. Used to
reconstruct misprinted G-parts of catalog entries."""

import sys
sys.path.insert(0, 'devnotes')
import random
from gmpy2 import mpq
from paraint.algebra import gen, one, zero, GaussianRational, GENERATORS, RationalFunction, Polynomial, poly
from paraint.phase import IntegralSpec, build_X, hamiltonian, op_commutator
from paraint.determining import residuals, f_quad, h_terms
from paraint.extension import as_tower

I = GaussianRational(0, 1)


def monomial_basis(amin, amax, bmin, bmax, weights):
    """G-ansatz basis: w * xi^a * eta^b for a in [amin,amax], b in [bmin,bmax]."""
    xi, eta = gen('xi'), gen('eta')
    out = []
    for w in weights:
        for a in range(amin, amax + 1):
            for b in range(bmin, bmax + 1):
                out.append(w * xi**a * eta**b if a >= 0 and b >= 0 else
                           w * (xi**a if a >= 0 else one/gen('xi')**(-a)) *
                           (eta**b if b >= 0 else one/gen('eta')**(-b)))
    return out


def ev_c(r, vals):
    def evp(p):
        re = mpq(0); im = mpq(0)
        for m, c in p.terms.items():
            if type(c) is tuple:
                vre, vim = c
            else:
                vre, vim = c, mpq(0)
            mm = m; k = 0
            while mm:
                e = mm & 0xFFFF
                if e:
                    x = vals[GENERATORS[k]]
                    for _ in range(e):
                        vre, vim = vre * x, vim * x
                mm >>= 16; k += 1
            re += vre; im += vim
        return re, im
    nre, nim = evp(r.numerator())
    dre, dim = evp(r.denominator())
    den = dre * dre + dim * dim
    if den == 0:
        raise ZeroDivisionError
    return ((nre * dre + nim * dim) / den, (nim * dre - nre * dim) / den)


def cmulq(a, b):
    return (a[0]*b[0] - a[1]*b[1], a[0]*b[1] + a[1]*b[0])


def solve_linear(rows, rhs):
    """Exact complex-rational least-structure solve; returns (sol, kernel)."""
    n = len(rows[0])
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv = []
    rr = 0
    zero2 = (mpq(0), mpq(0))
    for c in range(n):
        pr = next((i for i in range(rr, len(m)) if m[i][c] != zero2), None)
        if pr is None:
            continue
        m[rr], m[pr] = m[pr], m[rr]
        pv = m[rr][c]
        d = pv[0]*pv[0] + pv[1]*pv[1]
        inv = (pv[0]/d, -pv[1]/d)
        m[rr] = [cmulq(x, inv) for x in m[rr]]
        for i in range(len(m)):
            if i != rr and m[i][c] != zero2:
                f = m[i][c]
                m[i] = [(a[0]-cmulq(f, b)[0], a[1]-cmulq(f, b)[1]) for a, b in zip(m[i], m[rr])]
        piv.append(c)
        rr += 1
    for row in m:
        if all(x == zero2 for x in row[:-1]) and row[-1] != zero2:
            return None, None
    sol = [zero2] * n
    for i, c in enumerate(piv):
        sol[c] = m[i][-1]
    kernel = []
    for fc in [c for c in range(n) if c not in piv]:
        v = [zero2] * n
        v[fc] = (mpq(1), mpq(0))
        for i, pc in enumerate(piv):
            v[pc] = (-m[i][fc][0], -m[i][fc][1])
        kernel.append(v)
    return sol, kernel


def combine(basis, coeffs):
    out = zero
    for b, c in zip(basis, coeffs):
        if c == (mpq(0), mpq(0)):
            continue
        w = RationalFunction.constant(GaussianRational(c[0], c[1]))
        out = out + w * b
    return out


def solve_G(V, Amap, basis1, basis2, val_names, seed=0, npts=None, commutator=True):
    """Solve r1-r3 (+ [H,X]=0 if commutator) for G's in the given ansatz."""
    unknowns = len(basis1) + len(basis2)
    rng = random.Random(seed)
    rows, rhs = [], []

    def add_equations(rescalc, count):
        pts = 0
        while pts < count:
            vals = {g: mpq(rng.randint(2, 40), rng.randint(1, 9)) for g in val_names}
            try:
                for eq in rescalc:
                    base = eq['const'](vals)
                    row = [eq['col'](j, vals) for j in range(unknowns)]
                    rows.append(row)
                    rhs.append((-base[0], -base[1]))
            except ZeroDivisionError:
                continue
            pts += 1

    # r1-r3: residual(A, G) = E(G) - h(A); linear in G-coefficients
    xi, eta = gen('xi'), gen('eta')
    r2 = xi**2 + eta**2
    F = f_quad(Amap)
    base_res = [-h.as_rational() for h in h_terms(F, V)]
    cols = []
    for b in basis1:
        rot = (xi * b) / r2
        cols.append([b.diff('xi') - rot, b.diff('eta') - 2 * (eta * b) / r2, rot])
    for b in basis2:
        rot = (eta * b) / r2
        cols.append([rot, b.diff('xi') - 2 * (xi * b) / r2, b.diff('eta') - rot])

    eqs = []
    for i in range(3):
        eqs.append({
            'const': (lambda i: lambda vals: ev_c(base_res[i], vals))(i),
            'col': (lambda i: lambda j, vals: ev_c(cols[j][i], vals))(i),
        })
    add_equations(eqs, npts or (unknowns // 2 + 6))
    sol, kernel = solve_linear(rows, rhs)
    if sol is None:
        return None, None
    if not commutator:
        return sol, kernel

    # commutator (0,0) condition on top: compute base and columns
    def comm00(G1, G2):
        spec = IntegralSpec(A=Amap, G1=G1, G2=G2)
        Z = op_commutator(hamiltonian(V), build_X(spec))
        t = Z.terms.get((0, 0))
        return zero if t is None or t.is_zero() else t.as_rational()

    Gp1 = combine(basis1, sol[:len(basis1)])
    Gp2 = combine(basis2, sol[len(basis1):])
    # verify r1-r3 really solved
    st = residuals(V, IntegralSpec(A=Amap, G1=Gp1, G2=Gp2)).status()
    assert st['r1'] and st['r2'] and st['r3'], st
    base00 = comm00(Gp1, Gp2)
    kcols = []
    for kv in kernel:
        K1 = combine(basis1, kv[:len(basis1)])
        K2 = combine(basis2, kv[len(basis1):])
        spec = IntegralSpec(A={}, G1=K1, G2=K2)
        Z = op_commutator(hamiltonian(V), build_X(spec))
        t = Z.terms.get((0, 0))
        kcols.append(zero if t is None or t.is_zero() else t.as_rational())
    rows2, rhs2 = [], []
    pts = 0
    while pts < max(4, len(kernel) + 2):
        vals = {g: mpq(rng.randint(2, 40), rng.randint(1, 9)) for g in val_names}
        try:
            b = ev_c(base00, vals) if not isinstance(base00, RationalFunction) or not base00.is_zero() else (mpq(0), mpq(0))
            row = [ev_c(kc, vals) if not kc.is_zero() else (mpq(0), mpq(0)) for kc in kcols]
        except ZeroDivisionError:
            continue
        rows2.append(row)
        rhs2.append((-b[0], -b[1]))
        pts += 1
    sol2, kernel2 = solve_linear(rows2, rhs2)
    if sol2 is None:
        return None, None
    final = list(sol)
    for kv, c in zip(kernel, sol2):
        for idx in range(unknowns):
            final[idx] = (final[idx][0] + cmulq(c, kv[idx])[0], final[idx][1] + cmulq(c, kv[idx])[1])
    G1f = combine(basis1, final[:len(basis1)])
    G2f = combine(basis2, final[len(basis1):])
    spec = IntegralSpec(A=Amap, G1=G1f, G2=G2f)
    ok = op_commutator(hamiltonian(V), build_X(spec)).is_zero()
    return (G1f, G2f), (ok, kernel2)
