"""Dev-only calibration: pin convention flags and transcription variants
against the first catalog entries. Not part of the package."""

import time

from paraint.algebra import gen, one, zero, GaussianRational
from paraint.extension import as_tower
from paraint.phase import (
    IntegralSpec, Conventions, build_X, hamiltonian, op_commutator,
    classical_limit, hamiltonian_classical, poisson_bracket,
)
from paraint.determining import (
    f_quad, h_terms, residuals, linear_cc, nonlinear_residuals, phi, A_NAMES,
)

xi, eta, hbar = gen('xi'), gen('eta'), gen('hbar')
al, be, ga = gen('alpha'), gen('beta'), gen('gamma')
r2 = xi**2 + eta**2

A012, A021, A210, A102 = gen('A012'), gen('A021'), gen('A210'), gen('A102')

V1 = (eta**4 - xi**2*eta**2 + xi**4)*al + be*(xi**2-eta**2) + ga/(xi**2*eta**2)
G1_V1 = 2*A012*(-2*al*xi**2*eta**6 + eta**4*al*xi**4 + eta**4*be*xi**2 + ga)/(xi*eta**2)
G2_V1 = -2*A012*(-2*eta**2*al*xi**6 + eta**4*al*xi**4 - eta**2*be*xi**4 + ga)/(eta*xi**2)

V2 = (al/xi**2 + be/eta**2 + ga)/r2
G1_V2 = A210*(2*eta**4*ga*xi**2 + 2*eta**4*al + 4*xi**2*be*eta**2 - eta**2*xi**2*hbar**2 + 2*xi**4*be)/(4*xi*eta**2)
G2_V2 = -A210*(2*xi**4*be + 2*xi**4*ga*eta**2 + 4*xi**2*al*eta**2 - eta**2*xi**2*hbar**2 + 2*eta**4*al)/(4*eta*xi**2)

V3 = (al*xi + be*eta + ga)/r2
G1_V3 = -(one/2)*A102*(-be*xi**2 + be*eta**2 + 2*eta*al*xi + 2*eta*ga)
G2_V3 = (one/2)*A102*(al*xi**2 - al*eta**2 + 2*xi*ga + 2*eta*xi*be)

entries = [
    ("V1(A012)", V1, {(0,1,2): A012}, G1_V1, G2_V1),
    ("V1(A021)", V1, {(0,2,1): A021}, G1_V1.substitute({'A012': A021}), G2_V1.substitute({'A012': A021})),
    ("V2", V2, {(2,1,0): A210}, G1_V2, G2_V2),
    ("V3", V3, {(1,0,2): A102}, G1_V3, G2_V3),
]

print("=== operator commutator [H, X] (phi-independent) ===")
for hh in (False, True):
    conv = Conventions(hamiltonian_half=hh)
    for name, V, A, G1, G2 in entries:
        spec = IntegralSpec(A=A, G1=G1, G2=G2)
        t0 = time.time()
        X = build_X(spec, conv)
        c = op_commutator(hamiltonian(V, conv), X)
        print(f"  ham_half={hh} {name}: [H,X]=0? {c.is_zero()}  ({time.time()-t0:.2f}s)")

print("=== r1..r3 (phi-independent) ===")
for name, V, A, G1, G2 in entries:
    spec = IntegralSpec(A=A, G1=G1, G2=G2)
    res = residuals(V, spec)
    print(f"  {name}: r1={res.r1.is_zero()} r2={res.r2.is_zero()} r3={res.r3.is_zero()} cc={res.cc.is_zero()}")

print("=== r4 with phi as implemented ===")
for name, V, A, G1, G2 in entries:
    spec = IntegralSpec(A=A, G1=G1, G2=G2)
    res = residuals(V, spec)
    print(f"  {name}: r4={res.r4.is_zero()}")
    if not res.r4.is_zero():
        d = res.r4
        print("   nonzero r4 sample:", repr(d)[:200])

print("=== nonlinear n1..n3 ===")
for name, V, A, G1, G2 in entries:
    try:
        n1, n2, n3 = nonlinear_residuals(V, A)
        print(f"  {name}: n1={n1.is_zero()} n2={n2.is_zero()} n3={n3.is_zero()}")
    except Exception as e:
        print(f"  {name}: {type(e).__name__}: {e}")
