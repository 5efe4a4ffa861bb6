"""Dev: verbatim catalog data transcriptions for calibration experiments."""

from paraint.algebra import gen, one, zero, GaussianRational

I = GaussianRational(0, 1)
xi, eta, hbar = gen('xi'), gen('eta'), gen('hbar')
al, be, ga = gen('alpha'), gen('beta'), gen('gamma')
k1 = gen('k1')
r2 = xi**2 + eta**2
h2 = hbar**2

A = {n: gen(n) for n in
     ['A300','A210','A201','A120','A111','A102','A030','A021','A012','A003']}


def entry_V1():
    V = (eta**4 - xi**2*eta**2 + xi**4)*al + be*(xi**2 - eta**2) + ga/(xi**2*eta**2)
    G1 = 2*A['A012']*(-2*al*xi**2*eta**6 + eta**4*al*xi**4 + eta**4*be*xi**2 + ga)/(xi*eta**2)
    G2 = -2*A['A012']*(-2*eta**2*al*xi**6 + eta**4*al*xi**4 - eta**2*be*xi**4 + ga)/(eta*xi**2)
    return V, {(0,1,2): A['A012']}, G1, G2


def entry_V2():
    V = (al/xi**2 + be/eta**2 + ga)/r2
    G1 = A['A210']*(2*eta**4*ga*xi**2 + 2*eta**4*al + 4*xi**2*be*eta**2 - eta**2*xi**2*h2 + 2*xi**4*be)/(4*xi*eta**2)
    G2 = -A['A210']*(2*xi**4*be + 2*xi**4*ga*eta**2 + 4*xi**2*al*eta**2 - eta**2*xi**2*h2 + 2*eta**4*al)/(4*eta*xi**2)
    return V, {(2,1,0): A['A210']}, G1, G2


def entry_V3():
    V = (al*xi + be*eta + ga)/r2
    G1 = -(one/2)*A['A102']*(-be*xi**2 + be*eta**2 + 2*eta*al*xi + 2*eta*ga)
    G2 = (one/2)*A['A102']*(al*xi**2 - al*eta**2 + 2*xi*ga + 2*eta*xi*be)
    # label pairing found by verification: A120 = A102
    return V, {(1,0,2): A['A102'], (1,2,0): A['A102']}, G1, G2


def entry_V1a():
    V = be*(xi**2 - eta**2) + h2/(xi**2*eta**2)
    G1 = (-(3*h2*eta**2 - h2*xi**2 + 2*eta**4*xi**4*be)*A['A102']/(2*eta*xi**2)
          + 3*h2*A['A003']/(eta*xi**2)
          + 2*(eta**4*xi**2*be + h2)*A['A012']/(xi*eta**2))
    G2 = (-(-3*h2*xi**2 + h2*eta**2 + 2*xi**4*eta**4*be)*A['A102']/(2*xi*eta**2)
          + 3*h2*A['A003']/(xi*eta**2)
          + 2*(xi**4*eta**2*be - h2)*A['A012']/(eta*xi**2))
    return V, {(1,0,2): A['A102'], (0,1,2): A['A012'], (0,0,3): A['A003']}, G1, G2


def entry_V2a():
    V = ga/r2 + h2/(xi**2*eta**2)
    G1 = (-h2*r2*(3*xi**4 + 2*xi**2*eta**2 + 3*eta**4)*A['A300']/(8*eta*xi**2)
          + (3*eta**2*xi**2*h2 + 2*eta**4*ga*xi**2 + 2*eta**4*h2 + 2*xi**4*h2)*A['A210']/(4*eta**2*xi))
    G2 = (h2*r2*(3*xi**4 + 2*xi**2*eta**2 + 3*eta**4)*A['A300']/(8*xi*eta**2)
          - (3*eta**2*xi**2*h2 + 2*xi**4*h2 + 2*eta**2*xi**4*ga + 2*eta**4*h2)*A['A210']/(4*eta*xi**2))
    return V, {(3,0,0): A['A300'], (2,1,0): A['A210']}, G1, G2


def entry_V2b():
    V = (ga + h2/xi**2)/r2
    G1 = (h2*eta*(3*eta**2 + 2*xi**2)*r2*A['A300']/(8*xi**2)
          + (2*h2*eta**2 + 2*eta**2*xi**2*ga - h2*xi**2)*A['A210']/(4*xi)
          - A['A201']*eta*(2*xi**4*ga - 3*h2*eta**2)/(4*xi**2))
    G2 = (h2*(3*eta**2 + 2*xi**2)*r2*A['A300']/(8*xi)
          - eta*(2*xi**4*ga + 2*h2*eta**2 + 3*h2*xi**2)*A['A210']/(4*xi**2)
          + A['A201']*(2*xi**4*ga - h2*eta**2)/(4*xi))
    return V, {(3,0,0): A['A300'], (2,1,0): A['A210'], (2,0,1): A['A201']}, G1, G2


def entry_VC():
    V = al/r2
    G1 = (A['A210']*xi*(2*al*eta**2 - h2)/4 - eta*A['A102']*al
          - A['A201']*eta*(2*al*xi**2 + h2)/4 - k1*eta*r2/2)
    G2 = (-A['A210']*eta*(2*al*xi**2 - h2)/4 + A['A102']*xi*al
          + A['A201']*xi*(2*al*xi**2 - h2)/4 + k1*xi*r2/2)
    return V, {(3,0,0): A['A300'], (2,1,0): A['A210'], (2,0,1): A['A201'], (1,0,2): A['A102']}, G1, G2


def entry_VTy():
    V = al/(xi**2*eta**2)
    G1 = (al*(eta**4 + xi**4)*A['A210']/(2*xi*eta**2)
          - al*(eta - xi)*(eta + xi)*A['A111']/(xi*eta**2)
          + 2*A['A012']*al/(xi*eta**2) + k1*xi)
    G2 = (-al*(eta**4 + xi**4)*A['A210']/(2*eta*xi**2)
          + al*(eta - xi)*(eta + xi)*A['A111']/(eta*xi**2)
          - 2*A['A012']*al/(eta*xi**2) - k1*eta)
    return V, {(2,1,0): A['A210'], (1,1,1): A['A111'], (0,1,2): A['A012'], (0,3,0): A['A030']}, G1, G2


def entry_VTyh():
    V = h2/(xi**2*eta**2)
    G1 = (h2*(3*eta**4 - xi**4)*A['A201']/(4*eta*xi**2)
          + h2*(eta**4 + xi**4)*A['A210']/(2*xi*eta**2)
          - h2*(3*eta**6 + 5*xi**2*eta**4 + 5*xi**4*eta**2 + 3*xi**6)*A['A300']/(8*eta*xi**2)
          + xi*k1
          - h2*(eta - xi)*(eta + xi)*A['A111']/(xi*eta**2)
          + 2*A['A012']*h2/(xi*eta**2)
          - (3*h2*eta**2 - h2*xi**2)*A['A102']/(2*eta*xi**2)
          + 3*h2*A['A003']/(eta*xi**2))
    G2 = (h2*(3*xi**4 - eta**4)*A['A201']/(4*xi*eta**2)
          - h2*(eta**4 + xi**4)*A['A210']/(2*eta*xi**2)
          + h2*(3*eta**6 + 5*xi**2*eta**4 + 5*xi**4*eta**2 + 3*xi**6)*A['A300']/(8*xi*eta**2)
          - eta*k1
          + h2*(eta - xi)*(eta + xi)*A['A111']/(eta*xi**2)
          - 2*A['A012']*h2/(eta*xi**2)
          - (-3*h2*xi**2 + h2*eta**2)*A['A102']/(2*xi*eta**2)
          + 3*h2*A['A003']/(xi*eta**2))
    Amap = {(3,0,0): A['A300'], (2,1,0): A['A210'], (2,0,1): A['A201'],
            (1,1,1): A['A111'], (1,0,2): A['A102'], (0,3,0): A['A030'],
            (0,1,2): A['A012'], (0,0,3): A['A003']}
    return V, Amap, G1, G2


def entry_VTx():
    V = al*(xi**2 - eta**2)
    G1 = (-eta**3*xi**2*A['A102']*al - 2*eta**3*A['A021']*al
          + 2*eta**2*xi*A['A012']*al + 2*eta*xi**2*A['A021']*al + eta*k1)
    G2 = (-xi**3*A['A102']*al*eta**2 + 2*xi**3*A['A021']*al
          + 2*eta*A['A012']*xi**2*al - 2*xi*A['A021']*al*eta**2 + xi*k1)
    return V, {(1,0,2): A['A102'], (0,2,1): A['A021'], (0,1,2): A['A012'], (0,0,3): A['A003']}, G1, G2


def entry_V4():
    V = -al*(xi**2 - eta**2) + be*(xi**2 + I*xi*eta - eta**2)/(xi + I*eta) + ga/(xi + I*eta)
    A021 = A['A021']
    G1 = I*(-2*I*eta*al*xi**2 + 4*xi*al*eta**2 - 2*I*eta*xi*be + 2*I*al*eta**3 + eta**2*be + ga)*A021
    G2 = (-2*xi*al*eta**2 + 4*I*eta*al*xi**2 + 2*I*eta*xi*be + 2*xi**3*al + be*xi**2 - ga)*A021
    return V, {(0,2,1): A021, (0,0,3): -A021, (0,1,2): 2*I*A021}, G1, G2


def entry_VL():
    V = ga/(xi + I*eta)
    G1 = (ga*A['A012'] + I*ga*A['A021'] + I*ga*(xi + I*eta)**2*A['A102']
          - ga*(xi**2 - eta**2)*A['A111']/2 + k1*(xi + I*eta))
    G2 = (I*ga*A['A012'] + ga*A['A021'] + ga*(xi + I*eta)**2*A['A102']/2
          - I*ga*(xi**2 - eta**2)*A['A111']/2 + I*k1*(xi + I*eta))
    Amap = {(1,0,2): A['A102'], (1,1,1): A['A111'], (0,2,1): A['A021'], (0,1,2): A['A012'],
            (0,0,3): (A['A021'] + 2*I*A['A012'])/3, (0,3,0): (A['A021'] + 2*I*A['A012'])/3,
            (1,2,0): -I*A['A111'] + A['A102']}
    return V, Amap, G1, G2


ENTRIES = {
    'V1': entry_V1, 'V2': entry_V2, 'V3': entry_V3, 'V1a': entry_V1a,
    'V2a': entry_V2a, 'V2b': entry_V2b, 'VC': entry_VC, 'VTy': entry_VTy,
    'VTyh': entry_VTyh, 'VTx': entry_VTx, 'V4': entry_V4, 'VL': entry_VL,
}
