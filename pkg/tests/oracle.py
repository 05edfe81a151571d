"""Naive loop-based axiom checks, written independently of the package's
tensor contractions.  Used as oracles for the checkers."""

from fractions import Fraction
from itertools import product


def _basis(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _add(*vs):
    return [sum(c) for c in zip(*vs)]


def _neg(v):
    return [-c for c in v]


def _zero(v):
    return all(c == 0 for c in v)


class Brackets:
    def __init__(self, a):
        self.d = a.dim
        self.b = [[[Fraction(a.binary[i, j, k]) for k in range(self.d)]
                   for j in range(self.d)] for i in range(self.d)]
        self.t = [[[[Fraction(a.ternary[i, j, k, l]) for l in range(self.d)]
                    for k in range(self.d)] for j in range(self.d)] for i in range(self.d)]

    def br(self, x, y):
        out = [Fraction(0)] * self.d
        for i, j in product(range(self.d), repeat=2):
            if x[i] and y[j]:
                for k in range(self.d):
                    out[k] += x[i] * y[j] * self.b[i][j][k]
        return out

    def tr(self, x, y, z):
        out = [Fraction(0)] * self.d
        for i, j, k in product(range(self.d), repeat=3):
            if x[i] and y[j] and z[k]:
                for l in range(self.d):
                    out[l] += x[i] * y[j] * z[k] * self.t[i][j][k][l]
        return out

    def e(self, i):
        return _basis(self.d, i)


def ly_failures(a):
    """Labels among LY1-LY6 that fail on some basis tuple."""
    B = Brackets(a)
    d, br, tr, e = B.d, B.br, B.tr, B.e
    bad = set()
    for i, j in product(range(d), repeat=2):
        if not _zero(_add(br(e(i), e(j)), br(e(j), e(i)))):
            bad.add("LY1")
        for k in range(d):
            if not _zero(_add(tr(e(i), e(j), e(k)), tr(e(j), e(i), e(k)))):
                bad.add("LY2")
    for i, j, k in product(range(d), repeat=3):
        x = (e(i), e(j), e(k))
        cyc = [(x[0], x[1], x[2]), (x[1], x[2], x[0]), (x[2], x[0], x[1])]
        s = _add(*[br(br(p, q), r) for p, q, r in cyc], *[tr(p, q, r) for p, q, r in cyc])
        if not _zero(s):
            bad.add("LY3")
        for m in range(d):
            y = e(m)
            if not _zero(_add(*[tr(br(p, q), r, y) for p, q, r in cyc])):
                bad.add("LY4")
    for i, j, k, m in product(range(d), repeat=4):
        x1, x2, y1, y2 = e(i), e(j), e(k), e(m)
        lhs = tr(x1, x2, br(y1, y2))
        rhs = _add(br(tr(x1, x2, y1), y2), br(y1, tr(x1, x2, y2)))
        if not _zero(_add(lhs, _neg(rhs))):
            bad.add("LY5")
        for n in range(d):
            y3 = e(n)
            lhs = tr(x1, x2, tr(y1, y2, y3))
            rhs = _add(tr(tr(x1, x2, y1), y2, y3), tr(y1, tr(x1, x2, y2), y3),
                       tr(y1, y2, tr(x1, x2, y3)))
            if not _zero(_add(lhs, _neg(rhs))):
                bad.add("LY6")
    return bad


def leibniz_failures(l):
    d = l.dim
    p = [[[Fraction(l.product[i, j, k]) for k in range(d)] for j in range(d)] for i in range(d)]

    def mul(x, y):
        out = [Fraction(0)] * d
        for i, j in product(range(d), repeat=2):
            if x[i] and y[j]:
                for k in range(d):
                    out[k] += x[i] * y[j] * p[i][j][k]
        return out

    for i, j, k in product(range(d), repeat=3):
        x, y, z = _basis(d, i), _basis(d, j), _basis(d, k)
        if not _zero(_add(mul(x, mul(y, z)), _neg(mul(mul(x, y), z)), _neg(mul(y, mul(x, z))))):
            return {"leibniz"}
    return set()


# matrices as lists of rows

def _mat(m, rows):
    return [[Fraction(m[p, o]) for o in range(rows)] for p in range(rows)]


def _mm(a, b):
    n = len(a)
    return [[sum(a[p][k] * b[k][o] for k in range(n)) for o in range(n)] for p in range(n)]


def _madd(*ms):
    n = len(ms[0])
    return [[sum(m[p][o] for m in ms) for o in range(n)] for p in range(n)]


def _mneg(a):
    return [[-v for v in row] for row in a]


def _mzero(a):
    return all(v == 0 for row in a for v in row)


def _comm(a, b):
    return _madd(_mm(a, b), _mneg(_mm(b, a)))


def rep_failures(a, r):
    """Labels among R31-R62 that fail on some basis tuple."""
    B = Brackets(a)
    d, m = a.dim, r.module_dim
    zero = [[Fraction(0)] * m for _ in range(m)]

    def lin1(tensor, x):
        return _madd(zero, *[[[c * v for v in row] for row in _mat(tensor[i], m)]
                             for i, c in enumerate(x) if c])

    def lin2(tensor, x, y):
        return _madd(zero, *[[[c * y[j] * v for v in row] for row in _mat(tensor[i, j], m)]
                             for i, c in enumerate(x) if c for j in range(d) if y[j]])

    rho = lambda x: lin1(r.rho, x)
    D = lambda x, y: lin2(r.D, x, y)
    th = lambda x, y: lin2(r.theta, x, y)
    br, tr, e = B.br, B.tr, B.e
    bad = set()
    for i, j in product(range(d), repeat=2):
        x1, x2 = e(i), e(j)
        s = _madd(D(x1, x2), _mneg(th(x2, x1)), th(x1, x2), rho(br(x1, x2)),
                  _mneg(_comm(rho(x1), rho(x2))))
        if not _mzero(s):
            bad.add("R31")
    for i, j, k in product(range(d), repeat=3):
        x1, x2, x3 = e(i), e(j), e(k)
        if not _mzero(_madd(D(br(x1, x2), x3), D(br(x2, x3), x1), D(br(x3, x1), x2))):
            bad.add("R41")
        rhs = _madd(_mm(th(x1, x3), rho(x2)), _mneg(_mm(th(x2, x3), rho(x1))))
        if not _mzero(_madd(th(br(x1, x2), x3), _mneg(rhs))):
            bad.add("R42")
        y1, y2 = x2, x3
        if not _mzero(_madd(_comm(D(x1, x2), rho(x3)), _mneg(rho(tr(x1, x2, x3))))):
            bad.add("R51")
        rhs = _madd(_mm(rho(y1), th(x1, y2)), _mneg(_mm(rho(y2), th(x1, y1))))
        if not _mzero(_madd(th(x1, br(y1, y2)), _mneg(rhs))):
            bad.add("R52")
    for i, j, k, n in product(range(d), repeat=4):
        x1, x2, y1, y2 = e(i), e(j), e(k), e(n)
        rhs = _madd(th(tr(x1, x2, y1), y2), th(y1, tr(x1, x2, y2)))
        if not _mzero(_madd(_comm(D(x1, x2), th(y1, y2)), _mneg(rhs))):
            bad.add("R61")
        x1, y1, y2, y3 = e(i), e(j), e(k), e(n)
        rhs = _madd(_mm(th(y2, y3), th(x1, y1)), _mneg(_mm(th(y1, y3), th(x1, y2))),
                    _mm(D(y1, y2), th(x1, y3)))
        if not _mzero(_madd(th(x1, tr(y1, y2, y3)), _mneg(rhs))):
            bad.add("R62")
    return bad
