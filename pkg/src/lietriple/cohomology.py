"""Cocycles, coboundaries and cohomology dimensions.

H^(3,4,4,5) = ker Delta3 / im Delta2, and Yamaguti's groups
ker delta_n / im delta_{n-1} for n >= 2.
"""

from dataclasses import dataclass

from .cochain import (CochainPair, CochainQuadruple, delta2, delta3, yamaguti_delta,
                      pointwise_matrix, _require_rep)
from .exactla import (DimensionError, Subspace, image_basis, kernel_basis, quotient_dim,
                      solve_in_image, rational_str)


@dataclass(frozen=True)
class CohomologyResult:
    dim_cocycles: int
    dim_coboundaries: int
    dim_H: int
    cocycle_basis: Subspace
    coboundary_basis: Subspace

    def dims(self):
        return self.dim_cocycles, self.dim_coboundaries, self.dim_H

    def to_dict(self, bases=False):
        d = {"dim_Z": self.dim_cocycles, "dim_B": self.dim_coboundaries, "dim_H": self.dim_H}
        if bases:
            d["cocycle_basis"] = [[rational_str(v) for v in b] for b in self.cocycle_basis.basis]
            d["coboundary_basis"] = [[rational_str(v) for v in b]
                                     for b in self.coboundary_basis.basis]
        return d


@dataclass(frozen=True)
class CocycleCheck:
    is_cocycle: bool
    witness: tuple = None  # (component, args, target index)
    value: object = None

    def __bool__(self):
        return self.is_cocycle


def _check_quad(q, a, r):
    if (q.source_dim, q.target_dim) != (a.dim, r.module_dim):
        raise DimensionError("quadruple has dims (%d, %d), expected (%d, %d)"
                             % (q.source_dim, q.target_dim, a.dim, r.module_dim))


def is_cocycle_3445(q, a, r, check=True, op=None):
    """Whether Delta3 annihilates q; otherwise the first nonzero output coordinate."""
    _check_quad(q, a, r)
    op = op or delta3(a, r, check)
    out = op.apply(q.vector())
    for row, v in enumerate(out):
        if v:
            return CocycleCheck(False, op.describe_row(row), v)
    return CocycleCheck(True)


def is_coboundary_3445(q, a, r, check=True, op=None):
    """Some (nu, omega) with Delta2(nu, omega) = q, or None."""
    _check_quad(q, a, r)
    op = op or delta2(a, r, check)
    x = solve_in_image(op.matrix, q.vector())
    if x is None:
        return None
    pair = CochainPair.from_vector(a.dim, r.module_dim, x)
    if op.apply(x) != q.vector():
        raise ArithmeticError("recovered preimage does not map to the quadruple")
    return pair


def delta2_image(pair, a, r, check=True):
    """Delta2(nu, omega) as a CochainQuadruple."""
    out = delta2(a, r, check).apply(pair.vector())
    return CochainQuadruple.from_vector(a.dim, r.module_dim, out)


def _result(z_matrix, b_matrix, ambient):
    z = kernel_basis(z_matrix)
    z = Subspace.span(ambient, z.basis)  # reduced echelon representatives
    b = image_basis(b_matrix)
    h = quotient_dim(z, b)
    return CohomologyResult(z.dim, b.dim, h, z, b)


def h3445_dims(a, r, check=True, path="matrix"):
    """Dimensions of Z, B and H^(3,4,4,5).

    path="pointwise" assembles both operators from the pointwise formulas
    instead of the term tables.
    """
    _require_rep(a, r, check)
    n = CochainQuadruple.space_dim(a.dim, r.module_dim)
    if path == "matrix":
        return _result(delta3(a, r, False).integer_matrix(),
                       delta2(a, r, False).integer_matrix(), n)
    if path == "pointwise":
        return _result(pointwise_matrix("delta3", a, r), pointwise_matrix("delta2", a, r), n)
    raise ValueError("unknown assembly path %r" % path)


def yamaguti_h_dims(n, a, r, check=True):
    """Dimensions of Z, B and H for Yamaguti's (2n, 2n+1) group, n >= 2."""
    if n < 2:
        raise ValueError("Yamaguti cohomology is computed here for n >= 2")
    _require_rep(a, r, check)
    upper = yamaguti_delta(n, a, r, False)
    lower = yamaguti_delta(n - 1, a, r, False)
    return _result(upper.integer_matrix(), lower.integer_matrix(), upper.shape[1])
