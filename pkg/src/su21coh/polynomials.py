"""Degree-k homogeneous polynomials in x, y, z as an exact module over the
algebra, with the derivation action obtained by differentiating the
transpose substitution  p(v) -> p(M^T v).

The action is computed generically from matrices rather than from any
special-cased eigenvalue rules; the diagonal and raising/lowering values on
x^(k-l) y^l used by the cocycle constructions then come out as theorems of
this module, not as inputs.
"""

from __future__ import annotations

from typing import NamedTuple

from .lie import LieGen, Mat3, gen_matrix
from .scalars import ComplexRadical
from .sparse import LinComb


class Monomial(NamedTuple):
    a: int
    b: int
    c: int

    def degree(self) -> int:
        return self.a + self.b + self.c

    def __str__(self) -> str:
        parts = []
        for name, e in zip("xyz", self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def monomial_xy(k: int, l: int) -> Monomial:
    """x^(k-l) y^l."""
    if not 0 <= l <= k:
        raise ValueError(f"l={l} outside [0, {k}]")
    return Monomial(k - l, l, 0)


class PolyVector(LinComb):
    """Exact linear combination of monomials of one common degree."""


def act_poly(mat: Mat3, p: PolyVector) -> PolyVector:
    """First-order derivation: mat acts on a monomial as
    sum_i (sum_j mat[j,i] x_j) d/dx_i, preserving the degree."""
    out: list = []
    for mono, coeff in p.items():
        exps = tuple(mono)
        for i in range(3):
            e = exps[i]
            if e == 0:
                continue
            for j in range(3):
                entry = mat[j, i]
                if entry.is_zero():
                    continue
                target = list(exps)
                target[i] -= 1
                target[j] += 1
                out.append((Monomial(*target), coeff * entry * e))
    return PolyVector(out)


def act_poly_gen(gen: LieGen, p: PolyVector) -> PolyVector:
    return act_poly(gen_matrix(gen), p)


def eval_poly(p: PolyVector, v) -> complex:
    """Numeric evaluation at a point v = (x, y, z)."""
    x, y, z = (complex(t) for t in v)
    total = 0j
    for (a, b, c), coeff in p.items():
        total += coeff.to_complex() * x**a * y**b * z**c
    return total


def monomial_basis(k: int) -> list[Monomial]:
    """All degree-k monomials, lexicographic in (a, b)."""
    return [Monomial(a, b, k - a - b) for a in range(k + 1) for b in range(k - a + 1)]


def one() -> PolyVector:
    return PolyVector({Monomial(0, 0, 0): ComplexRadical.of(1)})
