"""Symbolic K-finite vectors of the induced module as exact sparse
combinations of Wigner indices, with the raising/lowering actions of the
compact generators and the four noncompact lowering/raising operators.

An index (j, n, m1, m2) names the matrix-coefficient function on U(2); the
induced module for the weight parameter k >= 0 contains exactly the indices
satisfying

    -3j - 2k - 3 <= n <= 3j - 2k - 3        (torus window)
    3*m2 - 2k - 3 = n                       (central character matching)

All half-integers are stored as doubled integers; nothing in this module
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .lie import L_GENS, LieGen
from .scalars import ComplexRadical, RadicalScalar
from .sparse import LinComb


class InadmissibleResult(ArithmeticError):
    """A nonzero coefficient landed on a structurally invalid index.

    This never fires for correct operator coefficients: targets outside the
    |m| <= j window always carry a vanishing square-root factor.  It exists
    as a tripwire against transcription errors in the coefficient formulas.
    """


class OutOfRange(ValueError):
    """Named index family requested outside its defining range."""


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact half-integer, stored doubled."""

    twice: int

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice - other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice - 2 * other)
        return NotImplemented

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_integer(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def half(twice: int) -> HalfInt:
    """The half-integer twice/2."""
    return HalfInt(twice)


def whole(n: int) -> HalfInt:
    return HalfInt(2 * n)


class WignerIndex(NamedTuple):
    j: HalfInt
    n: HalfInt
    m1: HalfInt
    m2: HalfInt

    @classmethod
    def of(cls, j2: int, n2: int, m12: int, m22: int) -> "WignerIndex":
        """Build from doubled integers."""
        return cls(HalfInt(j2), HalfInt(n2), HalfInt(m12), HalfInt(m22))

    def doubled(self) -> tuple[int, int, int, int]:
        return (self.j.twice, self.n.twice, self.m1.twice, self.m2.twice)

    def structurally_valid(self) -> bool:
        j2, n2, m12, m22 = self.doubled()
        return (
            j2 >= 0
            and abs(m12) <= j2
            and abs(m22) <= j2
            and (j2 + m12) % 2 == 0
            and (j2 + m22) % 2 == 0
            and (j2 + n2) % 2 == 0
        )

    def to_dict(self) -> dict:
        j2, n2, m12, m22 = self.doubled()
        return {"j2": j2, "n2": n2, "m1_2": m12, "m2_2": m22}

    def __str__(self) -> str:
        return f"W[j={self.j},n={self.n},m1={self.m1},m2={self.m2}]"


def admissible(idx: WignerIndex, k: int) -> bool:
    """Both membership conditions for the induced module at parameter k."""
    if not idx.structurally_valid():
        return False
    j2, n2, _, m22 = idx.doubled()
    c = 4 * k + 6  # doubled 2k+3
    return (-3 * j2 - c <= n2 <= 3 * j2 - c) and (3 * m22 - c == n2)


def admissible_indices(k: int, j_max) -> Iterator[WignerIndex]:
    """All admissible indices with j <= j_max, in deterministic order.

    The central-character condition pins n to m2, and the torus window is
    then automatic, so this is a plain sweep over (j, m1, m2).
    """
    jmax2 = j_max.twice if isinstance(j_max, HalfInt) else int(2 * Fraction(j_max))
    for j2 in range(0, jmax2 + 1):
        for m12 in range(-j2, j2 + 1, 2):
            for m22 in range(-j2, j2 + 1, 2):
                idx = WignerIndex.of(j2, 3 * m22 - (4 * k + 6), m12, m22)
                assert admissible(idx, k)
                yield idx


class KVector(LinComb):
    """Finite exact linear combination of Wigner indices."""

    def to_list(self) -> list[dict]:
        """Serialization: [{j2, n2, m1_2, m2_2, coeff}, ...] in index order."""
        ordered = sorted(self.items(), key=lambda item: item[0].doubled())
        return [dict(idx.to_dict(), coeff=c.to_dict()) for idx, c in ordered]

    @classmethod
    def from_list(cls, data) -> "KVector":
        return cls(
            [
                (
                    WignerIndex.of(d["j2"], d["n2"], d["m1_2"], d["m2_2"]),
                    ComplexRadical.from_dict(d["coeff"]),
                )
                for d in data
            ]
        )


# ---------------------------------------------------------------------------
# Compact-generator action (diagonal weights and su(2) raising/lowering).
# ---------------------------------------------------------------------------


def act_l_index(gen: LieGen, idx: WignerIndex) -> list[tuple[WignerIndex, ComplexRadical]]:
    j2, n2, m12, m22 = idx.doubled()
    if gen is LieGen.U0:
        coeff = ComplexRadical.i_times(Fraction(n2, 2))
        return [(idx, coeff)] if n2 else []
    if gen is LieGen.U3:
        coeff = ComplexRadical.i_times(Fraction(m12, 2))
        return [(idx, coeff)] if m12 else []
    if gen is LieGen.U1_PLUS_IU2:
        product = ((j2 - m12) // 2) * ((j2 + m12) // 2 + 1)
        shift = 2
    elif gen is LieGen.U1_MINUS_IU2:
        product = ((j2 + m12) // 2) * ((j2 - m12) // 2 + 1)
        shift = -2
    else:
        raise ValueError(f"{gen} is not a compact generator")
    if product == 0:
        # raising at m1 = j / lowering at m1 = -j annihilates; the would-be
        # target falls outside |m1| <= j exactly in this case
        return []
    target = WignerIndex.of(j2, n2, m12 + shift, m22)
    coeff = ComplexRadical(None, -RadicalScalar.sqrt(product))
    return [(target, coeff)]


def act_l(gen: LieGen, v: KVector) -> KVector:
    out: list = []
    for idx, c in v.items():
        for tgt, coeff in act_l_index(gen, idx):
            out.append((tgt, coeff * c))
    return KVector(out)


# ---------------------------------------------------------------------------
# Noncompact-generator action.
# ---------------------------------------------------------------------------

VARIANTS = ("plus1", "plus2")
DEFAULT_VARIANT = "plus1"

# Each operator is two terms (sign, root, linear, doubled index shifts):
# coefficient = sign * linear * sqrt(root) / (2(2j+1)), with root and linear
# plain integers.  The "variant" switch selects between the two candidate
# inner shifts of one square-root factor of the X3 operator; only plus1 is
# consistent with the rest of the structure (see README), plus2 is kept for
# the numeric adjudication harness.


def act_p_index(
    gen: LieGen, idx: WignerIndex, variant: str = DEFAULT_VARIANT
) -> list[tuple[WignerIndex, ComplexRadical]]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    j2, n2, m12, m22 = idx.doubled()
    d = (m22 - n2) // 2  # m2 - n, an integer for any valid index
    jp = (j2 + m12) // 2  # j + m1
    jm = (j2 - m12) // 2  # j - m1
    kp = (j2 + m22) // 2  # j + m2
    km = (j2 - m22) // 2  # j - m2
    x3_inner = 1 if variant == "plus1" else 2

    if gen is LieGen.X1:
        spec = [
            (-1, jm * km, j2 + d - 1, (-1, 3, 1, 1)),
            (+1, (jp + 1) * (kp + 1), j2 - d + 3, (1, 3, 1, 1)),
        ]
    elif gen is LieGen.X2:
        spec = [
            (-1, jp * km, j2 + d - 1, (-1, 3, -1, 1)),
            (-1, (jm + 1) * (kp + 1), j2 - d + 3, (1, 3, -1, 1)),
        ]
    elif gen is LieGen.X3:
        spec = [
            (-1, jp * kp, j2 - d - 1, (-1, -3, -1, -1)),
            (+1, (jm + x3_inner) * (km + 1), j2 + d + 3, (1, -3, -1, -1)),
        ]
    elif gen is LieGen.X4:
        spec = [
            (+1, jm * kp, j2 - d - 1, (-1, -3, 1, -1)),
            (+1, (jp + 1) * (km + 1), j2 + d + 3, (1, -3, 1, -1)),
        ]
    else:
        raise ValueError(f"{gen} is not a noncompact generator")

    denom = 2 * (j2 + 1)  # 2(2j+1)
    out = []
    for sign, root, lin, (dj, dn, dm1, dm2) in spec:
        if root == 0 or lin == 0:
            continue
        target = WignerIndex.of(j2 + dj, n2 + dn, m12 + dm1, m22 + dm2)
        if not target.structurally_valid():
            raise InadmissibleResult(
                f"{gen.value} on {idx} produced nonzero coefficient on invalid {target}"
            )
        scale = RadicalScalar.sqrt(root) * Fraction(sign * lin, denom)
        out.append((target, ComplexRadical(scale)))
    return out


def act_p(gen: LieGen, v: KVector, variant: str = DEFAULT_VARIANT) -> KVector:
    out: list = []
    for idx, c in v.items():
        for tgt, coeff in act_p_index(gen, idx, variant):
            out.append((tgt, coeff * c))
    return KVector(out)


def act(gen: LieGen, v: KVector, variant: str = DEFAULT_VARIANT) -> KVector:
    return act_l(gen, v) if gen in L_GENS else act_p(gen, v, variant)


# ---------------------------------------------------------------------------
# Named index families entering the explicit cocycles.
# ---------------------------------------------------------------------------


def psi_index(k: int, l: int) -> WignerIndex:
    """Index family carrying the (1,1)-type cocycle; l in {-1, ..., k+1}."""
    if not -1 <= l <= k + 1:
        raise OutOfRange(f"l={l} outside [-1, {k + 1}]")
    idx = WignerIndex.of(k + 2, -k, -k + 2 * l, k + 2)
    assert admissible(idx, k)
    return idx


def psi0_index(k: int, l: int) -> WignerIndex:
    """Index family carrying the (0,2)-type cocycle; l in {0, ..., k}.

    The m2 parameter equals k/2: it is the unique value compatible with the
    central-character condition (and, for small k, with |m2| <= j).
    """
    if not 0 <= l <= k:
        raise OutOfRange(f"l={l} outside [0, {k}]")
    idx = WignerIndex.of(k, -k - 6, -k + 2 * l, k)
    assert admissible(idx, k)
    return idx


def psi0_tilde_index(k: int, l: int) -> WignerIndex:
    """Companion family with j shifted up by one; l in {0, ..., k+1}."""
    if not 0 <= l <= k + 1:
        raise OutOfRange(f"l={l} outside [0, {k + 1}]")
    idx = WignerIndex.of(k + 2, -k - 6, -k + 2 * l, k)
    assert admissible(idx, k)
    return idx


def chi_index(k: int, l: int) -> WignerIndex:
    """Index family carrying the primitive 1-cochain; l in {0, ..., k+1}."""
    if not 0 <= l <= k + 1:
        raise OutOfRange(f"l={l} outside [0, {k + 1}]")
    idx = WignerIndex.of(k + 1, -k - 3, -(k + 1) + 2 * l, k + 1)
    assert admissible(idx, k)
    return idx
