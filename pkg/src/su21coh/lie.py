"""Concrete 3x3 matrix models of su(2,1), its maximal compact subalgebra and
the complexified Cartan complement, with exact bracket computation.

Two Hermitian forms are used: the diagonal form diag(1,1,-1) and the
antidiagonal ("parabolic") form, congruent to each other via the real
symmetric involution GAMMA.  The compact generators U0..U3 live in the
diagonal model; X1..X4 span the complexified complement p_C, with
p+ = <X1,X2> and p- = <X3,X4> the holomorphic/antiholomorphic halves.

Every structure constant used elsewhere in the package is recomputed here
from matrix brackets; the printed action tables are kept only as test
fixtures, so transcription errors cannot leak into the algebra.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .scalars import ComplexRadical, RadicalScalar

Half = Fraction(1, 2)


class NotInLieAlgebra(ValueError):
    """Matrix fails the membership equations of the ambient Lie algebra."""


class LieGen(Enum):
    """The eight generators used throughout: four for l_C, four for p_C."""

    U0 = "U0"
    U1_PLUS_IU2 = "U1+iU2"
    U1_MINUS_IU2 = "U1-iU2"
    U3 = "U3"
    X1 = "X1"
    X2 = "X2"
    X3 = "X3"
    X4 = "X4"


L_GENS = (LieGen.U0, LieGen.U1_PLUS_IU2, LieGen.U1_MINUS_IU2, LieGen.U3)
P_GENS = (LieGen.X1, LieGen.X2, LieGen.X3, LieGen.X4)


class Mat3:
    """Immutable 3x3 matrix with exact ComplexRadical entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(ComplexRadical.of(x) for x in row) for row in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("Mat3 requires 3x3 entries")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return Mat3(
            [[self.rows[i][j] + other.rows[i][j] for j in range(3)] for i in range(3)]
        )

    def __sub__(self, other):
        return Mat3(
            [[self.rows[i][j] - other.rows[i][j] for j in range(3)] for i in range(3)]
        )

    def __neg__(self):
        return Mat3([[-x for x in row] for row in self.rows])

    def __matmul__(self, other):
        return Mat3(
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(3)),
                        ComplexRadical(),
                    )
                    for j in range(3)
                ]
                for i in range(3)
            ]
        )

    def scaled(self, c):
        c = ComplexRadical.of(c)
        return Mat3([[x * c for x in row] for row in self.rows])

    def __mul__(self, c):
        return self.scaled(c)

    __rmul__ = __mul__

    def transpose(self):
        return Mat3([[self.rows[j][i] for j in range(3)] for i in range(3)])

    def conj(self):
        return Mat3([[x.conj() for x in row] for row in self.rows])

    def conj_transpose(self):
        return self.conj().transpose()

    def trace(self) -> ComplexRadical:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_numpy(self):
        import numpy as np

        return np.array(
            [[x.to_complex() for x in row] for row in self.rows], dtype=complex
        )

    def __repr__(self):
        return "Mat3(" + ", ".join(repr(list(r)) for r in self.rows) + ")"


def bracket(a: Mat3, b: Mat3) -> Mat3:
    """Commutator [a, b] = ab - ba."""
    return (a @ b) - (b @ a)


def _e(i: int, j: int, value=1) -> Mat3:
    rows = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    rows[i][j] = value
    return Mat3(rows)


_i = ComplexRadical.i()
_ih = ComplexRadical.i_times(Half)
_inv_sqrt2 = RadicalScalar.sqrt(Half)

ZERO_MAT = Mat3([[0, 0, 0]] * 3)
IDENTITY = Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

# Hermitian forms and the change of basis between them.
J_DIAG = Mat3([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
J_PAR = Mat3([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
GAMMA = Mat3(
    [
        [ComplexRadical(_inv_sqrt2), 0, ComplexRadical(_inv_sqrt2)],
        [0, 1, 0],
        [ComplexRadical(_inv_sqrt2), 0, ComplexRadical(-_inv_sqrt2)],
    ]
)

# Real basis of the compact subalgebra l (diagonal basis of the form).
U0 = Mat3([[_ih, 0, 0], [0, _ih, 0], [0, 0, -_i]])
U1 = Mat3([[0, _ih, 0], [_ih, 0, 0], [0, 0, 0]])
U2 = Mat3([[0, Half, 0], [-Half, 0, 0], [0, 0, 0]])
U3 = Mat3([[_ih, 0, 0], [0, -_ih, 0], [0, 0, 0]])

# Real basis of the Cartan complement p.
Y1 = _e(0, 2) + _e(2, 0)
Y2 = _e(0, 2, _i) + _e(2, 0, -_i)
Y3 = _e(1, 2) + _e(2, 1)
Y4 = _e(1, 2, _i) + _e(2, 1, -_i)

# Complex generators: l_C is spanned by U0, U1 +- iU2, U3; p_C by X1..X4
# with X1 = (Y1 - iY2)/2 etc., which collapse to elementary matrices.
U1_PLUS_IU2 = U1 + U2.scaled(_i)
U1_MINUS_IU2 = U1 - U2.scaled(_i)
X1 = _e(0, 2)
X2 = _e(1, 2)
X3 = _e(2, 0)
X4 = _e(2, 1)

_GEN_MATRICES = {
    LieGen.U0: U0,
    LieGen.U1_PLUS_IU2: U1_PLUS_IU2,
    LieGen.U1_MINUS_IU2: U1_MINUS_IU2,
    LieGen.U3: U3,
    LieGen.X1: X1,
    LieGen.X2: X2,
    LieGen.X3: X3,
    LieGen.X4: X4,
}

U_REAL_BASIS = (U0, U1, U2, U3)
Y_BASIS = (Y1, Y2, Y3, Y4)
X_BASIS = (X1, X2, X3, X4)


def builtin_matrices() -> dict[LieGen, Mat3]:
    """The eight generator matrices, keyed by symbol."""
    return dict(_GEN_MATRICES)


def gen_matrix(gen: LieGen) -> Mat3:
    return _GEN_MATRICES[gen]


def project_to_p(a: Mat3) -> tuple[ComplexRadical, ComplexRadical, ComplexRadical, ComplexRadical]:
    """Coordinates of the p_C-component of a traceless matrix over X1..X4.

    The splitting sl(3,C) = l_C + p_C puts the (1,3), (2,3), (3,1), (3,2)
    entries in p_C and everything else in l_C.  The l_C-residual is solved
    for explicitly and the reconstruction is asserted, so a matrix outside
    the algebra cannot slip through.
    """
    if not a.trace().is_zero():
        raise NotInLieAlgebra("matrix has nonzero trace")
    coeffs = (a[0, 2], a[1, 2], a[2, 0], a[2, 1])
    residual = a
    for c, x in zip(coeffs, X_BASIS):
        residual = residual - x.scaled(c)
    # residual = r0*U0 + rp*(U1+iU2) + rm*(U1-iU2) + r3*U3; the diagonal of
    # U0, U3 and the off-diagonal i's of U1 +- iU2 make this solvable:
    minus_i = ComplexRadical.i_times(-1)
    r0 = residual[2, 2] * ComplexRadical.i()
    rp = residual[0, 1] * minus_i
    rm = residual[1, 0] * minus_i
    r3 = (residual[0, 0] - residual[1, 1]) * minus_i
    rebuilt = (
        U0.scaled(r0)
        + U1_PLUS_IU2.scaled(rp)
        + U1_MINUS_IU2.scaled(rm)
        + U3.scaled(r3)
    )
    if not (residual - rebuilt).is_zero():
        raise NotInLieAlgebra("residual not in the span of the compact generators")
    return coeffs


def p_bracket_decompositions() -> dict[tuple[LieGen, LieGen], tuple[ComplexRadical, ...]]:
    """[U, X] expanded over X1..X4 for every compact generator U and every X.

    Recomputed from the matrices; this is the machine's own version of the
    printed action table.
    """
    out = {}
    for u in L_GENS:
        for x in P_GENS:
            out[(u, x)] = project_to_p(bracket(gen_matrix(u), gen_matrix(x)))
    return out


def is_in_g(a: Mat3, j: Mat3 = J_DIAG) -> bool:
    """Membership in su(2,1) for the Hermitian form j: conj(a)^T j + j a = 0, tr a = 0."""
    lhs = (a.conj_transpose() @ j) + (j @ a)
    return lhs.is_zero() and a.trace().is_zero()


def is_in_k(a: Mat3) -> bool:
    """Membership in the compact subalgebra l (diagonal form, block shape)."""
    off_block = (a[0, 2], a[1, 2], a[2, 0], a[2, 1])
    return is_in_g(a, J_DIAG) and all(x.is_zero() for x in off_block)


def is_unitary_numeric(m, tol: float = 1e-12) -> bool:
    """Numeric unitarity check for a numpy matrix."""
    import numpy as np

    m = np.asarray(m, dtype=complex)
    return float(np.abs(m.conj().T @ m - np.eye(m.shape[0])).max()) <= tol


# ---------------------------------------------------------------------------
# Printed-table fixtures and their verification against the brackets.
# ---------------------------------------------------------------------------


def _cr(re=0, im=0) -> ComplexRadical:
    return ComplexRadical(RadicalScalar.of(Fraction(re)), RadicalScalar.of(Fraction(im)))


def table1_fixture() -> dict[tuple[LieGen, LieGen], list[tuple[ComplexRadical, LieGen]]]:
    """The action of l_C on p_C as printed: (X row, U column) -> sum c*X'."""
    i32, i12 = Fraction(3, 2), Fraction(1, 2)
    t = {
        (LieGen.X1, LieGen.U0): [(_cr(0, i32), LieGen.X1)],
        (LieGen.X1, LieGen.U1_PLUS_IU2): [],
        (LieGen.X1, LieGen.U1_MINUS_IU2): [(_cr(0, 1), LieGen.X2)],
        (LieGen.X1, LieGen.U3): [(_cr(0, i12), LieGen.X1)],
        (LieGen.X2, LieGen.U0): [(_cr(0, i32), LieGen.X2)],
        (LieGen.X2, LieGen.U1_PLUS_IU2): [(_cr(0, 1), LieGen.X1)],
        (LieGen.X2, LieGen.U1_MINUS_IU2): [],
        (LieGen.X2, LieGen.U3): [(_cr(0, -i12), LieGen.X2)],
        (LieGen.X3, LieGen.U0): [(_cr(0, -i32), LieGen.X3)],
        (LieGen.X3, LieGen.U1_PLUS_IU2): [(_cr(0, -1), LieGen.X4)],
        (LieGen.X3, LieGen.U1_MINUS_IU2): [],
        (LieGen.X3, LieGen.U3): [(_cr(0, -i12), LieGen.X3)],
        (LieGen.X4, LieGen.U0): [(_cr(0, -i32), LieGen.X4)],
        (LieGen.X4, LieGen.U1_PLUS_IU2): [],
        (LieGen.X4, LieGen.U1_MINUS_IU2): [(_cr(0, -1), LieGen.X3)],
        (LieGen.X4, LieGen.U3): [(_cr(0, i12), LieGen.X4)],
    }
    return t


_PAIR_ORDER = ((1, 2), (2, 3), (3, 4), (1, 3), (1, 4), (2, 4))


def table3_fixture() -> dict[tuple[tuple[int, int], LieGen], list[tuple[ComplexRadical, tuple[int, int]]]]:
    """The induced action of l_C on the wedge basis X_i ^ X_j, as printed."""
    t: dict = {((i, j), u): [] for (i, j) in _PAIR_ORDER for u in L_GENS}
    t[((1, 2), LieGen.U0)] = [(_cr(0, 3), (1, 2))]
    t[((2, 3), LieGen.U1_PLUS_IU2)] = [(_cr(0, 1), (1, 3)), (_cr(0, -1), (2, 4))]
    t[((2, 3), LieGen.U3)] = [(_cr(0, -1), (2, 3))]
    t[((3, 4), LieGen.U0)] = [(_cr(0, -3), (3, 4))]
    t[((1, 3), LieGen.U1_PLUS_IU2)] = [(_cr(0, -1), (1, 4))]
    t[((1, 3), LieGen.U1_MINUS_IU2)] = [(_cr(0, 1), (2, 3))]
    t[((1, 4), LieGen.U1_MINUS_IU2)] = [(_cr(0, -1), (1, 3)), (_cr(0, 1), (2, 4))]
    t[((1, 4), LieGen.U3)] = [(_cr(0, 1), (1, 4))]
    t[((2, 4), LieGen.U1_PLUS_IU2)] = [(_cr(0, 1), (1, 4))]
    t[((2, 4), LieGen.U1_MINUS_IU2)] = [(_cr(0, -1), (2, 3))]
    return t


def _p_coords(x: LieGen, u: LieGen) -> dict[int, ComplexRadical]:
    """[u, x] over the X basis as a sparse 1-based coordinate dict."""
    decomp = project_to_p(bracket(gen_matrix(u), gen_matrix(x)))
    return {a + 1: c for a, c in enumerate(decomp) if not c.is_zero()}


def wedge_action(u: LieGen, pair: tuple[int, int]) -> dict[tuple[int, int], ComplexRadical]:
    """U.(X_i ^ X_j) = [U,X_i] ^ X_j + X_i ^ [U,X_j], from recomputed brackets."""
    i, j = pair
    out: dict[tuple[int, int], ComplexRadical] = {}

    def put(a, b, coeff):
        if a == b or coeff.is_zero():
            return
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        acc = out.get(key, ComplexRadical()) + (coeff if sign > 0 else -coeff)
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc

    for a, c in _p_coords(P_GENS[i - 1], u).items():
        put(a, j, c)
    for b, c in _p_coords(P_GENS[j - 1], u).items():
        put(i, b, c)
    return out


def verify_table1(fixture=None) -> list:
    """Recompute every printed (X, U) action cell from 3x3 brackets."""
    from .report import CheckResult

    results = []
    if fixture is None:
        fixture = table1_fixture()
    for (x, u), printed in fixture.items():
        computed = _p_coords(x, u)
        expected = {P_GENS.index(tgt) + 1: c for c, tgt in printed}
        ok = computed == expected
        results.append(
            CheckResult(
                name=f"table1[{x.value},{u.value}]",
                passed=ok,
                detail="" if ok else f"computed {computed}, printed {expected}",
            )
        )
    return results


def verify_table3() -> list:
    """Recompute every printed wedge-action cell from 3x3 brackets."""
    from .report import CheckResult

    results = []
    fixture = table3_fixture()
    for (pair, u), printed in fixture.items():
        computed = wedge_action(u, pair)
        expected: dict = {}
        for c, tgt in printed:
            expected[tgt] = expected.get(tgt, ComplexRadical()) + c
        expected = {k: v for k, v in expected.items() if not v.is_zero()}
        ok = computed == expected
        results.append(
            CheckResult(
                name=f"table3[X{pair[0]}{pair[1]},{u.value}]",
                passed=ok,
                detail="" if ok else f"computed {computed}, printed {expected}",
            )
        )
    return results


def verify_structure(inject_error: bool = False) -> list:
    """Full structural suite: tables, p-bracket vanishing, closure, conjugation.

    inject_error corrupts one table fixture cell before comparing; it exists
    so the failure path of the suite (and its exit code) can be exercised.
    """
    from .report import CheckResult

    fixture = table1_fixture()
    if inject_error:
        fixture[(LieGen.X1, LieGen.U0)] = [(_cr(0, Fraction(5, 2)), LieGen.X1)]
    results = verify_table1(fixture) + verify_table3()

    for a in range(4):
        for b in range(4):
            dec = project_to_p(bracket(X_BASIS[a], X_BASIS[b]))
            results.append(
                CheckResult(
                    name=f"[X{a + 1},X{b + 1}] in l_C",
                    passed=all(c.is_zero() for c in dec),
                )
            )

    # p+ and p- are abelian subalgebras, and the brackets vanish as matrices.
    for name, (a, b) in {"p+": (X1, X2), "p-": (X3, X4)}.items():
        results.append(
            CheckResult(name=f"{name} abelian", passed=bracket(a, b).is_zero())
        )

    # gamma is a real symmetric involution intertwining the two forms; both
    # transpose conventions agree because gamma is real.
    results.append(CheckResult(name="gamma^2 = 1", passed=(GAMMA @ GAMMA) == IDENTITY))
    results.append(
        CheckResult(
            name="gamma congruence (both conventions)",
            passed=(GAMMA.conj_transpose() @ J_DIAG @ GAMMA) == J_PAR
            and (GAMMA.transpose() @ J_DIAG @ GAMMA) == J_PAR,
        )
    )

    # Membership of the builtin bases.
    for nm, m in (("U0", U0), ("U1", U1), ("U2", U2), ("U3", U3)):
        results.append(CheckResult(name=f"{nm} in l", passed=is_in_k(m)))
    for nm, m in (("Y1", Y1), ("Y2", Y2), ("Y3", Y3), ("Y4", Y4)):
        results.append(CheckResult(name=f"{nm} in g", passed=is_in_g(m)))
    results.append(CheckResult(name="X1 not in g", passed=not is_in_g(X1)))

    # Complex conjugation on sl(3,C) relative to the real form exchanges
    # X1 <-> X3 and X2 <-> X4.
    results.append(
        CheckResult(name="c(X1) = X3", passed=real_form_conjugate(X1) == X3)
    )
    results.append(
        CheckResult(name="c(X2) = X4", passed=real_form_conjugate(X2) == X4)
    )
    return results


def real_form_conjugate(a: Mat3) -> Mat3:
    """The conjugation of sl(3,C) fixing su(2,1): a -> -J conj(a)^T J."""
    return -(J_DIAG @ a.conj_transpose() @ J_DIAG)
