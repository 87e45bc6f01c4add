"""Floating-point oracle for the exact operator formulas.

Evaluates the matrix-coefficient functions on the compact group through
Euler angles and Jacobi-type sums, extends them to the whole group by
numerical Iwasawa decomposition, and validates the exact raising/lowering
operators by central finite differences.  Also provides a quadrature check
of pairwise orthogonality under the normalized invariant measure.

Everything here is deliberately independent of the exact engine: the only
shared input is the list of generator matrices, which are read off from the
exact module and converted to machine numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from . import lie
from .lie import L_GENS, P_GENS, LieGen
from .report import CheckResult
from .wigner import (
    DEFAULT_VARIANT,
    WignerIndex,
    act_l_index,
    act_p_index,
    admissible,
    admissible_indices,
)

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


class NotInGroup(ValueError):
    """Matrix is not in the unitary-similitude group to tolerance."""


class NotInK(ValueError):
    """Matrix does not have the compact-subgroup block shape."""


class DecompositionFailure(RuntimeError):
    """Triangular factor of the Iwasawa decomposition has the wrong shape."""


# Numeric copies of the exact structural matrices.
J_DIAG_NP = lie.J_DIAG.to_numpy()
GAMMA_NP = lie.GAMMA.to_numpy()
_G_REAL_BASIS = [m.to_numpy() for m in lie.U_REAL_BASIS + lie.Y_BASIS]


@dataclass(frozen=True)
class EulerAngles:
    """Coordinates on U(2): zeta in R, phi in (-pi, pi], theta in [0, pi],
    psi in (-pi, 3pi]."""

    zeta: float
    phi: float
    theta: float
    psi: float


@dataclass(frozen=True)
class IwasawaFactors:
    kappa: np.ndarray  # compact factor, block shape diag(U, det(U)^-1)
    r: float  # split-torus coordinate, > 0
    nu: complex  # unipotent coordinate
    s: float  # imaginary part of the corner entry


def u2_from_angles(e: EulerAngles) -> np.ndarray:
    """The 2x2 unitary with the given Euler coordinates."""
    c, s = math.cos(e.theta / 2), math.sin(e.theta / 2)
    z = cmath.exp(-0.5j * e.zeta)
    return z * np.array(
        [
            [cmath.exp(-0.5j * (e.phi + e.psi)) * c, -cmath.exp(0.5j * (e.phi - e.psi)) * s],
            [cmath.exp(0.5j * (e.psi - e.phi)) * s, cmath.exp(0.5j * (e.phi + e.psi)) * c],
        ]
    )


def k_from_angles(e: EulerAngles) -> np.ndarray:
    """The corresponding 3x3 compact-group element diag(U, det(U)^-1)."""
    u = u2_from_angles(e)
    out = np.zeros((3, 3), dtype=complex)
    out[:2, :2] = u
    out[2, 2] = 1.0 / np.linalg.det(u)
    return out


def membership_residual(g: np.ndarray) -> float:
    """Distance from the defining equations: conj(g)^T J g = J, det g = 1."""
    g = np.asarray(g, dtype=complex)
    form = g.conj().T @ J_DIAG_NP @ g - J_DIAG_NP
    return max(float(np.abs(form).max()), abs(np.linalg.det(g) - 1.0))


# ---------------------------------------------------------------------------
# Jacobi polynomials and matrix-coefficient evaluation.
# ---------------------------------------------------------------------------


def gbinom(n: int, r: int) -> int:
    """Generalized binomial coefficient for integer (possibly negative) n."""
    if r < 0:
        return 0
    num = 1
    for t in range(r):
        num *= n - t
    return num // math.factorial(r)


def jacobi(alpha: int, beta: int, c: int, x: float) -> float:
    """Jacobi polynomial P_c^(alpha,beta)(x) by the explicit finite sum,
    valid for the (possibly negative) integer parameters arising from
    matrix-coefficient indices."""
    if c < 0:
        raise ValueError("degree must be nonnegative")
    total = 0.0
    for s in range(c + 1):
        coeff = gbinom(c + alpha, c - s) * gbinom(c + beta, s)
        if coeff:
            total += coeff * ((x - 1.0) / 2.0) ** s * ((x + 1.0) / 2.0) ** (c - s)
    return total


def jacobi_recurrence(alpha: int, beta: int, c: int, x: float) -> float:
    """Three-term recurrence evaluation, for alpha, beta >= 0 (test oracle)."""
    if alpha < 0 or beta < 0:
        raise ValueError("recurrence oracle requires alpha, beta >= 0")
    p_prev = 1.0
    if c == 0:
        return p_prev
    p = (alpha + 1) + (alpha + beta + 2) * (x - 1.0) / 2.0
    for n in range(2, c + 1):
        a1 = 2 * n * (n + alpha + beta) * (2 * n + alpha + beta - 2)
        a2 = (2 * n + alpha + beta - 1) * (alpha * alpha - beta * beta)
        a3 = (2 * n + alpha + beta - 1) * (2 * n + alpha + beta) * (2 * n + alpha + beta - 2)
        a4 = 2 * (n + alpha - 1) * (n + beta - 1) * (2 * n + alpha + beta)
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p


@lru_cache(maxsize=None)
def _theta_terms(j2: int, m12: int, m22: int) -> tuple[tuple[float, int, int], ...]:
    """Expansion of the theta-profile of a matrix coefficient as
    sum_s coef * sin(theta/2)^es * cos(theta/2)^ec.

    This regroups prefactor * sin^(m1-m2) * cos^(m1+m2) * P_(j-m1)(cos theta)
    into a form with nonnegative exponents only, so the poles of the literal
    formula at theta in {0, pi} never materialize.
    """
    jp, jm = (j2 + m12) // 2, (j2 - m12) // 2
    kp, km = (j2 + m22) // 2, (j2 - m22) // 2
    pre = math.exp(
        0.5
        * (
            math.lgamma(jp + 1)
            + math.lgamma(jm + 1)
            - math.lgamma(kp + 1)
            - math.lgamma(km + 1)
        )
    )
    dm, dp = (m12 - m22) // 2, (m12 + m22) // 2
    c = jm  # polynomial degree j - m1
    terms = []
    for s in range(max(0, c - km), min(c, kp) + 1):
        coef = gbinom(km, c - s) * gbinom(kp, s)
        if not coef:
            continue
        es, ec = 2 * s + dm, 2 * (c - s) + dp
        terms.append((pre * coef * (-1) ** s, es, ec))
    return tuple(terms)


def eval_wigner(idx: WignerIndex, e: EulerAngles) -> complex:
    """Value of the matrix-coefficient function named by idx at the given
    Euler coordinates."""
    j2, n2, m12, m22 = idx.doubled()
    if not idx.structurally_valid():
        raise ValueError(f"invalid index {idx}")
    sh, ch = math.sin(e.theta / 2), math.cos(e.theta / 2)
    profile = sum(c * sh**es * ch**ec for c, es, ec in _theta_terms(j2, m12, m22))
    phase = cmath.exp(0.5j * (n2 * e.zeta + m12 * e.psi + m22 * e.phi))
    return phase * profile


def eval_wigner_literal(idx: WignerIndex, e: EulerAngles) -> complex:
    """The printed formula, evaluated literally through `jacobi` (used to
    cross-check the regrouped evaluation away from theta in {0, pi})."""
    j2, n2, m12, m22 = idx.doubled()
    jp, jm = (j2 + m12) // 2, (j2 - m12) // 2
    kp, km = (j2 + m22) // 2, (j2 - m22) // 2
    dm, dp = (m12 - m22) // 2, (m12 + m22) // 2
    c_norm = math.sqrt(math.factorial(jp) * math.factorial(jm)) * math.sqrt(
        math.factorial(kp) * math.factorial(km)
    )
    sh, ch = math.sin(e.theta / 2), math.cos(e.theta / 2)
    d_val = (
        sh**dm
        * ch**dp
        / (math.factorial(kp) * math.factorial(km))
        * jacobi(dm, dp, jm, math.cos(e.theta))
    )
    phase = cmath.exp(0.5j * (n2 * e.zeta + m12 * e.psi + m22 * e.phi))
    return c_norm * phase * d_val


def wigner_matrix(j2: int, n2: int, e: EulerAngles) -> np.ndarray:
    """Matrix of coefficient values over m1 (rows) and m2 (columns)."""
    ms = range(-j2, j2 + 1, 2)
    return np.array(
        [[eval_wigner(WignerIndex.of(j2, n2, m12, m22), e) for m22 in ms] for m12 in ms]
    )


# ---------------------------------------------------------------------------
# Euler coordinates from a compact element.
# ---------------------------------------------------------------------------


def _wrap_psi(x: float) -> float:
    return (x + math.pi) % FOUR_PI - math.pi


def euler_from_k(kappa: np.ndarray, tol: float = 1e-8) -> EulerAngles:
    """Invert the Euler parametrization on the compact subgroup.

    Convention at the degenerate angles theta in {0, pi}: phi is set to 0 and
    psi absorbs the free phase.
    """
    kappa = np.asarray(kappa, dtype=complex)
    off = max(abs(kappa[0, 2]), abs(kappa[1, 2]), abs(kappa[2, 0]), abs(kappa[2, 1]))
    u = kappa[:2, :2]
    unit = float(np.abs(u.conj().T @ u - np.eye(2)).max())
    if off > tol or unit > tol or abs(np.linalg.det(kappa) - 1.0) > tol:
        raise NotInK(f"not in the compact subgroup (residual {max(off, unit):.2e})")
    det_u = np.linalg.det(u)
    zeta = -cmath.phase(det_u)
    s_mat = cmath.exp(0.5j * zeta) * u
    c_abs, s_abs = abs(s_mat[0, 0]), abs(s_mat[1, 0])
    theta = 2.0 * math.atan2(s_abs, c_abs)
    if s_abs < 1e-13:
        return EulerAngles(zeta, 0.0, theta, _wrap_psi(-2.0 * cmath.phase(s_mat[0, 0])))
    if c_abs < 1e-13:
        return EulerAngles(zeta, 0.0, theta, _wrap_psi(2.0 * cmath.phase(s_mat[1, 0])))
    a = cmath.phase(s_mat[0, 0])
    b = cmath.phase(s_mat[1, 0])
    phi0, psi0 = -a - b, b - a
    # shift phi into (-pi, pi]; psi must shift by the same multiple of 2*pi
    m = math.floor((math.pi - phi0) / TWO_PI)
    return EulerAngles(zeta, phi0 + TWO_PI * m, theta, _wrap_psi(psi0 + TWO_PI * m))


# ---------------------------------------------------------------------------
# Iwasawa decomposition.
# ---------------------------------------------------------------------------


def a_matrix(r: float) -> np.ndarray:
    return np.diag([r, 1.0, 1.0 / r]).astype(complex)


def n_matrix(nu: complex, s: float) -> np.ndarray:
    """Unipotent factor in the antidiagonal model.  Preservation of the form
    forces the (1,2) entry to be -conj(nu) and the real part of the corner
    to be -|nu|^2/2."""
    xi = -abs(nu) ** 2 / 2.0 + 1j * s
    return np.array([[1, -np.conj(nu), xi], [0, 1, nu], [0, 0, 1]], dtype=complex)


def m_matrix(t: float) -> np.ndarray:
    """Compact-torus element, fixed by the basis-change involution."""
    return np.diag([cmath.exp(1j * t), cmath.exp(-2j * t), cmath.exp(1j * t)])


def an_gamma(r: float, nu: complex = 0.0, s: float = 0.0) -> np.ndarray:
    """The Borel factor transported to the diagonal model."""
    return GAMMA_NP @ (a_matrix(r) @ n_matrix(nu, s)) @ GAMMA_NP


def _qr_positive(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Modified Gram-Schmidt with positive real diagonal of R."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    q = np.zeros_like(a)
    r = np.zeros_like(a)
    for i in range(n):
        v = a[:, i].copy()
        for k in range(i):
            r[k, i] = np.vdot(q[:, k], v)
            v -= r[k, i] * q[:, k]
        r[i, i] = np.linalg.norm(v)
        q[:, i] = v / r[i, i]
    return q, r


def iwasawa(g: np.ndarray, tol: float = 1e-8) -> IwasawaFactors:
    """Factor g = kappa * (a n)^gamma with kappa compact.

    Transport to the antidiagonal model (where the Borel is upper
    triangular), QR-factorize there, and transport the unitary factor back.
    The triangular factor must have diagonal (r, 1, 1/r); anything else is a
    decomposition failure.
    """
    g = np.asarray(g, dtype=complex)
    if membership_residual(g) > tol:
        raise NotInGroup(f"membership residual {membership_residual(g):.2e} > {tol}")
    q, rr = _qr_positive(GAMMA_NP @ g @ GAMMA_NP)
    r = rr[0, 0].real
    if abs(rr[1, 1] - 1.0) > tol or abs(rr[2, 2] - 1.0 / r) > tol:
        raise DecompositionFailure(f"triangular diagonal {np.diag(rr)} not (r, 1, 1/r)")
    nu = rr[1, 2]
    xi = rr[0, 2] / r
    if abs(rr[0, 1] / r + np.conj(nu)) > tol or abs(xi.real + abs(nu) ** 2 / 2) > tol:
        raise DecompositionFailure("unipotent factor fails its consistency relations")
    kappa = GAMMA_NP @ q @ GAMMA_NP
    return IwasawaFactors(kappa=kappa, r=float(r), nu=complex(nu), s=float(xi.imag))


def eval_section(idx: WignerIndex, k: int, g: np.ndarray) -> complex:
    """Extension of the compact matrix coefficient to the whole group through
    the Iwasawa decomposition: the Borel factor contributes r^(-3), the
    unipotent part nothing."""
    if not admissible(idx, k):
        raise ValueError(f"{idx} not admissible for k={k}")
    fac = iwasawa(g)
    return fac.r ** (-3) * eval_wigner(idx, euler_from_k(fac.kappa))


# ---------------------------------------------------------------------------
# Finite differences.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gen_split(gen: LieGen) -> tuple[int, int | None]:
    """Indices into the real basis list for gen = A + iB with A, B real."""
    table = {
        LieGen.U0: ((0, 1.0), None),
        LieGen.U3: ((3, 1.0), None),
        LieGen.U1_PLUS_IU2: ((1, 1.0), (2, 1.0)),
        LieGen.U1_MINUS_IU2: ((1, 1.0), (2, -1.0)),
        LieGen.X1: ((4, 0.5), (5, -0.5)),
        LieGen.X3: ((4, 0.5), (5, 0.5)),
        LieGen.X2: ((6, 0.5), (7, -0.5)),
        LieGen.X4: ((6, 0.5), (7, 0.5)),
    }
    return table[gen]


def real_imag_parts(x) -> tuple[np.ndarray, np.ndarray | None]:
    """Split a complexified algebra element into X = A + i*B with A, B in the
    real form.  Accepts a generator symbol or any numpy matrix in the
    complexified algebra."""
    if isinstance(x, LieGen):
        (ia, ca), part_b = _gen_split(x)
        a = ca * _G_REAL_BASIS[ia]
        b = part_b[1] * _G_REAL_BASIS[part_b[0]] if part_b is not None else None
        return a, b
    x = np.asarray(x, dtype=complex)
    cx = -(J_DIAG_NP @ x.conj().T @ J_DIAG_NP)  # conjugation fixing the real form
    a = (x + cx) / 2
    b = (x - cx) / 2j
    if np.abs(b).max() < 1e-15:
        return a, None
    return a, b


def _stencil(direction: np.ndarray, g: np.ndarray, h: float):
    """Group points and weights of one Richardson-extrapolated central
    difference along a real direction."""
    pts = []
    for hh, rw in ((h, -1.0 / 3.0), (h / 2, 4.0 / 3.0)):
        step = expm(-hh * direction)
        pts.append((step @ g, rw / (2 * hh)))
        pts.append((np.linalg.inv(step) @ g, -rw / (2 * hh)))
    return pts


def fd_derivative(f, x, g: np.ndarray, h: float = 1e-3) -> complex:
    """Left-invariant derivative d/dt f(exp(-t x) g) at t = 0 by central
    differences with one Richardson step; complex directions combine the two
    real sub-directions linearly."""
    a, b = real_imag_parts(x)
    total = 0j
    for direction, weight in ((a, 1.0), (b, 1j)):
        if direction is None:
            continue
        total += weight * sum(w * f(p) for p, w in _stencil(direction, g, h))
    return total


def random_group_point(seed) -> np.ndarray:
    """exp of a pseudo-random element of the real form with norm <= 1."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    coeffs = rng.uniform(-1.0, 1.0, size=8)
    z = sum(c * b for c, b in zip(coeffs, _G_REAL_BASIS))
    nrm = np.linalg.norm(z)
    if nrm > 1.0:
        z /= nrm
    return expm(z)


# ---------------------------------------------------------------------------
# Operator validation sweeps.
# ---------------------------------------------------------------------------


def _decompose_for_eval(g: np.ndarray) -> tuple[EulerAngles, float]:
    fac = iwasawa(g)
    return euler_from_k(fac.kappa), fac.r ** (-3)


def _fd_sweep(k, j_max, samples, tol, seed, gens, act_fn, label) -> list[CheckResult]:
    """Compare the exact operator prediction against finite differences for
    every admissible index with j <= j_max, every generator in gens, at
    `samples` seeded random group points.  One result row per (generator,
    index) with the max relative error over the points."""
    indices = list(admissible_indices(k, j_max))
    base = [random_group_point(1_000_003 * seed + i) for i in range(samples)]
    base_eval = [_decompose_for_eval(g) for g in base]
    results = []
    for gen in gens:
        a, b = real_imag_parts(gen)
        stencils = []
        for g in base:
            pts = []
            for direction, weight in ((a, 1.0), (b, 1j)):
                if direction is None:
                    continue
                for p, w in _stencil(direction, g, 1e-3):
                    pts.append((_decompose_for_eval(p), weight * w))
            stencils.append(pts)
        for idx in indices:
            image = act_fn(gen, idx)
            worst = 0.0
            for (angles0, rm3_0), pts in zip(base_eval, stencils):
                pred = sum(
                    coeff.to_complex() * rm3_0 * eval_wigner(tgt, angles0)
                    for tgt, coeff in image
                )
                fd = sum(w * rm3 * eval_wigner(idx, ang) for (ang, rm3), w in pts)
                worst = max(worst, abs(fd - pred) / max(1.0, abs(pred)))
            results.append(
                CheckResult(
                    name=f"{label}[k={k},{gen.value},{idx}]",
                    passed=worst <= tol,
                    max_err=worst,
                    tol=tol,
                    params={"k": k, "gen": gen.value},
                )
            )
    return results


def check_compact_action(k: int, j_max=Fraction(5, 2), samples: int = 20,
                        tol: float = 1e-6, seed: int = 0) -> list[CheckResult]:
    """Finite-difference validation of the compact-generator action."""
    return _fd_sweep(k, j_max, samples, tol, seed, L_GENS, act_l_index, "dl")


def check_noncompact_action(k: int, j_max=Fraction(5, 2), samples: int = 20,
                     tol: float = 1e-6, seed: int = 0,
                     variant: str = DEFAULT_VARIANT, gens=P_GENS) -> list[CheckResult]:
    """Finite-difference validation of the noncompact-generator action for
    the chosen coefficient variant."""

    def act(gen, idx):
        return act_p_index(gen, idx, variant)

    return _fd_sweep(k, j_max, samples, tol, seed, gens, act, f"dp:{variant}")


def adjudicate_variant(k_max: int = 1, j_max=Fraction(3, 2), samples: int = 5,
                       tol: float = 1e-6, seed: int = 0) -> dict:
    """Run the noncompact sweep under both coefficient variants and report
    which one the finite differences accept."""
    verdict = {}
    for variant in ("plus1", "plus2"):
        worst = 0.0
        for k in range(k_max + 1):
            res = check_noncompact_action(k, j_max, samples, tol, seed, variant)
            worst = max(worst, max(r.max_err for r in res))
        verdict[variant] = {"max_rel_err": worst, "pass": worst <= tol}
    accepted = [v for v, r in verdict.items() if r["pass"]]
    verdict["accepted"] = accepted[0] if len(accepted) == 1 else None
    return verdict


# ---------------------------------------------------------------------------
# Quadrature on the compact group.
# ---------------------------------------------------------------------------


def _trap_nodes(count: int) -> tuple[np.ndarray, float]:
    return np.arange(count) * (FOUR_PI / count), FOUR_PI / count


def quadrature_ip(idx1: WignerIndex, idx2: WignerIndex, nodes: int = 0) -> complex:
    """Invariant inner product int W1 conj(W2) by product quadrature:
    trapezoid over the full 4*pi periods of the three angle variables (exact
    for the trigonometric frequencies involved once the node counts clear the
    bandwidth), Gauss-Legendre in cos(theta), normalized so that the total
    measure is 1."""
    j2a, n2a, *_ = idx1.doubled()
    j2b, n2b, *_ = idx2.doubled()
    nz = max(nodes, abs(n2a) + abs(n2b) + 4)
    nang = max(nodes, j2a + j2b + 4)
    ng = max(4, (j2a + j2b) // 2 + 2)

    zg, wz = _trap_nodes(nz)
    pg, wp = _trap_nodes(nang)
    sg, ws = _trap_nodes(nang)
    xg, wx = np.polynomial.legendre.leggauss(ng)
    theta = np.arccos(xg)

    def grid(idx):
        j2, n2, m12, m22 = idx.doubled()
        sh, ch = np.sin(theta / 2), np.cos(theta / 2)
        prof = np.zeros_like(theta)
        for c, es, ec in _theta_terms(j2, m12, m22):
            prof = prof + c * sh**es * ch**ec
        return (
            np.exp(0.5j * n2 * zg)[:, None, None, None]
            * np.exp(0.5j * m22 * pg)[None, :, None, None]
            * prof[None, None, :, None]
            * np.exp(0.5j * m12 * sg)[None, None, None, :]
        )

    integrand = grid(idx1) * np.conj(grid(idx2))
    weights = wz * wp * ws * wx[None, None, :, None]
    total = complex((integrand * weights).sum())
    haar = wz * nz * wp * nang * ws * nang * wx.sum()
    return total / haar


def orthogonality_report(k: int = 0, j_max=Fraction(3, 2), tol: float = 1e-10) -> list[CheckResult]:
    """Pairwise orthogonality of all admissible indices with j <= j_max, plus
    constancy of the squared norm along n and under (m1, m2) sign flips."""
    indices = list(admissible_indices(k, j_max))
    results = []
    worst = 0.0
    for i, a in enumerate(indices):
        for b in indices[i + 1 :]:
            worst = max(worst, abs(quadrature_ip(a, b)))
    results.append(
        CheckResult(
            name=f"pairwise orthogonality (j<=j_max, {len(indices)} indices)",
            passed=worst <= tol,
            max_err=worst,
            tol=tol,
        )
    )
    norm_dev = 0.0
    for a in indices:
        val = quadrature_ip(a, a)
        expected = 1.0 / (a.j.twice + 1)  # computed fixture: 1/(2j+1)
        norm_dev = max(norm_dev, abs(val - expected))
    results.append(
        CheckResult(
            name="squared norms equal 1/(2j+1), independent of n and m-signs",
            passed=norm_dev <= tol,
            max_err=norm_dev,
            tol=tol,
        )
    )
    return results


# ---------------------------------------------------------------------------
# Self-consistency suites.
# ---------------------------------------------------------------------------


def _random_angles(rng) -> EulerAngles:
    return EulerAngles(
        zeta=float(rng.uniform(0.0, FOUR_PI)),
        phi=float(rng.uniform(-math.pi, math.pi)),
        theta=float(rng.uniform(0.0, math.pi)),
        psi=float(rng.uniform(-math.pi, 3 * math.pi)),
    )


def homomorphism_report(pairs: int = 20, seed: int = 0, tol: float = 1e-9) -> list[CheckResult]:
    """Multiplicativity and unitarity of the coefficient matrices at fixed
    (j, n), for random compact pairs: validates the Euler conventions and
    the theta-profile independently of any derivative formula."""
    rng = np.random.default_rng(seed)
    results = []
    for j2, n2 in ((1, 1), (2, 0), (3, -3), (4, 2)):
        worst_h = worst_u = 0.0
        for _ in range(pairs):
            e1, e2 = _random_angles(rng), _random_angles(rng)
            k1, k2 = k_from_angles(e1), k_from_angles(e2)
            d1 = wigner_matrix(j2, n2, e1)
            d2 = wigner_matrix(j2, n2, e2)
            d12 = wigner_matrix(j2, n2, euler_from_k(k1 @ k2))
            worst_h = max(worst_h, float(np.abs(d12 - d1 @ d2).max()))
            worst_u = max(
                worst_u,
                float(np.abs(d1 @ d1.conj().T - np.eye(j2 + 1)).max()),
            )
        results.append(
            CheckResult(
                name=f"homomorphism D(k1 k2) = D(k1) D(k2) [2j={j2}, 2n={n2}]",
                passed=worst_h <= tol,
                max_err=worst_h,
                tol=tol,
            )
        )
        results.append(
            CheckResult(
                name=f"unitarity of D [2j={j2}, 2n={n2}]",
                passed=worst_u <= tol,
                max_err=worst_u,
                tol=tol,
            )
        )
    return results


def iwasawa_report(points: int = 1000, seed: int = 0, tol: float = 1e-10) -> list[CheckResult]:
    """Reconstruction and membership residuals over random group points."""
    worst_recon = worst_member = 0.0
    for i in range(points):
        g = random_group_point(7_900_003 * seed + i)
        worst_member = max(worst_member, membership_residual(g))
        fac = iwasawa(g)
        recon = fac.kappa @ an_gamma(fac.r, fac.nu, fac.s)
        worst_recon = max(worst_recon, float(np.abs(recon - g).max()))
    return [
        CheckResult(
            name=f"membership residual over {points} random points",
            passed=worst_member <= 1e-12,
            max_err=worst_member,
            tol=1e-12,
        ),
        CheckResult(
            name=f"iwasawa reconstruction over {points} random points",
            passed=worst_recon <= tol,
            max_err=worst_recon,
            tol=tol,
        ),
    ]


def covariance_report(k: int = 0, trials: int = 10, seed: int = 0, tol: float = 1e-9) -> list[CheckResult]:
    """Functional-equation checks for the extended sections: right
    translation by a Borel factor scales by r^(-3); right translation by a
    compact-torus element produces the phase pinned by the index window."""
    rng = np.random.default_rng(seed)
    indices = list(admissible_indices(k, Fraction(3, 2)))
    worst_b = worst_m = 0.0
    for t in range(trials):
        g = random_group_point(rng)
        idx = indices[t % len(indices)]
        base = eval_section(idx, k, g)
        r0 = float(rng.uniform(0.5, 2.0))
        nu = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        s0 = float(rng.uniform(-1, 1))
        translated = eval_section(idx, k, g @ an_gamma(r0, nu, s0))
        worst_b = max(worst_b, abs(translated - r0 ** (-3) * base) / max(1.0, abs(base)))
        t0 = float(rng.uniform(-math.pi, math.pi))
        m_translated = eval_section(idx, k, g @ m_matrix(t0))
        expected = cmath.exp(-1j * (2 * k + 3) * t0) * base
        worst_m = max(worst_m, abs(m_translated - expected) / max(1.0, abs(base)))
    return [
        CheckResult(
            name=f"right Borel covariance [k={k}]",
            passed=worst_b <= tol,
            max_err=worst_b,
            tol=tol,
        ),
        CheckResult(
            name=f"right compact-torus covariance [k={k}]",
            passed=worst_m <= tol,
            max_err=worst_m,
            tol=tol,
        ),
    ]
