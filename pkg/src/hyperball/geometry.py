"""The unit ball of C^n, its boundary sphere, the invariant distance, the
SU(1,n) action, and finite-difference application of the invariant Laplacians.

Scalar fields are callables on raw complex vectors: f(pts) with pts of shape
(..., n) returning shape (...).  They must be vectorized over the leading
axes (finite-difference stencils and quadrature grids are evaluated in one
call) and safe for concurrent evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "BallPoint",
    "BoundaryPoint",
    "GroupElement",
    "GeneralizedLaplacianParams",
    "StencilError",
    "ball_point",
    "boundary_point",
    "hermitian_inner",
    "bergman_distance",
    "mobius_act",
    "transvection",
    "random_group_element",
    "apply_delta_nu",
    "apply_delta_alpha_beta",
]


class StencilError(ValueError):
    """Finite-difference stencil would leave the open ball."""


@dataclass(frozen=True)
class BallPoint:
    """Point of the open unit ball, |z| < 1 (constructor-enforced)."""

    z: np.ndarray

    def __post_init__(self):
        z = np.atleast_1d(np.asarray(self.z, dtype=complex))
        if z.ndim != 1:
            raise ValueError("BallPoint expects a complex n-vector")
        if np.linalg.norm(z) >= 1.0:
            raise ValueError(f"|z| = {np.linalg.norm(z):.6g} is not < 1")
        object.__setattr__(self, "z", z)

    @property
    def n(self) -> int:
        return len(self.z)


@dataclass(frozen=True)
class BoundaryPoint:
    """Point of the boundary sphere S^{2n-1}, | |omega| - 1 | < 1e-12."""

    omega: np.ndarray

    def __post_init__(self):
        w = np.atleast_1d(np.asarray(self.omega, dtype=complex))
        if w.ndim != 1:
            raise ValueError("BoundaryPoint expects a complex n-vector")
        if abs(np.linalg.norm(w) - 1.0) >= 1e-12:
            raise ValueError(f"| |omega| - 1 | = {abs(np.linalg.norm(w)-1.0):.3g} is not < 1e-12")
        object.__setattr__(self, "omega", w)


def ball_point(*components) -> BallPoint:
    """BallPoint from scalar components, e.g. ball_point(0.3+0.1j) for n=1."""
    return BallPoint(np.array(components, dtype=complex))


def boundary_point(*components) -> BoundaryPoint:
    return BoundaryPoint(np.array(components, dtype=complex))


@dataclass(frozen=True)
class GroupElement:
    """Element of SU(1,n) in block form ((A, B), (C, D)).

    Stored as the full (n+1) x (n+1) matrix; the constructor enforces
    g* J g = J (entrywise 1e-12, J = diag(I_n, -1)) and det g = 1 (1e-10).
    """

    matrix: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.matrix, dtype=complex)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 2:
            raise ValueError("GroupElement expects an (n+1)x(n+1) matrix")
        n = g.shape[0] - 1
        J = np.diag([1.0] * n + [-1.0]).astype(complex)
        defect = g.conj().T @ J @ g - J
        if np.max(np.abs(defect)) >= 1e-12:
            raise ValueError(f"g*Jg != J (defect {np.max(np.abs(defect)):.3g})")
        det = np.linalg.det(g)
        if abs(det - 1.0) >= 1e-10:
            raise ValueError(f"det g = {det:.12g} != 1")
        object.__setattr__(self, "matrix", g)

    @property
    def n(self) -> int:
        return self.matrix.shape[0] - 1

    @property
    def A(self) -> np.ndarray:
        return self.matrix[: self.n, : self.n]

    @property
    def B(self) -> np.ndarray:
        return self.matrix[: self.n, self.n]

    @property
    def C(self) -> np.ndarray:
        return self.matrix[self.n, : self.n]

    @property
    def D(self) -> complex:
        return complex(self.matrix[self.n, self.n])

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        n = self.n
        J = np.diag([1.0] * n + [-1.0]).astype(complex)
        return GroupElement(J @ self.matrix.conj().T @ J)


@dataclass(frozen=True)
class GeneralizedLaplacianParams:
    """Weight pair (alpha, beta) of the two-parameter Laplacian family;
    sigma2 = (alpha+beta+n)^2 is derived, never stored independently."""

    alpha: float
    beta: float
    n: int

    @property
    def sigma2(self) -> float:
        return (self.alpha + self.beta + self.n) ** 2


def hermitian_inner(z: BallPoint, w: BallPoint) -> complex:
    """<z, w> = sum_k z_k conj(w_k)."""
    return complex(np.sum(z.z * np.conj(w.z)))


def _cosh2_distance(z: np.ndarray, w: np.ndarray) -> float:
    zw = complex(np.sum(z * np.conj(w)))
    num = abs(1.0 - zw) ** 2
    den = (1.0 - float(np.sum(np.abs(z) ** 2))) * (1.0 - float(np.sum(np.abs(w) ** 2)))
    return num / den


def bergman_distance(z: BallPoint, w: BallPoint) -> float:
    """Invariant distance d(z, w), cosh^2 d = |1-<z,w>|^2 / ((1-|z|^2)(1-|w|^2)).

    The arccosh argument is clamped to >= 1 when within 1e-14 below it
    (rounding noise at z = w).
    """
    q = _cosh2_distance(z.z, w.z)
    if q < 1.0:
        if q < 1.0 - 1e-14:
            raise ValueError(f"cosh^2 d = {q} < 1; invalid ball points")
        q = 1.0
    return math.acosh(math.sqrt(q))


def mobius_act(g: GroupElement, z: BallPoint) -> BallPoint:
    """Fractional-linear action g.z = (Az + B)(Cz + D)^{-1}."""
    num = g.A @ z.z + g.B
    den = complex(g.C @ z.z) + g.D
    w = num / den
    if np.linalg.norm(w) >= 1.0:
        raise ValueError("mobius_act produced |g.z| >= 1; malformed group element")
    return BallPoint(w)


def transvection(z: BallPoint) -> GroupElement:
    """The transvection g_z with g_z . 0 = z.

    Blocks: A = (I - z z*)^{-1/2} (principal hermitian square root),
    B = z (1-|z|^2)^{-1/2}, C = z* (I - z z*)^{-1/2}, D = (1-|z|^2)^{-1/2}.
    """
    zv = z.z
    n = len(zv)
    zz = np.outer(zv, np.conj(zv))
    m = np.eye(n, dtype=complex) - zz
    vals, vecs = np.linalg.eigh(m)
    inv_sqrt = (vecs * (vals ** -0.5)) @ vecs.conj().T
    s = (1.0 - float(np.sum(np.abs(zv) ** 2))) ** -0.5
    g = np.zeros((n + 1, n + 1), dtype=complex)
    g[:n, :n] = inv_sqrt
    g[:n, n] = zv * s
    g[n, :n] = np.conj(zv) @ inv_sqrt
    g[n, n] = s
    return GroupElement(g)


def random_group_element(n: int, rng: np.random.Generator) -> GroupElement:
    """Seeded random element: transvection times a unitary block rotation.

    Exercises both factors of the Cartan decomposition; the U(1) block is
    phase-corrected so the determinant is exactly 1.
    """
    direction = rng.normal(size=n) + 1j * rng.normal(size=n)
    direction /= np.linalg.norm(direction)
    radius = 0.15 + 0.55 * rng.random()
    t = transvection(BallPoint(radius * direction))
    gauss = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(gauss)
    q = q @ np.diag(np.diag(r) / np.abs(np.diag(r)))
    detq = np.linalg.det(q)
    k = np.zeros((n + 1, n + 1), dtype=complex)
    k[:n, :n] = q
    k[n, n] = np.conj(detq) / abs(detq)  # makes det k = |det q|^2 = 1
    return t @ GroupElement(k)


def _wirtinger_stencil(zv: np.ndarray, h: float):
    """All stencil points for gradient + mixed second derivatives.

    Returns (points, index) where index maps labels to rows:
    'c' center; ('+',a)/('-',a) axis shifts; ('++',a,b) etc. cross shifts
    in real coordinates a, b (0..2n-1; even = x_i, odd = y_i).
    """
    n = len(zv)
    dim = 2 * n
    labels = [("c",)]
    for a in range(dim):
        labels.append(("+", a))
        labels.append(("-", a))
    for a in range(dim):
        for b in range(a + 1, dim):
            # diagonal (x_i, y_i) pairs are never needed: their contribution
            # to d^2/dz_i dzbar_i cancels exactly
            if b == a + 1 and a % 2 == 0:
                continue
            for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                labels.append(("x", a, b, sa, sb))
    real = np.empty((len(labels), dim))
    base = np.empty(dim)
    base[0::2] = zv.real
    base[1::2] = zv.imag
    for row, lab in enumerate(labels):
        pt = base.copy()
        if lab[0] == "+":
            pt[lab[1]] += h
        elif lab[0] == "-":
            pt[lab[1]] -= h
        elif lab[0] == "x":
            _, a, b, sa, sb = lab
            pt[a] += sa * h
            pt[b] += sb * h
        real[row] = pt
    pts = real[:, 0::2] + 1j * real[:, 1::2]
    index = {lab: i for i, lab in enumerate(labels)}
    return pts, index


def _wirtinger_derivatives(f, zv: np.ndarray, h: float):
    """(value, dz, dzbar, dzdzbar) at zv by central differences.

    dz, dzbar are length-n arrays; dzdzbar is the n x n matrix of
    d^2/dz_i dzbar_j.
    """
    n = len(zv)
    if np.linalg.norm(zv) + 2.0 * h * math.sqrt(2.0) >= 1.0:
        raise StencilError(f"stencil of step {h} leaves the ball at |z|={np.linalg.norm(zv):.4g}")
    pts, idx = _wirtinger_stencil(zv, h)
    vals = np.asarray(f(pts), dtype=complex)
    fc = vals[idx[("c",)]]

    def d1(a):
        return (vals[idx[("+", a)]] - vals[idx[("-", a)]]) / (2.0 * h)

    def d2(a):
        return (vals[idx[("+", a)]] - 2.0 * fc + vals[idx[("-", a)]]) / (h * h)

    def cross(a, b):
        if a > b:
            a, b = b, a
        return (
            vals[idx[("x", a, b, 1, 1)]]
            - vals[idx[("x", a, b, 1, -1)]]
            - vals[idx[("x", a, b, -1, 1)]]
            + vals[idx[("x", a, b, -1, -1)]]
        ) / (4.0 * h * h)

    dz = np.array([(d1(2 * i) - 1j * d1(2 * i + 1)) / 2.0 for i in range(n)])
    dzb = np.array([(d1(2 * i) + 1j * d1(2 * i + 1)) / 2.0 for i in range(n)])
    dd = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i == j:
                dd[i, j] = (d2(2 * i) + d2(2 * i + 1)) / 4.0
            else:
                hxx = cross(2 * i, 2 * j)
                hyy = cross(2 * i + 1, 2 * j + 1)
                hxy = cross(2 * i, 2 * j + 1)
                hyx = cross(2 * i + 1, 2 * j)
                dd[i, j] = (hxx + hyy + 1j * (hxy - hyx)) / 4.0
    return fc, dz, dzb, dd


def apply_delta_alpha_beta(
    gp: GeneralizedLaplacianParams,
    f,
    z: BallPoint,
    h: float = 1e-3,
    richardson: bool = False,
) -> complex:
    """Apply the two-parameter invariant Laplacian to f at z by central
    differences in the 2n real coordinates.

    4(1-|z|^2) { sum_{ij} (delta_ij - z_i zbar_j) d^2/dz_i dzbar_j
                 + alpha sum z_j d/dz_j + beta sum zbar_j d/dzbar_j
                 - alpha beta }.
    With richardson=True the h and h/2 values are extrapolated.
    """

    def once(step: float) -> complex:
        fc, dz, dzb, dd = _wirtinger_derivatives(f, z.z, step)
        zv = z.z
        m = np.eye(len(zv), dtype=complex) - np.outer(zv, np.conj(zv))
        second = complex(np.sum(m * dd))
        first = gp.alpha * complex(np.sum(zv * dz)) + gp.beta * complex(np.sum(np.conj(zv) * dzb))
        zero = -gp.alpha * gp.beta * fc
        return 4.0 * (1.0 - float(np.sum(np.abs(zv) ** 2))) * (second + first + zero)

    if not richardson:
        return once(h)
    v1 = once(h)
    v2 = once(h / 2.0)
    return (4.0 * v2 - v1) / 3.0


def apply_delta_nu(p, f, z: BallPoint, h: float = 1e-3, richardson: bool = False) -> complex:
    """The weighted Laplacian: the (alpha, beta) = (0, -nu) member of the family."""
    gp = GeneralizedLaplacianParams(alpha=0.0, beta=-p.nu, n=p.n)
    return apply_delta_alpha_beta(gp, f, z, h=h, richardson=richardson)
