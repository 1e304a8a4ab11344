"""Finite-dimensional spin operators and Hermitian-matrix utilities.

All matrices are dense complex ndarrays in the eigenbasis of the z
generator, with basis states ordered by descending magnetic quantum number
m = j, j-1, ..., -j.  Spin labels are carried internally as the integer 2j
so half-integer spins never live in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "MAX_SPIN",
    "SpinRep",
    "build_spin_rep",
    "dot_with_J",
    "commutator",
    "hermitian_expm",
    "frobenius",
    "require_hermitian",
]

# Dimension guard: dim = 2j+1 <= 101 keeps dense eigendecompositions cheap.
MAX_SPIN = 50


def frobenius(matrix) -> float:
    """Frobenius norm as a plain float."""
    return float(np.linalg.norm(matrix))


def require_hermitian(matrix, tol: float = 1e-10, name: str = "matrix") -> np.ndarray:
    """Validate that ``matrix`` is square and Hermitian, return it as complex ndarray.

    The deviation max|M - M^dag| is compared against ``tol`` scaled by the
    largest matrix element (with a floor of 1 so the zero matrix passes).
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if m.size and not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError(f"{name} contains non-finite entries")
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    dev = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if dev > tol * scale:
        raise ValueError(f"{name} is not Hermitian (deviation {dev:.3e})")
    return m


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class SpinRep:
    """Matrix representation of a single spin.

    Attributes
    ----------
    twice_j : int
        Twice the spin quantum number (1 for spin-1/2, 2 for spin-1, ...).
    jx, jy, jz : np.ndarray
        Hermitian (2j+1) x (2j+1) generators.  ``jz`` is diagonal with
        entries j, j-1, ..., -j.  The arrays are marked read-only.
    """

    twice_j: int
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray

    @property
    def j(self) -> float:
        return self.twice_j / 2.0

    @property
    def dim(self) -> int:
        return self.twice_j + 1

    def __repr__(self) -> str:  # keep dataclass repr away from the matrices
        half = "" if self.twice_j % 2 == 0 else "/2"
        num = self.twice_j // 2 if self.twice_j % 2 == 0 else self.twice_j
        return f"SpinRep(j={num}{half}, dim={self.dim})"


def build_spin_rep(j) -> SpinRep:
    """Construct the spin-j generators from the ladder operators.

    Parameters
    ----------
    j : half-integer
        Spin quantum number; 2j must be a positive integer and j <= 50.

    The raising operator has matrix elements sqrt(j(j+1) - m(m+1)) one
    step above the diagonal; jx and jy follow as the Hermitian and
    anti-Hermitian combinations, jz is diagonal in m.
    """
    jf = float(j)
    twice_j = round(2 * jf)
    if abs(2 * jf - twice_j) > 1e-9 or twice_j <= 0:
        raise ValueError(f"spin must be a positive half-integer, got {j!r}")
    if twice_j > 2 * MAX_SPIN:
        raise ValueError(f"spin {j!r} exceeds the supported maximum {MAX_SPIN}")

    dim = twice_j + 1
    jq = twice_j / 2.0
    m = (twice_j - 2 * np.arange(dim)) / 2.0  # j, j-1, ..., -j

    raising = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):
        raising[k - 1, k] = np.sqrt(jq * (jq + 1) - m[k] * (m[k] + 1))
    lowering = raising.conj().T

    jx = (raising + lowering) / 2
    jy = (raising - lowering) / 2j
    jz = np.diag(m).astype(complex)
    return SpinRep(twice_j, _freeze(jx), _freeze(jy), _freeze(jz))


def dot_with_J(rep: SpinRep, a) -> np.ndarray:
    """Contract a real 3-vector with the spin generators: a_x jx + a_y jy + a_z jz.

    The result is Hermitian with eigenvalues |a| * m for m = j, ..., -j.
    """
    a = np.asarray(a, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("coefficient vector must be finite")
    return a[0] * rep.jx + a[1] * rep.jy + a[2] * rep.jz


def commutator(a, b) -> np.ndarray:
    """Matrix commutator A B - B A."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 2:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def hermitian_expm(matrix, scale) -> np.ndarray:
    """exp(scale * M) for Hermitian M via eigendecomposition.

    Diagonalizing M = V diag(w) V^dag and exponentiating the spectrum keeps
    the result exactly normal; for purely imaginary ``scale`` the output is
    unitary to machine precision regardless of ||M||.
    """
    m = require_hermitian(matrix, name="expm operand")
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as err:
        raise np.linalg.LinAlgError(
            f"eigendecomposition failed for {m.shape[0]}x{m.shape[1]} matrix "
            f"(max |entry| {np.max(np.abs(m)):.3e}, frobenius {frobenius(m):.3e}): {err}"
        ) from err
    return (v * np.exp(scale * w)) @ v.conj().T
