"""Numerical oracles for the parametrization generator and the QFI.

Everything here is deliberately independent of the closed forms in
:mod:`su2qfi.generator`: a truncated nested-commutator series, a
finite-difference derivative of the propagator, the pure-state QFI as a
variance, optimal-state construction, and a midpoint product formula for
time-ordered evolution.  The closed forms are tested against these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .spin import frobenius, hermitian_expm, require_hermitian

__all__ = [
    "OptimalStateResult",
    "qfi_of_state",
    "qfi_fd",
    "optimal_state",
    "generator_series",
    "generator_series_scaled",
    "series_tail_bound",
    "generator_fd",
    "fd_step",
    "trotter_propagator",
    "compose_generators",
]

# Eigenvalue spreads below this are treated as degenerate (generator
# proportional to the identity, MQFI = 0).
DEGENERATE_SPREAD = 1e-12

_UNITARY_TOL = 1e-8


def _require_state(psi, dim: int) -> np.ndarray:
    s = np.asarray(psi, dtype=complex).reshape(-1)
    if s.shape[0] != dim:
        raise ValueError(f"state dimension {s.shape[0]} does not match operator dimension {dim}")
    norm = np.linalg.norm(s)
    if abs(norm - 1.0) > 1e-8:
        raise ValueError(f"state is not normalized (norm {norm:.12f})")
    return s


def _require_unitary(u, name: str = "matrix") -> np.ndarray:
    m = np.asarray(u, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    dev = frobenius(m.conj().T @ m - np.eye(m.shape[0]))
    if dev > _UNITARY_TOL:
        raise ValueError(f"{name} is not unitary (||U^dag U - I||_F = {dev:.3e})")
    return m


def qfi_of_state(h_op, psi) -> float:
    """Pure-state QFI 4 (<gen^2> - <gen>^2) for a generator ``h_op``.

    Nonnegative and bounded by the squared eigenvalue spread of ``h_op``.
    """
    h = require_hermitian(h_op, name="generator")
    s = _require_state(psi, h.shape[0])
    w = h @ s
    mean = float(np.real(np.vdot(s, w)))
    second = float(np.real(np.vdot(w, w)))
    return 4.0 * (second - mean**2)


def qfi_fd(u_of: Callable[[float], np.ndarray], theta: float, psi0, step: Optional[float] = None) -> float:
    """QFI from the parameter derivative of the evolved state.

    Evaluates 4 (<dpsi|dpsi> - |<psi|dpsi>|^2) with |psi(theta)> =
    U(theta)|psi0> and a central difference for |dpsi>.  Cross-validates
    the variance formula together with the finite-difference generator.
    """
    h = step if step is not None else 1e-5 * max(1.0, abs(theta))
    u0 = _require_unitary(u_of(theta), "U(theta)")
    s0 = _require_state(psi0, u0.shape[0])
    plus = u_of(theta + h) @ s0
    minus = u_of(theta - h) @ s0
    psi = u0 @ s0
    dpsi = (plus - minus) / (2 * h)
    overlap = np.vdot(psi, dpsi)
    return 4.0 * float(np.real(np.vdot(dpsi, dpsi)) - abs(overlap) ** 2)


@dataclass(frozen=True)
class OptimalStateResult:
    """Equal superposition of the extreme eigenvectors of a generator."""

    state: np.ndarray
    lambda_max: float
    lambda_min: float
    phase: float
    degenerate: bool

    def mqfi(self) -> float:
        return 0.0 if self.degenerate else (self.lambda_max - self.lambda_min) ** 2


def optimal_state(h_op, phase: float = 0.0) -> OptimalStateResult:
    """Optimal input state (|max> + e^{i phase} |min>) / sqrt(2).

    The attained QFI equals the squared eigenvalue spread for every value
    of the relative phase.  When the spread is below ``DEGENERATE_SPREAD``
    the result is flagged degenerate (MQFI 0).  Ties inside a degenerate
    extreme eigenspace are broken by the deterministic ordering of the
    eigensolver (ascending eigenvalues, stable index).
    """
    h = require_hermitian(h_op, name="generator")
    w, v = np.linalg.eigh(h)
    lo, hi = v[:, 0], v[:, -1]
    state = (hi + np.exp(1j * phase) * lo) / np.sqrt(2.0)
    spread = float(w[-1] - w[0])
    return OptimalStateResult(
        state=state,
        lambda_max=float(w[-1]),
        lambda_min=float(w[0]),
        phase=float(phase),
        degenerate=spread < DEGENERATE_SPREAD,
    )


def generator_series(h_op, dh_op, t: float, order: int) -> np.ndarray:
    """Truncated nested-commutator series for the generator.

    Partial sum through k = ``order`` of

        gen = -t dh + i sum_k (it)^{k+1} / (k+1)!  [h, [h, ... [h, dh]]]

    with k nested commutators in the k-th term.  The tail magnitude is
    bounded by :func:`series_tail_bound`.  Note the partial sum is only as
    well conditioned as its largest term: once 2 ||h|| t is large the
    intermediate terms grow like (2||h||t)^k / k! and double precision (or
    any fixed noise on the inputs) is amplified accordingly.  For large
    phases use :func:`generator_series_scaled`.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    h = require_hermitian(h_op, name="hamiltonian")
    dh = require_hermitian(dh_op, name="hamiltonian derivative")
    if h.shape != dh.shape:
        raise ValueError(f"dimension mismatch: {h.shape} vs {dh.shape}")
    result = -t * dh
    nested = dh
    coeff = (1j * t) ** 2 / 2.0  # (it)^{k+1} / (k+1)! at k = 1
    for k in range(1, order + 1):
        nested = h @ nested - nested @ h
        result = result + 1j * coeff * nested
        coeff = coeff * (1j * t) / (k + 2)
    return result


def series_tail_bound(h_op, t: float, order: int) -> float:
    """Crude bound (2 ||h|| t)^(order+2) / (order+2)! on the dropped tail.

    Uses the spectral norm; a diagnostic for choosing the truncation order,
    not a guaranteed error estimate for the finite-precision sum.
    """
    h = require_hermitian(h_op, name="hamiltonian")
    x = 2.0 * float(np.max(np.abs(np.linalg.eigvalsh(h)))) * abs(t)
    if x == 0.0:
        return 0.0
    n = order + 2
    return math.exp(n * math.log(x) - math.lgamma(n + 1))


def generator_series_scaled(h_op, dh_op, t: float, order: int = 24, max_phase: float = 1.0) -> np.ndarray:
    """Series generator extended to arbitrary ||h|| t by time doubling.

    Evaluates the nested-commutator series on a sub-interval tau = t / 2^s
    chosen so that ||h|| tau <= ``max_phase`` (where the partial sum is
    fully converged and well conditioned), then builds up the full-time
    generator with the exact composition rule for time-independent h:

        gen(2 tau) = gen(tau) + U(tau)^dag gen(tau) U(tau).
    """
    h = require_hermitian(h_op, name="hamiltonian")
    norm = float(np.max(np.abs(np.linalg.eigvalsh(h)))) if h.size else 0.0
    doublings = 0
    phase = norm * abs(t)
    while phase > max_phase:
        phase /= 2.0
        doublings += 1
    tau = t / 2**doublings
    gen = generator_series(h, dh_op, tau, order)
    if doublings == 0:
        return gen
    u = hermitian_expm(h, -1j * tau)
    for _ in range(doublings):
        gen = gen + u.conj().T @ gen @ u
        u = u @ u
    return gen


def fd_step(scale: float) -> float:
    """Central-difference step balancing h^2 truncation against roundoff.

    ``scale`` should estimate t * ||d_theta h||; the third derivative of
    the propagator grows like scale^3, so the step shrinks as scale^(3/2).
    """
    return float(np.clip(2.5e-4 / max(1.0, scale) ** 1.5, 1e-8, 1e-4))


def generator_fd(
    u_of: Callable[[float], np.ndarray],
    theta: float,
    step: Optional[float] = None,
    full_output: bool = False,
):
    """Finite-difference generator i (d_theta U^dag) U, Hermitian-symmetrized.

    Parameters
    ----------
    u_of : callable
        theta -> unitary propagator; all three evaluations are checked for
        unitarity (tolerance 1e-8 in Frobenius norm).
    step : float, optional
        Central-difference step; default 1e-5 * max(1, |theta|).
    full_output : bool
        When True, also return the anti-Hermitian residue ||M - M^dag||_F.

    The residue is the primary sanity signal for a misconfigured step: the
    analytic operator is exactly Hermitian, so anything beyond the h^2
    truncation scale means the difference quotient is dominated by noise.
    A residue above 10 h^2 (1 + ||gen||_F)^3 raises.
    """
    h = step if step is not None else 1e-5 * max(1.0, abs(theta))
    if h <= 0:
        raise ValueError(f"step must be positive, got {h}")
    u_plus = _require_unitary(u_of(theta + h), "U(theta+h)")
    u_minus = _require_unitary(u_of(theta - h), "U(theta-h)")
    u_center = _require_unitary(u_of(theta), "U(theta)")
    d_dag = (u_plus.conj().T - u_minus.conj().T) / (2 * h)
    raw = 1j * d_dag @ u_center
    herm = (raw + raw.conj().T) / 2
    residue = frobenius(raw - raw.conj().T)
    bound = 10.0 * h**2 * (1.0 + frobenius(herm)) ** 3
    if residue > bound:
        raise ValueError(
            f"anti-Hermitian residue {residue:.3e} exceeds {bound:.3e}; "
            f"finite-difference step {h:.3e} is misconfigured"
        )
    if full_output:
        return herm, residue
    return herm


def _expm_skew_taylor(stack: np.ndarray, scale: float) -> np.ndarray:
    """Taylor-by-Horner exp of a stack of small anti-Hermitian matrices."""
    terms = 4
    while scale ** (terms + 1) / math.factorial(terms + 1) > 1e-19 and terms < 24:
        terms += 1
    dim = stack.shape[-1]
    eye = np.eye(dim, dtype=complex)
    out = eye + stack / terms
    for k in range(terms - 1, 0, -1):
        out = eye + (stack / k) @ out
    return out


def _ordered_product(stack: np.ndarray) -> np.ndarray:
    """Product U_n ... U_2 U_1 of a stack [U_1, ..., U_n] by pairwise reduction."""
    us = stack
    while us.shape[0] > 1:
        if us.shape[0] % 2 == 1:
            tail = us[-1:]
            us = np.concatenate([np.matmul(us[1:-1:2], us[0:-1:2]), tail])
        else:
            us = np.matmul(us[1::2], us[0::2])
    return us[0]


def trotter_propagator(
    h_of_t: Callable,
    total_time: float,
    steps: int,
    batch: bool = False,
) -> np.ndarray:
    """Midpoint product formula for the time-ordered propagator.

    Returns the ordered product of exp(-i H(t_k) dt) over the midpoints
    t_k = (k - 1/2) dt, latest factor leftmost.  Second order in dt for
    smooth H(t); the per-factor exponentials are accurate to ~1e-19 so the
    result stays unitary to well below 1e-10 even at 1e5 steps.

    With ``batch=True``, ``h_of_t`` receives the full midpoint array and
    must return the stacked (steps, dim, dim) Hamiltonians; this avoids
    the Python-loop overhead of 1e5 scalar calls.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    dt = total_time / steps
    mids = (np.arange(steps) + 0.5) * dt
    if batch:
        hs = np.asarray(h_of_t(mids), dtype=complex)
        if hs.ndim != 3 or hs.shape[0] != steps:
            raise ValueError(f"batch h_of_t must return (steps, dim, dim), got {hs.shape}")
    else:
        hs = np.stack([np.asarray(h_of_t(tk), dtype=complex) for tk in mids])
    scaled = -1j * dt * hs
    max_norm = float(np.sqrt(np.max(np.sum(np.abs(scaled) ** 2, axis=(1, 2)))))
    if max_norm > 0.8:
        us = np.stack([hermitian_expm(hk, -1j * dt) for hk in hs])
    else:
        us = _expm_skew_taylor(scaled, max_norm)
    return _ordered_product(us)


def compose_generators(h1_gen, u2, h2_gen) -> np.ndarray:
    """Generator of a two-factor evolution U = U1 U2: gen2 + U2^dag gen1 U2."""
    g1 = require_hermitian(h1_gen, name="first generator")
    g2 = require_hermitian(h2_gen, name="second generator")
    u = _require_unitary(u2, "U2")
    if g1.shape != g2.shape or g1.shape != u.shape:
        raise ValueError(f"dimension mismatch: {g1.shape}, {g2.shape}, {u.shape}")
    return g2 + u.conj().T @ g1 @ u
