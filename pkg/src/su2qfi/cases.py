"""Closed-form maximal QFI for three concrete estimation scenarios.

Spherical field
    field = r (sin th cos ph, sin th sin ph, cos th); estimating the
    direction angles gives a purely oscillatory MQFI (16 j^2 sin^2(rt/2),
    with an extra sin^2 th for the azimuth), estimating the amplitude the
    purely quadratic 4 j^2 t^2.

Static two-component field
    h = omega0 jz + lam jx, K = sqrt(lam^2 + omega0^2).  Estimating omega0:
    mqfi = 4 j^2 [omega0^2 t^2 / K^2 + (4 lam^2 / K^4) sin^2(K t / 2)];
    estimating lam swaps omega0 and lam in the two numerators.

Circularly driven field
    h(t) = omega0 jz + lam (jx cos wt + jy sin wt).  A frame rotating at
    the drive frequency w makes the dynamics static with
    h_eff = delta jz + lam jx, delta = omega0 - w, so the lab propagator
    factors as U = exp(-i w t jz) exp(-i h_eff t).  Estimating omega0 or
    lam reduces to the static formulas with omega0 -> delta; estimating w
    composes the generators of the two factors, giving mqfi =
    4 j^2 (lam^2 / kp^4) [2 + kp^2 t^2 - 2 kp t sin(kp t) - 2 cos(kp t)]
    with kp = sqrt(lam^2 + delta^2), stationary and maximal on resonance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .generator import DegenerateFieldError, FieldCurve, QfiBreakdown
from .spin import SpinRep, dot_with_J, hermitian_expm

__all__ = [
    "SphericalField",
    "StaticFieldSystem",
    "DrivenSystem",
    "spherical_field_mqfi",
    "spherical_curve",
    "static_field_mqfi",
    "static_curve",
    "RotatingFrame",
    "rotating_frame",
    "driving_generator_vector",
    "driving_generator",
    "driving_frequency_mqfi",
    "driven_static_mqfi",
    "driven_static_curve",
]


@dataclass(frozen=True)
class SphericalField:
    """External field of amplitude r pointing along (theta, phi)."""

    r: float
    theta: float
    phi: float

    def __post_init__(self):
        if not self.r > 0:
            raise DegenerateFieldError(f"field amplitude must be positive, got {self.r}")

    def direction(self) -> np.ndarray:
        st, ct = np.sin(self.theta), np.cos(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), ct])


@dataclass(frozen=True)
class StaticFieldSystem:
    """Ensemble coupled to a static transverse field: h = omega0 jz + lam jx."""

    omega0: float
    lam: float

    def __post_init__(self):
        if self.k == 0.0:
            raise DegenerateFieldError("omega0 and lam are both zero, the field vanishes")

    @property
    def k(self) -> float:
        return float(np.hypot(self.lam, self.omega0))


@dataclass(frozen=True)
class DrivenSystem:
    """Ensemble driven by a rotating transverse field of frequency omega."""

    omega0: float
    lam: float
    omega: float

    @property
    def delta(self) -> float:
        """Detuning between the transition and the drive."""
        return self.omega0 - self.omega

    @property
    def kp(self) -> float:
        return float(np.hypot(self.lam, self.delta))


def spherical_field_mqfi(which: str, field: SphericalField, j: float, t: float) -> float:
    """Maximal QFI for estimating one spherical coordinate of the field."""
    jsq4 = 4.0 * float(j) ** 2
    if which == "theta":
        return 4.0 * jsq4 * np.sin(field.r * t / 2.0) ** 2
    if which == "phi":
        return 4.0 * jsq4 * np.sin(field.theta) ** 2 * np.sin(field.r * t / 2.0) ** 2
    if which == "r":
        return jsq4 * t**2
    raise ValueError(f"unknown spherical parameter {which!r}")


def spherical_curve(which: str, field: SphericalField) -> tuple[FieldCurve, float]:
    """Coefficient curve for a spherical-coordinate estimation, plus its anchor.

    Returns the curve through the configured field with the estimated
    coordinate as the curve parameter, and the parameter value at which the
    configured field is reached.
    """
    amp, th0, ph0 = field.r, field.theta, field.phi
    if which == "theta":
        def r_of(th):
            return amp * np.array([np.sin(th) * np.cos(ph0), np.sin(th) * np.sin(ph0), np.cos(th)])

        def v_of(th):
            return amp * np.array([np.cos(th) * np.cos(ph0), np.cos(th) * np.sin(ph0), -np.sin(th)])

        return FieldCurve(r_of, v_of), th0
    if which == "phi":
        def r_of(ph):
            return amp * np.array([np.sin(th0) * np.cos(ph), np.sin(th0) * np.sin(ph), np.cos(th0)])

        def v_of(ph):
            return amp * np.array([-np.sin(th0) * np.sin(ph), np.sin(th0) * np.cos(ph), 0.0])

        return FieldCurve(r_of, v_of), ph0
    if which == "r":
        direction = field.direction()
        return FieldCurve(lambda a: a * direction, lambda a: direction), amp
    raise ValueError(f"unknown spherical parameter {which!r}")


def static_field_mqfi(which: str, system: StaticFieldSystem, j: float, t: float) -> QfiBreakdown:
    """Maximal QFI breakdown for estimating omega0 or lam of a static field."""
    k = system.k
    if which == "omega0":
        radial_sq, transverse_sq = system.omega0**2, system.lam**2
    elif which == "lambda":
        radial_sq, transverse_sq = system.lam**2, system.omega0**2
    else:
        raise ValueError(f"unknown static-field parameter {which!r}")
    jsq4 = 4.0 * float(j) ** 2
    quad = jsq4 * radial_sq * t**2 / k**2
    osc = jsq4 * 4.0 * transverse_sq / k**4 * np.sin(k * t / 2.0) ** 2
    return QfiBreakdown(quad + osc, float(quad), float(osc))


def static_curve(which: str, system: StaticFieldSystem) -> tuple[FieldCurve, float]:
    """Coefficient curve (lam, 0, omega0) parametrized by the estimated coupling."""
    if which == "omega0":
        lam = system.lam
        return FieldCurve(lambda w: np.array([lam, 0.0, w]), lambda w: np.array([0.0, 0.0, 1.0])), system.omega0
    if which == "lambda":
        w0 = system.omega0
        return FieldCurve(lambda l: np.array([l, 0.0, w0]), lambda l: np.array([1.0, 0.0, 0.0])), system.lam
    raise ValueError(f"unknown static-field parameter {which!r}")


@dataclass(frozen=True)
class RotatingFrame:
    """Factored propagator of the driven system, U = U1(t) U2(t).

    U1 = exp(-i omega t jz) undoes the frame rotation, U2 = exp(-i h_eff t)
    evolves under the static effective Hamiltonian h_eff = delta jz + lam jx.
    """

    system: DrivenSystem

    def h_lab(self, rep: SpinRep, t: float) -> np.ndarray:
        """Lab-frame Hamiltonian at time t (time dependent)."""
        s = self.system
        return s.omega0 * rep.jz + s.lam * (np.cos(s.omega * t) * rep.jx + np.sin(s.omega * t) * rep.jy)

    def h_eff(self, rep: SpinRep) -> np.ndarray:
        s = self.system
        return s.delta * rep.jz + s.lam * rep.jx

    def factored(self, rep: SpinRep, t: float) -> tuple[np.ndarray, np.ndarray]:
        """(U1, U2) whose product is the lab-frame propagator at time t."""
        u1 = hermitian_expm(rep.jz, -1j * self.system.omega * t)
        u2 = hermitian_expm(self.h_eff(rep), -1j * t)
        return u1, u2

    def u_full(self, rep: SpinRep, t: float) -> np.ndarray:
        u1, u2 = self.factored(rep, t)
        return u1 @ u2


def rotating_frame(system: DrivenSystem) -> RotatingFrame:
    """Reduce the driven system to its static rotating-frame form."""
    return RotatingFrame(system)


def _require_observable_drive(system: DrivenSystem):
    if system.kp == 0.0:
        raise DegenerateFieldError(
            "lam and delta are both zero: the drive frequency is unobservable (MQFI 0)"
        )


def driving_generator_vector(system: DrivenSystem, t: float) -> np.ndarray:
    """Coefficient vector of the drive-frequency generator, gen = coeffs . J."""
    _require_observable_drive(system)
    kp, lam, delta = system.kp, system.lam, system.delta
    x = kp * t
    if abs(x) < 1e-2:
        x2 = x * x
        g1 = 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0          # (sin x - x cos x)/x^3
        g2 = -0.5 + x2 / 8.0 - x2 * x2 / 144.0                # (1 - cos x - x sin x)/x^2
    else:
        g1 = (np.sin(x) - x * np.cos(x)) / x**3
        g2 = (1.0 - np.cos(x) - x * np.sin(x)) / x**2
    c1 = t**3 * g1
    c2 = t**2 * g2
    return np.array([-lam * delta * c1, lam * c2, lam**2 * c1])


def driving_generator(system: DrivenSystem, rep: SpinRep, t: float) -> np.ndarray:
    """Generator matrix for estimating the drive frequency."""
    return dot_with_J(rep, driving_generator_vector(system, t))


def driving_frequency_mqfi(system: DrivenSystem, j: float, t: float) -> float:
    """Maximal QFI for estimating the drive frequency omega."""
    _require_observable_drive(system)
    kp, lam = system.kp, system.lam
    x = kp * t
    if abs(x) < 0.1:
        x2 = x * x
        bracket = x2 * x2 * (0.25 - x2 / 72.0 + x2 * x2 / 2880.0)
    else:
        bracket = 2.0 + x * x - 2.0 * x * np.sin(x) - 2.0 * np.cos(x)
    return 4.0 * float(j) ** 2 * lam**2 / kp**4 * bracket


def driven_static_mqfi(which: str, system: DrivenSystem, j: float, t: float) -> QfiBreakdown:
    """Maximal QFI for estimating lam or omega0 of the driven system.

    The frame factor carries no dependence on either coupling, so this is
    the static-field result with omega0 replaced by the detuning.  On
    resonance (delta = 0) the lam value is exactly 4 j^2 t^2.
    """
    _require_observable_drive(system)
    if which not in ("omega0", "lambda"):
        raise ValueError(f"unknown driven-system parameter {which!r}")
    equivalent = StaticFieldSystem(omega0=system.delta, lam=system.lam)
    return static_field_mqfi(which, equivalent, j, t)


def driven_static_curve(which: str, system: DrivenSystem) -> tuple[FieldCurve, float]:
    """Effective coefficient curve (lam, 0, delta) for the static parameters."""
    _require_observable_drive(system)
    if which == "omega0":
        lam, omega = system.lam, system.omega
        return (
            FieldCurve(lambda w0: np.array([lam, 0.0, w0 - omega]), lambda w0: np.array([0.0, 0.0, 1.0])),
            system.omega0,
        )
    if which == "lambda":
        delta = system.delta
        return (
            FieldCurve(lambda l: np.array([l, 0.0, delta]), lambda l: np.array([1.0, 0.0, 0.0])),
            system.lam,
        )
    raise ValueError(f"unknown driven-system parameter {which!r}")
