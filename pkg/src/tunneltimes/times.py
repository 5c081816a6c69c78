"""Tunneling-time definitions.

The entropic time is built from three ingredients of one problem: the
classical time tau_c, the action phi, and a transmission probability p_t,

    ett = -(tau_c / (2 pi p_t)) * exp(-2 phi) * B(phi),

with B the bracket factor from the statistical layer. Specializations for
the WKB transmission and for the exact rectangular transmission are provided
and are algebraically identical to the general form; the identity is kept
testable rather than collapsed. Phase and dwell times exist in closed form
for the rectangular barrier only and are not invented for other shapes.

Sign policy: for phi <= PHI_STAR the entropic time comes out non-positive.
It is returned as computed, with the report's positivity flag cleared;
nothing is clamped.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, RegimeError
from .potentials import Rectangular
from .stattherm import PHI_STAR, bracket, inverse_temperature
from .transmission import pt_rectangular_exact, pt_wkb
from .turning import TunnelingProblem
from .wkb import QUAD_TOL_DEFAULT, compute_wkb

__all__ = [
    "TimesReport",
    "phi_rectangular",
    "tau_c_rectangular",
    "ett_general",
    "ett_he",
    "ett_rectangular",
    "phase_time_rectangular",
    "dwell_time_rectangular",
    "triangular_scalings",
    "times_report",
]

_TWO_PI = 2.0 * math.pi


def _check_under_barrier(energy: float, v0: float):
    if not 0.0 < energy < v0:
        raise DomainError(f"energy must lie in (0, v0) = (0, {v0}), got {energy}")


def phi_rectangular(energy: float, v0: float, length: float, mass: float = 1.0) -> float:
    """Closed-form action sqrt(2m(v0 - E)) * L / hbar."""
    _check_under_barrier(energy, v0)
    return math.sqrt(2.0 * mass * (v0 - energy)) * length


def tau_c_rectangular(energy: float, v0: float, length: float, mass: float = 1.0) -> float:
    """Closed-form classical time m*L^2/(hbar*phi) = L*sqrt(m/(2(v0 - E)))."""
    _check_under_barrier(energy, v0)
    return length * math.sqrt(mass / (2.0 * (v0 - energy)))


def ett_general(tau_c: float, phi: float, p_t: float) -> float:
    """Entropic tunneling time for any barrier, signed.

    The exp(-2 phi)/p_t ratio is evaluated in log space: the two factors
    underflow separately near phi ~ 354 while their ratio stays of order
    one for any transmission with the WKB decay.
    """
    if not p_t > 0.0:
        raise DomainError(f"transmission probability must be positive, got {p_t}")
    ratio = math.exp(-2.0 * phi - math.log(p_t))
    return -(tau_c / _TWO_PI) * ratio * bracket(phi)


def ett_he(tau_c: float, phi: float) -> float:
    """Entropic time with the WKB transmission folded in.

    cosh^2(phi) * exp(-2 phi) is written as ((1 + exp(-2 phi))/2)^2, which
    neither overflows nor cancels at large phi. Identical to
    ett_general(tau_c, phi, pt_wkb(phi)) to relative 1e-12.
    """
    q = 0.5 * (1.0 + math.exp(-2.0 * phi))
    return -(tau_c / _TWO_PI) * q * q * bracket(phi)


def ett_rectangular(energy: float, v0: float, length: float, mass: float = 1.0) -> float:
    """Entropic time with the exact rectangular transmission folded in.

    exp(-2 phi)/p_t expands to
    exp(-2 phi) + v0^2 (1 - exp(-2 phi))^2 / (16 E (v0 - E)),
    evaluated with expm1 so both the thin- and thick-barrier ends are
    accurate. Identical to ett_general with pt_rectangular_exact to
    relative 1e-12.
    """
    _check_under_barrier(energy, v0)
    phi = phi_rectangular(energy, v0, length, mass)
    tau_c = tau_c_rectangular(energy, v0, length, mass)
    em = math.exp(-2.0 * phi)
    one_minus = -math.expm1(-2.0 * phi)
    ratio = em + v0 * v0 * one_minus * one_minus / (16.0 * energy * (v0 - energy))
    return -(tau_c / _TWO_PI) * ratio * bracket(phi)


def _pt_times_sinhcosh(energy: float, v0: float, phi: float) -> float:
    # p_t * sinh(phi) * cosh(phi) with the exponential growth of sinh*cosh
    # cancelled against the exact p_t decay before anything is multiplied
    g = 4.0 * energy * (v0 - energy)
    em2 = math.exp(-2.0 * phi)
    one_m2 = -math.expm1(-2.0 * phi)
    one_m4 = -math.expm1(-4.0 * phi)
    return (0.25 * g * one_m4) / (g * em2 + 0.25 * v0 * v0 * one_m2 * one_m2)


def phase_time_rectangular(
    energy: float, v0: float, length: float, mass: float = 1.0
) -> float:
    """Stationary-phase (Wigner) time for the rectangular barrier.

    With phi the barrier action and phi_e = sqrt(2 m E) * L / hbar:

        t_phase = tau_c p_t / (2 phi^2 phi_e^3)
                  * [phi phi_e^2 (phi^2 - phi_e^2)
                     + (phi^2 + phi_e^2)^2 sinh(phi) cosh(phi)]

    Saturates at (hbar/E) sqrt(E/(v0 - E)) for wide barriers.
    """
    _check_under_barrier(energy, v0)
    phi = phi_rectangular(energy, v0, length, mass)
    tau_c = tau_c_rectangular(energy, v0, length, mass)
    phi_e = math.sqrt(2.0 * mass * energy) * length
    p_t = pt_rectangular_exact(energy, v0, phi)
    diff = phi * phi - phi_e * phi_e
    summ = phi * phi + phi_e * phi_e
    pref = tau_c / (2.0 * phi * phi * phi_e**3)
    return pref * (
        p_t * phi * phi_e * phi_e * diff
        + summ * summ * _pt_times_sinhcosh(energy, v0, phi)
    )


def dwell_time_rectangular(
    energy: float, v0: float, length: float, mass: float = 1.0
) -> float:
    """Barrier-region dwell time for the rectangular barrier.

        t_dwell = tau_c p_t / (2 phi^2 phi_e)
                  * [phi (phi^2 - phi_e^2)
                     + (phi^2 + phi_e^2) sinh(phi) cosh(phi)]

    Saturates at (hbar/v0) sqrt(E/(v0 - E)) for wide barriers.
    """
    _check_under_barrier(energy, v0)
    phi = phi_rectangular(energy, v0, length, mass)
    tau_c = tau_c_rectangular(energy, v0, length, mass)
    phi_e = math.sqrt(2.0 * mass * energy) * length
    p_t = pt_rectangular_exact(energy, v0, phi)
    diff = phi * phi - phi_e * phi_e
    summ = phi * phi + phi_e * phi_e
    pref = tau_c / (2.0 * phi * phi * phi_e)
    return pref * (p_t * phi * diff + summ * _pt_times_sinhcosh(energy, v0, phi))


def triangular_scalings(
    v0: float, energy: float, field: float, length: float, mass: float = 1.0
):
    """Triangular-barrier action and classical time by rectangular rescaling.

        phi_tri   = (2/3) * ((v0 - E)/(field*L)) * phi_box(L)
        tau_c_tri = 2 * ((v0 - E)/(field*L)) * tau_c_box(L)

    Both collapse to closed forms independent of L, matching direct
    quadrature over V(x) = v0 - field*x on [0, (v0 - E)/field].

    Raises
    ------
    RegimeError
        (v0 - E)/field > length: the ramp's turning point falls outside the
        support, where the ratios are no longer exact.
    """
    _check_under_barrier(energy, v0)
    if not field > 0:
        raise DomainError(f"field strength must be positive, got {field}")
    if not length > 0:
        raise DomainError(f"length must be positive, got {length}")
    if (v0 - energy) / field > length:
        raise RegimeError(
            f"turning point (v0 - E)/field = {(v0 - energy) / field:.6g} lies "
            f"beyond the support length {length}"
        )
    ratio = (v0 - energy) / (field * length)
    phi_tri = (2.0 / 3.0) * ratio * phi_rectangular(energy, v0, length, mass)
    tau_c_tri = 2.0 * ratio * tau_c_rectangular(energy, v0, length, mass)
    return phi_tri, tau_c_tri


@dataclass(frozen=True)
class TimesReport:
    """Every time definition plus its inputs, for one problem, in a.u.

    phase_time and dwell_time are None unless the barrier is rectangular;
    kBT is signed and infinite exactly at the bracket zero phi = PHI_STAR.
    """

    ett: float
    tau_c: float
    phase_time: Optional[float]
    dwell_time: Optional[float]
    p_t_used: float
    phi: float
    kBT: float
    positivity_flag: bool


def times_report(
    problem: TunnelingProblem, quad_tol: float = QUAD_TOL_DEFAULT
) -> TimesReport:
    """Compute the full set of times for a resolved problem.

    The rectangular barrier uses its exact transmission (and gains phase and
    dwell entries); every other family uses the WKB transmission.
    """
    quantities = compute_wkb(problem, quad_tol)
    barrier = problem.barrier
    if isinstance(barrier, Rectangular):
        p_t = pt_rectangular_exact(problem.energy, barrier.v0, quantities.phi)
        phase = phase_time_rectangular(
            problem.energy, barrier.v0, barrier.length, problem.mass
        )
        dwell = dwell_time_rectangular(
            problem.energy, barrier.v0, barrier.length, problem.mass
        )
    else:
        p_t = pt_wkb(quantities.phi)
        phase = None
        dwell = None
    ett = ett_general(quantities.tau_c, quantities.phi, p_t)
    inv = inverse_temperature(quantities.phi, quantities.tau_c)
    kbt = 1.0 / inv if inv != 0.0 else math.inf
    return TimesReport(
        ett=ett,
        tau_c=quantities.tau_c,
        phase_time=phase,
        dwell_time=dwell,
        p_t_used=p_t,
        phi=quantities.phi,
        kBT=kbt,
        positivity_flag=quantities.phi > PHI_STAR,
    )
