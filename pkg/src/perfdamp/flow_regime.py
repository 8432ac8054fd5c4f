"""Characteristic numbers of the oscillating gas film.

Three effects are screened: rarefaction (Knudsen numbers), film
compressibility (squeeze number), and gas inertia in the hole channels
(Reynolds number). The significance thresholds are sigma ~ 20 (viscous and
spring forces equal) and Re ~ 6 (real and imaginary channel impedance equal).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

from perfdamp.geometry import PlateGeometry

SIGMA_THRESHOLD = 20.0
RE_THRESHOLD = 6.0

# Slip-flow rate coefficients Q = 1 + slope*K per channel cross-section.
_FLOW_RATE_SLOPES = {"channel": 6.0, "tube": 4.0, "square": 7.567}


@dataclass(frozen=True)
class GasProperties:
    """Ambient gas state. Defaults are air at standard atmospheric conditions."""

    P_A: float = 101e3       # Pa
    rho: float = 1.155       # kg/m^3
    mu: float = 18.5e-6      # Pa s
    lam: float = 65e-9       # mean free path, m

    def __post_init__(self):
        for name in ("P_A", "rho", "mu", "lam"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class RegimeReport:
    """Characteristic numbers of one device at one drive frequency.

    Rarefaction percentages are the estimated damping reductions (magnitudes)
    reported as Q - 1, i.e. 6*K_ch and 7.567*K_hole in percent. This matches
    the published convention; the algebraically distinct 1 - 1/Q would give
    slightly smaller numbers.
    """

    K_ch: float
    K_hole: float
    sigma_plate: float
    sigma_cell: float
    Re: float
    rarefaction_gap_pct: float
    rarefaction_hole_pct: float
    compressible: bool
    inertial: bool

    def to_dict(self) -> dict:
        return asdict(self)


def knudsen(lam: float, char_length: float) -> float:
    """Knudsen number lam / char_length."""
    if lam < 0:
        raise ValueError("mean free path must be non-negative")
    if char_length <= 0:
        raise ValueError("characteristic length must be positive")
    return lam / char_length


def flow_rate_coefficient(kind: str, K: float) -> float:
    """Slip-flow rate coefficient for a gap ("channel"), circular hole
    ("tube"), or square hole ("square")."""
    if K < 0:
        raise ValueError("Knudsen number must be non-negative")
    try:
        slope = _FLOW_RATE_SLOPES[kind]
    except KeyError:
        raise ValueError(f"unknown channel kind {kind!r}") from None
    return 1.0 + slope * K


def squeeze_number(mu: float, W_char: float, omega: float, P_A: float, h: float) -> float:
    """Squeeze number 12*mu*W^2*omega / (P_A*h^2) for the dominating
    characteristic dimension W_char."""
    return 12.0 * mu * W_char**2 * omega / (P_A * h**2)


def reynolds_number(rho: float, r: float, omega: float, mu: float) -> float:
    """Oscillatory Reynolds number rho*r^2*omega / mu of a circular channel."""
    return rho * r**2 * omega / mu


def regime_report(geom: PlateGeometry, gas: GasProperties, f: float) -> RegimeReport:
    """Full characteristic-number screen of one device at drive frequency f (Hz).

    Conventions: the plate squeeze number uses the smaller of L and W, the
    cell squeeze number uses the wall width s1, and the channel Reynolds
    number uses r = s0/2.
    """
    if f <= 0:
        raise ValueError("frequency must be positive")
    omega = 2.0 * math.pi * f
    K_ch = knudsen(gas.lam, geom.h)
    K_hole = knudsen(gas.lam, geom.s0)
    sigma_plate = squeeze_number(gas.mu, min(geom.L, geom.W), omega, gas.P_A, geom.h)
    sigma_cell = squeeze_number(gas.mu, geom.s1, omega, gas.P_A, geom.h)
    Re = reynolds_number(gas.rho, geom.s0 / 2.0, omega, gas.mu)
    return RegimeReport(
        K_ch=K_ch,
        K_hole=K_hole,
        sigma_plate=sigma_plate,
        sigma_cell=sigma_cell,
        Re=Re,
        rarefaction_gap_pct=100.0 * 6.0 * K_ch,
        rarefaction_hole_pct=100.0 * 7.567 * K_hole,
        compressible=sigma_cell >= SIGMA_THRESHOLD,
        inertial=Re >= RE_THRESHOLD,
    )
