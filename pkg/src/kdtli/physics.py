"""Closed-form model of a Kapitza-Dirac-Talbot-Lau (KDTL) interferometer.

A molecular beam crosses a material grating G1, an optical standing-wave
phase grating G2 and a material analyzer grating G3, all of period ``d``
and separated by ``L``.  The standing light wave imprints the phase

    Phi(z) = Phi0 * sin^2(2 pi z / lambda_L),
    Phi0   = 8 sqrt(2 pi) alpha P / (hbar c w_y v),

where alpha is the optical polarizability *volume* (m^3), P the laser
power, w_y the Gaussian waist along the slits and v the forward velocity.
The sinusoidal fringe behind G3 then has the signed amplitude

    A = 2 (sin(pi f)/(pi f))^2 J2(Phi0 sin(pi L / L_T))        (quantum)
    A = 2 (sin(pi f)/(pi f))^2 J2(Phi0 pi L / L_T)             (classical)

with f the grating open fraction and L_T = d^2 / lambda_dB the Talbot
length.  The classical variant is the lambda_dB -> 0 limit of the quantum
expression and doubles as the shadow-image (moire) prediction; it is
validated against a trajectory Monte Carlo in :mod:`kdtli.beam`.

Velocity averaging is performed on the *signed* amplitude: fringes from
different velocity classes share the geometric period but can be phase
inverted (J2 takes negative values), so amplitudes add coherently and may
partially cancel.  Reported visibilities are |amplitude| in [0, 1].
"""

import math
import warnings
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .bessel import j2
from .constants import CODATA2018, PhysicalConstants

__all__ = [
    "Molecule",
    "InterferometerSetup",
    "VelocityDistribution",
    "VisibilityModel",
    "de_broglie_wavelength",
    "talbot_length",
    "max_phase_shift",
    "phase_profile",
    "fringe_amplitude",
    "visibility_monochromatic",
    "visibility_averaged",
    "power_scan",
    "mean_absorbed_photons",
]

# open fractions closer than this to 0 or 1 leave no usable grating
_DEGENERATE_F = 1e-6


class VisibilityModel(Enum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class Molecule:
    """Particle under test.

    ``alpha_opt`` is the polarizability volume in m^3 (the SI polarizability
    divided by 4 pi epsilon_0); ``sigma_abs`` the absorption cross section
    at the grating laser wavelength in m^2.
    """

    mass_amu: float
    alpha_opt: float                     # m^3
    sigma_abs: float = 0.0               # m^2
    composition: dict[str, int] | None = None

    def __post_init__(self):
        if self.mass_amu <= 0:
            raise ValueError("mass_amu must be positive")
        if self.alpha_opt < 0:
            raise ValueError("alpha_opt must be non-negative")
        if self.sigma_abs < 0:
            raise ValueError("sigma_abs must be non-negative")

    def mass_kg(self, constants: PhysicalConstants = CODATA2018) -> float:
        return self.mass_amu * constants.amu_to_kg


@dataclass(frozen=True)
class InterferometerSetup:
    """Geometry and laser parameters of the three-grating interferometer.

    Defaults are the 266 nm / 10.5 cm machine with a 532 nm standing wave.
    The standing-wave grating period is half the laser wavelength, so
    ``laser_wavelength`` must equal ``2 * period_d`` within 1 ppm.
    """

    period_d: float = 266e-9             # m, all three gratings
    open_fraction_f: float = 110.0 / 266.0
    separation_L: float = 0.105          # m, G1->G2 = G2->G3
    laser_wavelength: float = 532e-9     # m
    laser_power: float = 1.0             # W
    waist_x: float = 18e-6               # m, along the molecular beam
    waist_y: float = 945e-6              # m, along the grating slits

    def __post_init__(self):
        if self.period_d <= 0 or self.separation_L <= 0:
            raise ValueError("period_d and separation_L must be positive")
        if not 0.0 < self.open_fraction_f < 1.0:
            raise ValueError("open_fraction_f must lie in (0, 1)")
        if self.laser_wavelength <= 0 or self.waist_x <= 0 or self.waist_y <= 0:
            raise ValueError("laser wavelength and waists must be positive")
        if self.laser_power < 0:
            raise ValueError("laser_power must be non-negative")
        if abs(self.laser_wavelength - 2.0 * self.period_d) > 1e-6 * self.laser_wavelength:
            raise ValueError("standing-wave grating requires laser_wavelength = 2 * period_d (1 ppm)")


@dataclass(frozen=True)
class VelocityDistribution:
    """Weighted forward-velocity samples (a histogram or quadrature grid)."""

    velocities: np.ndarray               # m/s
    weights: np.ndarray                  # dimensionless, >= 0

    def __post_init__(self):
        v = np.asarray(self.velocities, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if v.ndim != 1 or v.size == 0 or v.shape != w.shape:
            raise ValueError("velocities and weights must be matching non-empty 1-d arrays")
        if np.any(v <= 0):
            raise ValueError("all velocities must be positive")
        if np.any(w < 0) or not np.sum(w) > 0:
            raise ValueError("weights must be non-negative with positive sum")
        object.__setattr__(self, "velocities", v)
        object.__setattr__(self, "weights", w)

    @classmethod
    def single(cls, velocity: float) -> "VelocityDistribution":
        return cls(np.array([velocity], dtype=float), np.array([1.0]))

    @classmethod
    def gaussian(cls, mean: float, fwhm: float, n: int = 201,
                 span_sigmas: float = 4.0) -> "VelocityDistribution":
        """Gaussian weight profile on a regular grid, truncated to v > 0."""
        if mean <= 0 or fwhm <= 0:
            raise ValueError("mean and fwhm must be positive")
        sigma = fwhm / (2.0 * math.sqrt(2.0 * math.log(2.0)))
        v = np.linspace(mean - span_sigmas * sigma, mean + span_sigmas * sigma, n)
        keep = v > 0
        v = v[keep]
        w = np.exp(-0.5 * ((v - mean) / sigma) ** 2)
        return cls(v, w)

    def mean(self) -> float:
        return float(np.sum(self.velocities * self.weights) / np.sum(self.weights))

    def fwhm(self) -> float:
        """Full width at half maximum of the weight curve, linearly interpolated."""
        v, w = self.velocities, self.weights
        if np.unique(v).size < 2:
            raise ValueError("FWHM needs at least two distinct velocities")
        order = np.argsort(v)
        v, w = v[order], w[order]
        half = w.max() / 2.0
        above = np.nonzero(w >= half)[0]
        lo, hi = above[0], above[-1]

        def crossing(i, j):
            if w[j] == w[i]:
                return v[j]
            return v[i] + (half - w[i]) * (v[j] - v[i]) / (w[j] - w[i])

        left = crossing(lo - 1, lo) if lo > 0 else v[0]
        right = crossing(hi + 1, hi) if hi < v.size - 1 else v[-1]
        return float(right - left)


def de_broglie_wavelength(mass_amu: float, velocity: float,
                          constants: PhysicalConstants = CODATA2018) -> float:
    """de Broglie wavelength h/(m v) in metres."""
    if mass_amu <= 0 or velocity <= 0:
        raise ValueError("mass and velocity must be positive")
    return constants.h / (mass_amu * constants.amu_to_kg * velocity)


def talbot_length(period_d: float, wavelength: float) -> float:
    """Grating self-imaging distance d^2 / lambda."""
    if period_d <= 0 or wavelength <= 0:
        raise ValueError("period and wavelength must be positive")
    return period_d * period_d / wavelength


def max_phase_shift(molecule: Molecule, setup: InterferometerSetup, velocity: float,
                    constants: PhysicalConstants = CODATA2018) -> float:
    """Peak phase Phi0 = 8 sqrt(2 pi) alpha P / (hbar c w_y v) in radians."""
    if velocity <= 0:
        raise ValueError("velocity must be positive")
    return (8.0 * math.sqrt(2.0 * math.pi) * molecule.alpha_opt * setup.laser_power
            / (constants.hbar * constants.c * setup.waist_y * velocity))


def phase_profile(phi0: float, z, laser_wavelength: float):
    """Standing-wave phase Phi0 sin^2(2 pi z / lambda_L); period lambda_L / 2."""
    if laser_wavelength <= 0:
        raise ValueError("laser_wavelength must be positive")
    return phi0 * np.sin(2.0 * np.pi * np.asarray(z) / laser_wavelength) ** 2


def _sinc(x: float) -> float:
    # sin(pi x) / (pi x)
    return float(np.sinc(x))


def fringe_amplitude(setup: InterferometerSetup, molecule: Molecule, velocity: float,
                     model: VisibilityModel,
                     constants: PhysicalConstants = CODATA2018) -> float:
    """Signed sinusoidal fringe amplitude for one velocity class.

    Negative values mean the fringe is phase-inverted by half a period.
    """
    if velocity <= 0:
        raise ValueError("velocity must be positive")
    f = setup.open_fraction_f
    if f < _DEGENERATE_F or 1.0 - f < _DEGENERATE_F:
        warnings.warn("degenerate open fraction, no fringes", stacklevel=2)
        return 0.0
    lam = de_broglie_wavelength(molecule.mass_amu, velocity, constants)
    ratio = math.pi * setup.separation_L / talbot_length(setup.period_d, lam)
    phi0 = max_phase_shift(molecule, setup, velocity, constants)
    if model is VisibilityModel.QUANTUM:
        arg = phi0 * math.sin(ratio)
    elif model is VisibilityModel.CLASSICAL:
        arg = phi0 * ratio
    else:
        raise ValueError(f"unknown visibility model: {model!r}")
    return 2.0 * _sinc(f) ** 2 * j2(arg)


def visibility_monochromatic(setup: InterferometerSetup, molecule: Molecule,
                             velocity: float, model: VisibilityModel,
                             constants: PhysicalConstants = CODATA2018) -> float:
    """Fringe visibility in [0, 1] for a single velocity."""
    return abs(fringe_amplitude(setup, molecule, velocity, model, constants))


def visibility_averaged(setup: InterferometerSetup, molecule: Molecule,
                        dist: VelocityDistribution, model: VisibilityModel,
                        constants: PhysicalConstants = CODATA2018) -> float:
    """Velocity-averaged fringe visibility.

    The signed amplitudes are averaged (the fringe period is geometric,
    so the classes add coherently in position) and the magnitude of the
    mean is returned.
    """
    amps = np.array([fringe_amplitude(setup, molecule, v, model, constants)
                     for v in dist.velocities])
    return float(abs(np.sum(dist.weights * amps) / np.sum(dist.weights)))


def power_scan(setup: InterferometerSetup, molecule: Molecule,
               dist: VelocityDistribution, powers, model: VisibilityModel,
               constants: PhysicalConstants = CODATA2018) -> list[tuple[float, float]]:
    """Averaged visibility for each laser power, as (power, visibility) pairs."""
    powers = list(powers)
    if not powers:
        raise ValueError("powers must be non-empty")
    out = []
    for i, p in enumerate(powers):
        if p < 0:
            raise ValueError(f"powers[{i}] is negative")
        try:
            v = visibility_averaged(replace(setup, laser_power=float(p)),
                                    molecule, dist, model, constants)
        except ValueError as exc:
            raise ValueError(f"powers[{i}] = {p}: {exc}") from exc
        out.append((float(p), v))
    return out


def mean_absorbed_photons(molecule: Molecule, setup: InterferometerSetup, velocity: float,
                          constants: PhysicalConstants = CODATA2018,
                          span_waists: float = 8.0, n_steps: int = 2001) -> float:
    """Mean photon number absorbed crossing a standing-wave antinode.

    Integrates the antinode intensity 8 P / (pi w_x w_y) exp(-2 x^2 / w_x^2)
    along a straight trajectory at beam height y = 0 and divides the fluence
    by the photon energy h c / lambda_L.  The integral has the closed form

        n = sigma_abs * 8 P / (sqrt(2 pi) w_y v E_photon),

    independent of w_x; the quadrature is kept as the implementation and the
    closed form serves as a cross-check.  Values below 1 justify treating
    the standing wave as a pure phase grating.
    """
    if velocity <= 0:
        raise ValueError("velocity must be positive")
    if molecule.sigma_abs == 0.0:
        return 0.0
    peak = 8.0 * setup.laser_power / (math.pi * setup.waist_x * setup.waist_y)
    x = np.linspace(-span_waists * setup.waist_x, span_waists * setup.waist_x, n_steps)
    fluence = np.trapezoid(peak * np.exp(-2.0 * x * x / setup.waist_x ** 2), x) / velocity
    photon_energy = constants.h * constants.c / setup.laser_wavelength
    return float(molecule.sigma_abs * fluence / photon_energy)
