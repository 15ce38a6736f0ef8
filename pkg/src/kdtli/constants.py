"""Physical constants used throughout the simulation (CODATA 2018 vintage).

The same values are recorded in ``data/codata_2018.txt``; a unit test keeps
code and file in sync.  ``hbar`` is stored as exactly ``h / 2pi``.
"""

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class PhysicalConstants:
    h: float = 6.62607015e-34              # J s, Planck constant (exact, SI 2019)
    hbar: float = field(default=6.62607015e-34 / (2.0 * math.pi))  # J s
    c: float = 299792458.0                 # m/s (exact)
    amu_to_kg: float = 1.66053906660e-27   # kg per unified atomic mass unit
    g_gravity: float = 9.80665             # m/s^2, standard gravity
    k_boltzmann: float = 1.380649e-23      # J/K (exact, SI 2019)

    vintage: str = "CODATA 2018"

    def __post_init__(self):
        if self.hbar != self.h / (2.0 * math.pi):
            raise ValueError("hbar must equal h / 2pi exactly as stored")


CODATA2018 = PhysicalConstants()
