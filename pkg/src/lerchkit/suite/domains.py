"""Parameter domains for identity cases.

Each domain draws one value from a :class:`numpy.random.Generator` and can
describe itself for reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int  # inclusive

    def sample(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.lo, self.hi + 1))

    def describe(self) -> str:
        return f"integer in [{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class RealInterval:
    lo: float
    hi: float

    def sample(self, rng: np.random.Generator) -> float:
        return float(rng.uniform(self.lo, self.hi))

    def describe(self) -> str:
        return f"real in [{self.lo:g}, {self.hi:g}]"


@dataclass(frozen=True)
class ComplexRect:
    re: tuple
    im: tuple

    def sample(self, rng: np.random.Generator) -> complex:
        return complex(rng.uniform(*self.re), rng.uniform(*self.im))

    def describe(self) -> str:
        return f"complex with Re in [{self.re[0]:g}, {self.re[1]:g}], Im in [{self.im[0]:g}, {self.im[1]:g}]"


@dataclass(frozen=True)
class ComplexDisk:
    center: complex
    radius: float

    def sample(self, rng: np.random.Generator) -> complex:
        # uniform in area
        r = self.radius * np.sqrt(rng.uniform())
        return complex(self.center + r * np.exp(2j * np.pi * rng.uniform()))

    def describe(self) -> str:
        return f"complex with |w - {self.center:g}| <= {self.radius:g}"


@dataclass(frozen=True)
class NearInteger:
    """One of ``values`` plus ``i u`` with ``u`` uniform in ``[-width, width]``."""

    values: tuple
    width: float

    def sample(self, rng: np.random.Generator) -> complex:
        base = self.values[int(rng.integers(len(self.values)))]
        return complex(base, rng.uniform(-self.width, self.width))

    def describe(self) -> str:
        return f"complex in {{{', '.join(map(str, self.values))}}} +/- {self.width:g}i"


@dataclass(frozen=True)
class Param:
    name: str
    domain: object
