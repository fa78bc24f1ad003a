"""Seeded random generators for polynomials, cochains and classes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import H0, H1, H2, H3, CohClass
from .exactpoly import Poly
from .polyvector import BLADES, PolyVector

_VAR = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class SampleConfig:
    max_degree: int = 3
    max_terms: int = 4
    coeff_bound: int = 5
    max_den: int = 3


class Sampler:
    def __init__(self, seed: int = 0, config: SampleConfig = SampleConfig()):
        self.rng = random.Random(seed)
        self.config = config

    def coeff(self) -> Fraction:
        c = self.config
        num = 0
        while num == 0:
            num = self.rng.randint(-c.coeff_bound, c.coeff_bound)
        return Fraction(num, self.rng.randint(1, c.max_den))

    def poly(self, variables: str = "xyz", max_degree: int | None = None, max_z: int | None = None,
             allow_zero: bool = True) -> Poly:
        deg = self.config.max_degree if max_degree is None else max_degree
        terms = {}
        lo = 0 if allow_zero else 1
        while not terms:
            for _ in range(self.rng.randint(lo, self.config.max_terms)):
                e = [0, 0, 0]
                for _ in range(self.rng.randint(0, deg)):
                    e[_VAR[self.rng.choice(variables)]] += 1
                if max_z is not None and e[2] > max_z:
                    continue
                terms[tuple(e)] = self.coeff()
            if allow_zero:
                break
        p = Poly(terms)
        if not allow_zero and p.is_zero():
            return self.poly(variables, max_degree, max_z, allow_zero)
        return p

    def cochain(self, k: int, max_degree: int | None = None) -> PolyVector:
        return PolyVector({b: self.poly(max_degree=max_degree) for b in BLADES if len(b) == k})

    def polyvector(self, max_degree: int | None = None) -> PolyVector:
        """Possibly mixed-degree value."""
        return PolyVector({b: self.poly(max_degree=max_degree) for b in BLADES if self.rng.random() < 0.4})

    def z_poly(self, max_degree: int | None = None, allow_zero: bool = True) -> Poly:
        return self.poly("z", max_degree, allow_zero=allow_zero)

    def cls(self, k: int, nonzero: bool = False) -> CohClass:
        while True:
            if k == 0:
                c = H0(self.z_poly())
            elif k == 1:
                c = H1(self.poly("xy"), self.z_poly())
            elif k == 2:
                c = H2(self.poly(max_z=1))
            else:
                c = H3(self.poly("xy"))
            if not (nonzero and c.is_zero()):
                return c
