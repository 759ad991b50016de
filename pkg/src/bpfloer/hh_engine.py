"""Twisted-sector dimension count for HH of equivariant matrix factorizations.

For every gamma in ker(chi) the summand is built from the Koszul cohomology
of the restricted potential tensored with the top wedge of the moving part:

* H^0  = k[x_0] (if 0 is fixed) tensor Jacobian monomials of the fixed
  W-variables, exponents 0 <= c_i <= p_i - 2;
* H^-1 = H^0 tensor x_0^dual (only if 0 is fixed);
* H^-l = 0 for l >= 2 (checked separately by ``koszul_oracle``).

Class bookkeeping: x_i carries +chi_i, a dual factor carries -chi_i, and each
Koszul V^dual factor adds +chi.  An element lands in degree
``t = 2u + |N|`` (even branch, class u*chi) or ``t = 2u + 1 + |N|`` (odd
branch, class (u+1)*chi).  Classes that are not multiples of chi contribute
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .chargroup import Sector, char_group, enumerate_sectors
from .tables import DimTable, check_range
from .weights import exponent_tuple, require_not_calabi_yau

SECTOR_TWISTS = ("literal",)


@dataclass(frozen=True)
class BasisElement:
    sector: Sector
    b0: int
    c: tuple[tuple[int, int], ...]  # (index, exponent) over fixed W-variables
    has_x0_dual: bool
    degree: int
    u: int

    @property
    def branch(self) -> str:
        return "odd" if self.has_x0_dual else "even"

    def describe(self) -> str:
        parts = []
        if self.b0:
            parts.append(f"x0^{self.b0}")
        parts += [f"x{i}^{ci}" for i, ci in self.c if ci]
        mono = "*".join(parts) or "1"
        duals = (["x0^v"] if self.has_x0_dual else []) + [
            f"x{i}^v" for i in sorted(self.sector.moving)
        ]
        return " (x) ".join([mono] + duals) if duals else mono

    def as_dict(self) -> dict:
        return {
            "sector": self.sector.as_dict(),
            "b0": self.b0,
            "c": {str(i): ci for i, ci in self.c},
            "has_x0_dual": self.has_x0_dual,
            "t": self.degree,
            "u": self.u,
            "element": self.describe(),
        }


@dataclass(frozen=True)
class Family:
    """Elements x_0^(r + h q) * (fixed rest), q >= 0, of degree t_start + step*q.

    ``step`` is None when x_0 is not fixed by the sector (a single element).
    """

    sector: Sector
    c: tuple[tuple[int, int], ...]
    has_x0_dual: bool
    r: int
    u_start: int
    t_start: int
    step: int | None
    h: int

    def qs_in(self, t_min: int, t_max: int) -> range:
        if self.step is None:
            return range(1) if t_min <= self.t_start <= t_max else range(0)
        s = self.step
        if s < 0:
            lo, hi = -((self.t_start - t_max) // s), (self.t_start - t_min) // -s
        else:
            lo, hi = -((self.t_start - t_min) // s), (t_max - self.t_start) // s
        lo = max(lo, 0)
        return range(lo, hi + 1)

    def element(self, q: int) -> BasisElement:
        s = self.step or 0
        return BasisElement(
            sector=self.sector,
            b0=self.r + self.h * q,
            c=self.c,
            has_x0_dual=self.has_x0_dual,
            degree=self.t_start + s * q,
            u=self.u_start + (s // 2) * q,
        )


def _check_twist(sector_twist: str) -> None:
    if sector_twist not in SECTOR_TWISTS:
        raise ValueError(f"unknown sector twist {sector_twist!r}; choose from {SECTOR_TWISTS}")


def sector_families(p: Iterable[int], sector: Sector, sector_twist: str = "literal") -> list[Family]:
    _check_twist(sector_twist)
    p = exponent_tuple(p)
    G = char_group(p)
    ws = G.weights
    F = sector.fixed
    nmov = len(p) + 1 - len(F)
    wfix = sorted(i for i in F if i >= 1)
    x0_fixed = 0 in F
    residues = range(ws.h) if x0_fixed else range(1)
    branches = (False, True) if x0_fixed else (False,)

    out = []
    for cs in product(*(range(p[i - 1] - 1) for i in wfix)):
        base = [0] * G.rank
        for i, ci in zip(wfix, cs):
            base[i] = ci
        for i in sector.moving:
            base[i] -= 1
        for odd in branches:
            vec = list(base)
            if odd:
                vec[0] -= 1
                vec = [x + 1 for x in vec]
            for r in residues:
                v = list(vec)
                v[0] += r
                m = G.is_multiple_of_chi(v)
                if m is None:
                    continue
                if odd:
                    u = m - 1
                    t = 2 * u + 1 + nmov
                else:
                    u = m
                    t = 2 * u + nmov
                out.append(
                    Family(
                        sector=sector,
                        c=tuple(zip(wfix, cs)),
                        has_x0_dual=odd,
                        r=r,
                        u_start=u,
                        t_start=t,
                        step=2 * ws.d0 if x0_fixed else None,
                        h=ws.h,
                    )
                )
    return out


@lru_cache(maxsize=128)
def _all_families(p: tuple[int, ...], sector_twist: str) -> tuple[Family, ...]:
    fams = []
    for s in enumerate_sectors(p):
        fams.extend(sector_families(p, s, sector_twist))
    return tuple(fams)


def families(p: Iterable[int], sector_twist: str = "literal") -> tuple[Family, ...]:
    p = exponent_tuple(p)
    require_not_calabi_yau(p)
    _check_twist(sector_twist)
    return _all_families(p, sector_twist)


def sector_contribution(sector: Sector, t: int, sector_twist: str = "literal") -> tuple[int, list[BasisElement]]:
    els = [
        fam.element(q)
        for fam in sector_families(sector.p, sector, sector_twist)
        for q in fam.qs_in(t, t)
    ]
    return len(els), els


def iter_elements(p, t_min: int, t_max: int, sector_twist: str = "literal") -> Iterator[BasisElement]:
    check_range(t_min, t_max)
    for fam in families(p, sector_twist):
        for q in fam.qs_in(t_min, t_max):
            yield fam.element(q)


def hh_table(p, t_min: int, t_max: int, sector_twist: str = "literal") -> DimTable:
    check_range(t_min, t_max)
    p = exponent_tuple(p)
    counts = dict.fromkeys(range(t_min, t_max + 1), 0)
    for fam in families(p, sector_twist):
        for q in fam.qs_in(t_min, t_max):
            counts[fam.t_start + (fam.step or 0) * q] += 1
    return DimTable(p, counts, "general", {"sector_twist": sector_twist})


def hh_dim(p, t: int, sector_twist: str = "literal") -> int:
    return hh_table(p, t, t, sector_twist)[t]


def explain(p, t: int, sector_twist: str = "literal") -> list[BasisElement]:
    return list(iter_elements(p, t, t, sector_twist))
