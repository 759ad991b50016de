"""Weight systems of Brieskorn-Pham potentials x_1^p_1 + ... + x_N^p_N."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm, prod
from typing import Iterable


class ExponentError(ValueError):
    pass


class CalabiYauError(ValueError):
    """Raised when a computation needs d0 != 0."""


def exponent_tuple(p: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze an exponent sequence."""
    p = tuple(int(x) for x in p)
    if len(p) < 2:
        raise ExponentError(f"need at least 2 exponents, got {len(p)}")
    bad = [x for x in p if x < 2]
    if bad:
        raise ExponentError(f"exponents must be >= 2, got {list(p)}")
    return p


@dataclass(frozen=True)
class WeightSystem:
    d: tuple[int, ...]
    h: int
    d0: int

    @property
    def period(self) -> int:
        return 2 * self.d0

    def as_dict(self) -> dict:
        return {"d": list(self.d), "h": self.h, "d0": self.d0}


def weight_system(p: Iterable[int]) -> WeightSystem:
    p = exponent_tuple(p)
    L = lcm(*p)
    raw = [L // x for x in p]
    g = reduce(gcd, raw, L)
    d = tuple(r // g for r in raw)
    h = L // g
    for di, pi in zip(d, p):
        assert di * pi == h
    assert reduce(gcd, d, h) == 1
    return WeightSystem(d=d, h=h, d0=h - sum(d))


def is_calabi_yau(p: Iterable[int]) -> bool:
    # BP polynomials are self-transpose, so the dual weights are the same.
    return weight_system(p).d0 == 0


def require_not_calabi_yau(p: Iterable[int]) -> WeightSystem:
    ws = weight_system(p)
    if ws.d0 == 0:
        raise CalabiYauError(
            f"exponents {list(p)} are of Calabi-Yau type (d0 = 0); unsupported"
        )
    return ws


def milnor_number(p: Iterable[int]) -> int:
    return prod(x - 1 for x in exponent_tuple(p))


def family_formula(k: int, f: int) -> tuple[int, int]:
    """(h, d0) from the closed formula quoted for the (k, f, 2, 2) family.

    Kept only as a cross-check; it does not always agree with the
    gcd-normalized weight system (e.g. (k, f) = (4, 2)).
    """
    ell = gcd(k, f)
    e, ff = k // ell, f // ell
    if ell % 2 == 0:
        return e * ff * ell // 2, -e - ff
    return e * ff * ell, -2 * e - 2 * ff
