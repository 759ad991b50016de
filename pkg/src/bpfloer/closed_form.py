"""Closed-form counts for W = x_1^k + x_2^f + x_3^2 + x_4^2 (f = m - k).

First-kind generators are indexed by

    I^i  = {b0 : b0 mod k != k-1, b0 mod f != f-1, b0//k + b0//f = i}

and second-kind generators by

    II^i = {b0 = -1 + k n1 = -1 + f n2 : n1, n2 >= 1, n1 + n2 - 1 = i},

each element of II^i counted once per nontrivial common root of unity of
orders k and f, i.e. gcd(k, f) - 1 times.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .tables import DimTable, check_range


@dataclass(frozen=True)
class BSParams:
    k: int
    f: int

    def __post_init__(self):
        if self.k < 1 or self.f < 1:
            raise ValueError(f"need k, f >= 1, got ({self.k}, {self.f})")

    @property
    def ell(self) -> int:
        return gcd(self.k, self.f)

    @property
    def e(self) -> int:
        return self.k // self.ell

    @property
    def f_reduced(self) -> int:
        return self.f // self.ell

    @property
    def m(self) -> int:
        return self.k + self.f

    @property
    def exponents(self) -> tuple[int, int, int, int]:
        return (self.k, self.f, 2, 2)

    @classmethod
    def from_exponents(cls, p) -> "BSParams":
        p = tuple(p)
        if len(p) != 4 or p[2:] != (2, 2) or min(p[:2]) < 2:
            raise ValueError(f"closed form needs exponents (k, m-k, 2, 2) with k, m-k >= 2; got {list(p)}")
        return cls(p[0], p[1])


@dataclass(frozen=True)
class SplitData:
    b0: int
    b1: int
    m1: int
    b2: int
    m2: int


def split(params: BSParams, b0: int) -> SplitData:
    m1, b1 = divmod(b0, params.k)
    m2, b2 = divmod(b0, params.f)
    return SplitData(b0, b1, m1, b2, m2)


def set_I(params: BSParams, i: int) -> list[int]:
    if i < 0:
        raise ValueError("i must be >= 0")
    k, f = params.k, params.f
    out = []
    # b0 // k <= i and b0 // f <= i
    for b0 in range((i + 1) * min(k, f)):
        s = split(params, b0)
        if s.b1 != k - 1 and s.b2 != f - 1 and s.m1 + s.m2 == i:
            out.append(b0)
    return out


def set_II(params: BSParams, i: int) -> list[int]:
    if i < 0:
        raise ValueError("i must be >= 0")
    k, f = params.k, params.f
    out = set()
    for n1 in range(1, i + 1):
        n2 = i + 1 - n1
        if k * n1 == f * n2:
            out.add(k * n1 - 1)
    return sorted(out)


def h_i(params: BSParams, i: int) -> int:
    return len(set_I(params, i)) + (params.ell - 1) * len(set_II(params, i))


def table_bs(params: BSParams, t_min: int, t_max: int) -> DimTable:
    check_range(t_min, t_max)
    if params.k < 2 or params.f < 2:
        raise ValueError("table needs k, m-k >= 2")

    def dim(t: int) -> int:
        if t > 3 or t == 2:
            return 0
        if t == 3:
            return (params.k - 1) * (params.f - 1)
        # degrees -2j and -2j+1 both carry h^j
        return h_i(params, (1 - t) // 2)

    return DimTable.over(params.exponents, t_min, t_max, dim, "closed_form")


@dataclass
class RecursionFailure:
    e: int
    f: int
    ell: int
    i: int
    lhs: int
    rhs: int


def verify_recursion(e: int, f: int, ell_max: int, i_max: int) -> list[RecursionFailure]:
    """Check h^i_{e l, f l} = l h^i_{e, f} + l - 1; returns the failures."""
    if gcd(e, f) != 1:
        raise ValueError(f"(e, f) = ({e}, {f}) is not coprime")
    base = BSParams(e, f)
    fails = []
    for ell in range(1, ell_max + 1):
        P = BSParams(e * ell, f * ell)
        for i in range(i_max + 1):
            lhs = h_i(P, i)
            rhs = ell * h_i(base, i) + ell - 1
            if lhs != rhs:
                fails.append(RecursionFailure(e, f, ell, i, lhs, rhs))
    return fails


def check_smoothing(params: BSParams, depth: int) -> dict:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    hs = [h_i(params, i) for i in range(1, depth + 1)]
    constant = len(set(hs)) == 1
    base = BSParams(params.e, params.f_reduced)
    ell = params.ell
    refined_ok = all(
        h_i(params, i) == ell * h_i(base, i) + ell - 1 for i in range(depth + 1)
    )
    return {
        "k": params.k,
        "f": params.f,
        "constant": constant,
        "value": hs[0] if constant else None,
        "components": ell - 1,
        "refined_ok": refined_ok,
    }
