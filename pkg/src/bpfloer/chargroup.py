"""Character group of the symmetry group K and the finite group ker(chi).

Characters are integer vectors over the basis chi_0, ..., chi_{n+2}, taken
modulo the relations p_i chi_i = chi_0 + ... + chi_{n+2}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

from .lattice import hermite_normal_form, pivots, reduce_mod
from .weights import WeightSystem, exponent_tuple, weight_system


class CharGroup:
    """The quotient Z^{n+3}/L for a fixed exponent tuple.

    Read-only after construction, so instances can be shared freely.
    """

    def __init__(self, p: Iterable[int]):
        self.p = exponent_tuple(p)
        self.rank = len(self.p) + 1
        N = self.rank
        self.relations = []
        for i, pi in enumerate(self.p, start=1):
            r = [-1] * N
            r[i] += pi
            self.relations.append(r)
        self.hnf = hermite_normal_form(self.relations, N)
        self.pivots = pivots(self.hnf)
        self.weights: WeightSystem = weight_system(self.p)
        # functional vanishing on L, taking the value h on chi
        self._deg = (self.weights.d0,) + self.weights.d

    # -- basic classes ---------------------------------------------------
    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    @property
    def chi(self) -> tuple[int, ...]:
        return (1,) * self.rank

    def e(self, i: int) -> tuple[int, ...]:
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def cls(self, c: Sequence[int]) -> "CharClass":
        return CharClass(self, tuple(c))

    # -- arithmetic --------------------------------------------------------
    def canonicalize(self, c: Sequence[int]) -> tuple[int, ...]:
        if len(c) != self.rank:
            raise ValueError(f"class vector must have length {self.rank}")
        return reduce_mod(c, self.hnf, self.pivots)

    def equal(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.canonicalize([x - y for x, y in zip(a, b)]) == self.zero

    def degree(self, c: Sequence[int]) -> int:
        return sum(x * w for x, w in zip(c, self._deg))

    def is_multiple_of_chi(self, c: Sequence[int]) -> int | None:
        """The unique m with c = m*chi, or None."""
        m, r = divmod(self.degree(c), self.weights.h)
        if r:
            return None
        if self.canonicalize([x - m for x in c]) != self.zero:
            return None
        return m

    # -- evaluation oracle -------------------------------------------------
    @cached_property
    def generators(self) -> "KGenerators":
        return KGenerators(self.weights, self.p)

    def evaluate(self, c: Sequence[int]) -> tuple[int, tuple[Fraction, ...]]:
        return self.generators.evaluate(c)

    def equal_by_evaluation(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.evaluate(a) == self.evaluate(b)


@dataclass(frozen=True)
class KGenerators:
    """An explicit generating set of K.

    ``s -> (s^d0, s^d1, ..., s^dN)`` surjects onto K/ker(chi), and ker(chi)
    is generated by ``g_i`` with ``t_i = zeta_{p_i}``, ``t_0 = zeta_{p_i}^-1``.
    A character chi_j evaluates to ``t_j^-1``.
    """

    weights: WeightSystem
    p: tuple[int, ...]

    def evaluate(self, c: Sequence[int]) -> tuple[int, tuple[Fraction, ...]]:
        deg = (self.weights.d0,) + self.weights.d
        exponent = -sum(x * w for x, w in zip(c, deg))
        phases = tuple(
            Fraction((c[0] - c[i]) % pi, pi) for i, pi in enumerate(self.p, start=1)
        )
        return exponent, phases


@dataclass(frozen=True, eq=False)
class CharClass:
    group: CharGroup = field(repr=False)
    c: tuple[int, ...]

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return self.group.canonicalize(self.c)

    def canonicalize(self) -> "CharClass":
        return CharClass(self.group, self.canonical)

    def __eq__(self, other):
        if not isinstance(other, CharClass):
            return NotImplemented
        return self.group.p == other.group.p and self.canonical == other.canonical

    def __hash__(self):
        return hash((self.group.p, self.canonical))

    def __add__(self, other: "CharClass") -> "CharClass":
        return CharClass(self.group, tuple(x + y for x, y in zip(self.c, other.c)))

    def __sub__(self, other: "CharClass") -> "CharClass":
        return CharClass(self.group, tuple(x - y for x, y in zip(self.c, other.c)))

    def __neg__(self) -> "CharClass":
        return CharClass(self.group, tuple(-x for x in self.c))

    def __rmul__(self, m: int) -> "CharClass":
        return CharClass(self.group, tuple(m * x for x in self.c))

    def is_multiple_of_chi(self) -> int | None:
        return self.group.is_multiple_of_chi(self.c)

    def evaluate(self):
        return self.group.evaluate(self.c)


@lru_cache(maxsize=256)
def char_group(p: tuple[int, ...]) -> CharGroup:
    return CharGroup(p)


# -- sectors ----------------------------------------------------------------

@dataclass(frozen=True)
class Sector:
    """An element of ker(chi): t_i = exp(2 pi i a_i / p_i), t_0 = prod t_i^-1."""

    p: tuple[int, ...]
    a: tuple[int, ...]

    @property
    def t0_phase(self) -> Fraction:
        return -sum((Fraction(ai, pi) for ai, pi in zip(self.a, self.p)), Fraction(0)) % 1

    @cached_property
    def fixed(self) -> frozenset[int]:
        F = {i for i, ai in enumerate(self.a, start=1) if ai == 0}
        if self.t0_phase == 0:
            F.add(0)
        return frozenset(F)

    @property
    def moving(self) -> frozenset[int]:
        return frozenset(range(len(self.p) + 1)) - self.fixed

    @property
    def is_identity(self) -> bool:
        return not any(self.a)

    def as_dict(self) -> dict:
        return {
            "a": list(self.a),
            "t0_phase": str(self.t0_phase),
            "fixed": sorted(self.fixed),
        }


def enumerate_sectors(p: Iterable[int]) -> list[Sector]:
    p = exponent_tuple(p)
    return [Sector(p, a) for a in product(*(range(pi) for pi in p))]
