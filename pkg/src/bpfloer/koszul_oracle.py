"""Brute-force Koszul cohomology on finite character slices.

For a sector gamma the complex has terms x^b (x) xi_J, where b runs over
exponents of the fixed coordinates and J over subsets of them, in
cohomological degree -|J|.  Its class is

    sum_i b_i chi_i - sum_{j in J} chi_j + |J| chi,

and the differential contracts xi_j against dW = sum_j p_j x_j^(p_j - 1),
which preserves the class.  Fixing the class and capping the x_0 exponent
gives a finite complex whose cohomology is computed by exact integer rank.
These dimensions are compared against the monomial model the engine uses.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .chargroup import Sector, char_group, enumerate_sectors
from .linalg import bareiss_rank
from .weights import exponent_tuple

log = logging.getLogger(__name__)


class CapWarning(UserWarning):
    pass


@dataclass
class SliceComplex:
    sector: Sector
    target: tuple[int, ...]
    caps: dict[int, int]
    bases: list[list[tuple[tuple[int, ...], tuple[int, ...]]]]
    # sparse differentials: matrices[l-1][(row, col)] for layer l -> layer l-1
    matrices: list[dict[tuple[int, int], int]]
    touched_cap: bool = False

    @property
    def layer_dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def ranks(self) -> list[int]:
        """Exact rank of each differential.

        The matrices are split along the connected components of their
        joint nonzero pattern; rank is additive over such blocks.
        """
        offsets = [0]
        for n in self.layer_dims:
            offsets.append(offsets[-1] + n)
        parent = list(range(offsets[-1]))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for l, M in enumerate(self.matrices, start=1):
            for (r, c), v in M.items():
                if v:
                    a, b = find(offsets[l - 1] + r), find(offsets[l] + c)
                    if a != b:
                        parent[a] = b
        ranks = []
        for l, M in enumerate(self.matrices, start=1):
            groups: dict[int, tuple[list[int], list[int]]] = {}
            for r in range(self.layer_dims[l - 1]):
                groups.setdefault(find(offsets[l - 1] + r), ([], []))[0].append(r)
            for c in range(self.layer_dims[l]):
                groups.setdefault(find(offsets[l] + c), ([], []))[1].append(c)
            total = 0
            for rows, cols in groups.values():
                if rows and cols:
                    total += bareiss_rank([[M.get((r, c), 0) for c in cols] for r in rows])
            ranks.append(total)
        return ranks

    def cohomology(self) -> list[int]:
        """dims of H^0, H^-1, ..., H^-dim(V_gamma)."""
        rk = [0] + self.ranks() + [0]  # rk[l] = rank of d: layer l -> l-1
        return [n - rk[l] - rk[l + 1] for l, n in enumerate(self.layer_dims)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** l * n for l, n in enumerate(self.layer_dims))


def _fixed_vars(sector: Sector) -> list[int]:
    return sorted(sector.fixed)


def default_caps(p: Sequence[int], sector: Sector, target: Sequence[int], cap0: int) -> dict[int, int]:
    """Caps large enough that no basis element of the slice is cut off."""
    G = char_group(tuple(p))
    ws = G.weights
    F = _fixed_vars(sector)
    D = G.degree(target)
    caps = {}
    if 0 in F:
        caps[0] = cap0
    b0_vals = range(cap0 + 1) if 0 in F else range(1)
    budget = max(
        D - b0 * ws.d0 - sum(ws.h - (ws.d0 if j == 0 else ws.d[j - 1]) for j in J)
        for b0 in b0_vals
        for l in range(len(F) + 1)
        for J in combinations(F, l)
    )
    for i in F:
        if i >= 1:
            caps[i] = max(p[i - 1], budget // ws.d[i - 1] + p[i - 1])
    return caps


def _monomials(G, F, caps, Jclass_deg, D):
    """Exponent vectors over F (dict order) with W-degree fixed by D."""
    ws = G.weights
    wvars = [i for i in F if i >= 1]
    b0_range = range(caps[0] + 1) if 0 in F else range(1)
    for b0 in b0_range:
        rest = D - b0 * ws.d0 - Jclass_deg
        if rest < 0:
            continue
        # recursive fill of W-variables with positive weights
        def fill(idx, remaining, acc):
            if idx == len(wvars):
                if remaining == 0:
                    yield acc
                return
            i = wvars[idx]
            di = ws.d[i - 1]
            if idx == len(wvars) - 1:
                q, r = divmod(remaining, di)
                if not r and q <= caps[i]:
                    yield acc + (q,)
                return
            for bi in range(min(caps[i], remaining // di) + 1):
                yield from fill(idx + 1, remaining - bi * di, acc + (bi,))
        for ws_exp in fill(0, rest, ()):
            yield (b0,) + ws_exp if 0 in F else ws_exp


def slice_complex(p, sector: Sector, target: Sequence[int], caps: dict[int, int] | None = None,
                  cap0: int | None = None) -> SliceComplex:
    p = exponent_tuple(p)
    G = char_group(p)
    ws = G.weights
    F = _fixed_vars(sector)
    if cap0 is None:
        cap0 = 2 * ws.h
    if caps is None:
        caps = default_caps(p, sector, target, cap0)
    for i in F:
        if i >= 1 and caps[i] < p[i - 1]:
            raise ValueError(f"cap for x{i} must be at least p_{i} = {p[i - 1]}")
    target = tuple(target)
    D = G.degree(target)
    canon_target = G.canonicalize(target)

    bases = []
    for l in range(len(F) + 1):
        layer = []
        for J in combinations(F, l):
            Jdeg = sum(ws.h - (ws.d0 if j == 0 else ws.d[j - 1]) for j in J)
            for b in _monomials(G, F, caps, Jdeg, D):
                vec = [0] * G.rank
                for i, bi in zip(F, b):
                    vec[i] += bi
                for j in J:
                    vec[j] -= 1
                vec = [x + l for x in vec]
                if G.canonicalize(vec) == canon_target:
                    layer.append((b, J))
        layer.sort()
        bases.append(layer)

    touched = False
    matrices = []
    for l in range(1, len(bases)):
        index = {el: r for r, el in enumerate(bases[l - 1])}
        M: dict[tuple[int, int], int] = {}
        for col, (b, J) in enumerate(bases[l]):
            for pos, j in enumerate(J):
                if j == 0:
                    continue  # dW has no x_0 component
                k = F.index(j)
                nb = list(b)
                nb[k] += p[j - 1] - 1
                if nb[k] > caps[j]:
                    touched = True
                    continue
                key = (tuple(nb), J[:pos] + J[pos + 1:])
                rc = (index[key], col)
                M[rc] = M.get(rc, 0) + (-1) ** pos * p[j - 1]
        matrices.append(M)
    if touched:
        log.warning("slice for sector %s touches the caps %s", sector.a, caps)
    return SliceComplex(sector, target, dict(caps), bases, matrices, touched)


def slice_cohomology(p, sector: Sector, target: Sequence[int], l: int,
                     caps: dict[int, int] | None = None, cap0: int | None = None) -> int:
    H = slice_complex(p, sector, target, caps, cap0).cohomology()
    return H[l] if l < len(H) else 0


def model_counts(p, sector: Sector, target: Sequence[int], cap0: int) -> list[int]:
    """H^0, H^-1, ... predicted by the Jacobian-monomial model."""
    p = exponent_tuple(p)
    G = char_group(p)
    F = _fixed_vars(sector)
    wvars = [i for i in F if i >= 1]
    x0 = 0 in F
    canon_target = G.canonicalize(target)
    out = [0] * (len(F) + 1)
    for cs in product(*(range(p[i - 1] - 1) for i in wvars)):
        for b0 in (range(cap0 + 1) if x0 else range(1)):
            vec = [0] * G.rank
            vec[0] = b0
            for i, ci in zip(wvars, cs):
                vec[i] = ci
            if G.canonicalize(vec) == canon_target:
                out[0] += 1
            if x0:
                dual = [x + 1 for x in vec]
                dual[0] -= 1
                if G.canonicalize(dual) == canon_target:
                    out[1] += 1
    return out


@dataclass
class OracleReport:
    exponents: tuple[int, ...]
    slices: list[dict] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "n_slices": len(self.slices),
            "n_mismatches": len(self.mismatches),
            "mismatches": self.mismatches,
            "warnings": self.warnings,
            "slices": self.slices,
        }


def _sample_target(G, sector: Sector, p, rng: random.Random, cap0: int) -> tuple[int, ...]:
    F = _fixed_vars(sector)
    vec = [0] * G.rank
    J = [j for j in F if rng.random() < 0.5]
    for i in F:
        vec[i] = rng.randrange(cap0 + 1) if i == 0 else rng.randrange(2 * p[i - 1])
    for j in J:
        vec[j] -= 1
    vec = [x + len(J) for x in vec]
    if rng.random() < 0.3:
        vec[rng.randrange(G.rank)] += rng.choice((-1, 1))
    return tuple(vec)


def validate_sector_model(p: Iterable[int], sample_budget: int, seed: int = 0,
                          cap0: int | None = None) -> OracleReport:
    """Compare oracle cohomology against the monomial model on sampled slices.

    Sectors are visited round-robin so every sector is covered once the
    budget reaches the number of sectors.
    """
    p = exponent_tuple(p)
    G = char_group(p)
    if cap0 is None:
        cap0 = G.weights.h + 1
    report = OracleReport(p)
    if sample_budget <= 0:
        return report
    rng = random.Random(seed)
    sectors = enumerate_sectors(p)
    for n in range(sample_budget):
        sector = sectors[n % len(sectors)]
        target = _sample_target(G, sector, p, rng, cap0)
        # the dual-route character check on every constructed class
        if G.equal(target, G.zero) != G.equal_by_evaluation(target, G.zero):
            report.mismatches.append({"sector": list(sector.a), "target": list(target),
                                      "reason": "character equality routes disagree"})
        cx = slice_complex(p, sector, target, cap0=cap0)
        H = cx.cohomology()
        model = model_counts(p, sector, target, cap0)
        entry = {"sector": list(sector.a), "target": list(target),
                 "layers": cx.layer_dims, "oracle": H, "model": model}
        report.slices.append(entry)
        if cx.touched_cap:
            report.warnings.append(f"cap touched at sector {list(sector.a)}, target {list(target)}")
        if H != model or sum((-1) ** l * x for l, x in enumerate(H)) != cx.euler_characteristic():
            report.mismatches.append(dict(entry, reason="oracle != model"))
    return report
