"""Multigraded Betti numbers of squarefree monomial ideals over a finite prime field.

The computation runs one multidegree at a time.  For a squarefree monomial m
in the lcm lattice of I, the Betti number b_{i,m}(I) equals the dimension of
the (i-1)-st reduced homology of the complex

    K^m(I) = { S subset of support(m) : the monomial m with S removed lies in I }.

Faces of K^m have cardinality at most deg(m) - min generator degree, since a
face must fit inside m / g for some generator g dividing m; levels are
enumerated by cardinality and stop at the first empty one.  Boundary ranks
are taken over GF(p), p = 32003 by default; the characteristic is recorded in
every table because Betti numbers may depend on it.

Nonzero Betti numbers occur only at lattice multidegrees, so tables store a
sparse map (i, m) -> b_{i,m} and derive regularity, projective dimension, and
the coarse graded table from it.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .ideals import (
    MonomialIdeal,
    monomial,
    monomial_degree,
    monomial_divides,
    monomial_str,
    monomial_vars,
)

DEFAULT_CHARACTERISTIC = 32003
GENERATOR_CAP = 2000
SPARSE_COLUMN_THRESHOLD = 5000


class BudgetExceeded(RuntimeError):
    """Raised when a computation overruns its node or time budget."""


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# rank over GF(p)

def gf_rank(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    if matrix.size == 0:
        return 0
    if matrix.shape[1] > SPARSE_COLUMN_THRESHOLD:
        return _gf_rank_sparse(matrix, p)
    return _gf_rank_dense(matrix, p)


def _gf_rank_dense(matrix: np.ndarray, p: int) -> int:
    A = np.mod(matrix.astype(np.int64), p)
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        pivot = -1
        for r in range(rank, rows):
            if A[r, col]:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            A[[rank, pivot]] = A[[pivot, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank, col:] = (A[rank, col:] * inv) % p
        below = A[rank + 1 :, col]
        nz = np.nonzero(below)[0]
        if nz.size:
            block = A[rank + 1 :, col:]
            block[nz] = (block[nz] - np.outer(below[nz], A[rank, col:])) % p
        rank += 1
        if rank == rows:
            break
    return rank


def _gf_rank_sparse(matrix: np.ndarray, p: int) -> int:
    # dict-of-columns rows; pivot on the sparsest available row
    rows = []
    for r in range(matrix.shape[0]):
        nz = np.nonzero(matrix[r])[0]
        entries = {int(c): int(matrix[r, c]) % p for c in nz}
        entries = {c: v for c, v in entries.items() if v}
        if entries:
            rows.append(entries)
    rank = 0
    while rows:
        rows.sort(key=len)
        piv_row = rows.pop(0)
        if not piv_row:
            continue
        rank += 1
        col = min(piv_row)
        inv = pow(piv_row[col], p - 2, p)
        piv = {c: (v * inv) % p for c, v in piv_row.items()}
        nxt = []
        for row in rows:
            factor = row.get(col)
            if factor:
                for c, v in piv.items():
                    new = (row.get(c, 0) - factor * v) % p
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
            if row:
                nxt.append(row)
        rows = nxt
    return rank


# ---------------------------------------------------------------------------
# upper-Koszul complexes

def lcm_lattice(gens: Sequence[int]) -> list[int]:
    """All joins of nonempty generator subsets, sorted by degree then support."""
    lattice = set(gens)
    work = list(gens)
    while work:
        m = work.pop()
        for g in gens:
            u = m | g
            if u not in lattice:
                lattice.add(u)
                work.append(u)
    return sorted(lattice, key=lambda m: (monomial_degree(m), monomial_vars(m)))


def _face_levels(
    I: MonomialIdeal, m: int, max_card: int | None = None
) -> list[list[int]]:
    """Faces of K^m(I) grouped by cardinality, each level sorted.

    Stops at the first empty level (complexes are closed under subsets) or at
    max_card when given.
    """
    bits = [1 << (v - 1) for v in monomial_vars(m)]
    cap = len(bits) if max_card is None else min(max_card, len(bits))
    levels: list[list[int]] = []
    for c in range(cap + 1):
        level = []
        for combo in itertools.combinations(bits, c):
            face = 0
            for b in combo:
                face |= b
            if I.contains(m & ~face):
                level.append(face)
        if not level:
            break
        levels.append(level)
    return levels


def _boundary_rank(prev_level: list[int], level: list[int], p: int) -> int:
    if not prev_level or not level:
        return 0
    index = {f: i for i, f in enumerate(prev_level)}
    A = np.zeros((len(prev_level), len(level)), dtype=np.int64)
    for col, face in enumerate(level):
        for j, v in enumerate(monomial_vars(face)):
            A[index[face ^ (1 << (v - 1))], col] = 1 if j % 2 == 0 else p - 1
    return gf_rank(A, p)


def _homology_dims(levels: list[list[int]], p: int) -> list[int]:
    """Reduced homology dimensions: entry i is dim of H-tilde_(i-1)."""
    ranks = [0] * (len(levels) + 1)
    for c in range(1, len(levels)):
        ranks[c] = _boundary_rank(levels[c - 1], levels[c], p)
    return [len(levels[i]) - ranks[i] - ranks[i + 1] for i in range(len(levels))]


# ---------------------------------------------------------------------------
# Betti tables

@dataclass(frozen=True)
class BettiTable:
    """Sparse multigraded Betti numbers of a nonzero squarefree ideal."""

    n: int
    characteristic: int
    entries: dict[tuple[int, int], int]  # (homological index, multidegree mask) -> value
    gen_degree: int | None = None  # common generator degree, None when mixed

    def graded(self) -> dict[tuple[int, int], int]:
        """Coarse table: (i, total degree) -> sum of multigraded values."""
        out: dict[tuple[int, int], int] = {}
        for (i, m), v in self.entries.items():
            key = (i, monomial_degree(m))
            out[key] = out.get(key, 0) + v
        return out

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def regularity(self) -> int:
        return max(monomial_degree(m) - i for (i, m) in self.entries)

    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def to_json(self) -> str:
        items = sorted(
            ((i, monomial_vars(m), v) for (i, m), v in self.entries.items()),
            key=lambda t: (t[0], t[1]),
        )
        payload = {
            "n": self.n,
            "char": self.characteristic,
            "gen_degree": self.gen_degree,
            "entries": [[i, list(vs), v] for i, vs, v in items],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "BettiTable":
        payload = json.loads(text)
        entries = {
            (int(i), monomial(vs)): int(v) for i, vs, v in payload["entries"]
        }
        return BettiTable(
            n=int(payload["n"]),
            characteristic=int(payload["char"]),
            entries=entries,
            gen_degree=payload.get("gen_degree"),
        )


def multigraded_betti(
    I: MonomialIdeal,
    characteristic: int = DEFAULT_CHARACTERISTIC,
    generator_cap: int = GENERATOR_CAP,
    deadline: float | None = None,
) -> BettiTable:
    """Full multigraded Betti table of a nonzero squarefree monomial ideal."""
    if I.is_zero:
        raise ValueError("the zero ideal has no Betti table")
    if not _is_prime(characteristic):
        raise ValueError(f"characteristic {characteristic} is not prime")
    if len(I.gens) > generator_cap:
        raise ValueError(f"{len(I.gens)} generators exceed the cap {generator_cap}")
    entries: dict[tuple[int, int], int] = {}
    for m in lcm_lattice(I.gens):
        _check_deadline(deadline)
        levels = _face_levels(I, m)
        for i, dim in enumerate(_homology_dims(levels, characteristic)):
            if dim:
                entries[(i, m)] = dim
    try:
        gen_degree = I.pure_degree()
    except ValueError:
        gen_degree = None
    return BettiTable(
        n=I.n, characteristic=characteristic, entries=entries, gen_degree=gen_degree
    )


def first_syzygy_betti(
    I: MonomialIdeal, m: int, characteristic: int = DEFAULT_CHARACTERISTIC
) -> int:
    """b_{1,m}(I) alone, via the cardinality <= 2 part of K^m(I)."""
    levels = _face_levels(I, m, max_card=2)
    if len(levels) < 2:
        return 0
    r1 = _boundary_rank(levels[0], levels[1], characteristic)
    r2 = _boundary_rank(levels[1], levels[2], characteristic) if len(levels) > 2 else 0
    return len(levels[1]) - r1 - r2


def regularity(I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC) -> int:
    """Castelnuovo-Mumford regularity; the zero ideal has regularity 1."""
    if I.is_zero:
        return 1
    return multigraded_betti(I, characteristic).regularity()


def projective_dimension(
    I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC
) -> int:
    if I.is_zero:
        raise ValueError("projective dimension of the zero ideal is undefined")
    return multigraded_betti(I, characteristic).projective_dimension()


def has_linear_resolution(
    I: MonomialIdeal,
    characteristic: int = DEFAULT_CHARACTERISTIC,
    deadline: float | None = None,
) -> bool:
    """All Betti numbers sit in degrees d + i; vacuously true for the zero ideal."""
    if I.is_zero:
        return True
    d = I.pure_degree()
    table = multigraded_betti(I, characteristic, deadline=deadline)
    return all(monomial_degree(m) == d + i for (i, m) in table.entries)


# ---------------------------------------------------------------------------
# linear relatedness, two independent routes

def is_linearly_related_homological(
    I: MonomialIdeal,
    characteristic: int = DEFAULT_CHARACTERISTIC,
    deadline: float | None = None,
) -> bool:
    """First syzygies all linear: b_{1,m} = 0 whenever deg(m) != d + 1.

    Homological route: reduced homology of the small part of each upper-Koszul
    complex.  Vacuously true for the zero ideal.
    """
    if I.is_zero or len(I.gens) == 1:
        return True
    d = I.pure_degree()
    for m in lcm_lattice(I.gens):
        _check_deadline(deadline)
        if monomial_degree(m) <= d + 1:
            continue
        if first_syzygy_betti(I, m, characteristic):
            return False
    return True


def is_linearly_related_combinatorial(
    I: MonomialIdeal, deadline: float | None = None
) -> bool:
    """First syzygies all linear, by generator connectivity.

    Combinatorial route: for every pair of generators u, v there must be a
    path from u to v inside the set of generators dividing lcm(u, v), stepping
    only between generators whose pairwise lcm has degree d + 1.
    """
    if I.is_zero or len(I.gens) == 1:
        return True
    d = I.pure_degree()
    gens = I.gens
    g = len(gens)
    adj = [0] * g
    for i in range(g):
        for j in range(i + 1, g):
            if monomial_degree(gens[i] | gens[j]) == d + 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    for i in range(g):
        _check_deadline(deadline)
        for j in range(i + 1, g):
            m = gens[i] | gens[j]
            if monomial_degree(m) == d + 1:
                continue
            divisors = 0
            for k in range(g):
                if monomial_divides(gens[k], m):
                    divisors |= 1 << k
            reach = 1 << i
            frontier = reach
            target = 1 << j
            while frontier and not reach & target:
                nxt = 0
                rest = frontier
                while rest:
                    low = rest & -rest
                    nxt |= adj[low.bit_length() - 1]
                    rest ^= low
                frontier = nxt & divisors & ~reach
                reach |= frontier
            if not reach & target:
                return False
    return True


@dataclass(frozen=True)
class SyzygyWitnessReport:
    """Per-pair witnesses showing b_{1,m} = 0 without computing homology.

    For each generator pair u != v with lcm(u, v) = m the witness is a third
    generator w dividing m with lcm(u, w) != m and lcm(v, w) != m, or None
    when no such generator exists.
    """

    m: int
    pairs: tuple[tuple[int, int, int | None], ...]

    @property
    def all_covered(self) -> bool:
        return all(w is not None for _, _, w in self.pairs)


def first_syzygy_witness(I: MonomialIdeal, m: int) -> SyzygyWitnessReport:
    dividing = [g for g in I.gens if monomial_divides(g, m)]
    pairs = []
    for a, u in enumerate(dividing):
        for v in dividing[a + 1 :]:
            if u | v != m:
                continue
            witness = None
            for w in dividing:
                if w in (u, v):
                    continue
                if u | w != m and v | w != m:
                    witness = w
                    break
            pairs.append((u, v, witness))
    return SyzygyWitnessReport(m=m, pairs=tuple(pairs))


# ---------------------------------------------------------------------------
# linear quotients

def is_linear_quotients_order(gens: Sequence[int]) -> bool:
    """Whether the given generator sequence has linear quotients.

    The colon of the first j-1 generators by the j-th is generated by
    variables exactly when every earlier generator u_l admits an earlier u_l'
    with u_l' : u_j a single variable dividing u_l : u_j.
    """
    for j in range(1, len(gens)):
        w = 0
        for l in range(j):
            q = gens[l] & ~gens[j]
            if q.bit_count() == 1:
                w |= q
        for l in range(j):
            if gens[l] & ~gens[j] and not gens[l] & w:
                return False
    return True


@dataclass(frozen=True)
class LinearQuotientsResult:
    status: str  # "found" | "none" | "inconclusive"
    order: tuple[int, ...] | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


_FAILED_SET_CAP = 1 << 20


def linear_quotients_order(
    I: MonomialIdeal,
    node_budget: int = 10_000_000,
    deadline: float | None = None,
) -> LinearQuotientsResult:
    """Search for a linear-quotients order of the generators.

    Whether a generator can be appended depends only on the set already
    placed, never on its order, so the search memoizes failed prefix sets and
    backtracks chronologically.  Certified "none" requires exhausting the
    search; running out of budget reports "inconclusive".
    """
    if I.is_zero:
        return LinearQuotientsResult("found", (), 0)
    I.pure_degree()  # raises on mixed generator degrees
    gens = I.gens
    g = len(gens)
    if g == 1:
        return LinearQuotientsResult("found", gens, 0)
    d = monomial_degree(gens[0])
    linear_mates = [
        sum(1 for j in range(g) if j != i and monomial_degree(gens[i] | gens[j]) == d + 1)
        for i in range(g)
    ]
    heuristic = sorted(range(g), key=lambda i: (-linear_mates[i], monomial_vars(gens[i])))
    failed: set[int] = set()
    order: list[int] = []
    nodes = 0

    def addable(j: int) -> bool:
        gj = gens[j]
        w = 0
        for i in order:
            q = gens[i] & ~gj
            if q.bit_count() == 1:
                w |= q
        for i in order:
            if gens[i] & ~gj and not gens[i] & w:
                return False
        return True

    def dfs(chosen: int) -> bool:
        nonlocal nodes
        if len(order) == g:
            return True
        if chosen in failed:
            return False
        for j in heuristic:
            bit = 1 << j
            if chosen & bit:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("node budget exhausted")
            if nodes % 4096 == 0:
                _check_deadline(deadline)
            if addable(j):
                order.append(j)
                if dfs(chosen | bit):
                    return True
                order.pop()
        if len(failed) < _FAILED_SET_CAP:
            failed.add(chosen)
        return False

    try:
        ok = dfs(0)
    except BudgetExceeded:
        return LinearQuotientsResult("inconclusive", None, nodes)
    if ok:
        return LinearQuotientsResult("found", tuple(gens[i] for i in order), nodes)
    return LinearQuotientsResult("none", None, nodes)


# ---------------------------------------------------------------------------
# rendering

def render_betti_diagram(table: BettiTable) -> str:
    """Fixed-width graded Betti diagram, rows labeled by degree minus index."""
    graded = table.graded()
    max_i = max(i for i, _ in graded)
    cols = list(range(max_i + 1))
    row_labels = sorted({j - i for i, j in graded})
    totals = [sum(v for (i, _), v in graded.items() if i == c) for c in cols]

    def cell(i: int, row: int) -> str:
        v = graded.get((i, row + i), 0)
        return str(v) if v else "-"

    body = [[f"{r}:"] + [cell(c, r) for c in cols] for r in row_labels]
    body.append(["Tot:"] + [str(t) for t in totals])
    header = [""] + [str(c) for c in cols]
    widths = [
        max(len(row[k]) for row in [header] + body) for k in range(len(header))
    ]
    lines = []
    for row in [header] + body:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def betti_diagram_text(
    I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC
) -> str:
    """Diagram text for any ideal, with a note instead of a table when zero."""
    if I.is_zero:
        return "(zero ideal: empty Betti diagram, regularity 1 by convention)"
    return render_betti_diagram(multigraded_betti(I, characteristic))
