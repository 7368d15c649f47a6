"""Decimation classes, GG-orbits of pairs and canonical representatives.

The canonical representative of a pair is the lexicographic minimum of its
GG-orbit, comparing u||v entrywise with -1 < +1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .group import (
    GGElement,
    d_act_sequence,
    d_enumerate,
    gg_act_pair,
    gg_decimation,
    gg_enumerate,
    gg_order,
    gg_shift,
    gg_switch,
    to_pair_permutation,
)
from .modring import units
from .seqops import Sequence, SequencePair, cyclic_shift, decimate, format_pair

DEFAULT_MEMBER_CAP = 10_000


@dataclass(frozen=True)
class OrbitReport:
    representative: SequencePair
    size: int
    stabilizer_order: int
    members: Optional[tuple[SequencePair, ...]] = None

    def to_line(self) -> str:
        return f"{format_pair(self.representative)}\t{self.size}\t{self.stabilizer_order}"


def decimation_class(v: Sequence) -> list[Sequence]:
    """{c_a d_b v}, deduplicated and sorted."""
    return sorted({d_act_sequence(g, v) for g in d_enumerate(v.ell)})


@lru_cache(maxsize=32)
def gather_table(ell: int) -> np.ndarray:
    """Row g holds the index array taking u||v to g(u, v) by fancy indexing."""
    rows = [to_pair_permutation(g).gather() for g in gg_enumerate(ell)]
    return np.asarray(rows, dtype=np.intp)


def _orbit_matrix(p: SequencePair) -> np.ndarray:
    w = np.asarray(p.concat(), dtype=np.int64)
    return w[gather_table(p.ell)]


def _unique_rows(m: np.ndarray) -> np.ndarray:
    # np.unique on rows sorts lexicographically, which is exactly our order
    return np.unique(m, axis=0)


def pair_orbit(p: SequencePair, member_cap: int = DEFAULT_MEMBER_CAP) -> OrbitReport:
    """Orbit of p under every element of GG."""
    rows = _unique_rows(_orbit_matrix(p))
    size = rows.shape[0]
    rep = SequencePair.from_concat(rows[0].tolist())
    members = None
    if size <= member_cap:
        members = tuple(SequencePair.from_concat(r) for r in rows.tolist())
    return OrbitReport(rep, size, gg_order(p.ell) // size, members)


def canonical_pair(p: SequencePair) -> SequencePair:
    m = _orbit_matrix(p)
    # lexicographic minimum by successive column filtering
    idx = np.arange(m.shape[0])
    for col in range(m.shape[1]):
        c = m[idx, col]
        idx = idx[c == c.min()]
        if idx.size == 1:
            break
    return SequencePair.from_concat(m[idx[0]].tolist())


def is_canonical(p: SequencePair) -> bool:
    return canonical_pair(p) == p


def are_equivalent(p1: SequencePair, p2: SequencePair) -> bool:
    if p1.ell != p2.ell:
        raise ValueError(f"pair lengths differ: {p1.ell} vs {p2.ell}")
    return canonical_pair(p1) == canonical_pair(p2)


# --- oracles ----------------------------------------------------------------


def gg_generators(ell: int) -> list[GGElement]:
    """c_1 on each coordinate, every (d_k, (-1)^r), and the switch."""
    gens = [gg_shift(ell, 1, 0), gg_shift(ell, 0, 1), gg_switch(ell)]
    gens += [gg_decimation(ell, k, r) for k in units(ell) for r in (0, 1)]
    return gens


def orbit_by_closure(p: SequencePair) -> set[SequencePair]:
    """Breadth-first closure of {p} under the generators of GG."""
    gens = gg_generators(p.ell)
    seen = {p}
    queue = deque([p])
    while queue:
        q = queue.popleft()
        for g in gens:
            x = gg_act_pair(g, q)
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return seen


def equivalent_by_definition(p1: SequencePair, p2: SequencePair) -> bool:
    """Direct scan over every (k, i, j, f, sign) in the defining equations."""
    ell = p1.ell
    if p2.ell != ell:
        raise ValueError("pair lengths differ")
    for k in units(ell):
        for sign in (1, -1):
            for i in range(ell):
                x = decimate(cyclic_shift(p1.u, i), k)
                for j in range(ell):
                    y = decimate(cyclic_shift(p1.v, j), sign * k % ell)
                    for f in (0, 1):
                        cand = SequencePair(y, x) if f else SequencePair(x, y)
                        if cand == p2:
                            return True
    return False
