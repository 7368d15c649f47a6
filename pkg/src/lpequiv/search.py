"""Exhaustive Legendre-pair search and classification into GG-orbits.

Summing the defining PAF condition over j != 0 and using PAF(., 0) = ell
gives (1'u)^2 + (1'v)^2 = 2, so both sums are +-1 and equal. Candidates are
therefore the vectors with (ell +- 1)/2 entries equal to +1. For each u the
required PAF profile of v is -2 - PAF(u, .); v candidates are bucketed by
their PAF profile so matching is a dictionary lookup. Every emitted pair
passes the exact ``is_legendre_pair`` predicate.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Literal, Optional

import numpy as np

from .group import d_act_sequence, d_enumerate
from .orbits import DEFAULT_MEMBER_CAP, canonical_pair, gather_table
from .seqops import Sequence, SequencePair, format_pair, is_legendre_pair, parse_pair

log = logging.getLogger(__name__)

Mode = Literal["count-only", "representatives", "full"]

LONG_RUNNING_ELL = 13
_CHUNK = 4096


@dataclass(frozen=True)
class SearchConfig:
    ell: int
    mode: Mode = "full"
    workers: int = 1
    orbit_member_cap: int = DEFAULT_MEMBER_CAP
    prune: bool = True

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.mode not in ("count-only", "representatives", "full"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass
class ClassificationReport:
    ell: int
    total_lps: int
    classes: list[tuple[SequencePair, int]] = field(default_factory=list)

    @property
    def checksum_ok(self) -> bool:
        return self.total_lps == sum(size for _, size in self.classes)

    def to_text(self) -> str:
        lines = [f"{self.ell}\t{self.total_lps}\t{len(self.classes)}"]
        lines += [f"{format_pair(rep)}\t{size}" for rep, size in self.classes]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ClassificationReport":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        ell, total, n = (int(x) for x in lines[0].split("\t"))
        classes = []
        for ln in lines[1:]:
            pair, size = ln.split("\t")
            classes.append((parse_pair(pair), int(size)))
        if len(classes) != n:
            raise ValueError(f"header announces {n} classes, found {len(classes)}")
        return cls(ell, total, classes)


# --- candidate generation ---------------------------------------------------


@lru_cache(maxsize=64)
def sum_candidates(ell: int, total: int) -> np.ndarray:
    """All +-1 vectors of length ell with entry sum ``total``, lexicographic.

    Returned as an int8 matrix, one vector per row.
    """
    if (ell + total) % 2 or abs(total) > ell:
        return np.zeros((0, ell), dtype=np.int8)
    n_plus = (ell + total) // 2
    rows = []
    # -1 < +1, so lexicographic order over {-1,+1}^ell is binary order with -1 -> 0
    for plus_pos in itertools.combinations(range(ell), n_plus):
        row = [-1] * ell
        for g in plus_pos:
            row[g] = 1
        rows.append(row)
    m = np.asarray(rows, dtype=np.int8).reshape(-1, ell)
    order = np.lexsort(m.T[::-1])
    return m[order]


def batch_paf(m: np.ndarray) -> np.ndarray:
    """PAF(row, j) for j = 0..ell-1, exactly in integers, for every row."""
    x = m.astype(np.int64)
    ell = x.shape[1]
    out = np.empty((x.shape[0], ell), dtype=np.int64)
    for j in range(ell):
        # v_{i-j} is the row rolled right by j
        out[:, j] = np.sum(x * np.roll(x, j, axis=1), axis=1)
    return out


def _profile_width(ell: int) -> int:
    # PAF(j) = PAF(ell - j), so j = 1..ell//2 determines the rest
    return ell // 2


@lru_cache(maxsize=16)
def _profile_index(ell: int, total: int) -> dict[tuple[int, ...], list[int]]:
    cands = sum_candidates(ell, total)
    width = _profile_width(ell)
    prof = batch_paf(cands)[:, 1 : width + 1]
    index: dict[tuple[int, ...], list[int]] = {}
    for row, key in enumerate(map(tuple, prof.tolist())):
        index.setdefault(key, []).append(row)
    return index


def admissible_sums(ell: int) -> list[int]:
    return [t for t in (-1, 1) if (ell + t) % 2 == 0 and abs(t) <= ell]


def _row_to_seq(row) -> Sequence:
    return Sequence(tuple(int(x) for x in row))


def _search_shard(ell: int, total: int, start: int, stop: int) -> list[tuple[int, ...]]:
    cands = sum_candidates(ell, total)
    index = _profile_index(ell, total)
    width = _profile_width(ell)
    need = (-2 - batch_paf(cands[start:stop])[:, 1 : width + 1]).tolist()
    found = []
    for offset, key in enumerate(need):
        rows = index.get(tuple(key))
        if not rows:
            continue
        u = _row_to_seq(cands[start + offset])
        for r in rows:
            p = SequencePair(u, _row_to_seq(cands[r]))
            if is_legendre_pair(p):
                found.append(p.concat())
    return found


def _shards(n: int, parts: int) -> list[tuple[int, int]]:
    if n == 0:
        return []
    size = max(1, -(-n // parts))
    return [(s, min(n, s + size)) for s in range(0, n, size)]


def _run_shards(fn, jobs: list[tuple], workers: int) -> list:
    if workers == 1 or len(jobs) <= 1:
        results = [fn(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, *zip(*jobs)))
    return [x for chunk in results for x in chunk]


def enumerate_lps_bruteforce(ell: int, sum_constrained: bool = False) -> list[SequencePair]:
    """Reference scan over all 4^ell pairs (or only those with sums +-1)."""
    vecs = [Sequence(v) for v in itertools.product((-1, 1), repeat=ell)]
    if sum_constrained:
        vecs = [v for v in vecs if abs(sum(v.entries)) == 1]
    out = []
    for u in vecs:
        for v in vecs:
            p = SequencePair(u, v)
            if is_legendre_pair(p):
                out.append(p)
    return sorted(out)


def enumerate_lps(cfg: SearchConfig) -> Iterator[SequencePair]:
    """Every Legendre pair of length cfg.ell once, in lexicographic order."""
    ell = cfg.ell
    if not cfg.prune:
        yield from enumerate_lps_bruteforce(ell)
        return
    if ell > LONG_RUNNING_ELL:
        log.warning("ell=%d exceeds the desk-scale envelope; this may run for a long time", ell)
    jobs = []
    for total in admissible_sums(ell):
        n = len(sum_candidates(ell, total))
        jobs += [(ell, total, a, b) for a, b in _shards(n, cfg.workers * 4 if cfg.workers > 1 else 1)]
    found = _run_shards(_search_shard, jobs, cfg.workers)
    for w in sorted(found):
        yield SequencePair.from_concat(w)


def count_lps(cfg: SearchConfig) -> int:
    return sum(1 for _ in enumerate_lps(cfg))


def classify_lps(cfg: SearchConfig) -> ClassificationReport:
    """Partition all LPs into GG-orbits; classes sorted by representative."""
    lps = list(enumerate_lps(cfg))
    table = gather_table(cfg.ell) if lps else None
    remaining = {p.concat() for p in lps}
    classes = []
    for p in lps:
        w = p.concat()
        if w not in remaining:
            continue
        images = np.unique(np.asarray(w, dtype=np.int64)[table], axis=0)
        members = [tuple(r) for r in images.tolist()]
        for m in members:
            remaining.discard(m)
        classes.append((SequencePair.from_concat(members[0]), len(members)))
    classes.sort()
    return ClassificationReport(cfg.ell, len(lps), classes)


# --- canonical-only search --------------------------------------------------


def _lex_keys(m: np.ndarray) -> np.ndarray:
    """Integer keys ordered like the rows of a +-1 matrix (index 0 most significant)."""
    ell = m.shape[-1]
    weights = (1 << np.arange(ell - 1, -1, -1, dtype=np.int64))
    return ((m > 0).astype(np.int64) * weights).sum(axis=-1)


@lru_cache(maxsize=16)
def _d_gather(ell: int) -> np.ndarray:
    """Index arrays of every element of D acting on one sequence."""
    label = Sequence(tuple(range(ell)))
    return np.asarray([d_act_sequence(g, label).entries for g in d_enumerate(ell)], dtype=np.intp)


@lru_cache(maxsize=16)
def decimation_minima(ell: int, total: int) -> np.ndarray:
    """Key of the smallest member of each candidate's decimation class."""
    cands = sum_candidates(ell, total)
    idx = _d_gather(ell)
    out = np.empty(len(cands), dtype=np.int64)
    for s in range(0, len(cands), _CHUNK):
        block = cands[s : s + _CHUNK]
        out[s : s + _CHUNK] = _lex_keys(block[:, idx]).min(axis=1)
    return out


def _canonical_shard(ell: int, total: int, start: int, stop: int) -> list[tuple[int, ...]]:
    cands = sum_candidates(ell, total)
    keys = _lex_keys(cands)
    dmin = decimation_minima(ell, total)
    index = _profile_index(ell, total)
    width = _profile_width(ell)
    need_all = -2 - batch_paf(cands[start:stop])[:, 1 : width + 1]
    found = []
    for row in range(start, stop):
        # the canonical u is the least element over the decimation classes of u and v
        if dmin[row] != keys[row]:
            continue
        need = tuple(need_all[row - start].tolist())
        u = _row_to_seq(cands[row])
        for r in index.get(need, ()):
            if dmin[r] < keys[row]:
                continue
            p = SequencePair(u, _row_to_seq(cands[r]))
            if is_legendre_pair(p) and canonical_pair(p) == p:
                found.append(p.concat())
    return found


def search_canonical_only(cfg: SearchConfig) -> list[SequencePair]:
    """Canonical LPs only, found without classifying the full LP set."""
    ell = cfg.ell
    jobs = []
    for total in admissible_sums(ell):
        n = len(sum_candidates(ell, total))
        jobs += [(ell, total, a, b) for a, b in _shards(n, cfg.workers * 4 if cfg.workers > 1 else 1)]
    found = _run_shards(_canonical_shard, jobs, cfg.workers)
    return [SequencePair.from_concat(w) for w in sorted(found)]


def quadratic_residue_pair(ell: int) -> Optional[SequencePair]:
    """u = v with u_0 = -1 and u_i = +1 iff i is a nonzero square mod ell."""
    if ell < 3:
        return None
    squares = {(x * x) % ell for x in range(1, ell)}
    u = Sequence(tuple(-1 if i == 0 else (1 if i in squares else -1) for i in range(ell)))
    return SequencePair(u, u)
