"""Brute-force reference implementations, kept independent of the fast paths."""

import itertools

from lpequiv.orbits import orbit_by_closure
from lpequiv.seqops import SequencePair, format_pair


def naive_paf(v, j):
    n = len(v)
    return sum(v[i] * v[(i - j) % n] for i in range(n))


def naive_is_lp(u, v):
    if sum(u) != sum(v):
        return False
    return all(naive_paf(u, j) + naive_paf(v, j) == -2 for j in range(1, len(u)))


def all_pm1(ell):
    return list(itertools.product((-1, 1), repeat=ell))


def all_pairs(ell):
    vecs = all_pm1(ell)
    return [(u, v) for u in vecs for v in vecs]


def brute_force_lps(ell, sum_constrained=False):
    """Every LP of length ell by scanning all 4^ell pairs (or only sums +-1)."""
    vecs = all_pm1(ell)
    if sum_constrained:
        vecs = [v for v in vecs if abs(sum(v)) == 1]
    return sorted(SequencePair.of(u, v) for u in vecs for v in vecs if naive_is_lp(u, v))


def brute_force_census(ell, lps=None):
    """(total, [(representative, orbit size)]) via breadth-first orbit closure."""
    lps = brute_force_lps(ell) if lps is None else lps
    remaining = set(lps)
    classes = []
    for p in lps:
        if p not in remaining:
            continue
        orbit = orbit_by_closure(p)
        remaining -= orbit
        classes.append((min(orbit), len(orbit)))
    return len(lps), sorted(classes)


def census_text(ell, total, classes):
    lines = [f"{ell}\t{total}\t{len(classes)}"]
    lines += [f"{format_pair(rep)}\t{size}" for rep, size in classes]
    return "\n".join(lines) + "\n"
