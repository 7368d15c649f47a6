"""The decimation group D = Z_ell x| Z_ell^x and the pair group GG.

A ``DElement`` (a, b) stands for the map c_a d_b. A ``GGElement``
(f, r, k, i, j) stands for s^f (d_k, (-1)^r) (c_i, c_j), applied right to
left to a pair (u, v):

    (u, v) -> s^f (d_k c_i u, d_{(-1)^r k} c_j v)

Composition is done by rewriting into this normal form; the permutation
representation below is only used as an oracle and to decide equality when
ell <= 2, where -1 = 1 and distinct tuples can denote the same map.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .modring import is_unit, phi, unit_inverse, units
from .seqops import Sequence, SequencePair


def _check_same(ell1: int, ell2: int):
    if ell1 != ell2:
        raise ValueError(f"modulus mismatch: {ell1} vs {ell2}")


# --- D ----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class DElement:
    ell: int
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.ell)
        object.__setattr__(self, "b", self.b % self.ell)
        if not is_unit(self.b, self.ell):
            raise ValueError(f"{self.b} is not a unit modulo {self.ell}")

    @classmethod
    def identity(cls, ell: int) -> "DElement":
        return cls(ell, 0, 1 % ell)

    def __mul__(self, other: "DElement") -> "DElement":
        return d_compose(self, other)

    def __str__(self):
        return f"c({self.a}) d({self.b})"


def d_act_index(g: DElement, x: int) -> int:
    """(a, b) x = a + b x."""
    return (g.a + g.b * x) % g.ell


def d_compose(g1: DElement, g2: DElement) -> DElement:
    """g1 after g2: (a1 + b1 a2, b1 b2)."""
    _check_same(g1.ell, g2.ell)
    n = g1.ell
    return DElement(n, g1.a + g1.b * g2.a, g1.b * g2.b)


def d_inverse(g: DElement) -> DElement:
    binv = unit_inverse(g.b, g.ell)
    return DElement(g.ell, -binv * g.a, binv)


def d_act_sequence(g: DElement, v: Sequence) -> Sequence:
    """Entry x of the result is v_{(x - a) b^-1}."""
    _check_same(g.ell, v.ell)
    n = g.ell
    binv = unit_inverse(g.b, n)
    e = v.entries
    return Sequence(tuple(e[((x - g.a) * binv) % n] for x in range(n)))


def d_enumerate(ell: int) -> list[DElement]:
    return [DElement(ell, a, b) for b in units(ell) for a in range(ell)]


# --- GG ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GGElement:
    """s^f (d_k, (-1)^r) (c_i, c_j) in normal form."""

    ell: int
    f: int
    r: int
    k: int
    i: int
    j: int

    def __post_init__(self):
        n = self.ell
        if n < 1:
            raise ValueError("modulus must be >= 1")
        if self.f not in (0, 1) or self.r not in (0, 1):
            raise ValueError("f and r must be bits")
        object.__setattr__(self, "k", self.k % n)
        object.__setattr__(self, "i", self.i % n)
        object.__setattr__(self, "j", self.j % n)
        if not is_unit(self.k, n):
            raise ValueError(f"{self.k} is not a unit modulo {n}")

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.f, self.r, self.k, self.i, self.j)

    @property
    def v_factor(self) -> int:
        """Decimation applied to the second coordinate, (-1)^r k."""
        return (-self.k if self.r else self.k) % self.ell

    def __eq__(self, other):
        if not isinstance(other, GGElement):
            return NotImplemented
        if self.ell != other.ell:
            return False
        if self.ell <= 2:
            return to_pair_permutation(self) == to_pair_permutation(other)
        return self.key == other.key

    def __hash__(self):
        if self.ell <= 2:
            return hash((self.ell, to_pair_permutation(self).image))
        return hash((self.ell,) + self.key)

    def __lt__(self, other: "GGElement"):
        return (self.ell,) + self.key < (other.ell,) + other.key

    def __mul__(self, other: "GGElement") -> "GGElement":
        return gg_compose(self, other)

    def __str__(self):
        return format_gg(self)

    def __call__(self, p: SequencePair) -> SequencePair:
        return gg_act_pair(self, p)


def gg_identity(ell: int) -> GGElement:
    return GGElement(ell, 0, 0, 1 % ell, 0, 0)


def gg_switch(ell: int) -> GGElement:
    return GGElement(ell, 1, 0, 1 % ell, 0, 0)


def gg_shift(ell: int, i: int, j: int) -> GGElement:
    return GGElement(ell, 0, 0, 1 % ell, i, j)


def gg_decimation(ell: int, k: int, r: int) -> GGElement:
    return GGElement(ell, 0, r, k, 0, 0)


def gg_act_pair(g: GGElement, p: SequencePair) -> SequencePair:
    """Shift by (i, j), decimate by (k, (-1)^r k), then swap iff f = 1."""
    _check_same(g.ell, p.ell)
    n = g.ell
    kinv = unit_inverse(g.k, n)
    kvinv = unit_inverse(g.v_factor, n)
    # (d_k c_i u)_x = u_{x k^-1 - i}
    pu, pv = p.u.entries, p.v.entries
    u = Sequence(tuple(pu[(x * kinv - g.i) % n] for x in range(n)))
    v = Sequence(tuple(pv[(x * kvinv - g.j) % n] for x in range(n)))
    return SequencePair(v, u) if g.f else SequencePair(u, v)


def gg_compose(g1: GGElement, g2: GGElement) -> GGElement:
    """Normal form of g1 after g2.

    g1 g2 = s^f1 D1 C1 s^f2 D2 C2. Pushing s^f2 left uses
    (c_i, c_j) s = s (c_j, c_i) and (d_k, (-1)^r) s = s (d_{(-1)^r k}, (-1)^r);
    then C1' D2 = D2 (D2^-1 C1' D2) with
    D^-1 (c_i, c_j) D = (c_{i k^-1}, c_{j (-1)^r k^-1}).
    """
    _check_same(g1.ell, g2.ell)
    n = g1.ell
    k1, i1, j1 = g1.k, g1.i, g1.j
    if g2.f:
        i1, j1 = j1, i1
        if g1.r:
            k1 = -k1 % n
    kinv = unit_inverse(g2.k, n)
    sign = -1 if g2.r else 1
    i1, j1 = i1 * kinv, j1 * sign * kinv
    return GGElement(
        n,
        g1.f ^ g2.f,
        g1.r ^ g2.r,
        k1 * g2.k,
        i1 + g2.i,
        j1 + g2.j,
    )


def gg_inverse(g: GGElement) -> GGElement:
    """(s^f D C)^-1 = C^-1 D^-1 s^f, with D(k, r)^-1 = D(k^-1, r)."""
    n = g.ell
    c_inv = gg_shift(n, -g.i, -g.j)
    d_inv = gg_decimation(n, unit_inverse(g.k, n), g.r)
    s = gg_switch(n) if g.f else gg_identity(n)
    return gg_compose(gg_compose(c_inv, d_inv), s)


def iter_gg_tuples(ell: int) -> Iterator[GGElement]:
    """All normal-form tuples in lexicographic (f, r, k, i, j) order."""
    us = units(ell)
    for f in (0, 1):
        for r in (0, 1):
            for k in us:
                for i in range(ell):
                    for j in range(ell):
                        yield GGElement(ell, f, r, k, i, j)


@lru_cache(maxsize=64)
def _gg_enumerate(ell: int) -> tuple[GGElement, ...]:
    if ell >= 3:
        return tuple(iter_gg_tuples(ell))
    seen = set()
    out = []
    for g in iter_gg_tuples(ell):
        img = to_pair_permutation(g).image
        if img not in seen:
            seen.add(img)
            out.append(g)
    return tuple(out)


def gg_enumerate(ell: int) -> list[GGElement]:
    """Every element of GG once, lexicographic on (f, r, k, i, j).

    For ell <= 2 tuples inducing the same permutation are dropped (first kept).
    """
    return list(_gg_enumerate(ell))


def gg_order(ell: int) -> int:
    if ell >= 3:
        return 4 * ell * ell * phi(ell)
    return len(_gg_enumerate(ell))


# --- permutation representation ---------------------------------------------


@dataclass(frozen=True)
class PairPermutation:
    """Permutation of the 2*ell positions of u||v.

    ``image[t]`` is the position that the entry at t is moved to, so a pair
    w maps to w' with w'[image[t]] = w[t]. Composition is covariant:
    ``(p1 * p2).image[t] == p1.image[p2.image[t]]``.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a permutation")

    @property
    def ell(self) -> int:
        return len(self.image) // 2

    @classmethod
    def identity(cls, n_points: int) -> "PairPermutation":
        return cls(tuple(range(n_points)))

    def __mul__(self, other: "PairPermutation") -> "PairPermutation":
        a = self.image
        return PairPermutation(tuple(a[t] for t in other.image))

    def inverse(self) -> "PairPermutation":
        inv = [0] * len(self.image)
        for t, x in enumerate(self.image):
            inv[x] = t
        return PairPermutation(tuple(inv))

    def gather(self) -> tuple[int, ...]:
        """Index array idx with w' = w[idx]."""
        return self.inverse().image

    def apply(self, w):
        out = [None] * len(self.image)
        for t, x in enumerate(self.image):
            out[x] = w[t]
        return tuple(out)

    def apply_pair(self, p: SequencePair) -> SequencePair:
        return SequencePair.from_concat(self.apply(p.concat()))

    def is_identity(self) -> bool:
        return all(t == x for t, x in enumerate(self.image))


def labelled_pair(ell: int) -> SequencePair:
    """Pair whose entries are their own positions 0..2*ell-1."""
    return SequencePair(Sequence(tuple(range(ell))), Sequence(tuple(range(ell, 2 * ell))))


def permutation_of_pair_map(ell: int, fn) -> PairPermutation:
    """Read off the permutation a coordinate-moving pair map performs."""
    out = fn(labelled_pair(ell)).concat()
    image = [0] * (2 * ell)
    for x, label in enumerate(out):
        image[label] = x
    return PairPermutation(tuple(image))


@lru_cache(maxsize=200_000)
def _perm_from_key(ell: int, f: int, r: int, k: int, i: int, j: int) -> PairPermutation:
    g = GGElement(ell, f, r, k, i, j)
    return permutation_of_pair_map(ell, lambda p: gg_act_pair(g, p))


def to_pair_permutation(g: GGElement) -> PairPermutation:
    return _perm_from_key(g.ell, *g.key)


# --- text form --------------------------------------------------------------

_GG_RE = re.compile(r"^\s*s\^([01])\s+d\((\d+),([01])\)\s+c\((\d+),(\d+)\)\s*$")


def format_gg(g: GGElement) -> str:
    return f"s^{g.f} d({g.k},{g.r}) c({g.i},{g.j})"


def parse_gg(text: str, ell: int) -> GGElement:
    m = _GG_RE.match(text)
    if not m:
        raise ValueError(f"malformed group element {text!r}; expected 's^f d(k,r) c(i,j)'")
    f, k, r, i, j = (int(x) for x in m.groups())
    if k >= ell or i >= ell or j >= ell:
        raise ValueError(f"group element {text!r} is not in canonical form modulo {ell}")
    return GGElement(ell, f, r, k, i, j)
