"""Sequences indexed by Z_ell: PAF, cyclic shifts, decimations, Legendre pairs."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .modring import is_unit, unit_inverse

log = logging.getLogger(__name__)

_PLUS = "+"
_MINUS_CHARS = ("-", "−")


@dataclass(frozen=True, order=True)
class Sequence:
    """Exact-integer vector indexed by Z_ell; entry g is the coefficient at g.

    Ordering is entrywise lexicographic, so -1 < +1 for sign sequences.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) == 0:
            raise ValueError("sequence must have length >= 1")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Sequence":
        return cls(tuple(int(x) for x in values))

    @property
    def ell(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, g: int) -> int:
        return self.entries[g % len(self.entries)]

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_pm1(self) -> bool:
        return all(x == 1 or x == -1 for x in self.entries)

    def to_bits(self) -> int:
        """Packed form of a +-1 sequence: bit g set iff entry g is +1."""
        if not self.is_pm1:
            raise ValueError("only +-1 sequences have a packed form")
        out = 0
        for g, x in enumerate(self.entries):
            if x == 1:
                out |= 1 << g
        return out

    @classmethod
    def from_bits(cls, bits: int, ell: int) -> "Sequence":
        return cls(tuple(1 if (bits >> g) & 1 else -1 for g in range(ell)))

    def __str__(self):
        if self.is_pm1:
            return format_sequence(self)
        return ",".join(str(x) for x in self.entries)


@dataclass(frozen=True, order=True)
class SequencePair:
    """Ordered pair (u, v); ordering compares the concatenation u||v."""

    u: Sequence
    v: Sequence

    def __post_init__(self):
        if self.u.ell != self.v.ell:
            raise ValueError(f"pair lengths differ: {self.u.ell} vs {self.v.ell}")

    @classmethod
    def of(cls, u: Iterable[int], v: Iterable[int]) -> "SequencePair":
        return cls(Sequence.of(u), Sequence.of(v))

    @property
    def ell(self) -> int:
        return self.u.ell

    def concat(self) -> tuple[int, ...]:
        return self.u.entries + self.v.entries

    @classmethod
    def from_concat(cls, w: Iterable[int]) -> "SequencePair":
        w = tuple(int(x) for x in w)
        if len(w) % 2:
            raise ValueError("concatenated pair must have even length")
        n = len(w) // 2
        return cls(Sequence(w[:n]), Sequence(w[n:]))

    def swapped(self) -> "SequencePair":
        return SequencePair(self.v, self.u)

    def __str__(self):
        return format_pair(self)


# --- text forms -------------------------------------------------------------


def parse_sequence(text: str) -> Sequence:
    """Parse '+'/'-' text, or comma-separated integers for general sequences."""
    text = text.strip()
    if not text:
        raise ValueError("empty sequence text")
    if "," in text or text.lstrip("-").isdigit():
        try:
            return Sequence.of(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed integer sequence: {text!r}") from None
    entries = []
    for ch in text:
        if ch == _PLUS:
            entries.append(1)
        elif ch in _MINUS_CHARS:
            entries.append(-1)
        else:
            raise ValueError(f"malformed sequence text {text!r}: unexpected {ch!r}")
    return Sequence(tuple(entries))


def format_sequence(v: Sequence) -> str:
    if not v.is_pm1:
        raise ValueError("only +-1 sequences have a +/- text form")
    return "".join("+" if x == 1 else "-" for x in v.entries)


def parse_pair(text: str) -> SequencePair:
    parts = text.strip().split(":")
    if len(parts) != 2:
        raise ValueError(f"pair text must look like 'u:v', got {text!r}")
    u, v = parse_sequence(parts[0]), parse_sequence(parts[1])
    if u.ell != v.ell:
        raise ValueError(f"pair lengths differ: {u.ell} vs {v.ell}")
    return SequencePair(u, v)


def format_pair(p: SequencePair) -> str:
    return f"{format_sequence(p.u)}:{format_sequence(p.v)}"


# --- PAF --------------------------------------------------------------------


def paf(v: Sequence, j: int) -> int:
    """Periodic autocorrelation sum_i v_i v_{i-j}."""
    e = v.entries
    n = len(e)
    j %= n
    return sum(e[i] * e[(i - j) % n] for i in range(n))


def _paf_naive(e: tuple[int, ...]) -> list[int]:
    n = len(e)
    return [sum(e[i] * e[(i - j) % n] for i in range(n)) for j in range(n)]


class FastPathDiagnostics:
    """Counts Fourier-path calls that fell back to naive summation."""

    def __init__(self):
        self.fallbacks = 0
        self.max_deviation = 0.0

    def reset(self):
        self.fallbacks = 0
        self.max_deviation = 0.0


fast_path_diagnostics = FastPathDiagnostics()


def paf_spectrum_fourier(v: Sequence) -> tuple[list[int], float]:
    """Rounded inverse transform of |DFT(v)|^2 and its max pre-rounding deviation."""
    x = np.asarray(v.entries, dtype=np.float64)
    f = np.fft.fft(x)
    raw = np.fft.ifft(f * np.conj(f)).real
    rounded = np.rint(raw)
    deviation = float(np.max(np.abs(raw - rounded)))
    return [int(t) for t in rounded], deviation


def paf_spectrum(v: Sequence, fast: bool = False) -> list[int]:
    """All PAF values [PAF(v,0), ..., PAF(v,ell-1)].

    With ``fast=True`` the values come from an FFT power spectrum, rounded to
    integers. If any coefficient sits further than 1e-6*ell from its rounding
    the naive sum is used instead and the event is counted in
    ``fast_path_diagnostics``.
    """
    if not fast:
        return _paf_naive(v.entries)
    values, deviation = paf_spectrum_fourier(v)
    diag = fast_path_diagnostics
    diag.max_deviation = max(diag.max_deviation, deviation)
    if deviation >= 1e-6 * v.ell:
        diag.fallbacks += 1
        log.warning("FFT PAF deviation %.3g too large at ell=%d; using naive sum", deviation, v.ell)
        return _paf_naive(v.entries)
    return values


def column_sum(v: Sequence) -> int:
    return sum(v.entries)


# --- shifts and decimations -------------------------------------------------


def cyclic_shift(v: Sequence, a: int) -> Sequence:
    """(c_a v)_i = v_{i-a}."""
    e = v.entries
    n = len(e)
    return Sequence(tuple(e[(i - a) % n] for i in range(n)))


def decimate(v: Sequence, k: int) -> Sequence:
    """(d_k v)_i = v_{i k^-1}; k must be a unit."""
    n = v.ell
    if not is_unit(k, n):
        raise ValueError(f"decimation factor {k} is not a unit modulo {n}")
    kinv = unit_inverse(k, n)
    e = v.entries
    return Sequence(tuple(e[(i * kinv) % n] for i in range(n)))


# --- Legendre pairs ---------------------------------------------------------


@dataclass(frozen=True)
class LPCheck:
    """Outcome of the Legendre-pair test; ``witness`` explains a failure."""

    ok: bool
    witness: Optional[str] = None
    offending_j: Optional[int] = None
    value: Optional[int] = None

    def __bool__(self):
        return self.ok


def is_legendre_pair(p: SequencePair, fast: bool = False) -> LPCheck:
    u, v = p.u, p.v
    if u.ell != v.ell:
        raise ValueError("pair lengths differ")
    if not (u.is_pm1 and v.is_pm1):
        raise ValueError("Legendre pairs are defined for +-1 sequences only")
    su, sv = column_sum(u), column_sum(v)
    if su != sv:
        return LPCheck(False, f"sum mismatch: {su} != {sv}")
    pu, pv = paf_spectrum(u, fast), paf_spectrum(v, fast)
    for j in range(1, u.ell):
        total = pu[j] + pv[j]
        if total != -2:
            return LPCheck(False, f"j={j} PAF sum {total} != -2", j, total)
    return LPCheck(True)
