"""Segmented numpy sieves for 0/1 multiplicative functions.

A function of this kind is fixed by what it does on prime powers.  Every
prime gets one of three codes: ALLOW (all powers give 1), FORBID (every
multiple gives 0), or EVEN (odd exponents give 0).  A cap on the power of
two covers the 2-adic conditions of the square-mod-n indicator.

Counting walks [1, x] in fixed, aligned segments, so a run resumed from a
checkpoint produces the same numbers as a fresh one.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

ALLOW, FORBID, EVEN = 0, 1, 2

DEFAULT_SEGMENT = 10**7


def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit (plain Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if sieve[p]:
            sieve[p * p::2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def primes_between(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi)."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.zeros(0, dtype=np.int64)
    seg = np.ones(hi - lo, dtype=bool)
    for p in small_primes(math.isqrt(hi - 1)).tolist():
        start = max(p * p, -(-lo // p) * p)
        seg[start - lo::p] = False
    return (np.flatnonzero(seg) + lo).astype(np.int64)


def powmod(base, exp: np.ndarray, mod: np.ndarray) -> np.ndarray:
    """Elementwise base**exp % mod; needs mod < 3.03e9 so products fit in int64."""
    exp = np.asarray(exp, dtype=np.int64).copy()
    mod = np.asarray(mod, dtype=np.int64)
    b = np.asarray(base, dtype=np.int64) % mod
    b = np.broadcast_to(b, mod.shape).copy()
    out = np.ones_like(mod) % mod
    while np.any(exp):
        odd = (exp & 1).astype(bool)
        out[odd] = out[odd] * b[odd] % mod[odd]
        b = b * b % mod
        exp >>= 1
    return out


def odd_part(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    while True:
        even = (m & 1) == 0
        if not even.any():
            return m
        m[even] >>= 1


def symbol_on_primes(a: int, primes: np.ndarray, at_two: int) -> np.ndarray:
    """(a/p) on an array of primes; `at_two` is the value used at p = 2."""
    out = np.zeros(len(primes), dtype=np.int64)
    two = primes == 2
    out[two] = at_two
    odd = ~two
    p = primes[odd]
    r = powmod(a % p, (p - 1) // 2, p)
    out[odd] = np.where(r == 1, 1, np.where(r == 0, 0, -1))
    return out


def geometric_points(x: int, per_decade: int = 10, start: int = 10) -> list[int]:
    """Integer checkpoints round(10**(k/per_decade)) between start and x, plus x."""
    pts = set()
    k = 0
    while True:
        v = round(10 ** (k / per_decade))
        if v > x:
            break
        if v >= start:
            pts.add(v)
        k += 1
    pts.add(x)
    return sorted(pts)


@dataclass
class SieveState:
    x_done: int = 0
    count: int = 0
    series: list[tuple[int, int]] = field(default_factory=list)


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class PrimeRuleSieve:
    """Counts n <= x with f(n) = 1 for a 0/1 multiplicative f.

    classify maps an int64 array of primes to codes ALLOW/FORBID/EVEN;
    cap2 (if set) kills every n divisible by 2**(cap2 + 1).
    """

    def __init__(self, classify: Callable[[np.ndarray], np.ndarray],
                 cap2: int | None = None, key: dict | None = None):
        self.classify = classify
        self.cap2 = cap2
        self.key = key or {}
        self._forbid: list[int] = []
        self._even: list[int] = []
        self._classified_to = 2  # primes below this are sorted into the lists

    def _extend(self, hi: int) -> None:
        if hi <= self._classified_to:
            return
        ps = primes_between(self._classified_to, hi)
        if len(ps):
            codes = self.classify(ps)
            self._forbid += ps[codes == FORBID].tolist()
            self._even += ps[codes == EVEN].tolist()
        self._classified_to = hi

    def segment(self, lo: int, hi: int) -> np.ndarray:
        """Indicator of f on [lo, hi), lo >= 1."""
        self._extend(hi)
        arr = np.ones(hi - lo, dtype=bool)
        for p in self._forbid:
            if p >= hi:
                break
            arr[(-lo) % p::p] = False
        for p in self._even:
            if p >= hi:
                break
            if p * p >= hi:
                arr[(-lo) % p::p] = False
                continue
            pk, k = p, 1
            while pk < hi:
                if k % 2:
                    idx = np.arange((-lo) % pk, hi - lo, pk)
                    vals = idx + lo
                    arr[idx[(vals // pk) % p != 0]] = False
                pk *= p
                k += 1
        if self.cap2 is not None:
            m = 2 ** (self.cap2 + 1)
            arr[(-lo) % m::m] = False
        return arr

    def indicator(self, x: int) -> np.ndarray:
        """f(0..x) as a bool array (f(0) reported as False)."""
        out = np.zeros(x + 1, dtype=bool)
        if x >= 1:
            out[1:] = self.segment(1, x + 1)
        return out

    def prefix(self, x: int) -> np.ndarray:
        """Cumulative counts F(0..x)."""
        return np.cumsum(self.indicator(x), dtype=np.int64)

    def count(self, x: int, checkpoints: list[int] | None = None,
              segment: int = DEFAULT_SEGMENT, state_path: str | None = None,
              ) -> SieveState:
        """Count up to x, recording counts at the checkpoints.

        With state_path, progress is written after every segment and a run
        for the same key picks up where the stored one stopped.
        """
        checkpoints = sorted(c for c in (checkpoints or []) if 1 <= c <= x)
        st = self._load(state_path, x, checkpoints) if state_path else SieveState()
        lo = st.x_done + 1
        while lo <= x:
            hi = min((lo - 1) // segment * segment + segment, x) + 1
            arr = self.segment(lo, hi)
            cs = np.cumsum(arr, dtype=np.int64)
            for c in checkpoints:
                if lo <= c < hi:
                    st.series.append((c, st.count + int(cs[c - lo])))
            st.count += int(cs[-1]) if len(cs) else 0
            st.x_done = hi - 1
            if state_path:
                self._save(state_path, st, checkpoints)
            lo = hi
        return st

    def _load(self, path: str, x: int, checkpoints: list[int]) -> SieveState:
        try:
            with open(path) as fh:
                rec = json.load(fh)
        except (OSError, ValueError):
            return SieveState()
        if (rec.get("schema") != 1 or rec.get("key") != self.key or rec["x_done"] > x
                or rec.get("checkpoints") != [c for c in checkpoints if c <= rec["x_done"]]):
            return SieveState()
        return SieveState(rec["x_done"], rec["count"], [tuple(s) for s in rec["series"]])

    def _save(self, path: str, st: SieveState, checkpoints: list[int]) -> None:
        done = [c for c in checkpoints if c <= st.x_done]
        rec = {"schema": 1, "key": self.key, "x_done": st.x_done, "checkpoints": done,
               "count": st.count, "series": [list(s) for s in st.series]}
        _atomic_write(path, json.dumps(rec, sort_keys=True))
