"""Census runs: counts at geometric checkpoints, normalized ratios, JSON/CSV."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
from dataclasses import dataclass, field

from .functions import (A_MODES, CONVENTIONS, LITERAL, ODD_PRIMES, a_q_sieve, b_sieve,
                        check_discriminant, delta, f_sieve, g_sieve, prime_order_census)
from .sieve import DEFAULT_SEGMENT, PrimeRuleSieve, geometric_points

KINDS = ("A", "D", "G", "B", "prime-order")
CACHE_ENV = "HSDUADIC_CACHE_DIR"


@dataclass
class CensusReport:
    kind: str
    params: dict
    x: int
    count: int
    ratio: float
    exponent: float
    series: list[tuple[int, int, float]] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    state_path: str | None = None

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "params": self.params,
            "x": self.x,
            "count": self.count,
            "ratio": self.ratio,
            "ratio_definition": ("count / pi(x)" if self.kind == "prime-order"
                                 else f"count * log(x)^{self.exponent:g} / x"),
            "series": [list(s) for s in self.series],
            **self.extra,
        }

    def series_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "count", "ratio"])
        for x, c, r in self.series:
            w.writerow([x, c, repr(r)])
        return buf.getvalue()

    def spread(self, lo: int) -> float:
        """(max - min)/min of the ratio over checkpoints >= lo."""
        r = [v for x, _, v in self.series if x >= lo]
        return (max(r) - min(r)) / min(r)


def normalized(count: int, x: int, exponent: float) -> float:
    return count * math.log(x) ** exponent / x if x >= 3 else float("nan")


def _state_path(state_dir: str | None, key: dict) -> str | None:
    if state_dir is None:
        state_dir = os.environ.get(CACHE_ENV)
    if not state_dir:
        return None
    h = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()[:16]
    return os.path.join(state_dir, f"census-{key['kind']}-{h}.json")


def _sieve_for(kind: str, q=None, a=None, D=None, mode: str = LITERAL,
               odd_only: bool = False, convention: str = ODD_PRIMES
               ) -> tuple[PrimeRuleSieve, dict, float]:
    if kind == "A":
        if q is None:
            raise ValueError("census A needs q")
        if mode not in A_MODES:
            raise ValueError(f"mode must be one of {A_MODES}")
        return a_q_sieve(q, mode), {"q": q, "mode": mode}, float(delta(q))
    if kind == "D":
        if a is None:
            raise ValueError("census D needs a")
        return f_sieve(a, odd_only), {"a": a, "odd_only": odd_only}, 0.5
    if kind == "G":
        if a is None:
            raise ValueError("census G needs a")
        if convention not in CONVENTIONS:
            raise ValueError(f"convention must be one of {CONVENTIONS}")
        return g_sieve(a, convention), {"a": a, "convention": convention}, 0.5
    if kind == "B":
        if D is None:
            raise ValueError("census B needs D")
        check_discriminant(D)
        return b_sieve(D), {"D": D}, 0.5
    raise ValueError(f"kind must be one of {KINDS}")


def run_census(kind: str, x: int, q: int | None = None, a: int | None = None,
               D: int | None = None, mode: str = LITERAL, odd_only: bool = False,
               convention: str = ODD_PRIMES, per_decade: int = 10,
               segment: int = DEFAULT_SEGMENT, state_dir: str | None = None) -> CensusReport:
    if x < 1:
        raise ValueError("x must be positive")
    if kind == "prime-order":
        if q is None:
            raise ValueError("census prime-order needs q")
        res = prime_order_census(q, x)
        return CensusReport(kind, {"q": q}, x, res["count"], res["density"], 0.0,
                            extra={"prime_order": res})
    sieve, params, expo = _sieve_for(kind, q, a, D, mode, odd_only, convention)
    pts = geometric_points(x, per_decade)
    path = _state_path(state_dir, sieve.key)
    st = sieve.count(x, pts, segment=segment, state_path=path)
    series = [(c, n, normalized(n, c, expo)) for c, n in st.series]
    return CensusReport(kind, params, x, st.count, normalized(st.count, x, expo), expo,
                        series, state_path=path)
