"""Closed-form bounds on the chord-restricted girth and Moore bounds.

Each formula is evaluated as a real number. Formulas that carry an
unspecified additive constant are evaluated without it and flagged
``asymptotic``; they are reported but never used as hard limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def moore_bound(d: int, g: int) -> int:
    """Minimum vertex count of a d-regular graph with girth g."""
    if d < 3 or g < 3:
        raise ValueError(f"moore_bound needs d >= 3 and g >= 3, got d={d}, g={g}")
    if g % 2:
        k = (g - 1) // 2
        return 1 + d * sum((d - 1) ** i for i in range(k))
    k = g // 2
    return 1 + (d - 1) ** (k - 1) + d * sum((d - 1) ** i for i in range(k - 1))


def d_regular_gamma2_upper(d: int, n: int) -> float:
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    if n < d + 1:
        raise ValueError(f"n must be >= d+1, got n={n}, d={d}")
    return math.sqrt(2 * n / (d - 2))


LAMBDA = 3 * 2 ** (-2 / 3)


@dataclass(frozen=True)
class Bound:
    formula: str
    source: str
    value: float
    asymptotic: bool = False
    group: str = ""
    lower: bool = False

    @property
    def integer(self) -> int:
        """Integer consequence: smallest integer above a lower bound, floor of an upper one."""
        if self.lower:
            return math.floor(self.value) + 1 if self.strict else math.ceil(self.value - 1e-9)
        return math.floor(self.value + 1e-9)

    strict: bool = False


@dataclass
class BoundsReport:
    n: int
    k: int
    exact: int | None = None
    lower_bounds: list[Bound] = field(default_factory=list)
    upper_bounds: list[Bound] = field(default_factory=list)
    omitted: list[tuple[str, str]] = field(default_factory=list)

    def assertable_lower(self) -> int | None:
        if self.exact is not None:
            return self.exact
        vals = [b.integer for b in self.lower_bounds if not b.asymptotic]
        return max(vals) if vals else None

    def assertable_upper(self) -> int | None:
        """Min over independent results of the weakest form stated for each."""
        if self.exact is not None:
            return self.exact
        groups: dict[str, int] = {}
        for b in self.upper_bounds:
            if b.asymptotic:
                continue
            groups[b.group] = max(groups.get(b.group, b.integer), b.integer)
        return min(groups.values()) if groups else None

    def as_dict(self) -> dict:
        def row(b: Bound):
            return {"formula": b.formula, "source": b.source, "value": b.value,
                    "integer": b.integer, "asymptotic": b.asymptotic}
        return {
            "n": self.n, "k": self.k, "exact": self.exact,
            "lower_bounds": [row(b) for b in self.lower_bounds],
            "upper_bounds": [row(b) for b in self.upper_bounds],
            "omitted": [{"formula": f, "reason": r} for f, r in self.omitted],
            "quantifies_over": "connected simple cubic graphs with a given 2-factor/chord split",
        }


def construction_l(n: int) -> int | None:
    """``l`` with ``n = 8l^2 + 6l``, if any."""
    l = int((math.isqrt(36 + 32 * n) - 6) // 16)
    for c in (l, l + 1):
        if c >= 1 and 8 * c * c + 6 * c == n:
            return c
    return None


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while q % p:
        p += 1
    while q % p == 0:
        q //= p
    return q == 1


def _upper_for_even(k: int, n: int) -> list[Bound]:
    """Upper bounds proved for exactly ``k`` chords (k even)."""
    s = math.sqrt(2 * n)
    if k == 2:
        return [Bound("sqrt(2n)+2", "k=2 upper", s + 2, group="k2")]
    if k == 4:
        c = (2 * n) ** (1 / 3)
        return [
            Bound("(3/2)(2n)^(1/3)", "k=4 upper, summary form", 1.5 * c, group="k4"),
            Bound("lambda*n^(1/3)+3", "k=4 upper, derivation form", LAMBDA * n ** (1 / 3) + 3, group="k4"),
            Bound("3(n/4)^(1/3)+4", "k=4 upper, proof closing form", 3 * (n / 4) ** (1 / 3) + 4, group="k4"),
        ]
    if k >= 6:
        l = k // 2
        r = n ** (1 / (l + 1))
        return [
            Bound("3l+(1/2)(l+1+ln2)n^(1/(l+1))", f"k={k} upper, summary form",
                  3 * l + 0.5 * (l + 1 + math.log(2)) * r, group=f"k{k}"),
            Bound("3l+(l-1)2^(-l/(l+1))n^(1/(l+1))+2^(1/(l+1))n^(1/(l+1))",
                  f"k={k} upper, derivation form",
                  3 * l + (l - 1) * 2 ** (-l / (l + 1)) * r + 2 ** (1 / (l + 1)) * r, group=f"k{k}"),
        ]
    return []


def gamma_bounds(k: int, n: int) -> BoundsReport:
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 4 or n % 2:
        raise ValueError(f"n must be even and >= 4, got {n}")
    rep = BoundsReport(n, k)
    if k == 0:
        rep.exact = n
        return rep
    if k == 1:
        rep.exact = n // 2 + 1
        return rep

    s = math.sqrt(2 * n)
    l = construction_l(n)
    low = rep.lower_bounds
    if k == 2:
        low.append(Bound("sqrt(2n)-5/2", "k=2 lower, all even n", s - 2.5, lower=True, strict=True))
        if l is not None:
            low.append(Bound("sqrt(2n+9/4)+1/2", f"k=2 construction, l={l}",
                             math.sqrt(2 * n + 9 / 4) + 0.5, lower=True))
        else:
            rep.omitted.append(("sqrt(2n+9/4)+1/2", "only proved for n = 8l^2+6l"))
    if k == 3:
        if l is not None:
            low.append(Bound("(1/2)sqrt(2n+9/4)+5/4", f"k=3 construction, l={l}",
                             0.5 * math.sqrt(2 * n + 9 / 4) + 1.25, lower=True))
        else:
            rep.omitted.append(("(1/2)sqrt(2n+9/4)+5/4", "only proved for n = 8l^2+6l"))
    if k in (4, 5):
        low.append(Bound("(2n)^(1/3)+O(1)", "k=4,5 lower, blow-up of projective planes",
                         (2 * n) ** (1 / 3), asymptotic=True, lower=True))
    if k in (6, 7):
        low.append(Bound("2(n/4)^(1/4)+O(1)", "k=7 lower, blow-up of generalized quadrangles",
                         2 * (n / 4) ** 0.25, asymptotic=True, lower=True))
    if 8 <= k <= 11:
        low.append(Bound("2(n/4)^(1/6)+O(1)", "k=11 lower, blow-up of generalized hexagons",
                         2 * (n / 4) ** (1 / 6), asymptotic=True, lower=True))
    # q = 2 would contradict the k=2 upper bound, and the construction needs a log base q-1 > 1.
    if k >= 3 and _is_prime_power(k):
        low.append(Bound("n^(4/(3q))+O(1)", f"q={k} lower, high-girth q-regular graphs",
                         n ** (4 / (3 * k)), asymptotic=True, lower=True))

    # A bound for k' chords bounds every larger budget too.
    for kp in range(2, k + 1, 2):
        for b in _upper_for_even(kp, n):
            if kp != k:
                b = Bound(b.formula, b.source + f" (monotone in k, applied at k={k})",
                          b.value, b.asymptotic, b.group)
            rep.upper_bounds.append(b)
    if k >= 3:
        rep.upper_bounds.append(Bound("(2n)^(1/2)+1", "k=3 upper", s + 1, group="k3"))
    return rep


def format_report(rep: BoundsReport) -> str:
    lines = [f"n={rep.n} k={rep.k}  (over connected simple cubic graphs with a given decomposition)"]
    if rep.exact is not None:
        lines.append(f"exact  gamma_{rep.k}({rep.n}) = {rep.exact}")
        return "\n".join(lines)
    for kind, rows in (("lower", rep.lower_bounds), ("upper", rep.upper_bounds)):
        for b in rows:
            tag = "  [asymptotic, O(1) dropped]" if b.asymptotic else ""
            lines.append(f"{kind}  {b.formula} = {b.value:.2f}  -> {b.integer}   {b.source}{tag}")
    for f, why in rep.omitted:
        lines.append(f"omitted  {f}: {why}")
    return "\n".join(lines)
