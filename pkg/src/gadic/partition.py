"""Eventually periodic colorings of the nonnegative integers.

A partition into h classes is a total coloring function given by a finite
prefix of colors followed by a repeating pattern.  The t-interval machinery
finds, per class i, the right endpoints M of monochromatic windows
[M - t + 1, M]; families are stored as residue classes modulo the coloring
period (a genuine witness of infinitude) plus finitely many prefix members.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError


class HypothesisViolatedError(RuntimeError):
    """A construction hypothesis fails (e.g. an empty interval family)."""


class PartitionSpec:
    """Coloring of the nonnegative integers into classes 0..h-1."""

    def __init__(self, h: int, period_colors: list[int],
                 prefix_colors: list[int] | None = None):
        prefix_colors = list(prefix_colors) if prefix_colors else []
        period_colors = list(period_colors)
        if h < 2:
            raise ValueError(f"need at least 2 classes, got h={h}")
        if not period_colors:
            raise ValueError("period_colors must be nonempty")
        for c in prefix_colors + period_colors:
            if not 0 <= c < h:
                raise ValueError(f"color {c} outside [0, {h - 1}]")
        missing = set(range(h)) - set(period_colors)
        if missing:
            raise ValueError(
                f"classes {sorted(missing)} absent from the period; "
                "every class must recur infinitely often")
        self.h = h
        self.prefix_colors = prefix_colors
        self.period_colors = period_colors

    def color(self, j: int) -> int:
        if j < 0:
            raise DomainError(f"color index must be >= 0, got {j}")
        if j < len(self.prefix_colors):
            return self.prefix_colors[j]
        return self.period_colors[(j - len(self.prefix_colors)) % len(self.period_colors)]

    def serialize(self) -> str:
        return (f"h={self.h};prefix={self.prefix_colors!r};"
                f"period={self.period_colors!r}").replace(" ", "")

    @classmethod
    def parse(cls, text: str) -> "PartitionSpec":
        from .core import _parse_int_list
        parts = dict(p.split("=", 1) for p in text.strip().split(";"))
        return cls(h=int(parts["h"]),
                   prefix_colors=_parse_int_list(parts["prefix"]),
                   period_colors=_parse_int_list(parts["period"]))

    def __repr__(self) -> str:
        return (f"PartitionSpec(h={self.h}, prefix={self.prefix_colors}, "
                f"period={self.period_colors})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartitionSpec):
            return NotImplemented
        return (self.h == other.h and self.prefix_colors == other.prefix_colors
                and self.period_colors == other.period_colors)


def min_t(h: int) -> int:
    """Smallest t with 2**(t-1) >= h."""
    if h < 2:
        raise DomainError(f"order must be >= 2, got h={h}")
    t = 1
    while 2 ** (t - 1) < h:
        t += 1
    return t


@dataclass
class IntervalFamilies:
    """Per class, the (possibly empty) set of window right-endpoints.

    For M >= threshold the window [M-t+1, M] lies entirely in the periodic
    region, so membership depends only on M mod modulus; smaller endpoints
    whose window touches the prefix are listed explicitly.
    """

    t: int
    modulus: int
    threshold: int
    residues: list[set[int]]     # per class, residues mod `modulus`
    prefix_members: list[list[int]]  # per class, sorted members < threshold

    def is_infinite(self, i: int) -> bool:
        return bool(self.residues[i])

    def is_empty(self, i: int) -> bool:
        return not self.residues[i] and not self.prefix_members[i]

    def contains(self, i: int, M: int) -> bool:
        if M >= self.threshold:
            return M % self.modulus in self.residues[i]
        return M in self.prefix_members[i]

    def nth_member(self, i: int, lower: int) -> int:
        """Smallest family member M of class i with M >= lower."""
        candidates = [M for M in self.prefix_members[i] if M >= lower]
        start = max(lower, self.threshold)
        for r in self.residues[i]:
            # smallest M >= start with M % modulus == r
            M = start + (r - start) % self.modulus
            candidates.append(M)
        if not candidates:
            raise HypothesisViolatedError(
                f"class {i} has no window endpoint >= {lower}")
        return min(candidates)

    def members_from(self, i: int, lower: int):
        """Yield family members of class i >= lower in increasing order."""
        M = lower
        while True:
            M = self.nth_member(i, M)
            yield M
            M += 1

    def serialize(self) -> str:
        lines = []
        for i in range(len(self.residues)):
            res = sorted(self.residues[i])
            lines.append(f"class={i}: residues {{{','.join(map(str, res))}}} "
                         f"mod {self.modulus}; prefix-members {self.prefix_members[i]!r}")
        return "\n".join(lines)


def detect_interval_families(spec: PartitionSpec, t: int) -> IntervalFamilies:
    """Find all M whose trailing t-window is monochromatic, per class.

    Empty families are a legitimate result: they mean the interval
    hypothesis fails for this (partition, t).
    """
    if t < 1:
        raise DomainError(f"window length must be >= 1, got t={t}")
    L = len(spec.prefix_colors)
    P = len(spec.period_colors)
    # windows ending at M >= threshold lie wholly in the periodic region
    threshold = L + t - 1
    residues: list[set[int]] = [set() for _ in range(spec.h)]
    prefix_members: list[list[int]] = [[] for _ in range(spec.h)]

    def mono_class(M: int) -> int | None:
        c = spec.color(M)
        for j in range(M - t + 1, M):
            if spec.color(j) != c:
                return None
        return c

    for M in range(threshold, threshold + P):
        c = mono_class(M)
        if c is not None:
            residues[c].add(M % P)
    # endpoints whose window touches the prefix (window must fit in N_0)
    for M in range(t - 1, threshold):
        c = mono_class(M)
        if c is not None:
            prefix_members[c].append(M)
    return IntervalFamilies(t=t, modulus=P, threshold=threshold,
                            residues=residues, prefix_members=prefix_members)
