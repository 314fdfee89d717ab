"""Membership and window enumeration for monochromatic-support sets.

A positive integer belongs to the constructed set exactly when the support
of its canonical digit expansion is nonempty and single-colored; membership
is decided from the canonical representation, never by enumerating subsets.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import DigitRep, DomainError, GadicSequence
from .partition import PartitionSpec

# Window bit arrays are plain ints (bit n set <=> n in the set); this caps
# the largest window we will materialize.
DEFAULT_WINDOW_LIMIT = 1 << 27


class WindowTooLargeError(MemoryError):
    """Requested enumeration window exceeds the configured budget."""


@dataclass
class BasisSpec:
    """Full configuration: scale sequence, coloring, and order h."""

    seq: GadicSequence
    partition: PartitionSpec

    @property
    def h(self) -> int:
        return self.partition.h

    def classify(self, n: int) -> int | None:
        """Class index of n, or None when n is not a member.

        n is a member of class i iff its support is nonempty and entirely
        colored i; 0 (empty support) is never a member.
        """
        if n < 0:
            raise DomainError(f"classify expects n >= 0, got {n}")
        if n == 0:
            return None
        color = self.partition.color
        seq = self.seq
        c = None
        j = 0
        while n > 0:
            n, x = divmod(n, seq.quotient(j + 1))
            if x:
                cj = color(j)
                if c is None:
                    c = cj
                elif cj != c:
                    return None
            j += 1
        return c

    def classify_rep(self, rep: DigitRep) -> int | None:
        """classify() on an already computed digit map."""
        if rep.is_zero():
            return None
        colors = {self.partition.color(j) for j in rep.digits}
        return colors.pop() if len(colors) == 1 else None

    def enumerate(self, N: int, limit: int = DEFAULT_WINDOW_LIMIT) -> "MemberWindow":
        """All members in [1, N], as a sorted list plus a bit array."""
        if N < 1:
            raise DomainError(f"window bound must be >= 1, got {N}")
        if N > limit:
            raise WindowTooLargeError(f"window bound {N} exceeds limit {limit}")
        members = []
        mask = 0
        classify = self.classify
        for n in range(1, N + 1):
            if classify(n) is not None:
                members.append(n)
                mask |= 1 << n
        return MemberWindow(N=N, members=members, mask=mask)

    def serialize(self) -> str:
        return f"{self.seq.serialize()}|{self.partition.serialize()}"


@dataclass
class MemberWindow:
    """Members of the set restricted to [0, N]; list and bit array agree."""

    N: int
    members: list[int]
    mask: int
    member_set: frozenset[int] = field(init=False)

    def __post_init__(self):
        self.member_set = frozenset(self.members)

    def __contains__(self, n: int) -> bool:
        return n in self.member_set

    def to_text(self) -> str:
        return "\n".join(str(m) for m in self.members) + "\n"

    def to_bitdump(self) -> bytes:
        """Raw little-endian bit dump, N+1 bits (bit n = byte n//8, bit n%8)."""
        return self.mask.to_bytes((self.N + 8) // 8, "little")


def members_bruteforce(spec: BasisSpec, N: int) -> list[int]:
    """Independent membership oracle: enumerate every nonempty monochromatic
    support with every in-range digit choice, keeping values <= N.

    Exponential in the index bound; for testing only.
    """
    seq, part = spec.seq, spec.partition
    # indices whose scale value can still contribute
    J = 0
    while seq.value(J + 1) <= N:
        J += 1
    out: set[int] = set()

    def extend(i: int, j: int, acc: int):
        # acc uses only indices < j, all colored i
        for jj in range(j, J + 1):
            if part.color(jj) != i:
                continue
            g = seq.value(jj)
            for x in range(1, seq.quotient(jj + 1)):
                v = acc + x * g
                if v > N:
                    break
                out.add(v)
                extend(i, jj + 1, v)

    for i in range(part.h):
        extend(i, 0, 0)
    return sorted(out)
