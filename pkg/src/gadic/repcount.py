"""Counting representations of n as ordered h-tuples of set members.

Two independent routes: an exhaustive window brute force (the oracle, for
small n) and a digit-level dynamic program whose state is the additive
carry plus a per-summand class commitment (scales to arbitrarily large n).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import DigitRep, DigitRangeError, DomainError, GadicSequence
from .basis import BasisSpec, MemberWindow

DEFAULT_ENUMERATION_CAP = 10_000


@dataclass
class RepCountResult:
    ordered_count: int
    zero_allowed: bool
    enumeration: list[tuple[int, ...]] | None = None  # None when over cap


def count_reps_bruteforce(window: MemberWindow, n: int, h: int,
                          zero_allowed: bool = False,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> RepCountResult:
    """Exhaustive ordered-tuple count over a precomputed member window.

    Recursive h-way composition with pruning; the tuple list is dropped
    (set to None) once it exceeds `cap`.
    """
    if n > window.N:
        raise DomainError(f"n={n} exceeds the enumerated window [0, {window.N}]")
    if h < 1:
        raise DomainError(f"need h >= 1, got {h}")
    members = window.members
    member_set = window.member_set
    pool = ([0] + members) if zero_allowed else members
    last_ok = (lambda r: r == 0 or r in member_set) if zero_allowed \
        else (lambda r: r in member_set)

    count = 0
    tuples: list[tuple[int, ...]] | None = []
    prefix: list[int] = []

    def rec(slots: int, rem: int):
        nonlocal count, tuples
        if slots == 1:
            if last_ok(rem):
                count += 1
                if tuples is not None:
                    if len(tuples) < cap:
                        tuples.append(tuple(prefix) + (rem,))
                    else:
                        tuples = None
            return
        min_rest = 0 if zero_allowed else slots - 1
        for m in pool:
            if m > rem - min_rest:
                break
            prefix.append(m)
            rec(slots - 1, rem - m)
            prefix.pop()

    rec(h, n)
    return RepCountResult(ordered_count=count, zero_allowed=zero_allowed,
                          enumeration=tuples)


def hfold_sumset_window(mask: int, N: int, h: int) -> int:
    """Iterated shift-OR: bit n of the result is set iff n <= N is a sum of
    exactly h set bits (with repetition) of `mask`."""
    if h < 1:
        raise DomainError(f"need h >= 1, got {h}")
    clip = (1 << (N + 1)) - 1
    mask &= clip
    shifts = []
    m = mask
    while m:
        low = m & -m
        shifts.append(low.bit_length() - 1)
        m ^= low
    acc = mask
    for _ in range(h - 1):
        nxt = 0
        for s in shifts:
            nxt |= acc << s
        acc = nxt & clip
    return acc


def mask_to_set(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return out


def count_reps_digitdp(spec: BasisSpec, n: DigitRep, h: int,
                       zero_allowed: bool = False) -> RepCountResult:
    """Exact ordered representation count via a carry/commitment DP.

    Processes digit positions upward; at each position every summand takes
    a digit in [0, d-1], and a nonzero digit commits its summand to the
    position's class (a committed summand never changes class).  A state is
    (carry, per-summand status); the carry never exceeds h.  Accepts when
    the carry has run out and, unless zero_allowed, every summand committed.
    """
    if h < 2:
        raise DomainError(f"need h >= 2, got {h}")
    seq, part = spec.seq, spec.partition
    EMPTY = -1

    @lru_cache(maxsize=None)
    def transitions(d: int, c: int, statuses: tuple[int, ...]):
        """All digit assignments at a (quotient d, class c) position:
        list of (new_statuses, digit_sum, multiplicity)."""
        acc: dict[tuple[tuple[int, ...], int], int] = {}

        def rec(s: int, cur: tuple[int, ...], total: int):
            if s == len(statuses):
                key = (cur, total)
                acc[key] = acc.get(key, 0) + 1
                return
            st = statuses[s]
            rec(s + 1, cur + (st,), total)  # digit 0
            if st == EMPTY or st == c:
                for x in range(1, d):
                    rec(s + 1, cur + (c,), total + x)

        rec(0, (), 0)
        return [(sts, tot, mult) for (sts, tot), mult in acc.items()]

    start = (0, (EMPTY,) * h)
    states: dict[tuple[int, tuple[int, ...]], int] = {start: 1}
    top = n.max_index() if not n.is_zero() else -1
    j = 0
    while states:
        if j > top and all(carry == 0 for carry, _ in states):
            break
        d = seq.quotient(j + 1)
        r = n.digit(j)
        if j <= top:
            c = part.color(j)
            new_states: dict[tuple[int, tuple[int, ...]], int] = {}
            for (carry, statuses), ways in states.items():
                for sts, tot, mult in transitions(d, c, statuses):
                    total = tot + carry
                    if total % d != r:
                        continue
                    carry_out = total // d
                    assert carry_out <= h, "carry bound exceeded"
                    key = (carry_out, sts)
                    new_states[key] = new_states.get(key, 0) + ways * mult
            states = new_states
        else:
            # past the top support index every summand digit is 0
            # (a summand larger than n cannot occur); only carries propagate
            new_states = {}
            for (carry, statuses), ways in states.items():
                if carry % d != 0:
                    continue
                key = (carry // d, statuses)
                new_states[key] = new_states.get(key, 0) + ways
            states = new_states
        j += 1

    count = 0
    for (carry, statuses), ways in states.items():
        if carry != 0:
            continue
        if zero_allowed or all(st != EMPTY for st in statuses):
            count += ways
    return RepCountResult(ordered_count=count, zero_allowed=zero_allowed,
                          enumeration=None)


@dataclass
class PrefixInequalityReport:
    """Per-cutoff comparison of a canonical expansion against an alternate
    decomposition of the same integer."""

    n: int
    cutoffs: list[int]            # u_k for k = 1..p
    lhs: list[int]                # canonical partial sums
    rhs: list[int]                # alternate partial sums
    holds: list[bool]

    @property
    def all_hold(self) -> bool:
        return all(self.holds)


def check_prefix_inequality(seq: GadicSequence, canonical: DigitRep,
                            alt: list[tuple[int, int]]) -> PrefixInequalityReport:
    """For every canonical support index u_k, check that the canonical
    partial sum up to u_k never exceeds the alternate decomposition's
    partial sum over terms with index <= u_k.

    `alt` is a list of (index v_j, coefficient y_j) pairs, indices not
    necessarily distinct; both sides must evaluate to the same integer.
    """
    if canonical.is_zero():
        raise DomainError("canonical representation must be of a positive integer")
    for v, y in alt:
        d = seq.quotient(v + 1)
        if not 1 <= y <= d - 1:
            raise DigitRangeError(f"alternate coefficient {y} at index {v} "
                                  f"outside [1, {d - 1}]")
    n = seq.evaluate(canonical)
    alt_total = sum(y * seq.value(v) for v, y in alt)
    if alt_total != n:
        raise DomainError(f"decompositions disagree: canonical={n}, alternate={alt_total}")

    support = canonical.support
    cutoffs, lhs_list, rhs_list, holds = [], [], [], []
    lhs = 0
    for u_k in support:
        lhs += canonical.digit(u_k) * seq.value(u_k)
        rhs = sum(y * seq.value(v) for v, y in alt if v <= u_k)
        cutoffs.append(u_k)
        lhs_list.append(lhs)
        rhs_list.append(rhs)
        holds.append(lhs <= rhs)
    return PrefixInequalityReport(n=n, cutoffs=cutoffs, lhs=lhs_list,
                                  rhs=rhs_list, holds=holds)
