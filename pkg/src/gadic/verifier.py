"""Window verification of the sumset claims and witness certification.

The sumset checks are finite-window, exact computations.  Minimality is
certified per removed element a: the constructed witness n has exactly as
many ordered h-representations as the permutations of its construction
multiset, and a is in that multiset, so every representation of n uses a.
"""
from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass, field

from .core import DigitRep, DomainError
from .basis import BasisSpec, MemberWindow
from .partition import HypothesisViolatedError, IntervalFamilies, \
    detect_interval_families, min_t
from .repcount import count_reps_bruteforce, count_reps_digitdp, \
    hfold_sumset_window

ENGINE_VERSION = "gadic 0.1.0"


@dataclass
class BasisReport:
    """Outcome of one window sumset check."""

    spec_text: str
    N: int
    h: int
    gaps: list[int]          # values in [0, N] missing from the h-fold sumset
    passed: bool
    elapsed: float
    label: str = "order-h sumset window"


@dataclass
class WitnessCertificate:
    spec_hash: str
    t: int
    removed: int
    removed_rep: DigitRep
    removed_class: int
    M0: int
    chosen_Ms: dict[int, int]           # class index -> M_i (classes != removed_class)
    summands: dict[int, DigitRep]       # class index -> digit map, removed_class included
    n_rep: DigitRep
    n_value: int
    expected_count: int | None = None
    measured_count: int | None = None
    verdict: str = "unverified"
    engine: str = ENGINE_VERSION

    def multiset(self, spec: BasisSpec) -> list[int]:
        return sorted(spec.seq.evaluate(rep) for rep in self.summands.values())

    def filename(self) -> str:
        ms = "-".join(str(self.chosen_Ms[i]) for i in sorted(self.chosen_Ms))
        return f"cert_{self.removed}_{ms}.txt"

    def render(self, spec: BasisSpec) -> str:
        lines = [
            f"config: {spec.serialize()}",
            f"config-hash: {self.spec_hash}",
            "theorem: minimality-witness",
            f"t: {self.t}",
            f"removed: {self.removed}",
            f"removed-digits: {self.removed_rep.serialize()}",
            f"class: {self.removed_class}",
            f"M0: {self.M0}",
        ]
        for i in sorted(self.chosen_Ms):
            lines.append(f"M[{i}]: {self.chosen_Ms[i]}")
        for i in sorted(self.summands):
            lines.append(f"summand[{i}]: {self.summands[i].serialize()}")
        lines += [
            f"n-digits: {self.n_rep.serialize()}",
            f"n: {self.n_value}",
            f"expected-count: {self.expected_count}",
            f"measured-count: {self.measured_count}",
            f"verdict: {self.verdict}",
            f"engine: {self.engine}",
        ]
        return "\n".join(lines) + "\n"


def spec_hash(spec: BasisSpec, t: int) -> str:
    return hashlib.sha256(f"{spec.serialize()}|t={t}".encode()).hexdigest()[:16]


def verify_theorem1(spec: BasisSpec, N: int,
                    window: MemberWindow | None = None) -> BasisReport:
    """Pass iff the h-fold sumset over [0, N] misses exactly [0, h-1]."""
    if N < spec.h:
        raise DomainError(f"window bound {N} below order {spec.h}")
    t0 = time.perf_counter()
    if window is None:
        window = spec.enumerate(N)
    s = hfold_sumset_window(window.mask, N, spec.h)
    gaps = [n for n in range(N + 1) if not (s >> n) & 1]
    return BasisReport(spec_text=spec.serialize(), N=N, h=spec.h, gaps=gaps,
                       passed=(gaps == list(range(spec.h))),
                       elapsed=time.perf_counter() - t0,
                       label="asymptotic basis window")


def verify_theorem2(spec: BasisSpec, N: int,
                    window: MemberWindow | None = None
                    ) -> tuple[BasisReport, BasisReport]:
    """(a) with 0 adjoined the h-fold sumset covers [0, N] entirely;
    (b) removing 0 again restores exactly the order-h gap set."""
    if N < spec.h:
        raise DomainError(f"window bound {N} below order {spec.h}")
    t0 = time.perf_counter()
    if window is None:
        window = spec.enumerate(N)
    s = hfold_sumset_window(window.mask | 1, N, spec.h)
    gaps = [n for n in range(N + 1) if not (s >> n) & 1]
    with_zero = BasisReport(spec_text=spec.serialize(), N=N, h=spec.h,
                            gaps=gaps, passed=(gaps == []),
                            elapsed=time.perf_counter() - t0,
                            label="basis with 0 adjoined")
    return with_zero, verify_theorem1(spec, N, window)


def construct_witness(spec: BasisSpec, t: int, a: int,
                      fams: IntervalFamilies | None = None,
                      choices: dict[int, int] | None = None,
                      override: bool = False) -> WitnessCertificate:
    """Build the (unverified) witness for removing a.

    For every class i other than a's class, pick the smallest admissible
    window endpoint M_i >= M0 + t (or take it from `choices`) and form the
    summand whose digits are maximal on class-i indices below M0 plus a
    single 1 at M_i.  All supports are pairwise disjoint, so the witness
    digits are the plain union (no carries).
    """
    h = spec.h
    if t < min_t(h) and not override:
        raise HypothesisViolatedError(
            f"t={t} below threshold {min_t(h)} for h={h} (pass override to force)")
    i0 = spec.classify(a)
    if i0 is None:
        raise DomainError(f"{a} is not a member of the constructed set")
    if fams is None:
        fams = detect_interval_families(spec.partition, t)
    rep_a = spec.seq.represent(a)
    M0 = rep_a.max_index()

    seq, part = spec.seq, spec.partition
    chosen: dict[int, int] = {}
    summands: dict[int, DigitRep] = {i0: rep_a}
    for i in range(h):
        if i == i0:
            continue
        if choices and i in choices:
            Mi = choices[i]
            if Mi < M0 + t or not fams.contains(i, Mi):
                raise HypothesisViolatedError(
                    f"chosen M={Mi} for class {i} is not an admissible endpoint")
        else:
            Mi = fams.nth_member(i, M0 + t)
        chosen[i] = Mi
        digits = {j: seq.quotient(j + 1) - 1
                  for j in range(M0) if part.color(j) == i}
        digits[Mi] = 1
        summands[i] = DigitRep(digits)

    merged: dict[int, int] = {}
    for rep in summands.values():
        for j, x in rep.digits.items():
            assert j not in merged, "summand supports must be pairwise disjoint"
            merged[j] = x
    n_rep = DigitRep(merged)
    n_value = seq.evaluate(n_rep)
    assert n_value == sum(seq.evaluate(rep) for rep in summands.values())

    return WitnessCertificate(spec_hash=spec_hash(spec, t), t=t, removed=a,
                              removed_rep=rep_a, removed_class=i0, M0=M0,
                              chosen_Ms=chosen, summands=summands,
                              n_rep=n_rep, n_value=n_value)


def verify_witness(spec: BasisSpec, cert: WitnessCertificate) -> WitnessCertificate:
    """Fill in counts and verdict.

    Expected ordered count is the number of permutations of the construction
    multiset; measured is the exact DP count.  Equality means every ordered
    h-representation of n is a permutation of the constructed one, and since
    the removed element is in the multiset, n has no representation over the
    set with a removed.
    """
    values = cert.multiset(spec)
    mults: dict[int, int] = {}
    for v in values:
        mults[v] = mults.get(v, 0) + 1
    expected = math.factorial(spec.h)
    for m in mults.values():
        expected //= math.factorial(m)
    measured = count_reps_digitdp(spec, cert.n_rep, spec.h,
                                  zero_allowed=False).ordered_count
    if measured < expected:
        raise RuntimeError(
            f"counting engine bug: measured {measured} < expected {expected} "
            f"but the constructed representation exists")
    cert.expected_count = expected
    cert.measured_count = measured
    cert.verdict = "certified" if (measured == expected
                                   and cert.removed in values) else "failed"
    return cert


def cross_check_witness(spec: BasisSpec, cert: WitnessCertificate,
                        window: MemberWindow) -> bool:
    """Independent brute-force confirmation for window-sized witnesses:
    the tuple list is exactly the permutations of the construction multiset,
    and the count over the set with a removed is zero."""
    n = cert.n_value
    if n > window.N:
        raise DomainError(f"witness {n} exceeds window [0, {window.N}]")
    res = count_reps_bruteforce(window, n, spec.h)
    expected_tuples = sorted(set(_permutations(cert.multiset(spec))))
    if res.enumeration is None or sorted(res.enumeration) != expected_tuples:
        return False
    reduced = MemberWindow(N=window.N,
                           members=[m for m in window.members if m != cert.removed],
                           mask=window.mask & ~(1 << cert.removed))
    return count_reps_bruteforce(reduced, n, spec.h).ordered_count == 0


def _permutations(values: list[int]) -> list[tuple[int, ...]]:
    import itertools
    return list(itertools.permutations(values))


@dataclass
class MinimalityBatch:
    spec_text: str
    t: int
    K: int
    W: int
    theorem1: BasisReport
    certificates: list[WitnessCertificate] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.theorem1.passed and bool(self.certificates)
                and all(c.verdict == "certified" for c in self.certificates))


def verify_minimality(spec: BasisSpec, t: int, K: int, W: int,
                      override: bool = False,
                      precheck_window: int = 2000) -> MinimalityBatch:
    """Certify the first K members with W witnesses each.

    The W witnesses per member use the W smallest admissible endpoint
    choices, shifted in lockstep across classes; distinct choices give
    strictly larger witnesses, exhibiting infinitude on a finite budget.
    """
    h = spec.h
    if t < min_t(h) and not override:
        raise HypothesisViolatedError(
            f"t={t} below threshold {min_t(h)} for h={h} (pass override to force)")
    fams = detect_interval_families(spec.partition, t)
    for i in range(h):
        if not fams.is_infinite(i):
            raise HypothesisViolatedError(
                f"class {i} has no periodic t-window (empty interval family)")

    report1 = verify_theorem1(spec, precheck_window)

    N = 64
    while True:
        window = spec.enumerate(N)
        if len(window.members) >= K:
            break
        N *= 4
    members = window.members[:K]

    batch = MinimalityBatch(spec_text=spec.serialize(), t=t, K=K, W=W,
                            theorem1=report1)
    for a in members:
        i0 = spec.classify(a)
        M0 = spec.seq.leading_index(a)
        gens = {i: fams.members_from(i, M0 + t)
                for i in range(h) if i != i0}
        for _ in range(W):
            choices = {i: next(g) for i, g in gens.items()}
            cert = construct_witness(spec, t, a, fams=fams, choices=choices,
                                     override=override)
            batch.certificates.append(verify_witness(spec, cert))
    return batch


def check_lemma1(seq, samples: int = 100_000, max_converse_index: int = 12,
                 rng=None) -> tuple[bool, str | None]:
    """Leading-index bound suite: g_M <= n < g_{M+1} with M the top support
    index, over a deterministic small range plus random 256-bit integers,
    and the converse per index up to max_converse_index.

    Returns (passed, first counterexample description or None).
    """
    import random
    rng = rng or random.Random(0)
    small = min(samples // 2, 50_000)
    ns = list(range(1, small + 1))
    ns += [rng.getrandbits(256) | 1 for _ in range(samples - small)]
    for n in ns:
        M = seq.leading_index(n)
        if not seq.value(M) <= n < seq.value(M + 1):
            return False, f"n={n}: M={M} but bounds fail"
        rep = seq.represent(n)
        if rep.max_index() != M:
            return False, f"n={n}: leading_index={M} != max support {rep.max_index()}"
    for M in range(max_converse_index + 1):
        lo, hi = seq.value(M), seq.value(M + 1)
        if hi - lo <= 200:
            candidates = range(lo, hi)
        else:
            candidates = [rng.randrange(lo, hi) for _ in range(200)]
        for n in candidates:
            if seq.leading_index(n) != M:
                return False, f"n={n} in [g_{M}, g_{M + 1}) but leading_index != {M}"
    return True, None


def random_alternate_decomposition(seq, n: int, rng,
                                   max_steps: int = 12) -> list[tuple[int, int]]:
    """Split the canonical digits of n downward into a valid alternate
    decomposition: coefficient splits, and radix splits using
    g_v = g_{v-1} + (d_v - 1) g_{v-1}."""
    terms = [[j, x] for j, x in seq.represent(n).items()]
    for _ in range(rng.randrange(max_steps + 1)):
        k = rng.randrange(len(terms))
        v, y = terms[k]
        if y >= 2 and rng.random() < 0.5:
            s = rng.randrange(1, y)
            terms[k][1] = y - s
            terms.append([v, s])
        elif v >= 1:
            d = seq.quotient(v)
            if y == 1:
                terms.pop(k)
            else:
                terms[k][1] = y - 1
            terms.append([v - 1, 1])
            terms.append([v - 1, d - 1])
    rng.shuffle(terms)
    return [(v, y) for v, y in terms]


def check_lemma2(seq, samples: int = 10_000, n_bound: int = 10 ** 9,
                 rng=None) -> tuple[bool, str | None]:
    """Prefix-inequality suite over randomly split decompositions."""
    import random
    from .repcount import check_prefix_inequality
    rng = rng or random.Random(1)
    for _ in range(samples):
        n = rng.randrange(1, n_bound)
        alt = random_alternate_decomposition(seq, n, rng)
        report = check_prefix_inequality(seq, seq.represent(n), alt)
        if not report.all_hold:
            return False, f"n={n}, alt={alt}: inequality fails at some cutoff"
    return True, None


@dataclass
class RemovabilityRow:
    removed: int
    covered_from: int | None     # smallest bound with [bound, N] covered
    miss_count: int
    evidence: str                # window evidence only, never a proof


def removability_scan(spec: BasisSpec, N: int,
                      elem_bound: int | None = None) -> list[RemovabilityRow]:
    """For each a in {0} union the members up to elem_bound, recompute the
    h-fold window sumset of the 0-adjoined set without a.  Output is labeled
    evidence: a finite window cannot settle an asymptotic claim."""
    window = spec.enumerate(N)
    mask0 = window.mask | 1
    if elem_bound is None:
        elem_bound = min(N, 64)
    elements = [0] + [m for m in window.members if m <= elem_bound]
    rows = []
    for a in elements:
        s = hfold_sumset_window(mask0 & ~(1 << a), N, spec.h)
        misses = [n for n in range(N + 1) if not (s >> n) & 1]
        if misses:
            covered_from = misses[-1] + 1 if misses[-1] < N else None
        else:
            covered_from = 0
        if covered_from is not None:
            evidence = f"evidence: covers [{covered_from}, {N}] on window"
        else:
            evidence = "evidence: misses persist up to the window bound"
        rows.append(RemovabilityRow(removed=a, covered_from=covered_from,
                                    miss_count=len(misses), evidence=evidence))
    return rows
