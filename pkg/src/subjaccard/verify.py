"""Exhaustive and sampled verification of the Jaccard-type inequalities.

Exact specs are checked on integer tables (values scaled by a common
denominator) with cross-multiplication, so no rounding can create or hide a
violation. Approximate specs (entropy) count a violation only when the
margin exceeds ``eps``.

Witnesses are the first violating tuples in ascending mask order of
``(A, B, C)``; sampled checks report them in draw order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import jaccard
from .errors import PrereqFailed
from .report import PropertyReport, Value, ViolationRecord, make_report
from .setcore import EXHAUSTIVE_CAP, SubsetMask, check_cap
from .setfun import (
    DEFAULT_EPS,
    MATERIALIZE_CAP,
    PAIR_CAP,
    NumericValues,
    SetFunctionSpec,
    evaluate,
    is_modular,
    is_monotone,
    is_nonnegative,
    is_submodular_pairwise,
    numeric_values,
    tabulate,
)

TRIPLE_CAP = 8
APPROX_TRIPLE_CAP = 6
DISTANCES = ("cap", "delta")
SAMPLED_KINDS = ("triangle-cap", "triangle-delta", "lemma1", "corollary1", "ordering")

_PREREQ_CHECKS = {
    "nonnegative": is_nonnegative,
    "monotone": is_monotone,
    "submodular": is_submodular_pairwise,
}


def triple_cap(spec: SetFunctionSpec) -> int:
    return TRIPLE_CAP if spec.exact else APPROX_TRIPLE_CAP


def require(spec: SetFunctionSpec, *names: str, eps: float = DEFAULT_EPS) -> dict[str, PropertyReport]:
    """Run the named prerequisite checks; raise :class:`PrereqFailed` if any fails."""
    reports = {name: _PREREQ_CHECKS[name](spec, eps=eps, max_witnesses=1) for name in names}
    failed = [name for name, r in reports.items() if not r.ok]
    if failed:
        raise PrereqFailed(failed, reports)
    return reports


def _widen(arrays, bound: int, degree: int):
    """Switch int64 arrays to Python ints when degree-``degree`` products of
    values up to ``bound`` (times a small factor) could overflow."""
    if any(a.dtype == object for a in arrays) or 4 * (bound + 1) ** degree >= 2**62:
        return [a.astype(object) for a in arrays]
    return arrays


def _hits(mask: np.ndarray) -> np.ndarray:
    return np.flatnonzero(mask)


class _Witnesses:
    def __init__(self, limit: int):
        self.limit = limit
        self.records: list[ViolationRecord] = []
        self.count = 0

    def take(self, idx: np.ndarray, make: Callable[[int], ViolationRecord]) -> None:
        self.count += len(idx)
        for i in idx[: max(0, self.limit - len(self.records))]:
            self.records.append(make(int(i)))


# -- distance tables --------------------------------------------------------


@dataclass(frozen=True)
class DistanceTable:
    """All pairwise distances ``d(A, B)`` indexed ``[A, B]`` by mask.

    Exact tables hold numerator/denominator integer arrays (``den > 0``);
    approximate tables hold float distances in ``num`` and ``den is None``.
    """

    distance: str
    exact: bool
    num: np.ndarray
    den: Optional[np.ndarray]
    bound: int

    def value(self, a: int, b: int) -> Value:
        if self.exact:
            return Fraction(int(self.num[a, b]), int(self.den[a, b]))
        return float(self.num[a, b])


def _distance_parts(distance: str, f, a, b, f_empty, exact: bool, eps: float):
    U = f(a | b)
    if distance == "cap":
        num = U - f(a & b)
    elif distance == "delta":
        num = f(a ^ b) - f_empty
    else:
        raise ValueError(f"unknown distance {distance!r}")
    zero = U == 0 if exact else np.abs(U) <= eps
    if exact:
        return np.where(zero, 0, num), np.where(zero, 1, U)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(zero, 0.0, num / np.where(zero, 1.0, U)), None


def distance_table(spec: SetFunctionSpec, distance: str, *, eps: float = DEFAULT_EPS) -> DistanceTable:
    """Vectorized ``sub_jaccard_cap`` / ``sub_jaccard_delta`` over all pairs (n <= 12)."""
    check_cap(spec.n, PAIR_CAP, "distance table")
    t = tabulate(spec)
    ar = np.arange(1 << spec.n, dtype=np.int64)
    num, den = _distance_parts(
        distance, t.values.__getitem__, ar[:, None], ar[None, :], t.values[0], t.exact, eps
    )
    return DistanceTable(distance, t.exact, num, den, 2 * t.bound)


def standard_distance_table(n: int) -> DistanceTable:
    """``|A ^ B| / |A | B|`` over all pairs, from popcounts alone."""
    check_cap(n, PAIR_CAP, "distance table")
    ar = np.arange(1 << n, dtype=np.int64)
    pop = np.array([m.bit_count() for m in range(1 << n)], dtype=np.int64)
    u = pop[ar[:, None] | ar[None, :]]
    d = pop[ar[:, None] ^ ar[None, :]]
    return DistanceTable("standard", True, d, np.where(u == 0, 1, u), n)


# -- triangle inequality ----------------------------------------------------


def _triangle_scan(table: DistanceTable, ground, eps: float, wit: _Witnesses) -> int:
    N = table.num.shape[0]
    if table.exact:
        num, den = _widen([table.num, table.den], table.bound, 3)
        NT, DT = num.T, den.T
    else:
        D = table.num
        DT = D.T
    for a in range(N):
        if table.exact:
            nab, dab = num[a][:, None], den[a][:, None]  # over B (rows)
            nac, dac = num[a][None, :], den[a][None, :]  # over C (cols)
            lhs = nab * dac * DT
            rhs = (nac * DT + NT * dac) * dab
            bad = _hits(lhs > rhs)
        else:
            bad = _hits(D[a][:, None] - (D[a][None, :] + DT) > eps)
        if len(bad):
            wit.take(bad, lambda i, a=a: _triangle_record(table, ground, a, i // N, i % N))
    return N**3


def _triangle_record(table: DistanceTable, ground, a: int, b: int, c: int) -> ViolationRecord:
    lhs = table.value(a, b)
    rhs = table.value(a, c) + table.value(c, b)
    return ViolationRecord("triangle", _masks(ground, a, b, c), lhs, rhs, lhs - rhs)


def _masks(ground, *bits) -> tuple[SubsetMask, ...]:
    return tuple(SubsetMask(int(m), ground) for m in bits)


def check_triangle(
    spec: SetFunctionSpec, distance: str, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10
) -> PropertyReport:
    """``d(A, B) <= d(A, C) + d(C, B)`` over all ordered triples.

    Requires a nonnegative, monotone oracle. Runs regardless of modularity
    or submodularity, so it doubles as a counterexample hunt.
    """
    start = time.perf_counter()
    check_cap(spec.n, triple_cap(spec), "exhaustive triple check")
    require(spec, "nonnegative", "monotone", eps=eps)
    table = distance_table(spec, distance, eps=eps)
    wit = _Witnesses(max_witnesses)
    checked = _triangle_scan(table, spec.ground, eps, wit)
    return make_report(
        f"triangle-{distance}", checked, wit.records, wit.count, elapsed=time.perf_counter() - start
    )


def check_metric_axioms(
    spec: SetFunctionSpec, distance: str, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10
) -> PropertyReport:
    """Pseudometric axioms: nonnegativity, ``d(A, A) = 0``, symmetry and the
    triangle inequality. Distinct pairs at distance zero are listed in
    ``informational`` (unordered, ``A < B``) and do not count as failures."""
    start = time.perf_counter()
    check_cap(spec.n, triple_cap(spec), "exhaustive triple check")
    require(spec, "nonnegative", "monotone", eps=eps)
    table = distance_table(spec, distance, eps=eps)
    g = spec.ground
    N = 1 << spec.n
    wit = _Witnesses(max_witnesses)
    num = table.num
    zero = lambda i, j: (num[i, j] == 0) if table.exact else (abs(num[i, j]) <= eps)  # noqa: E731

    if table.exact:
        neg = num < 0
        asym = num * table.den.T != num.T * table.den
    else:
        neg = num < -eps
        asym = np.abs(num - num.T) > eps
    for i in _hits(neg):
        a, b = divmod(int(i), N)
        wit.take(np.array([i]), lambda _, a=a, b=b: _pair_record(table, g, a, b, lhs=0, rhs=table.value(a, b)))
    for a in range(N):
        if not zero(a, a):
            wit.take(np.array([a]), lambda _, a=a: _pair_record(table, g, a, a, lhs=table.value(a, a), rhs=0))
    for i in _hits(asym):
        a, b = divmod(int(i), N)
        if a < b:
            x, y = sorted([table.value(a, b), table.value(b, a)])
            wit.take(np.array([i]), lambda _, a=a, b=b, x=x, y=y: ViolationRecord("property", _masks(g, a, b), y, x, y - x))
    checked = _triangle_scan(table, g, eps, wit) + N * N

    informational = []
    count = 0
    for a in range(N):
        for b in range(a + 1, N):
            if zero(a, b):
                count += 1
                if len(informational) < max_witnesses:
                    informational.append(_masks(g, a, b))
    return make_report(
        f"metric-{distance}",
        checked,
        wit.records,
        wit.count,
        informational=informational,
        informational_count=count,
        elapsed=time.perf_counter() - start,
    )


def _pair_record(table, g, a, b, lhs, rhs):
    lhs, rhs = (Fraction(lhs), Fraction(rhs)) if table.exact else (float(lhs), float(rhs))
    return ViolationRecord("property", _masks(g, a, b), lhs, rhs, lhs - rhs)


# -- Lemma-type product inequalities ---------------------------------------


def check_lemma1(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10) -> PropertyReport:
    """``f(A&C) f(B|C) + f(A|C) f(B&C) <= f(C) (f(A) + f(B))`` over all
    ordered triples, for nonnegative monotone submodular ``f``."""
    start = time.perf_counter()
    check_cap(spec.n, triple_cap(spec), "exhaustive triple check")
    require(spec, "nonnegative", "monotone", "submodular", eps=eps)
    t = tabulate(spec)
    F = t.values
    if t.exact:
        (F,) = _widen([F], t.bound, 2)
    N = len(F)
    B = np.arange(N, dtype=np.int64)[:, None]
    C = np.arange(N, dtype=np.int64)[None, :]
    wit = _Witnesses(max_witnesses)
    for a in range(N):
        lhs = F[a & C] * F[B | C] + F[a | C] * F[B & C]
        rhs = F[C] * (F[a] + F[B])
        bad = _hits(_exceeds(lhs, rhs, t.exact, eps))
        if len(bad):
            wit.take(
                bad,
                lambda i, a=a, lhs=lhs, rhs=rhs: _scaled_record(
                    "lemma1", spec.ground, (a, i // N, i % N), lhs.flat[i], rhs.flat[i], t, 2
                ),
            )
    return make_report("lemma1", N**3, wit.records, wit.count, elapsed=time.perf_counter() - start)


def check_corollary1(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10) -> PropertyReport:
    """``f(S&T) f(S|T) <= f(S) f(T)`` over all ordered pairs."""
    start = time.perf_counter()
    check_cap(spec.n, triple_cap(spec), "exhaustive check")
    require(spec, "nonnegative", "monotone", "submodular", eps=eps)
    t = tabulate(spec)
    F = t.values
    if t.exact:
        (F,) = _widen([F], t.bound, 2)
    N = len(F)
    S = np.arange(N, dtype=np.int64)[:, None]
    T = np.arange(N, dtype=np.int64)[None, :]
    lhs = F[S & T] * F[S | T]
    rhs = F[S] * F[T]
    wit = _Witnesses(max_witnesses)
    wit.take(
        _hits(_exceeds(lhs, rhs, t.exact, eps)),
        lambda i: _scaled_record("corollary1", spec.ground, divmod(i, N), lhs.flat[i], rhs.flat[i], t, 2),
    )
    return make_report("corollary1", N * N, wit.records, wit.count, elapsed=time.perf_counter() - start)


def _exceeds(lhs, rhs, exact: bool, eps: float) -> np.ndarray:
    return lhs > rhs if exact else lhs - rhs > eps


def _scaled_record(kind, ground, bits, lhs, rhs, t: NumericValues, degree: int) -> ViolationRecord:
    if t.exact:
        lv, rv = Fraction(int(lhs), t.scale**degree), Fraction(int(rhs), t.scale**degree)
    else:
        lv, rv = float(lhs), float(rhs)
    return ViolationRecord(kind, _masks(ground, *bits), lv, rv, lv - rv)


# -- ordering ----------------------------------------------------------------


def check_ordering(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10) -> PropertyReport:
    """``0 <= cap <= delta <= 1`` on all ordered pairs, plus ``cap == delta``
    when the spec is modular.

    Per pair the sub-inequalities are tested in that order; each witness
    records its own ``lhs <= rhs`` instance.
    """
    start = time.perf_counter()
    check_cap(spec.n, PAIR_CAP, "pairwise check")
    require(spec, "nonnegative", "monotone", "submodular", eps=eps)
    modular = is_modular(spec, eps=eps, max_witnesses=1).ok
    cap = distance_table(spec, "cap", eps=eps)
    delta = distance_table(spec, "delta", eps=eps)
    N = 1 << spec.n
    if cap.exact:
        # both tables share the denominator f(A | B) (or 1 when it vanishes)
        nc, nd, den = cap.num, delta.num, cap.den
        conds = [nc < 0, nc > nd, nd > den]
        if modular:
            conds.append(nc != nd)
    else:
        nc, nd = cap.num, delta.num
        conds = [nc < -eps, nc - nd > eps, nd - 1 > eps]
        if modular:
            conds.append(np.abs(nc - nd) > eps)
    wit = _Witnesses(max_witnesses)
    bad = np.stack(conds, axis=-1)  # [A, B, condition]
    k = len(conds)

    def make(i):
        a, rest = divmod(i, N * k)
        b, which = divmod(rest, k)
        cv, dv = cap.value(a, b), delta.value(a, b)
        one = Fraction(1) if cap.exact else 1.0
        lhs, rhs = [(0 * one, cv), (cv, dv), (dv, one), tuple(sorted([cv, dv], reverse=True))][which]
        return ViolationRecord("ordering", _masks(spec.ground, a, b), lhs, rhs, lhs - rhs)

    wit.take(_hits(bad), make)
    return make_report("ordering", N * N, wit.records, wit.count, elapsed=time.perf_counter() - start)


# -- counterexample search --------------------------------------------------


def find_cap_counterexample(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS) -> Optional[ViolationRecord]:
    """First pair of non-empty, incomparable sets with
    ``f(A) = f(B) = f(A|B) > f(A&B)``, returned as the cap-distance triangle
    violation on ``(A, B, A|B)``; ``None`` if no such pair exists."""
    check_cap(spec.n, PAIR_CAP, "pairwise search")
    require(spec, "nonnegative", "monotone", "submodular", eps=eps)
    t = tabulate(spec)
    F = t.values
    N = len(F)
    ar = np.arange(N, dtype=np.int64)
    same = (lambda x, y: x == y) if t.exact else (lambda x, y: np.abs(x - y) <= eps)
    for a in range(1, N):
        i = a & ar
        ok = (ar != 0) & (i != a) & (i != ar)
        ok &= same(F[ar], F[a]) & same(F[a | ar], F[a])
        ok &= (F[a] > F[i]) if t.exact else (F[a] - F[i] > eps)
        hits = _hits(ok)
        if len(hits):
            g = spec.ground
            A, B = g.mask(a), g.mask(int(hits[0]))
            C = A | B
            lhs = jaccard.sub_jaccard_cap(spec, A, B, eps=eps)
            rhs = jaccard.sub_jaccard_cap(spec, A, C, eps=eps) + jaccard.sub_jaccard_cap(spec, C, B, eps=eps)
            return ViolationRecord("triangle", (A, B, C), lhs, rhs, lhs - rhs)
    return None


# -- sampling ----------------------------------------------------------------


def _sampled_chunk(kind, f, A, B, C, f_empty, exact, eps):
    """Returns (violation mask, lhs, rhs, denominator-or-None) per row."""
    if kind.startswith("triangle"):
        distance = kind.split("-", 1)[1]
        nab, dab = _distance_parts(distance, f, A, B, f_empty, exact, eps)
        nac, dac = _distance_parts(distance, f, A, C, f_empty, exact, eps)
        ncb, dcb = _distance_parts(distance, f, C, B, f_empty, exact, eps)
        if exact:
            lhs = nab * dac * dcb
            rhs = (nac * dcb + ncb * dac) * dab
            return lhs > rhs
        return nab - (nac + ncb) > eps
    if kind == "lemma1":
        lhs = f(A & C) * f(B | C) + f(A | C) * f(B & C)
        rhs = f(C) * (f(A) + f(B))
    elif kind == "corollary1":
        lhs = f(A & B) * f(A | B)
        rhs = f(A) * f(B)
    elif kind == "ordering":
        U = f(A | B)
        nc = U - f(A & B)
        nd = f(A ^ B) - f_empty
        zero = U == 0 if exact else np.abs(U) <= eps
        if exact:
            return ~zero & ((nc < 0) | (nc > nd) | (nd > U))
        with np.errstate(divide="ignore", invalid="ignore"):
            c, d = nc / U, nd / U
        return ~zero & ((c < -eps) | (c - d > eps) | (d - 1 > eps))
    else:
        raise ValueError(f"unknown sampled check {kind!r}")
    return _exceeds(lhs, rhs, exact, eps)


def sampled_check(
    spec: SetFunctionSpec,
    kind: str,
    triples: int,
    seed: int,
    *,
    eps: float = DEFAULT_EPS,
    max_witnesses: int = 10,
    include: Sequence[Sequence[SubsetMask]] = (),
    chunk: int = 1 << 16,
) -> PropertyReport:
    """Check ``kind`` on ``triples`` uniformly random ``(A, B, C)`` (n <= 20).

    Subsets are low ``n`` bits of random 62-bit words from numpy's PCG64
    seeded with ``seed``; pair-based kinds use ``(A, B)``. Tuples in
    ``include`` are checked first. Prerequisites are not verified here.
    Witness values are recomputed through the scalar oracle.
    """
    start = time.perf_counter()
    if kind not in SAMPLED_KINDS:
        raise ValueError(f"unknown sampled check {kind!r}; expected one of {SAMPLED_KINDS}")
    check_cap(spec.n, EXHAUSTIVE_CAP, "sampled check")
    n = spec.n
    full = (1 << n) - 1
    if n <= MATERIALIZE_CAP:
        t = tabulate(spec)
        exact, bound = t.exact, t.bound
        table = t.values

        def lookup(masks):
            return table[masks]
    else:
        probe = numeric_values(spec, np.array([0, full]))
        exact, bound = probe.exact, probe.bound

        def lookup(masks):
            return numeric_values(spec, masks).values.reshape(masks.shape)

    degree = 3 if kind.startswith("triangle") else 2
    widen = exact and 4 * (bound * 2 + 1) ** degree >= 2**62

    def f(masks):
        v = lookup(masks)
        return v.astype(object) if widen else v

    f_empty = f(np.zeros(1, dtype=np.int64))[0]
    rng = np.random.default_rng(seed)
    wit = _Witnesses(max_witnesses)
    planted = np.array(
        [[m.bits for m in tup] + [0] * (3 - len(tup)) for tup in include], dtype=np.int64
    ).reshape(-1, 3)
    batches = [planted] if len(planted) else []
    offset = 0
    remaining = triples

    def run(batch):
        nonlocal offset
        A, B, C = batch[:, 0], batch[:, 1], batch[:, 2]
        bad = _hits(_sampled_chunk(kind, f, A, B, C, f_empty, exact, eps))
        wit.take(bad, lambda i: _sample_record(spec, kind, batch[i], eps))
        offset += len(batch)

    for batch in batches:
        run(batch)
    while remaining > 0:
        m = min(chunk, remaining)
        run(rng.integers(0, 1 << 62, size=(m, 3), dtype=np.int64) & full)
        remaining -= m
    return make_report(
        kind,
        offset,
        wit.records,
        wit.count,
        sampled=True,
        seed=seed,
        elapsed=time.perf_counter() - start,
    )


def _sample_record(spec: SetFunctionSpec, kind: str, row, eps) -> ViolationRecord:
    g = spec.ground
    A, B, C = (g.mask(int(x)) for x in row)
    if kind.startswith("triangle"):
        d = jaccard.sub_jaccard_cap if kind.endswith("cap") else jaccard.sub_jaccard_delta
        lhs = d(spec, A, B, eps=eps)
        rhs = d(spec, A, C, eps=eps) + d(spec, C, B, eps=eps)
        return ViolationRecord("triangle", (A, B, C), lhs, rhs, lhs - rhs)
    f = lambda s: evaluate(spec, s)  # noqa: E731
    if kind == "lemma1":
        lhs = f(A & C) * f(B | C) + f(A | C) * f(B & C)
        rhs = f(C) * (f(A) + f(B))
        return ViolationRecord("lemma1", (A, B, C), lhs, rhs, lhs - rhs)
    if kind == "corollary1":
        lhs, rhs = f(A & B) * f(A | B), f(A) * f(B)
        return ViolationRecord("corollary1", (A, B), lhs, rhs, lhs - rhs)
    cv = jaccard.sub_jaccard_cap(spec, A, B, eps=eps)
    dv = jaccard.sub_jaccard_delta(spec, A, B, eps=eps)
    one = Fraction(1) if spec.exact else 1.0
    for lhs, rhs in ((0 * one, cv), (cv, dv), (dv, one)):
        if (lhs > rhs) if spec.exact else (lhs - rhs > eps):
            break
    return ViolationRecord("ordering", (A, B), lhs, rhs, lhs - rhs)


CHECKS = {
    "triangle-cap": lambda spec, **kw: check_triangle(spec, "cap", **kw),
    "triangle-delta": lambda spec, **kw: check_triangle(spec, "delta", **kw),
    "lemma1": check_lemma1,
    "corollary1": check_corollary1,
    "ordering": check_ordering,
    "metric-cap": lambda spec, **kw: check_metric_axioms(spec, "cap", **kw),
    "metric-delta": lambda spec, **kw: check_metric_axioms(spec, "delta", **kw),
}
