"""Set-function oracles and exhaustive property verifiers.

A :class:`SetFunctionSpec` is a declarative, immutable description of a set
function ``f: P(X) -> R``. Every family except ``joint_entropy`` (and
explicit tables built from floats) evaluates to exact ``Fraction`` values.

Two evaluation routes exist. :func:`evaluate` is the scalar oracle and works
on a single :class:`SubsetMask`. :func:`numeric_values` evaluates a whole
array of masks at once with numpy; exact specs come back as integers scaled
by a common denominator so that downstream inequality checks stay exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .errors import MalformedSpec, UnknownLabel
from .report import PropertyReport, Value, ViolationRecord, make_report
from .setcore import EXHAUSTIVE_CAP, GroundSet, SubsetMask, check_cap

DEFAULT_EPS = 1e-9
MATERIALIZE_CAP = 16
PAIR_CAP = 12
RANDOM_CAP = 8

FAMILIES = (
    "cardinality",
    "weighted_modular",
    "budgeted_linear",
    "bipartite_neighborhood",
    "uniform_matroid_rank",
    "partition_matroid_rank",
    "joint_entropy",
    "explicit_table",
)

# int64 headroom used when deciding whether scaled integers may be multiplied
_INT64_SAFE = 2**62


def as_fraction(x: Any) -> Fraction:
    """Parse an exact number: int, Fraction, ``"p/q"`` or decimal string.

    Floats are read through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the binary expansion.
    """
    if isinstance(x, bool):
        raise MalformedSpec(f"boolean is not a number: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise MalformedSpec(f"non-finite number: {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedSpec(f"not a rational number: {x!r}") from None
    raise MalformedSpec(f"not a number: {x!r}")


@dataclass(frozen=True)
class SetFunctionSpec:
    family: str
    ground: GroundSet
    params: Mapping[str, Any] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise MalformedSpec(f"unknown family {self.family!r}")
        _VALIDATORS[self.family](self)

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def exact(self) -> bool:
        if self.family == "joint_entropy":
            return False
        if self.family == "explicit_table":
            return self.params["exact"]
        return True


# -- constructors -----------------------------------------------------------


def _per_element(g: GroundSet, weights, what: str) -> tuple[Fraction, ...]:
    if isinstance(weights, Mapping):
        out = [Fraction(0)] * g.n
        for label, w in weights.items():
            out[g.index(label)] = as_fraction(w)
        return tuple(out)
    weights = [as_fraction(w) for w in weights]
    if len(weights) != g.n:
        raise MalformedSpec(f"{what}: expected {g.n} entries, got {len(weights)}")
    return tuple(weights)


def cardinality(g: GroundSet) -> SetFunctionSpec:
    return SetFunctionSpec("cardinality", g, {})


def weighted_modular(g: GroundSet, weights, gamma=0) -> SetFunctionSpec:
    """``f(A) = gamma + sum of weights over A``; weights by position or label."""
    return SetFunctionSpec(
        "weighted_modular", g, {"gamma": as_fraction(gamma), "weights": _per_element(g, weights, "weights")}
    )


def budgeted_linear(g: GroundSet, weights, budget) -> SetFunctionSpec:
    """``f(A) = min(budget, sum of weights over A)``."""
    return SetFunctionSpec(
        "budgeted_linear", g, {"budget": as_fraction(budget), "weights": _per_element(g, weights, "weights")}
    )


def bipartite_neighborhood(g: GroundSet, right_labels: Sequence[str], edges) -> SetFunctionSpec:
    """``f(A) = |Gamma(A)|`` for left part ``g`` and right part ``right_labels``.

    ``edges`` is an iterable of ``(left_label, right_label)`` pairs.
    """
    right = tuple(str(v) for v in right_labels)
    if len(set(right)) != len(right):
        raise MalformedSpec("duplicate right-side labels")
    rindex = {v: j for j, v in enumerate(right)}
    seen = set()
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise MalformedSpec(f"edge must be a [left, right] pair: {e!r}") from None
        i = g.index(str(u))
        if str(v) not in rindex:
            raise UnknownLabel(str(v))
        key = (i, rindex[str(v)])
        if key in seen:
            raise MalformedSpec(f"duplicate edge {e!r}")
        seen.add(key)
    return SetFunctionSpec(
        "bipartite_neighborhood", g, {"right_labels": right, "edges": tuple(sorted(seen))}
    )


def uniform_matroid_rank(g: GroundSet, k) -> SetFunctionSpec:
    return SetFunctionSpec("uniform_matroid_rank", g, {"k": _nonneg_int(k, "k")})


def partition_matroid_rank(g: GroundSet, partitions, capacities) -> SetFunctionSpec:
    """Rank ``sum_j min(k_j, |A & P_j|)``; blocks given as label lists."""
    blocks = tuple(g.subset(block).bits for block in partitions)
    caps = tuple(_nonneg_int(k, "capacity") for k in capacities)
    return SetFunctionSpec("partition_matroid_rank", g, {"partitions": blocks, "capacities": caps})


def joint_entropy(g: GroundSet, table, cardinalities: Sequence[int] | None = None) -> SetFunctionSpec:
    """Shannon entropy (bits) of the marginal of a joint distribution.

    Variable ``i`` of the table is ground element ``i``. ``table`` may be an
    n-dimensional array, or a flat row-major sequence with ``cardinalities``.
    """
    arr = np.asarray(table, dtype=float)
    if cardinalities is None:
        cardinalities = arr.shape
    cards = tuple(_nonneg_int(c, "cardinality") for c in cardinalities)
    if arr.size != math.prod(cards):
        raise MalformedSpec(f"table has {arr.size} entries, cardinalities {cards} need {math.prod(cards)}")
    return SetFunctionSpec(
        "joint_entropy", g, {"cardinalities": cards, "table": tuple(float(p) for p in arr.ravel())}
    )


def explicit_table(g: GroundSet, values) -> SetFunctionSpec:
    """Tabulated function: a sequence indexed by mask, or a mapping keyed by
    :class:`SubsetMask`, integer mask, or iterable of labels."""
    size = 1 << g.n
    if isinstance(values, Mapping):
        table: list[Any] = [None] * size
        for key, v in values.items():
            if isinstance(key, SubsetMask):
                bits = key.bits
            elif isinstance(key, int):
                bits = key
            else:
                bits = g.subset(key).bits
            if not 0 <= bits < size:
                raise MalformedSpec(f"mask {bits} out of range")
            if table[bits] is not None:
                raise MalformedSpec(f"duplicate table entry for mask {bits}")
            table[bits] = v
        if any(v is None for v in table):
            raise MalformedSpec(f"explicit table needs all {size} subsets")
    else:
        table = list(values)
    if len(table) != size:
        raise MalformedSpec(f"explicit table needs {size} entries, got {len(table)}")
    floats = [isinstance(v, (float, np.floating)) for v in table]
    if all(floats):
        vals = tuple(float(v) for v in table)
        exact = False
    elif any(floats):
        raise MalformedSpec("explicit table mixes exact and approximate values")
    else:
        vals = tuple(as_fraction(v) for v in table)
        exact = True
    return SetFunctionSpec("explicit_table", g, {"values": vals, "exact": exact})


def _nonneg_int(k, what: str) -> int:
    q = as_fraction(k)
    if q.denominator != 1 or q < 0:
        raise MalformedSpec(f"{what} must be a nonnegative integer, got {k!r}")
    return int(q)


# -- validation -------------------------------------------------------------


def _require_keys(spec: SetFunctionSpec, *keys: str) -> None:
    if set(spec.params) != set(keys):
        raise MalformedSpec(f"{spec.family} expects parameters {sorted(keys)}, got {sorted(spec.params)}")


def _v_cardinality(spec):
    _require_keys(spec)


def _v_weighted(spec):
    _require_keys(spec, "gamma", "weights")
    if spec.params["gamma"] < 0:
        raise MalformedSpec("offset gamma must be >= 0")
    _v_weights(spec)


def _v_budgeted(spec):
    _require_keys(spec, "budget", "weights")
    if spec.params["budget"] < 0:
        raise MalformedSpec("budget must be >= 0")
    _v_weights(spec)


def _v_weights(spec):
    w = spec.params["weights"]
    if len(w) != spec.n:
        raise MalformedSpec(f"expected {spec.n} weights, got {len(w)}")
    if any(c < 0 for c in w):
        raise MalformedSpec("weights must be >= 0")


def _v_bipartite(spec):
    _require_keys(spec, "right_labels", "edges")
    r = len(spec.params["right_labels"])
    for i, j in spec.params["edges"]:
        if not (0 <= i < spec.n and 0 <= j < r):
            raise MalformedSpec(f"edge index ({i}, {j}) out of range")


def _v_uniform(spec):
    _require_keys(spec, "k")


def _v_partition(spec):
    _require_keys(spec, "partitions", "capacities")
    blocks, caps = spec.params["partitions"], spec.params["capacities"]
    if len(blocks) != len(caps):
        raise MalformedSpec("one capacity per partition block required")
    seen = 0
    for b in blocks:
        if seen & b:
            raise MalformedSpec("partition blocks overlap")
        seen |= b
    if seen != spec.ground.full_bits:
        raise MalformedSpec("partition blocks must cover the ground set")


def _v_entropy(spec):
    _require_keys(spec, "cardinalities", "table")
    cards, table = spec.params["cardinalities"], spec.params["table"]
    if len(cards) != spec.n:
        raise MalformedSpec(f"need one variable per ground element ({spec.n}), got {len(cards)}")
    if any(c < 1 for c in cards):
        raise MalformedSpec("variable cardinalities must be >= 1")
    if len(table) != math.prod(cards):
        raise MalformedSpec("table size does not match cardinalities")
    if any(not math.isfinite(p) or p < 0 for p in table):
        raise MalformedSpec("probabilities must be finite and >= 0")
    if abs(math.fsum(table) - 1.0) > DEFAULT_EPS:
        raise MalformedSpec(f"probabilities sum to {math.fsum(table)!r}, not 1")


def _v_explicit(spec):
    _require_keys(spec, "values", "exact")
    if len(spec.params["values"]) != 1 << spec.n:
        raise MalformedSpec("explicit table size must be 2^n")


_VALIDATORS = {
    "cardinality": _v_cardinality,
    "weighted_modular": _v_weighted,
    "budgeted_linear": _v_budgeted,
    "bipartite_neighborhood": _v_bipartite,
    "uniform_matroid_rank": _v_uniform,
    "partition_matroid_rank": _v_partition,
    "joint_entropy": _v_entropy,
    "explicit_table": _v_explicit,
}


# -- scalar oracle ----------------------------------------------------------


def _entropy_array(spec: SetFunctionSpec) -> np.ndarray:
    return np.asarray(spec.params["table"], dtype=float).reshape(spec.params["cardinalities"])


def _marginal_entropy(p: np.ndarray, keep: Sequence[int]) -> float:
    if not keep:
        return 0.0
    drop = tuple(i for i in range(p.ndim) if i not in keep)
    m = p.sum(axis=drop) if drop else p
    m = m[m > 0]
    return float(-(m * np.log2(m)).sum()) + 0.0


def evaluate(spec: SetFunctionSpec, a: SubsetMask) -> Value:
    """``f(A)`` as an exact Fraction, or a float for approximate specs."""
    spec.ground.empty()._check(a)
    p = spec.params
    fam = spec.family
    if fam == "cardinality":
        return Fraction(len(a))
    if fam == "weighted_modular":
        return p["gamma"] + sum((p["weights"][i] for i in a), Fraction(0))
    if fam == "budgeted_linear":
        return min(p["budget"], sum((p["weights"][i] for i in a), Fraction(0)))
    if fam == "bipartite_neighborhood":
        return Fraction(len({j for i, j in p["edges"] if i in a}))
    if fam == "uniform_matroid_rank":
        return Fraction(min(p["k"], len(a)))
    if fam == "partition_matroid_rank":
        return Fraction(sum(min(k, (a.bits & b).bit_count()) for b, k in zip(p["partitions"], p["capacities"])))
    if fam == "joint_entropy":
        return _marginal_entropy(_entropy_array(spec), list(a))
    return p["values"][a.bits]


# -- vectorized oracle ------------------------------------------------------


def _lcm_den(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v.denominator)
    return out


def _int_array(xs: Sequence[int], bound: int) -> np.ndarray:
    if bound < _INT64_SAFE:
        return np.asarray(xs, dtype=np.int64)
    return np.asarray(list(xs), dtype=object)


def _bits(masks: np.ndarray, n: int) -> np.ndarray:
    return (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1


@dataclass(frozen=True)
class NumericValues:
    """``values[i] == f(masks[i]) * scale``.

    Exact specs give integer arrays (int64, or object when ``bound`` may not
    fit) and ``scale`` is the common denominator; approximate specs give
    float64 with ``scale == 1``.
    """

    values: np.ndarray
    scale: int
    exact: bool
    bound: int

    def value(self, i: int) -> Value:
        return to_value(self.values[i], self.scale, self.exact)


def to_value(x, scale: int, exact: bool) -> Value:
    if exact:
        return Fraction(int(x), scale)
    return float(x)


def numeric_values(spec: SetFunctionSpec, masks) -> NumericValues:
    masks = np.asarray(masks, dtype=np.int64).ravel()
    n, p, fam = spec.n, spec.params, spec.family
    if fam == "joint_entropy":
        arr = _entropy_array(spec)
        uniq, inv = np.unique(masks, return_inverse=True)
        ent = np.array([_marginal_entropy(arr, [i for i in range(n) if m >> i & 1]) for m in uniq])
        return NumericValues(ent[inv].reshape(masks.shape), 1, False, 0)
    if fam == "explicit_table":
        if not p["exact"]:
            return NumericValues(np.asarray(p["values"], dtype=float)[masks], 1, False, 0)
        scale = _lcm_den(p["values"])
        ints = [int(v * scale) for v in p["values"]]
        bound = max(abs(v) for v in ints)
        return NumericValues(_int_array(ints, bound)[masks], scale, True, bound)
    bits = _bits(masks, n)
    if fam == "cardinality":
        return NumericValues(bits.sum(axis=1), 1, True, n)
    if fam == "uniform_matroid_rank":
        return NumericValues(np.minimum(bits.sum(axis=1), p["k"]), 1, True, min(p["k"], n))
    if fam == "partition_matroid_rank":
        out = np.zeros(len(masks), dtype=np.int64)
        for b, k in zip(p["partitions"], p["capacities"]):
            cols = [i for i in range(n) if b >> i & 1]
            out += np.minimum(bits[:, cols].sum(axis=1), k)
        return NumericValues(out, 1, True, n)
    if fam == "bipartite_neighborhood":
        adj = np.zeros((n, len(p["right_labels"])), dtype=np.int64)
        for i, j in p["edges"]:
            adj[i, j] = 1
        return NumericValues(((bits @ adj) > 0).sum(axis=1), 1, True, adj.shape[1])
    # weighted_modular / budgeted_linear
    cap = p["budget"] if fam == "budgeted_linear" else None
    gamma = p.get("gamma", Fraction(0))
    scale = _lcm_den([gamma, *p["weights"], *([cap] if cap is not None else [])])
    w = [int(c * scale) for c in p["weights"]]
    g = int(gamma * scale)
    bound = g + sum(w)
    if cap is not None:
        bound = min(bound, int(cap * scale))
    wa = _int_array(w, g + sum(w))
    if wa.dtype == object:
        bits = bits.astype(object)
    vals = bits @ wa + g
    if cap is not None:
        vals = np.minimum(vals, int(cap * scale))
    return NumericValues(vals, scale, True, bound)


def tabulate(spec: SetFunctionSpec, cap: int = EXHAUSTIVE_CAP) -> NumericValues:
    """Scaled values of ``f`` on all ``2^n`` masks, in mask order."""
    check_cap(spec.n, cap, "tabulation")
    return numeric_values(spec, np.arange(1 << spec.n, dtype=np.int64))


def materialize(spec: SetFunctionSpec) -> SetFunctionSpec:
    """Equivalent ``explicit_table`` spec (n <= 16)."""
    check_cap(spec.n, MATERIALIZE_CAP, "materialization")
    if spec.family == "explicit_table":
        return spec
    t = tabulate(spec)
    return explicit_table(spec.ground, [t.value(i) for i in range(1 << spec.n)])


# -- property verifiers -----------------------------------------------------


class _Collector:
    """Keeps the first ``limit`` violations in scan order plus a total count."""

    def __init__(self, limit: int):
        self.limit = limit
        self.records: list[ViolationRecord] = []
        self.count = 0

    def add(self, n_new: int, make) -> None:
        self.count += n_new
        room = self.limit - len(self.records)
        if room > 0 and n_new:
            self.records.extend(make(room))

    @property
    def full(self) -> bool:
        return len(self.records) >= self.limit


def _violating(diff: np.ndarray, exact: bool, eps: float) -> np.ndarray:
    return diff > 0 if exact else diff > eps


def _record(kind, ground, masks, lhs, rhs, t: NumericValues, scale=None) -> ViolationRecord:
    scale = t.scale if scale is None else scale
    lv, rv = to_value(lhs, scale, t.exact), to_value(rhs, scale, t.exact)
    return ViolationRecord(kind, tuple(SubsetMask(int(m), ground) for m in masks), lv, rv, lv - rv)


def is_nonnegative(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10) -> PropertyReport:
    t = tabulate(spec)
    bad = np.flatnonzero(_violating(-t.values, t.exact, eps))
    out = [_record("property", spec.ground, (m,), 0, t.values[m], t) for m in bad[:max_witnesses]]
    return make_report("nonnegative", len(t.values), out, len(bad))


def is_monotone(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10) -> PropertyReport:
    """Checks ``f(A) <= f(A + x)`` for every A and x not in A.

    Witnesses are ``(A, A + x)`` ordered by A, then x.
    """
    t = tabulate(spec)
    F = t.values
    masks = np.arange(len(F), dtype=np.int64)
    hits = []
    checked = 0
    for x in range(spec.n):
        base = masks[(masks >> x & 1) == 0]
        checked += len(base)
        bad = base[_violating(F[base] - F[base | (1 << x)], t.exact, eps)]
        hits.extend((int(a), x) for a in bad)
    hits.sort()
    out = [
        _record("property", spec.ground, (a, a | 1 << x), F[a], F[a | 1 << x], t)
        for a, x in hits[:max_witnesses]
    ]
    return make_report("monotone", checked, out, len(hits))


def _pairwise(spec, name, eps, max_witnesses, violation):
    check_cap(spec.n, PAIR_CAP, "pairwise check")
    t = tabulate(spec)
    F = t.values
    N = len(F)
    ar = np.arange(N, dtype=np.int64)
    col = _Collector(max_witnesses)
    for a in range(N):
        lhs, rhs = violation(F, a, ar)
        bad = np.flatnonzero(_violating(lhs - rhs, t.exact, eps))
        if len(bad):
            col.add(
                len(bad),
                lambda room: [
                    _record("property", spec.ground, (a, b), lhs[b], rhs[b], t) for b in bad[:room]
                ],
            )
    return make_report(name, N * N, col.records, col.count)


def is_submodular_pairwise(
    spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10
) -> PropertyReport:
    """Checks ``f(A | B) + f(A & B) <= f(A) + f(B)`` over all ordered pairs."""

    def violation(F, a, b):
        return F[a | b] + F[a & b], F[a] + F[b]

    return _pairwise(spec, "submodular_pairwise", eps, max_witnesses, violation)


def is_modular(spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10) -> PropertyReport:
    """Checks ``f(A | B) + f(A & B) == f(A) + f(B)`` over all ordered pairs.

    A witness records the larger side as ``lhs``.
    """

    def violation(F, a, b):
        x, y = F[a | b] + F[a & b], F[a] + F[b]
        swap = x < y
        return np.where(swap, y, x), np.where(swap, x, y)

    return _pairwise(spec, "modular", eps, max_witnesses, violation)


def is_submodular_marginal(
    spec: SetFunctionSpec, *, eps: float = DEFAULT_EPS, max_witnesses: int = 10
) -> PropertyReport:
    """Checks diminishing returns ``f(A+x) - f(A) >= f(B+x) - f(B)``
    for all ``A <= B`` and ``x`` not in B.

    Witnesses are ``(A, B, {x})`` ordered by A, then B, then x; ``lhs`` is
    the gain at B.
    """
    check_cap(spec.n, PAIR_CAP, "marginal check")
    t = tabulate(spec)
    F = t.values
    N = len(F)
    ar = np.arange(N, dtype=np.int64)
    col = _Collector(max_witnesses)
    checked = 0
    for a in range(N):
        sup = ar[(ar & a) == a]
        hits = []
        for x in range(spec.n):
            bit = 1 << x
            if a & bit:
                continue
            bs = sup[(sup & bit) == 0]
            checked += len(bs)
            gain_a = F[a | bit] - F[a]
            gain_b = F[bs | bit] - F[bs]
            for b in bs[_violating(gain_b - gain_a, t.exact, eps)]:
                hits.append((int(b), x))
        if hits:
            hits.sort()
            col.add(
                len(hits),
                lambda room: [
                    _record(
                        "property",
                        spec.ground,
                        (a, b, 1 << x),
                        F[b | 1 << x] - F[b],
                        F[a | 1 << x] - F[a],
                        t,
                    )
                    for b, x in hits[:room]
                ],
            )
    return make_report("submodular_marginal", checked, col.records, col.count)


# -- random instances -------------------------------------------------------


def random_monotone_function(g: GroundSet, seed: int, mode: str = "free") -> SetFunctionSpec:
    """Seeded random nonnegative monotone ``explicit_table`` (n <= 8).

    ``mode="modular"`` tabulates ``gamma + sum c_i`` with integer draws in
    [0, 100]; ``mode="free"`` draws every value in [0, 100] and then takes the
    monotone closure in ascending-cardinality order.
    """
    check_cap(g.n, RANDOM_CAP, "random function generation")
    rng = random.Random(seed)
    N = 1 << g.n
    if mode == "modular":
        gamma = rng.randint(0, 100)
        c = [rng.randint(0, 100) for _ in range(g.n)]
        vals = [gamma + sum(c[i] for i in range(g.n) if m >> i & 1) for m in range(N)]
    elif mode == "free":
        vals = [rng.randint(0, 100) for _ in range(N)]
        for m in sorted(range(N), key=lambda m: (m.bit_count(), m)):
            for i in range(g.n):
                if m >> i & 1:
                    vals[m] = max(vals[m], vals[m ^ (1 << i)])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return explicit_table(g, vals)


def random_weighted_modular(g: GroundSet, seed: int, *, positive_offset: bool | None = None) -> SetFunctionSpec:
    """Seeded ``weighted_modular`` spec with integer weights in [0, 20].

    ``positive_offset`` forces ``gamma > 0`` (True) or ``gamma == 0`` (False).
    """
    rng = random.Random(seed)
    weights = [rng.randint(0, 20) for _ in range(g.n)]
    if positive_offset is None:
        gamma = rng.randint(0, 20)
    elif positive_offset:
        gamma = rng.randint(1, 20)
    else:
        gamma = 0
    return weighted_modular(g, weights, gamma)


def submodular_table_pool(g: GroundSet, count: int, start_seed: int = 0) -> list[tuple[int, SetFunctionSpec]]:
    """The first ``count`` free-mode tables (by ascending seed) that pass
    :func:`is_submodular_pairwise`, returned with their seeds."""
    out = []
    seed = start_seed
    while len(out) < count:
        spec = random_monotone_function(g, seed, "free")
        if is_submodular_pairwise(spec, max_witnesses=1).ok:
            out.append((seed, spec))
        seed += 1
    return out
