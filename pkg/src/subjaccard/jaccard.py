"""Jaccard index/distance and the two set-function generalizations.

``sub_jaccard_cap`` is ``1 - f(A & B) / f(A | B)`` and ``sub_jaccard_delta``
is ``(f(A ^ B) - f(empty)) / f(A | B)``; both are 0 when ``f(A | B) == 0``.
Oracle evidence of negativity or non-monotonicity raises
:class:`PropertyViolation` as it is encountered; no upfront check is made.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import LengthMismatch, ModeMismatch, NegativeEntry, PropertyViolation
from .report import Value
from .setcore import SubsetMask
from .setfun import DEFAULT_EPS, SetFunctionSpec, as_fraction, evaluate, weighted_modular


def jaccard_index(a: SubsetMask, b: SubsetMask) -> Fraction:
    union = len(a | b)
    if union == 0:
        return Fraction(1)
    return Fraction(len(a & b), union)


def jaccard_distance(a: SubsetMask, b: SubsetMask) -> Fraction:
    d = 1 - jaccard_index(a, b)
    if __debug__:
        union = len(a | b)
        assert d == (Fraction(len(a ^ b), union) if union else 0)
    return d


def _is_zero(x: Value, eps: float) -> bool:
    return x == 0 if isinstance(x, Fraction) else abs(x) <= eps


def _less(x: Value, y: Value, eps: float) -> bool:
    """Strict ``x < y``, one-sided tolerant in approximate mode."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x < y
    return y - x > eps


def _checked(spec: SetFunctionSpec, s: SubsetMask, eps: float) -> Value:
    v = evaluate(spec, s)
    if _less(v, 0, eps):
        raise PropertyViolation(f"f({s!r}) = {v} is negative")
    return v


def sub_jaccard_cap(spec: SetFunctionSpec, a: SubsetMask, b: SubsetMask, *, eps: float = DEFAULT_EPS) -> Value:
    fu = _checked(spec, a | b, eps)
    fi = _checked(spec, a & b, eps)
    if _less(fu, fi, eps):
        raise PropertyViolation(f"f(A&B) = {fi} exceeds f(A|B) = {fu}; oracle is not monotone")
    if _is_zero(fu, eps):
        return Fraction(0) if spec.exact else 0.0
    return 1 - fi / fu


def sub_jaccard_delta(spec: SetFunctionSpec, a: SubsetMask, b: SubsetMask, *, eps: float = DEFAULT_EPS) -> Value:
    fu = _checked(spec, a | b, eps)
    fd = _checked(spec, a ^ b, eps)
    f0 = _checked(spec, a.ground.empty(), eps)
    if _less(fd, f0, eps):
        raise PropertyViolation(f"f(A^B) = {fd} is below f(empty) = {f0}; oracle is not monotone")
    if _less(fu, fd, eps):
        raise PropertyViolation(f"f(A^B) = {fd} exceeds f(A|B) = {fu}; oracle is not monotone")
    if _is_zero(fu, eps):
        return Fraction(0) if spec.exact else 0.0
    return (fd - f0) / fu


def sub_jaccard_index(spec: SetFunctionSpec, a: SubsetMask, b: SubsetMask, *, eps: float = DEFAULT_EPS) -> Value:
    return 1 - sub_jaccard_delta(spec, a, b, eps=eps)


@dataclass(frozen=True)
class WeightedVector:
    """Nonnegative weights, all exact (Fraction) or all approximate (float)."""

    entries: tuple[Value, ...]

    def __init__(self, entries: Sequence):
        entries = list(entries)
        floats = [isinstance(x, float) for x in entries]
        if entries and all(floats):
            vals = tuple(entries)
        elif any(floats):
            raise ModeMismatch("vector mixes exact and approximate entries")
        else:
            vals = tuple(as_fraction(x) for x in entries)
        if any(x < 0 for x in vals):
            raise NegativeEntry(f"negative entry in {vals}")
        object.__setattr__(self, "entries", vals)

    @property
    def exact(self) -> bool:
        return not any(isinstance(x, float) for x in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


VectorLike = Union[WeightedVector, Sequence]


def vector_jaccard_distance(x: VectorLike, y: VectorLike) -> Value:
    """``1 - sum(min) / sum(max)``; 0 when both vectors are zero."""
    x = x if isinstance(x, WeightedVector) else WeightedVector(x)
    y = y if isinstance(y, WeightedVector) else WeightedVector(y)
    if len(x) != len(y):
        raise LengthMismatch(f"vectors of length {len(x)} and {len(y)}")
    if len(x) and x.exact != y.exact:
        raise ModeMismatch("cannot mix an exact and an approximate vector")
    zero = Fraction(0) if x.exact else 0.0
    lo = sum((min(p, q) for p, q in zip(x.entries, y.entries)), zero)
    hi = sum((max(p, q) for p, q in zip(x.entries, y.entries)), zero)
    if hi == 0:
        return zero
    return 1 - lo / hi


def multiset_jaccard_distance(mult_a: Mapping, mult_b: Mapping) -> Value:
    support = list(dict.fromkeys([*mult_a, *mult_b]))
    return vector_jaccard_distance(
        [mult_a.get(z, 0) for z in support], [mult_b.get(z, 0) for z in support]
    )


def steinhaus_distance(weights: Mapping[str, object], a: SubsetMask, b: SubsetMask) -> Value:
    """Measure-weighted Jaccard distance ``mu(A ^ B) / mu(A | B)`` on a
    finite measure space whose atoms are the ground elements."""
    g = a.ground
    w = [as_fraction(weights.get(x, 0)) for x in g.labels]
    return vector_jaccard_distance(
        [w[i] if i in a else 0 for i in range(g.n)], [w[i] if i in b else 0 for i in range(g.n)]
    )


def steinhaus_spec(g, weights: Mapping[str, object]) -> SetFunctionSpec:
    """The ``weighted_modular`` (offset 0) spec whose cap distance is the
    Steinhaus distance for ``weights``."""
    return weighted_modular(g, {x: weights.get(x, 0) for x in g.labels}, 0)
