"""Ground sets, bitmask subsets and power-set enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import CapExceeded, GroundMismatch, UnknownLabel

MASK_WIDTH = 64
EXHAUSTIVE_CAP = 20


@dataclass(frozen=True)
class GroundSet:
    """A finite, non-empty, ordered universe of labelled elements."""

    labels: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise ValueError("ground set must be non-empty")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in ground set: {labels}")
        if len(labels) > MASK_WIDTH:
            raise CapExceeded(f"ground set has {len(labels)} elements, cap is {MASK_WIDTH}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> GroundSet:
        """Ground set with labels ``"1" .. "n"``."""
        return cls(str(i) for i in range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_bits(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def subset(self, labels: Iterable[str] = ()) -> SubsetMask:
        bits = 0
        for x in labels:
            bits |= 1 << self.index(x)
        return SubsetMask(bits, self)

    def mask(self, bits: int) -> SubsetMask:
        return SubsetMask(bits, self)

    def empty(self) -> SubsetMask:
        return SubsetMask(0, self)

    def full(self) -> SubsetMask:
        return SubsetMask(self.full_bits, self)

    def singleton(self, i: int) -> SubsetMask:
        return SubsetMask(1 << i, self)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True, order=False)
class SubsetMask:
    """A subset of a ground set stored as an integer bit-vector (bit i = element i)."""

    bits: int
    ground: GroundSet

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ground.n:
            raise ValueError(f"mask {self.bits:#x} has bits outside a ground set of size {self.ground.n}")

    def _check(self, other: SubsetMask) -> None:
        if self.ground is not other.ground and self.ground != other.ground:
            raise GroundMismatch("subsets belong to different ground sets")

    def __or__(self, other: SubsetMask) -> SubsetMask:
        return union(self, other)

    def __and__(self, other: SubsetMask) -> SubsetMask:
        return intersection(self, other)

    def __xor__(self, other: SubsetMask) -> SubsetMask:
        return sym_difference(self, other)

    def __invert__(self) -> SubsetMask:
        return complement(self)

    def __le__(self, other: SubsetMask) -> bool:
        return is_subset(self, other)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def labels(self) -> list[str]:
        return [self.ground.labels[i] for i in self]

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def union(a: SubsetMask, b: SubsetMask) -> SubsetMask:
    a._check(b)
    return SubsetMask(a.bits | b.bits, a.ground)


def intersection(a: SubsetMask, b: SubsetMask) -> SubsetMask:
    a._check(b)
    return SubsetMask(a.bits & b.bits, a.ground)


def sym_difference(a: SubsetMask, b: SubsetMask) -> SubsetMask:
    a._check(b)
    return SubsetMask(a.bits ^ b.bits, a.ground)


def complement(a: SubsetMask) -> SubsetMask:
    return SubsetMask(a.ground.full_bits & ~a.bits, a.ground)


def is_subset(a: SubsetMask, b: SubsetMask) -> bool:
    a._check(b)
    return a.bits & b.bits == a.bits


def is_comparable(a: SubsetMask, b: SubsetMask) -> bool:
    return is_subset(a, b) or is_subset(b, a)


def check_cap(n: int, cap: int, what: str = "enumeration") -> None:
    if n > cap:
        raise CapExceeded(f"{what} needs n <= {cap}, got n = {n}")


def enumerate_subsets(g: GroundSet) -> Iterator[SubsetMask]:
    """All 2^n subsets of ``g`` in ascending mask order."""
    check_cap(g.n, EXHAUSTIVE_CAP)
    for bits in range(1 << g.n):
        yield SubsetMask(bits, g)
