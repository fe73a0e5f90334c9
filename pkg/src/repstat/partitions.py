"""Integer partitions: enumeration, counting, conjugation, hook lengths.

Partitions of n index both the conjugacy classes and the irreducible
representations of the symmetric group S_n, so everything downstream is
driven by the enumeration order fixed here (reverse-lexicographic, from
(n) down to (1,...,1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class Partition:
    """A weakly decreasing sequence of positive integers.

    The empty partition is the unique partition of 0.  Instances are
    immutable and hashable; ``n`` caches the sum of the parts.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(int(v) for v in parts)
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts
        self.n = sum(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def serialize(self) -> str:
        """Bracketed comma-separated parts, e.g. ``[5,2]``."""
        return "[" + ",".join(str(v) for v in self.parts) + "]"


def parse_partition(text: str) -> Partition:
    """Inverse of :meth:`Partition.serialize`."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a partition literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(v) for v in body.split(","))


@dataclass(frozen=True)
class FrequencyForm:
    """Multiplicity encoding: part value i appears freq[i] times."""

    freq: tuple[tuple[int, int], ...]  # (part, multiplicity), part ascending

    def serialize(self) -> str:
        """Angle-bracket form, e.g. ``<1^1,2^3,3^1>``."""
        return "<" + ",".join(f"{i}^{a}" for i, a in self.freq) + ">"


def to_frequency(lam: Partition) -> FrequencyForm:
    counts: dict[int, int] = {}
    for v in lam.parts:
        counts[v] = counts.get(v, 0) + 1
    return FrequencyForm(tuple(sorted(counts.items())))


def from_frequency(form: FrequencyForm) -> Partition:
    parts = []
    for value, mult in sorted(form.freq, reverse=True):
        parts.extend([value] * mult)
    return Partition(parts)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n in reverse-lexicographic order.

    Starts at (n), ends at (1,...,1); n = 0 yields exactly the empty
    partition.  The stream has length partition_count(n), which the test
    suite checks against the independent pentagonal recurrence.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield Partition()
        return
    parts = [n]
    while True:
        yield Partition(parts)
        # Find the rightmost part > 1; everything after it is a tail of 1s.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        remainder = len(parts) - i  # the borrowed unit plus the tail of 1s
        parts = parts[:i] + [parts[i] - 1]
        while remainder > 0:
            chunk = min(parts[-1], remainder)
            parts.append(chunk)
            remainder -= chunk


_pcount = [1]  # dense table of p(0), p(1), ...


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence, memoized densely.

    Independent of enumerate_partitions, so the two can cross-check
    each other.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    while len(_pcount) <= n:
        m = len(_pcount)
        total = 0
        k = 1
        while True:
            g1 = m - k * (3 * k - 1) // 2
            if g1 < 0:
                break
            term = _pcount[g1]
            g2 = g1 - k  # m - k(3k+1)/2
            if g2 >= 0:
                term += _pcount[g2]
            total += term if k % 2 == 1 else -term
            k += 1
        _pcount.append(total)
    return _pcount[n]


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: lambda'_j = #{i : lambda_i >= j}."""
    if not lam.parts:
        return Partition()
    cols = [0] * lam.parts[0]
    for v in lam.parts:
        for j in range(v):
            cols[j] += 1
    return Partition(cols)


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Hook length of each box: h(i,j) = lam_i - i + lam'_j - j + 1.

    Returned ragged matrix has the same shape as the diagram; every entry
    is at least 1 and the corner box (1,1) carries lam_1 + lam'_1 - 1.
    """
    conj = conjugate(lam).parts
    return [
        [lam.parts[i] - i + conj[j] - j - 1 for j in range(lam.parts[i])]
        for i in range(len(lam.parts))
    ]
