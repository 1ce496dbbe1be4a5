"""Integer partitions in run-length form, with the invariants that drive the
torus-quotient decompositions.

A partition of n is stored as (part, multiplicity) runs over its distinct
parts.  The invariants of interest are

    g  gcd of the parts,
    m  gcd of the multiplicities,
    b  number of distinct parts,
    c  total number of parts,
    p  the vector whose i-th entry counts distinct parts of multiplicity > i.

Every downstream formula depends on the partition only through these numbers,
so representative permutations are never materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """A partition of ``n``, stored as (part, multiplicity) runs.

    Runs are ordered by strictly increasing part size, multiplicities are
    positive, and sum(part * mult) == n.  The empty partition of 0 is allowed.
    """

    n: int
    runs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        total = 0
        prev = 0
        for part, mult in self.runs:
            if part <= prev or mult < 1:
                raise ValueError(f"invalid runs {self.runs!r}")
            total += part * mult
            prev = part
        if total != self.n:
            raise ValueError(f"runs {self.runs!r} do not sum to {self.n}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        ordered = sorted(parts)
        if any(p < 1 for p in ordered):
            raise ValueError("parts must be positive")
        runs: list[tuple[int, int]] = []
        for part in ordered:
            if runs and runs[-1][0] == part:
                runs[-1] = (part, runs[-1][1] + 1)
            else:
                runs.append((part, 1))
        return cls(sum(ordered), tuple(runs))

    @property
    def parts(self) -> tuple[int, ...]:
        """All parts, ascending, with repetition."""
        return tuple(p for p, m in self.runs for _ in range(m))

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.runs else "0"

    def run_length_str(self) -> str:
        return ",".join(f"{p}^{m}" for p, m in self.runs) if self.runs else "0"


@dataclass(frozen=True)
class PartitionInvariants:
    g: int
    m: int
    b: int
    c: int
    p: tuple[int, ...]


def invariants(mu: Partition) -> PartitionInvariants:
    """The invariants (g, m, b, c, p) of a nonempty partition.

    p is indexed from 1 and never carries trailing zeros: its last entry
    counts the parts achieving the maximal multiplicity.
    """
    if not mu.runs:
        raise ValueError("the empty partition has no invariants")
    parts = [p for p, _ in mu.runs]
    mults = [m for _, m in mu.runs]
    g = reduce(math.gcd, parts)
    m = reduce(math.gcd, mults)
    b = len(mu.runs)
    c = sum(mults)
    max_mult = max(mults)
    p_vec = tuple(sum(1 for mm in mults if mm > i) for i in range(1, max_mult))
    return PartitionInvariants(g=g, m=m, b=b, c=c, p=p_vec)


def _descending_partitions(n: int) -> Iterator[list[int]]:
    """Yield each partition of n >= 1 as a descending list, in decreasing
    lexicographic order.

    The same list object is reused between yields; callers must not keep or
    mutate it.
    """
    a = [n]
    while True:
        yield a
        i = len(a) - 1
        while i >= 0 and a[i] == 1:
            i -= 1
        if i < 0:
            return
        x = a[i] - 1
        m = len(a) - i
        del a[i + 1 :]
        a[i] = x
        q, r = divmod(m, x)
        if q:
            a.extend([x] * q)
        if r:
            a.append(r)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once.

    Order is decreasing-lexicographic on the descending part list, i.e. the
    order partition tables are usually printed in: ``n`` first, ``1+1+...+1``
    last.  ``n == 0`` yields the single empty partition.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n == 0:
        yield Partition(0, ())
        return
    for desc in _descending_partitions(n):
        runs: list[tuple[int, int]] = []
        prev = desc[0]
        count = 0
        for x in desc:
            if x == prev:
                count += 1
            else:
                runs.append((prev, count))
                prev = x
                count = 1
        runs.append((prev, count))
        runs.reverse()
        yield Partition(n, tuple(runs))


def iter_gcd_distinct(n: int) -> Iterator[tuple[int, int]]:
    """Yield (gcd of parts, number of distinct parts) for every partition of n.

    This is the light-weight stream behind the Betti fold: it walks the same
    enumeration as :func:`enumerate_partitions` without building Partition
    objects, so n = 60 (about 10^6 partitions) stays cheap.
    """
    if n < 1:
        raise ValueError("iter_gcd_distinct needs a positive integer")
    gcd = math.gcd
    for a in _descending_partitions(n):
        g = 0
        b = 0
        prev = 0
        for x in a:
            if x != prev:
                b += 1
                prev = x
                if g != 1:
                    g = gcd(g, x)
        yield g, b


_PCOUNT = [1]  # P(0)


def partition_count(n: int) -> int:
    """The partition function P(n), by Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("partition_count needs a nonnegative integer")
    while len(_PCOUNT) <= n:
        m = len(_PCOUNT)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * _PCOUNT[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * _PCOUNT[m - g2]
            k += 1
        _PCOUNT.append(total)
    return _PCOUNT[n]


def partitions_pairs(r: int) -> int:
    """P_2(r): the number of partitions of r into parts of two kinds.

    Equivalently the number of ordered pairs of partitions with total size r:
    P_2(r) = sum over s of P(s) * P(r - s).
    """
    if r < 0:
        raise ValueError("partitions_pairs needs a nonnegative integer")
    return sum(partition_count(s) * partition_count(r - s) for s in range(r + 1))
