"""Betti numbers, K-theory ranks, Euler characteristics and duality checks.

Every component of the quotient deformation-retracts onto its base torus, so
the Betti vector for (n, k) is a binomial fold: degree j picks up
C(b(mu) - 1, j) from each component of a partition with b distinct parts.
The fold streams over partitions and needs only (gcd of parts, distinct-part
count) per partition; the catalog-based computation exists as a cross-check
and gives identical answers for the real and complex catalogs.

K-theory ranks are the even/odd Betti sums (Chern character over C), and the
Euler characteristic for k = 1 equals the divisor sum of n.
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .complex_quotient import (
    QuotientCatalog,
    canonical_singularity,
    component_count_from_gcd,
    decompose_complex,
    variety_normal_form,
    _require_divides,
)
from .numtheory import divisors
from .partitions import Partition, iter_gcd_distinct, partitions_pairs


@dataclass(frozen=True)
class BettiVector:
    """Graded complex-cohomology ranks b_0..b_D for the (n, k) quotient."""

    n: int
    k: int
    ranks: tuple[int, ...]

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1


@dataclass(frozen=True)
class KTheoryRanks:
    k0: int
    k1: int


@lru_cache(maxsize=128)
def _class_counts(n: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """How many partitions of n fall in each (gcd of parts, distinct parts) class."""
    counts: Counter[tuple[int, int]] = Counter()
    for key in iter_gcd_distinct(n):
        counts[key] += 1
    return tuple(sorted(counts.items()))


def betti(n: int, k: int) -> BettiVector:
    """The Betti vector: b_j = sum over mu of |components(mu)| * C(b(mu)-1, j)."""
    _require_divides(k, n)
    by_distinct: Counter[int] = Counter()
    for (g, b), count in _class_counts(n):
        by_distinct[b] += count * component_count_from_gcd(g, n, k)
    top = max(by_distinct)
    ranks = tuple(
        sum(total * math.comb(b - 1, j) for b, total in by_distinct.items())
        for j in range(top)
    )
    return BettiVector(n=n, k=k, ranks=ranks)


def betti_from_catalog(catalog: QuotientCatalog) -> BettiVector:
    """Betti vector recomputed from a full catalog (complex or real).

    Cross-check path for :func:`betti`; both forms give the same answer since
    real and complex components share base dimension and multiplicity.
    """
    by_dim: Counter[int] = Counter()
    for entry in catalog.entries:
        dim = entry.torus_dim if catalog.form == "complex" else entry.base_torus_dim
        by_dim[dim] += entry.multiplicity
    top = max(by_dim)
    ranks = tuple(
        sum(total * math.comb(dim, j) for dim, total in by_dim.items())
        for j in range(top + 1)
    )
    return BettiVector(n=catalog.n, k=catalog.k, ranks=ranks)


def ktheory_ranks(n: int, k: int) -> KTheoryRanks:
    """(K0, K1) ranks: sums of the even- and odd-degree Betti numbers."""
    vector = betti(n, k)
    return KTheoryRanks(
        k0=sum(vector.ranks[0::2]),
        k1=sum(vector.ranks[1::2]),
    )


def euler_characteristic(n: int, k: int) -> int:
    """Alternating sum of the Betti numbers; equals sigma(n) when k = 1."""
    vector = betti(n, k)
    return sum(rank if j % 2 == 0 else -rank for j, rank in enumerate(vector.ranks))


def top_betti(n: int) -> tuple[int, int]:
    """Top nonzero degree and its rank for the k = 1 quotient, in closed form.

    With b the largest integer whose triangle number T_b = 1+2+...+b is at
    most n, the top degree is b - 1 and its rank is the two-kind partition
    count P_2(n - T_b); the rank resets to 1 at each triangle number.  The
    single exception is n = 2: the partition 2 has part-gcd 2 and contributes
    two point components instead of one, so the rank is 3 rather than
    P_2(1) = 2.
    """
    if n < 1:
        raise ValueError("top_betti needs a positive integer")
    if n == 2:
        return 0, 3
    b = (math.isqrt(8 * n + 1) - 1) // 2
    r = n - b * (b + 1) // 2
    return b - 1, partitions_pairs(r)


@dataclass(frozen=True)
class PartitionDuality:
    """Per-partition comparison between the (n, k) and (n, n/k) quotients."""

    partition: Partition
    component_count: int
    component_count_dual: int
    torus_dim: int
    torus_counts_equal: bool
    descriptor_singularities_equal: bool
    variety_singularities_equal: bool


@dataclass(frozen=True)
class DualityReport:
    n: int
    k: int
    k_dual: int
    betti_ranks: tuple[int, ...]
    betti_ranks_dual: tuple[int, ...]
    lines: tuple[PartitionDuality, ...]

    @property
    def betti_equal(self) -> bool:
        return self.betti_ranks == self.betti_ranks_dual

    @property
    def counts_equal(self) -> bool:
        return all(line.component_count == line.component_count_dual for line in self.lines)

    @property
    def ok(self) -> bool:
        return (
            self.betti_equal
            and self.counts_equal
            and all(line.torus_counts_equal for line in self.lines)
        )

    def partitions_with_singularity_differences(self) -> list[Partition]:
        return [line.partition for line in self.lines if not line.variety_singularities_equal]


def duality_report(n: int, k: int) -> DualityReport:
    """Compare the (n, k) quotient with its dual (n, n/k) stratum by stratum.

    Betti vectors, per-partition component counts and torus-dimension
    histograms always agree.  The singularity structure may differ; it is
    compared both at the level of group data (canonical weight tuples) and at
    the level of the underlying varieties (quasi-reflections discarded), and
    partitions are flagged when the varieties genuinely differ.
    """
    _require_divides(k, n)
    k_dual = n // k
    catalog = decompose_complex(n, k)
    dual = decompose_complex(n, k_dual)
    lines = []
    for (mu, group), (mu_dual, group_dual) in zip(catalog.by_partition(), dual.by_partition()):
        assert mu == mu_dual
        count = sum(e.multiplicity for e in group)
        count_dual = sum(e.multiplicity for e in group_dual)
        torus_hist = Counter()
        torus_hist_dual = Counter()
        descriptor = Counter()
        descriptor_dual = Counter()
        variety = Counter()
        variety_dual = Counter()
        for e in group:
            torus_hist[e.torus_dim] += e.multiplicity
            descriptor[canonical_singularity(e.singularity)] += e.multiplicity
            variety[variety_normal_form(e.singularity)] += e.multiplicity
        for e in group_dual:
            torus_hist_dual[e.torus_dim] += e.multiplicity
            descriptor_dual[canonical_singularity(e.singularity)] += e.multiplicity
            variety_dual[variety_normal_form(e.singularity)] += e.multiplicity
        lines.append(
            PartitionDuality(
                partition=mu,
                component_count=count,
                component_count_dual=count_dual,
                torus_dim=group[0].torus_dim,
                torus_counts_equal=torus_hist == torus_hist_dual,
                descriptor_singularities_equal=descriptor == descriptor_dual,
                variety_singularities_equal=variety == variety_dual,
            )
        )
    return DualityReport(
        n=n,
        k=k,
        k_dual=k_dual,
        betti_ranks=betti(n, k).ranks,
        betti_ranks_dual=betti(n, k_dual).ranks,
        lines=tuple(lines),
    )


# ---------------------------------------------------------------------------
# Table construction (parallelizable) and rendering.


def _betti_task(args: tuple[int, int]) -> BettiVector:
    n, k = args
    return betti(n, k)


def _ktheory_row_task(n: int) -> tuple[int, tuple[tuple[int, KTheoryRanks], ...]]:
    return n, tuple((k, ktheory_ranks(n, k)) for k in divisors(n))


def _parallel_map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def betti_table(max_n: int, k: int, even_only: bool = False, jobs: int = 1) -> list[BettiVector]:
    """Betti vectors for every n <= max_n with k | n (optionally even n only).

    Rows may be computed by a worker pool; the returned order is always
    ascending in n regardless of the worker count.
    """
    ns = [n for n in range(1, max_n + 1) if n % k == 0 and (not even_only or n % 2 == 0)]
    return _parallel_map(_betti_task, [(n, k) for n in ns], jobs)


def ktheory_table(max_n: int, jobs: int = 1) -> list[tuple[int, dict[int, KTheoryRanks]]]:
    """K-theory ranks for n = 2..max_n and every k | n, ascending in n."""
    rows = _parallel_map(_ktheory_row_task, list(range(2, max_n + 1)), jobs)
    return [(n, dict(cells)) for n, cells in rows]


def _csv_text(rows: Iterable[Sequence[str]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)
    return out.getvalue()


def render_betti_csv(vectors: Sequence[BettiVector]) -> str:
    """CSV in the reference-table layout: one row per n, blank cells for
    degrees above the row's top degree."""
    width = max((len(v.ranks) for v in vectors), default=0)
    header = ["n"] + [f"b_{j}" for j in range(width)]
    rows = [header]
    for v in vectors:
        cells = [str(v.n)] + [str(r) for r in v.ranks] + [""] * (width - len(v.ranks))
        rows.append(cells)
    return _csv_text(rows)


def render_betti_markdown(vectors: Sequence[BettiVector]) -> str:
    width = max((len(v.ranks) for v in vectors), default=0)
    header = ["n"] + [f"b_{j}" for j in range(width)]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for v in vectors:
        cells = [str(v.n)] + [str(r) for r in v.ranks] + [""] * (width - len(v.ranks))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_ktheory_csv(rows: Sequence[tuple[int, dict[int, KTheoryRanks]]]) -> str:
    """CSV grid layout: one row per n, one column per k, cells "k0/k1" and
    blanks where k does not divide n."""
    max_k = max((n for n, _ in rows), default=0)
    header = ["n"] + [str(k) for k in range(1, max_k + 1)]
    table = [header]
    for n, cells in rows:
        row = [str(n)]
        for k in range(1, max_k + 1):
            ranks = cells.get(k)
            row.append(f"{ranks.k0}/{ranks.k1}" if ranks is not None else "")
        table.append(row)
    return _csv_text(table)


def render_ktheory_markdown(rows: Sequence[tuple[int, dict[int, KTheoryRanks]]]) -> str:
    max_k = max((n for n, _ in rows), default=0)
    header = ["n"] + [str(k) for k in range(1, max_k + 1)]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for n, cells in rows:
        row = [str(n)]
        for k in range(1, max_k + 1):
            ranks = cells.get(k)
            row.append(f"{ranks.k0}/{ranks.k1}" if ranks is not None else "")
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"
