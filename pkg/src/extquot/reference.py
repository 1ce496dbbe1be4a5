"""Bundled reference tables and the regression diff engine.

The CSV fixtures under ``data/`` hold transcribed ground-truth values (Betti
tables for k = 1 and k = 2, the K-theory rank grid, the n = 6 complex
catalogs for all four k, the n = 16 worked cases, and the n = 6 real
orientability table).  They are checked in as plain text precisely so they
are reviewable, and they are never regenerated from the code they verify.

:func:`verify` recomputes every cell of a table and reports per-cell
mismatches; the property suites re-run the cross-cutting identities (closed
form vs. brute force, duality, Euler characteristic, top Betti numbers).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from .complex_quotient import (
    canonical_singularity,
    complex_component,
    component_count_from_gcd,
    decompose_complex,
    enumerate_omegas,
)
from .numtheory import divisor_sigma, divisors, pillai, pillai_via_totient
from .partitions import Partition, iter_gcd_distinct
from .real_quotient import bundle_orientable_k1, decompose_real
from .topology import (
    _betti_task,
    _parallel_map,
    betti,
    euler_characteristic,
    ktheory_ranks,
    top_betti,
)

TABLE_IDS = (
    "betti_k1",
    "betti_k2",
    "ktheory",
    "sl6_catalogs",
    "sl16_examples",
    "su6_orientability",
)


@dataclass(frozen=True)
class Mismatch:
    location: str
    expected: str
    actual: str


@dataclass
class DiffReport:
    table_id: str
    cells_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.mismatches)} mismatch(es)"
        return f"{self.table_id}: {self.cells_checked} cells checked, {status}"


def fixture_path(table_id: str, fixture_dir: str | Path | None = None) -> Path:
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown reference table {table_id!r}")
    base = Path(fixture_dir) if fixture_dir is not None else Path(__file__).parent / "data"
    return base / f"{table_id}.csv"


def fixture_text(table_id: str, fixture_dir: str | Path | None = None) -> str:
    return fixture_path(table_id, fixture_dir).read_text(encoding="utf-8")


def load_rows(table_id: str, fixture_dir: str | Path | None = None) -> list[dict[str, str]]:
    with open(fixture_path(table_id, fixture_dir), newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def verify(
    table_id: str,
    *,
    jobs: int = 1,
    fixture_dir: str | Path | None = None,
    computed=None,
) -> DiffReport:
    """Recompute every cell of the table and diff it against the fixture.

    ``computed`` lets callers hand in already-computed values (a list of
    BettiVector for the Betti tables) so that expensive sweeps are not run
    twice; by default everything is recomputed here.
    """
    rows = load_rows(table_id, fixture_dir)
    if table_id in ("betti_k1", "betti_k2"):
        k = 1 if table_id == "betti_k1" else 2
        return _verify_betti(table_id, rows, k, jobs, computed)
    if table_id == "ktheory":
        return _verify_ktheory(table_id, rows, jobs)
    if table_id in ("sl6_catalogs", "sl16_examples"):
        return _verify_catalog(table_id, rows)
    if table_id == "su6_orientability":
        return _verify_su6(table_id, rows)
    raise ValueError(f"unknown reference table {table_id!r}")


def _verify_betti(table_id, rows, k, jobs, computed) -> DiffReport:
    report = DiffReport(table_id)
    ns = [int(row["n"]) for row in rows]
    if computed is None:
        computed = _parallel_map(_betti_task, [(n, k) for n in ns], jobs)
    by_n = {vector.n: vector for vector in computed}
    for row in rows:
        n = int(row["n"])
        vector = by_n.get(n)
        degree = 0
        while f"b_{degree}" in row:
            expected = row[f"b_{degree}"]
            if vector is None or degree >= len(vector.ranks):
                actual = ""
            else:
                actual = str(vector.ranks[degree])
            report.cells_checked += 1
            if expected != actual:
                report.mismatches.append(Mismatch(f"n={n} b_{degree}", expected, actual))
            degree += 1
    return report


def _verify_ktheory(table_id, rows, jobs) -> DiffReport:
    report = DiffReport(table_id)
    columns = [int(c) for c in rows[0] if c != "n"]
    for row in rows:
        n = int(row["n"])
        for k in columns:
            expected = row[str(k)]
            if n % k == 0:
                ranks = ktheory_ranks(n, k)
                actual = f"{ranks.k0}/{ranks.k1}"
            else:
                actual = ""
            report.cells_checked += 1
            if expected != actual:
                report.mismatches.append(Mismatch(f"n={n} k={k}", expected, actual))
    return report


def _catalog_fields(entry) -> dict[str, str]:
    canon = canonical_singularity(entry.singularity)
    return {
        "partition": str(entry.partition),
        "omega_exponent": str(entry.omega.exponent),
        "omega_order": str(entry.omega.order),
        "x_card": str(entry.multiplicity),
        "torus_dim": str(entry.torus_dim),
        "ambient_dim": str(canon.ambient_dim),
        "group_order": str(canon.group_order),
        "weights": " ".join(str(w) for w in canon.weights),
    }


def _verify_catalog(table_id, rows) -> DiffReport:
    report = DiffReport(table_id)
    groups: dict[tuple[int, int], list[dict[str, str]]] = {}
    for row in rows:
        groups.setdefault((int(row["n"]), int(row["k"])), []).append(row)
    for (n, k), expected_rows in groups.items():
        if table_id == "sl6_catalogs":
            entries = list(decompose_complex(n, k).entries)
        else:
            partitions = sorted({row["partition"] for row in expected_rows})
            entries = []
            for text in sorted(partitions):
                mu = Partition.from_parts(int(p) for p in text.split("+"))
                entries.extend(complex_component(mu, om, n, k) for om in enumerate_omegas(mu, n, k))
            entries.sort(key=lambda e: (str(e.partition), e.omega.exponent))
            expected_rows = sorted(expected_rows, key=lambda r: (r["partition"], int(r["omega_exponent"])))
        report.cells_checked += 1
        if len(entries) != len(expected_rows):
            report.mismatches.append(
                Mismatch(f"n={n} k={k} row count", str(len(expected_rows)), str(len(entries)))
            )
            continue
        for idx, (row, entry) in enumerate(zip(expected_rows, entries)):
            actual = _catalog_fields(entry)
            for name in ("partition", "omega_exponent", "omega_order", "x_card",
                         "torus_dim", "ambient_dim", "group_order", "weights"):
                report.cells_checked += 1
                if row[name] != actual[name]:
                    report.mismatches.append(
                        Mismatch(f"n={n} k={k} row {idx} {name}", row[name], actual[name])
                    )
    return report


def _verify_su6(table_id, rows) -> DiffReport:
    report = DiffReport(table_id)
    catalog = decompose_real(6, 1)
    entries = list(catalog.entries)
    report.cells_checked += 1
    if len(entries) != len(rows):
        report.mismatches.append(Mismatch("row count", str(len(rows)), str(len(entries))))
        return report
    for idx, (row, entry) in enumerate(zip(rows, entries)):
        mu = entry.partition
        g = math.gcd(*(j for j, _ in mu.runs))
        actual = {
            "partition": str(mu),
            "jg_vector": " ".join(str(j // g) for j, _ in mu.runs),
            "m_minus_one_vector": " ".join(str(m - 1) for _, m in mu.runs),
            "x_card": str(entry.multiplicity),
            "orientable": "Yes" if bundle_orientable_k1(mu) else "No",
        }
        for name in ("partition", "jg_vector", "m_minus_one_vector", "x_card", "orientable"):
            report.cells_checked += 1
            if row[name] != actual[name]:
                report.mismatches.append(Mismatch(f"row {idx} {name}", row[name], actual[name]))
    return report


# ---------------------------------------------------------------------------
# Property suites: cross-cutting identities re-checked over ranges of n.


def property_oracle_equivalence(max_n: int = 40) -> DiffReport:
    """Closed-form component counts vs. the brute-force sum over omega.

    Both sides depend on a partition only through the gcd of its parts, so
    each partition of each n is covered by checking its gcd class.
    """
    report = DiffReport("oracle_equivalence")
    for n in range(1, max_n + 1):
        gcds = {g for g, _ in iter_gcd_distinct(n)}
        for k in divisors(n):
            for g in sorted(gcds):
                h = math.gcd(g, k)
                brute = sum(
                    math.gcd(g // (h // math.gcd(h, e)), n // k) for e in range(h)
                )
                closed = component_count_from_gcd(g, n, k)
                report.cells_checked += 1
                if closed != brute:
                    report.mismatches.append(
                        Mismatch(f"n={n} k={k} g={g}", str(brute), str(closed))
                    )
    return report


def property_pillai(max_a: int = 10000) -> DiffReport:
    """pillai(a) == pillai_via_totient(a) for a up to max_a."""
    report = DiffReport("pillai_equivalence")
    for a in range(1, max_a + 1):
        report.cells_checked += 1
        lhs, rhs = pillai(a), pillai_via_totient(a)
        if lhs != rhs:
            report.mismatches.append(Mismatch(f"a={a}", str(lhs), str(rhs)))
    return report


def property_duality(max_n: int = 30) -> DiffReport:
    """Betti vectors and per-gcd component counts invariant under k <-> n/k."""
    report = DiffReport("duality")
    for n in range(1, max_n + 1):
        gcds = {g for g, _ in iter_gcd_distinct(n)}
        for k in divisors(n):
            report.cells_checked += 1
            lhs = betti(n, k).ranks
            rhs = betti(n, n // k).ranks
            if lhs != rhs:
                report.mismatches.append(Mismatch(f"betti n={n} k={k}", str(rhs), str(lhs)))
            for g in sorted(gcds):
                report.cells_checked += 1
                count = component_count_from_gcd(g, n, k)
                count_dual = component_count_from_gcd(g, n, n // k)
                if count != count_dual:
                    report.mismatches.append(
                        Mismatch(f"count n={n} k={k} g={g}", str(count_dual), str(count))
                    )
    return report


def property_euler_divisor(max_n: int = 45) -> DiffReport:
    """Euler characteristic at k = 1 equals the divisor sum."""
    report = DiffReport("euler_divisor_sum")
    for n in range(1, max_n + 1):
        report.cells_checked += 1
        chi = euler_characteristic(n, 1)
        sigma = divisor_sigma(n)
        if chi != sigma:
            report.mismatches.append(Mismatch(f"n={n}", str(sigma), str(chi)))
    return report


def property_top_betti(max_n: int = 45) -> DiffReport:
    """Closed-form top degree and rank agree with the Betti vector's last entry."""
    report = DiffReport("top_betti")
    for n in range(1, max_n + 1):
        report.cells_checked += 1
        vector = betti(n, 1)
        expected = (vector.top_degree, vector.ranks[-1])
        actual = top_betti(n)
        if expected != actual:
            report.mismatches.append(Mismatch(f"n={n}", str(expected), str(actual)))
    return report


PROPERTY_SUITES = {
    "oracle_equivalence": property_oracle_equivalence,
    "pillai_equivalence": property_pillai,
    "duality": property_duality,
    "euler_divisor_sum": property_euler_divisor,
    "top_betti": property_top_betti,
}
