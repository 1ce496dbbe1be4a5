"""Command-line front end.

Commands: decompose, betti, ktheory, euler, table, duality, verify,
component.  Exit codes: 0 success, 1 verification mismatch, 2 usage or
domain error.  Output in json/csv mode is deterministic across runs and
across worker counts; the EXTQUOT_JOBS environment variable overrides the
--jobs flag (default: all cores).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

import click

from . import reference, topology
from .complex_quotient import QuotientCatalog, decompose_complex
from .partitions import Partition
from .real_quotient import decompose_real
from .topology import (
    betti,
    duality_report,
    euler_characteristic,
    ktheory_ranks,
    render_betti_csv,
    render_betti_markdown,
    render_ktheory_csv,
    render_ktheory_markdown,
)

JOBS_ENV_VAR = "EXTQUOT_JOBS"


@dataclass(frozen=True)
class CliConfig:
    """Validated per-invocation options shared by the subcommands."""

    command: str
    n: int
    k: int = 1
    partition: Partition | None = None
    form: str = "complex"
    format: str = "markdown"
    max_n: int = 0
    jobs: int = 1

    def validate(self) -> None:
        if self.n < 1 or self.k < 1 or self.n % self.k != 0:
            raise click.UsageError(f"k={self.k} must divide n={self.n}")
        if self.partition is not None and self.partition.n != self.n:
            raise click.UsageError(
                f"partition {self.partition} sums to {self.partition.n}, not n={self.n}"
            )


def parse_partition(text: str) -> Partition:
    """Parse "1+1+2+2", "4,4,4,4" or run-length "2^2,4^1" syntax."""
    parts: list[int] = []
    for token in text.replace("+", ",").split(","):
        token = token.strip()
        base, _, mult = token.partition("^")
        try:
            j = int(base)
            m = int(mult) if mult else 1
        except ValueError:
            raise click.UsageError(f"malformed partition {text!r}") from None
        if j < 1 or m < 1:
            raise click.UsageError(f"malformed partition {text!r}")
        parts.extend([j] * m)
    if not parts:
        raise click.UsageError(f"malformed partition {text!r}")
    return Partition.from_parts(parts)


def resolve_jobs(flag: int | None) -> int:
    env = os.environ.get(JOBS_ENV_VAR)
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise click.UsageError(f"{JOBS_ENV_VAR}={env!r} is not an integer") from None
    if flag is not None:
        return max(1, flag)
    return os.cpu_count() or 1


def _omega_str(entry, k: int) -> str:
    exponent = entry.omega.zeta_exponent(k)
    return "1" if exponent == 0 else f"z^{exponent}"


def _variety_str(entry) -> str:
    pieces = []
    if entry.torus_dim > 0:
        pieces.append(f"C*^{entry.torus_dim}")
    s = entry.singularity
    if s.ambient_dim > 0:
        piece = f"A^{s.ambient_dim}"
        if s.group_order > 1:
            piece += f"/C_{s.group_order}({','.join(str(w) for w in s.weights)})"
        pieces.append(piece)
    return " x ".join(pieces) if pieces else "A^0"


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _render_catalog_markdown(catalog: QuotientCatalog) -> str:
    lines = []
    if catalog.form == "complex":
        lines.append("| mu | omega | X | variety |")
        lines.append("|---|---|---|---|")
        for entry in catalog.entries:
            lines.append(
                f"| {entry.partition} | {_omega_str(entry, catalog.k)} "
                f"| {entry.multiplicity} | {_variety_str(entry)} |"
            )
    else:
        header = ["mu", "omega", "X", "base", "fiber dims", "C_d", "joins", "fiber action preserves orientation"]
        if catalog.k == 1:
            header.append("bundle orientable")
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for entry in catalog.entries:
            cells = [
                str(entry.partition),
                _omega_str(entry, catalog.k),
                str(entry.multiplicity),
                f"T^{entry.base_torus_dim}",
                ",".join(str(d) for d in entry.fiber_simplex_dims),
                str(entry.cyclic_order),
                ",".join(str(c) for c in entry.join_counts),
                _flag(entry.action_orientation_preserving),
            ]
            if catalog.k == 1:
                cells.append(_flag(entry.bundle_orientable))
            lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def _render_catalog_csv(catalog: QuotientCatalog) -> str:
    import csv
    import io

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = [
        "partition", "omega_exponent", "omega_order", "torus_dim", "multiplicity",
        "ambient_dim", "group_order", "weights",
    ]
    if catalog.form == "real":
        header += ["fiber_simplex_dims", "join_counts", "action_orientation_preserving"]
        if catalog.k == 1:
            header.append("bundle_orientable")
    writer.writerow(header)
    for entry in catalog.entries:
        data = entry.to_dict()
        sing = data["singularity"]
        row = [
            str(entry.partition),
            data["omega_exponent"],
            data["omega_order"],
            data["torus_dim"],
            data["multiplicity"],
            sing["ambient_dim"],
            sing["group_order"],
            " ".join(str(w) for w in sing["weights"]),
        ]
        if catalog.form == "real":
            row += [
                " ".join(str(d) for d in data["fiber_simplex_dims"]),
                " ".join(str(c) for c in data["join_counts"]),
                _flag(data["action_orientation_preserving"]),
            ]
            if catalog.k == 1:
                row.append(_flag(data["bundle_orientable"]))
        writer.writerow(row)
    return out.getvalue()


def _emit_catalog(catalog: QuotientCatalog, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(catalog.to_json_dict(), indent=2))
    elif fmt == "csv":
        click.echo(_render_catalog_csv(catalog), nl=False)
    else:
        click.echo(_render_catalog_markdown(catalog), nl=False)


@click.group()
@click.version_option()
def main() -> None:
    """Extended-quotient calculator for the tori of SL_n(C)/C_k and SU_n(C)/C_k."""


@main.command()
@click.option("--n", type=int, required=True, help="rank parameter n")
@click.option("--k", type=int, default=1, show_default=True, help="divisor of n")
@click.option("--form", type=click.Choice(["complex", "real"]), default="complex", show_default=True)
@click.option("--partition", "partition_text", default=None, help="restrict to one partition of n")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "markdown"]), default="markdown", show_default=True)
def decompose(n: int, k: int, form: str, partition_text: str | None, fmt: str) -> None:
    """Print the component catalog of the (n, k) extended quotient."""
    partition = parse_partition(partition_text) if partition_text else None
    config = CliConfig(command="decompose", n=n, k=k, partition=partition, form=form, format=fmt)
    config.validate()
    catalog = decompose_complex(n, k) if form == "complex" else decompose_real(n, k)
    if partition is not None:
        entries = tuple(e for e in catalog.entries if e.partition == partition)
        catalog = QuotientCatalog(n=n, k=k, form=form, entries=entries)
    _emit_catalog(catalog, fmt)


@main.command(name="betti")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def betti_cmd(n: int, k: int, fmt: str) -> None:
    """Print the Betti vector b_0 .. b_D for (n, k)."""
    CliConfig(command="betti", n=n, k=k).validate()
    vector = betti(n, k)
    if fmt == "json":
        click.echo(json.dumps({"n": n, "k": k, "betti": list(vector.ranks)}))
    else:
        click.echo(" ".join(str(r) for r in vector.ranks))


@main.command(name="ktheory")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def ktheory_cmd(n: int, k: int, fmt: str) -> None:
    """Print the K0 and K1 ranks for (n, k)."""
    CliConfig(command="ktheory", n=n, k=k).validate()
    ranks = ktheory_ranks(n, k)
    if fmt == "json":
        click.echo(json.dumps({"n": n, "k": k, "k0": ranks.k0, "k1": ranks.k1}))
    else:
        click.echo(f"{ranks.k0} {ranks.k1}")


@main.command(name="euler")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def euler_cmd(n: int, k: int, fmt: str) -> None:
    """Print the Euler characteristic for (n, k)."""
    CliConfig(command="euler", n=n, k=k).validate()
    chi = euler_characteristic(n, k)
    if fmt == "json":
        click.echo(json.dumps({"n": n, "k": k, "euler": chi}))
    else:
        click.echo(str(chi))


@main.command(name="table")
@click.argument("kind", type=click.Choice(["betti", "ktheory"]))
@click.option("--max-n", type=int, required=True)
@click.option("--k", type=int, default=1, show_default=True, help="row filter for betti tables")
@click.option("--even-only", is_flag=True, default=False, help="restrict rows to even n")
@click.option("--format", "fmt", type=click.Choice(["csv", "markdown"]), default="csv", show_default=True)
@click.option("--jobs", type=int, default=None, help=f"worker count (default: all cores; {JOBS_ENV_VAR} overrides)")
def table_cmd(kind: str, max_n: int, k: int, even_only: bool, fmt: str, jobs: int | None) -> None:
    """Emit a full table in the reference layout."""
    if max_n < 0 or k < 1:
        raise click.UsageError("max-n must be nonnegative and k positive")
    workers = resolve_jobs(jobs)
    if kind == "betti":
        vectors = topology.betti_table(max_n, k, even_only=even_only, jobs=workers)
        text = render_betti_csv(vectors) if fmt == "csv" else render_betti_markdown(vectors)
    else:
        rows = topology.ktheory_table(max_n, jobs=workers)
        text = render_ktheory_csv(rows) if fmt == "csv" else render_ktheory_markdown(rows)
    click.echo(text, nl=False)


@main.command(name="duality")
@click.option("--n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.pass_context
def duality_cmd(ctx: click.Context, n: int, fmt: str) -> None:
    """Check Langlands duality for every divisor k of n."""
    if n < 1:
        raise click.UsageError("n must be positive")
    from .numtheory import divisors

    reports = [duality_report(n, k) for k in divisors(n)]
    failed = any(not report.ok for report in reports)
    if fmt == "json":
        payload = []
        for report in reports:
            payload.append({
                "n": report.n,
                "k": report.k,
                "k_dual": report.k_dual,
                "betti_equal": report.betti_equal,
                "counts_equal": report.counts_equal,
                "singularity_differences": [
                    str(p) for p in report.partitions_with_singularity_differences()
                ],
            })
        click.echo(json.dumps(payload, indent=2))
    else:
        for report in reports:
            status = "ok" if report.ok else "MISMATCH"
            line = (
                f"n={report.n} k={report.k} <-> k'={report.k_dual}: betti "
                f"{'=' if report.betti_equal else '!='} dual, counts "
                f"{'=' if report.counts_equal else '!='} dual [{status}]"
            )
            diffs = report.partitions_with_singularity_differences()
            if diffs:
                line += " (singularity structure differs for: " + ", ".join(str(p) for p in diffs) + ")"
            click.echo(line)
    if failed:
        ctx.exit(1)


@main.command(name="verify")
@click.argument("suite", type=click.Choice(["paper", "all"]))
@click.option("--table", "tables", multiple=True, type=click.Choice(reference.TABLE_IDS),
              help="restrict to specific reference tables")
@click.option("--fixture-dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="read fixtures from an alternate directory")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--jobs", type=int, default=None, help=f"worker count (default: all cores; {JOBS_ENV_VAR} overrides)")
@click.pass_context
def verify_cmd(ctx: click.Context, suite: str, tables: tuple[str, ...], fixture_dir: str | None,
               fmt: str, jobs: int | None) -> None:
    """Recompute reference tables (and, for suite=all, the property suites)."""
    workers = resolve_jobs(jobs)
    selected = tables or reference.TABLE_IDS
    reports = [
        reference.verify(table_id, jobs=workers, fixture_dir=fixture_dir)
        for table_id in selected
    ]
    if suite == "all":
        reports.extend(fn() for fn in reference.PROPERTY_SUITES.values())
    clean = all(report.ok for report in reports)
    if fmt == "json":
        payload = {
            "suite": suite,
            "ok": clean,
            "reports": [
                {
                    "table": report.table_id,
                    "cells_checked": report.cells_checked,
                    "mismatches": [
                        {"location": m.location, "expected": m.expected, "actual": m.actual}
                        for m in report.mismatches
                    ],
                }
                for report in reports
            ],
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        for report in reports:
            click.echo(report.summary())
            for m in report.mismatches:
                click.echo(f"  {m.location}: expected {m.expected!r}, got {m.actual!r}")
        click.echo("verification " + ("clean" if clean else "FAILED"))
    if not clean:
        ctx.exit(1)


@main.command(name="component")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=1, show_default=True)
@click.option("--partition", "partition_text", required=True)
@click.option("--omega-exponent", type=int, default=0, show_default=True)
@click.option("--form", type=click.Choice(["complex", "real"]), default="complex", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
def component_cmd(n: int, k: int, partition_text: str, omega_exponent: int, form: str, fmt: str) -> None:
    """Print a single component, selected by partition and omega exponent."""
    from .complex_quotient import OmegaLabel, complex_component
    from .partitions import invariants
    from .real_quotient import real_component

    partition = parse_partition(partition_text)
    config = CliConfig(command="component", n=n, k=k, partition=partition, form=form)
    config.validate()
    import math

    h = math.gcd(invariants(partition).g, k)
    if not 0 <= omega_exponent < h:
        raise click.UsageError(f"omega exponent must lie in 0..{h - 1} for this partition")
    omega = OmegaLabel(h, omega_exponent)
    if form == "complex":
        entry = complex_component(partition, omega, n, k)
    else:
        entry = real_component(partition, omega, n, k)
    if fmt == "json":
        click.echo(json.dumps(entry.to_dict(), indent=2))
    elif form == "complex":
        click.echo(
            f"mu={entry.partition} omega={_omega_str(entry, k)} |X|={entry.multiplicity} "
            f"variety={_variety_str(entry)}"
        )
    else:
        click.echo(
            f"mu={entry.partition} omega={_omega_str(entry, k)} |X|={entry.multiplicity} "
            f"base=T^{entry.base_torus_dim} fiber={','.join(str(d) for d in entry.fiber_simplex_dims)} "
            f"C_d={entry.cyclic_order} orientation_preserving={_flag(entry.action_orientation_preserving)}"
        )


if __name__ == "__main__":
    main()
