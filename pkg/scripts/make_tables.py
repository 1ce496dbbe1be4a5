#!/usr/bin/env python3
"""Regenerate the full set of reference-layout tables into an output directory.

Writes betti_k1.csv (n <= 45), betti_k2.csv (even n <= 60) and ktheory.csv
(n <= 20) computed from scratch, plus markdown versions.  Useful for eyeballing
larger ranges than the bundled fixtures cover, e.g.:

    python scripts/make_tables.py --out build/tables --max-n-betti 50 --jobs 4
"""

import argparse
import os
from pathlib import Path

from extquot import topology


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("build/tables"))
    parser.add_argument("--max-n-betti", type=int, default=45)
    parser.add_argument("--max-n-betti-k2", type=int, default=60)
    parser.add_argument("--max-n-ktheory", type=int, default=20)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)

    k1 = topology.betti_table(args.max_n_betti, 1, jobs=args.jobs)
    (args.out / "betti_k1.csv").write_text(topology.render_betti_csv(k1))
    (args.out / "betti_k1.md").write_text(topology.render_betti_markdown(k1))

    k2 = topology.betti_table(args.max_n_betti_k2, 2, even_only=True, jobs=args.jobs)
    (args.out / "betti_k2.csv").write_text(topology.render_betti_csv(k2))
    (args.out / "betti_k2.md").write_text(topology.render_betti_markdown(k2))

    kt = topology.ktheory_table(args.max_n_ktheory, jobs=args.jobs)
    (args.out / "ktheory.csv").write_text(topology.render_ktheory_csv(kt))
    (args.out / "ktheory.md").write_text(topology.render_ktheory_markdown(kt))

    print(f"wrote 6 tables to {args.out}")


if __name__ == "__main__":
    main()
