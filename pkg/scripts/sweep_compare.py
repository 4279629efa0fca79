#!/usr/bin/env python3
"""Sweep generated workloads and tabulate every algorithm against the
buffered look-ahead engine.

Emits one CSV row per (workload, algorithm) pair in the harness CSV
format, ready for plotting. Classical algorithms run under the full
model; the buffered engine uses its own accounting.
"""

import argparse
import sys
from pathlib import Path

from listlab import FULL, generate, run_classic, serve_amr, spec_from_dist_token
from listlab.cli import ComparisonRow, rows_to_csv

CLASSICS = ("static", "mtf", "transpose", "fc")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dists", default="uniform,zipf:1.2,burst:4",
                    help="comma-separated distribution tokens")
    ap.add_argument("--list-size", type=int, default=10)
    ap.add_argument("--length", type=int, default=200)
    ap.add_argument("--seeds", type=int, default=20, help="use seeds 0..N-1")
    ap.add_argument("--buffers", default="1,3,5", help="comma-separated capacities")
    ap.add_argument("-o", "--output", help="CSV path (default: stdout)")
    args = ap.parse_args()

    buffers = [int(tok) for tok in args.buffers.split(",") if tok]
    rows = []
    for dist in [tok for tok in args.dists.split(",") if tok]:
        for seed in range(args.seeds):
            spec = spec_from_dist_token(dist, args.list_size, args.length, seed)
            for capacity in buffers:
                w = generate(spec, buffer_capacity=capacity)
                breakdown, _ = serve_amr(w)
                rows.append(ComparisonRow.from_run("amr", "amr", breakdown, w, seed=seed))
                for algorithm in CLASSICS:
                    breakdown, _, _ = run_classic(algorithm, FULL, w)
                    rows.append(
                        ComparisonRow.from_run(algorithm, "full", breakdown, w, seed=seed)
                    )
    text = rows_to_csv(rows)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {len(rows)} rows to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
