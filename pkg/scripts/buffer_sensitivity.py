#!/usr/bin/env python3
"""Show how the buffered engine's total cost responds to buffer capacity
on a single generated workload, next to the static/full baseline.
"""

import argparse
import sys

from listlab import FULL, generate, run_classic, serve_amr, spec_from_dist_token


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dist", default="zipf:1.2")
    ap.add_argument("--list-size", type=int, default=12)
    ap.add_argument("--length", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-buffer", type=int, default=8)
    args = ap.parse_args()

    spec = spec_from_dist_token(args.dist, args.list_size, args.length, args.seed)
    baseline, _, _ = run_classic("static", FULL, generate(spec, buffer_capacity=0))
    print(f"# dist={args.dist} list-size={args.list_size} length={args.length} seed={args.seed}")
    print(f"# static/full baseline total={baseline.total}")
    print("buffer\taccess\tmatching\treplacement\ttotal")
    for capacity in range(args.max_buffer + 1):
        w = generate(spec, buffer_capacity=capacity)
        b, _ = serve_amr(w)
        print(f"{capacity}\t{b.access}\t{b.matching}\t{b.replacement}\t{b.total}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
