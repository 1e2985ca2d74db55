"""Seeded equi-satisfiability sweep for the cluster-modulator kernel.

Draws random instances with a planted modulator of size d, runs the
kernelize-decide-lift pipeline for every color budget k up to the
variant's threshold, and compares each decision with the exact oracle
on the original graph.  Also reports how much the reduction shrinks
the instances it does not short-circuit.

Usage: python3 scripts/kernel_equisat_sweep.py [--d 1,2,3] [--seeds 50] [--n-max 12]
"""

import argparse
import time

from cfcolor.coloring import VARIANTS, VARIANT_CN, verify
from cfcolor.generators import random_cluster_modulator_instance
from cfcolor.oracle import decide_cf
from cfcolor.fpt import solve_via_kernel


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", default="1,2,3", help="comma-separated modulator sizes")
    ap.add_argument("--seeds", type=int, default=50, help="instances per d")
    ap.add_argument("--n-max", type=int, default=12, help="largest instance size")
    args = ap.parse_args()
    d_values = [int(tok) for tok in args.d.split(",") if tok.strip()]

    t0 = time.perf_counter()
    for d in d_values:
        decisions = mismatches = shortcut = 0
        kept = orig = 0
        for seed in range(args.seeds):
            n = max(d + 3, 6 + seed % max(1, args.n_max - 5))
            g, m = random_cluster_modulator_instance(min(n, args.n_max), d, seed)
            for variant in VARIANTS:
                k_max = d + 2 if variant == VARIANT_CN else 2 * d + 2
                for k in range(1, k_max + 1):
                    want, _ = decide_cf(g, variant, k, limit=None)
                    dec = solve_via_kernel(g, m, k, variant, limit=None)
                    decisions += 1
                    if dec.yes != want:
                        mismatches += 1
                        print("MISMATCH", d, seed, variant, k)
                    if dec.yes:
                        assert verify(dec.witness, variant)
                    if dec.kernel.short_circuit is not None:
                        shortcut += 1
                    else:
                        kept += dec.kernel.graph.n
                        orig += g.n
        ratio = kept / orig if orig else float("nan")
        print(f"d={d}: {decisions} decisions, {mismatches} mismatches, "
              f"{shortcut} short-circuits, mean kernel/original = {ratio:.2f}")
    print(f"done in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
