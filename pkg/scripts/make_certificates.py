"""Regenerate the stored small-grid certificates by annealing.

For each n the target starts at 2n - 1 and drops by one whenever the
per-target time budget runs out.  Usage::

    python scripts/make_certificates.py [max_n] [seconds_per_target]
"""

import json
import sys
from pathlib import Path

from gridcoloring.grid import build_grid, verify
from gridcoloring.search import SearchConfig, local_search

OUT = Path(__file__).resolve().parents[1] / "src" / "gridcoloring" / "data" / "certificates.json"


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 19
    secs = float(sys.argv[2]) if len(sys.argv) > 2 else 300.0
    certs = json.loads(OUT.read_text()) if OUT.exists() else {}
    for n in range(2, max_n + 1):
        have = certs.get(str(n), {}).get("k", 0)
        for k in range(2 * n - 1, have, -1):
            cfg = SearchConfig(k=k, strategy="local", seed=n, max_seconds=secs)
            out = local_search(build_grid([n, n]), cfg)
            print(f"n={n} k={k}: {out.status} ({out.elapsed:.1f}s, best cost {out.best_cost})", flush=True)
            if out.found:
                assert verify(out.witness, k).is_complete
                certs[str(n)] = {"k": k, "seed": n, "cells": out.witness.to_flat()}
                OUT.write_text(json.dumps(certs, indent=1, sort_keys=True) + "\n")
                break


if __name__ == "__main__":
    main()
