"""Compute Sigma(G) for the non-soluble corpus groups and freeze the results.

The acceptance suite compares later runs against tests/fixtures/nonsoluble.json.
Rerun only when the corpus definition of these groups changes.
"""

import argparse
import json
import time
from pathlib import Path

from sigmagraph.families import build_from_descriptor, manifest_entry
from sigmagraph.graphs import components_and_diameters, sigma_graph

GROUPS = ["A5", "S5", "PSL(2,7)"]
DEFAULT_OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "nonsoluble.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()
    out = {}
    for name in GROUPS:
        t0 = time.perf_counter()
        G = build_from_descriptor(manifest_entry(name))
        g = sigma_graph(G)
        cd = components_and_diameters(g)
        out[name] = {
            "order": G.order,
            "hash": G.content_hash(),
            "vertices": g.n,
            "edges": g.edge_count,
            "components": cd.count,
            "diameter": cd.diameter,
        }
        print(f"{name}: {out[name]} ({time.perf_counter() - t0:.2f}s)")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
