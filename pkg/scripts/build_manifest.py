"""Regenerate src/sigmagraph/data/corpus.json from the builtin descriptor list.

Each entry gains an "order" field (computed by building the group) so that
--max-order filtering needs no group construction.
"""

import argparse
import json
from pathlib import Path

from sigmagraph.families import build_from_descriptor, builtin_descriptors

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "sigmagraph" / "data" / "corpus.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    ap.add_argument("--check", action="store_true", help="fail if the file on disk is stale")
    args = ap.parse_args()
    entries = []
    for d in builtin_descriptors():
        G = build_from_descriptor(d)
        entries.append({**d, "order": G.order})
    text = json.dumps(entries, indent=1, sort_keys=True) + "\n"
    if args.check:
        current = args.out.read_text() if args.out.exists() else ""
        if current != text:
            raise SystemExit(f"{args.out} is stale; rerun scripts/build_manifest.py")
        print(f"{args.out} is up to date ({len(entries)} entries)")
        return
    args.out.write_text(text)
    print(f"wrote {len(entries)} descriptors to {args.out}")


if __name__ == "__main__":
    main()
