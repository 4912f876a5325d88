"""Regenerate the CLI golden files under tests/golden.

Run after an intentional output change, then review the diff by hand:
the counts in ``*_counts.json`` are checked independently by the tests.
"""

import json
import pathlib

from newtmod.bundled import BUNDLED, bundled_algebra
from newtmod.cli import run_command
from newtmod.enumerate import build_pool

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    GOLDEN.mkdir(exist_ok=True)
    for name, bound in sorted(BUNDLED.items()):
        dims = ",".join(map(str, bound))
        for stem, argv in (
            (f"{name}_verify", ["verify", name, "--max-dim", dims]),
            (f"{name}_pairs", ["enumerate", name, "--max-dim", dims, "--kind", "pairs"]),
        ):
            out = GOLDEN / f"{stem}.json"
            code = run_command(argv + ["--output", str(out)])
            print(f"{stem}: exit {code}")
        pool = build_pool(bundled_algebra(name), bound)
        counts = {
            "max_dim": list(bound),
            "indecomposables": len(pool.indecomposables),
            "bricks": len(pool.brick_indices()),
            "tau_rigid": len(pool.rigid_indices()),
            "tilting_pairs": len(pool.tilting_pairs),
        }
        (GOLDEN / f"{name}_counts.json").write_text(json.dumps(counts, sort_keys=True, indent=1) + "\n")
        print(f"{name}: {counts}")


if __name__ == "__main__":
    main()
