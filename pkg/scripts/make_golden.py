"""Freeze census golden files from the brute-force oracle.

Usage: python scripts/make_golden.py [ell ...]   (default: 3 5 7)
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracles import brute_force_census, brute_force_lps, census_text  # noqa: E402


def main(argv):
    ells = [int(x) for x in argv] or [3, 5, 7]
    out_dir = ROOT / "tests" / "golden"
    out_dir.mkdir(exist_ok=True)
    for ell in ells:
        full = brute_force_lps(ell)
        constrained = brute_force_lps(ell, sum_constrained=True)
        if full != constrained:
            raise SystemExit(f"ell={ell}: sum-constrained scan disagrees with the full scan")
        total, classes = brute_force_census(ell, full)
        if total != sum(size for _, size in classes):
            raise SystemExit(f"ell={ell}: orbit sizes do not add up")
        path = out_dir / f"classify_{ell}.tsv"
        path.write_text(census_text(ell, total, classes))
        print(f"ell={ell}: {total} LPs in {len(classes)} classes -> {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main(sys.argv[1:])
