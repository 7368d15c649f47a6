"""Classify Legendre pairs for several lengths and print (or save) the reports.

    python3 scripts/census.py 3 5 7 9 11 13 --workers 4 --outdir runs/
"""

import argparse
import time
from pathlib import Path

from lpequiv.search import SearchConfig, classify_lps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ells", type=int, nargs="+")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--outdir", type=Path)
    args = ap.parse_args()
    if args.outdir:
        args.outdir.mkdir(parents=True, exist_ok=True)
    for ell in args.ells:
        t0 = time.perf_counter()
        report = classify_lps(SearchConfig(ell, mode="representatives", workers=args.workers))
        text = report.to_text()
        assert report.checksum_ok
        print(f"# ell={ell}: {report.total_lps} LPs, {len(report.classes)} classes, {time.perf_counter() - t0:.2f}s")
        if args.outdir:
            (args.outdir / f"classify_{ell}.tsv").write_text(text)
        else:
            print(text, end="")


if __name__ == "__main__":
    main()
