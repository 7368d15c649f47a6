"""Run every finite-instance structure check for a range of lengths."""

import argparse
import sys

from lpequiv.verifier import DEFAULT_SEED, run_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-ell", type=int, default=11)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()
    failed = 0
    for ell in range(1, args.max_ell + 1):
        for cert in run_checks(ell, seed=args.seed):
            print(cert.to_line())
            failed += not cert.passed
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
