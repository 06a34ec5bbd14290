#!/usr/bin/env python3
"""Tabulate the symbolic Gram determinants of all cell modules for small k
and r, and locate non-semisimple integer parameter points."""

import argparse
from itertools import product

from colorpart.characters import multipartitions
from colorpart.modules_rep import (
    cell_dimension,
    gram_det,
    semisimplicity_certificate,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--scan", type=int, default=3,
                    help="scan integer points with |x_i| <= SCAN")
    args = ap.parse_args()

    r, k = args.r, args.k
    for i in range(k + 1):
        for lam_bar in multipartitions(r, i):
            det = gram_det(r, k, lam_bar)
            dim = cell_dimension(r, k, lam_bar)
            print("lam=%r  dim=%d  det=%r" % (lam_bar, dim, det))

    bad = []
    for x in product(range(-args.scan, args.scan + 1), repeat=r):
        if not any(x):
            continue
        cert = semisimplicity_certificate(r, k, x)
        if not cert["semisimple"]:
            bad.append(x)
    print("non-semisimple integer points (|x_i| <= %d): %d" % (args.scan, len(bad)))
    for x in bad:
        print("  x =", x)


if __name__ == "__main__":
    main()
