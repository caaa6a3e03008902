#!/usr/bin/env python3
"""Survey the three characteristic-polynomial routes over the spot hosts.

For every host the infragraph-weight sum, the elementary-subgraph sum and
the determinant oracle must agree coefficient for coefficient; prints one
line per host with timings.
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from eulerpart.corpus import spot_hosts
from eulerpart.veblen import (
    charpoly_determinant_oracle,
    elementary_subgraph_formula,
    hs_characteristic_polynomial,
)


def main():
    hosts = spot_hosts(7)
    print(f"{len(hosts)} hosts; columns: n m agree hs_ms elem_ms det_ms")
    all_ok = True
    for host in hosts:
        t0 = time.perf_counter()
        hs = hs_characteristic_polynomial(host)
        t1 = time.perf_counter()
        elem = elementary_subgraph_formula(host)
        t2 = time.perf_counter()
        det = charpoly_determinant_oracle(host)
        t3 = time.perf_counter()
        ok = hs == elem == det
        all_ok &= ok
        print(
            f"n={host.n} m={host.m:2d} agree={str(ok):5s} "
            f"{1000 * (t1 - t0):9.1f} {1000 * (t2 - t1):8.1f} {1000 * (t3 - t2):7.1f}   {det}"
        )
    print("all routes agree" if all_ok else "DISAGREEMENT FOUND")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
