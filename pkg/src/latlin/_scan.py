"""Chunked witness search with a deterministic min-reduce.

A scanner is a module-level function ``scan(payload, lo, hi)`` that returns the
least witness tuple whose leading index lies in ``range(lo, hi)``, or ``None``.
Splitting the leading index across workers and keeping the minimum returns the
same witness as a sequential scan.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def least_witness(scan, payload, n, jobs=1):
    if jobs <= 1 or n < 2 * jobs:
        return scan(payload, 0, n)
    step = -(-n // jobs)
    bounds = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(scan, payload, lo, hi) for lo, hi in bounds]
        found = [f.result() for f in futures]
    found = [w for w in found if w is not None]
    return min(found) if found else None
