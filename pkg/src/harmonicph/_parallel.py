"""Optional thread parallelism, capped by the HARMONIC_PH_THREADS env var.

HARMONIC_PH_THREADS unset or "1" means serial execution; "0" means one
worker per CPU. Results are always returned in input order, so parallel and
serial runs produce identical output.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "HARMONIC_PH_THREADS"


def max_workers() -> int:
    raw = os.environ.get(ENV_VAR, "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    if n == 0:
        return os.cpu_count() or 1
    return max(n, 1)


def pmap(fn, items) -> list:
    items = list(items)
    workers = max_workers()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
