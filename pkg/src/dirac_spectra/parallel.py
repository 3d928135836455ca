"""Thread-pool map capped by the DIRAC_SPECTRA_THREADS environment variable."""

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "DIRAC_SPECTRA_THREADS"


def max_workers():
    """Worker cap from the environment; 1 (serial) when unset or invalid."""
    raw = os.environ.get(ENV_VAR, "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn, items):
    """Ordered map; runs serially unless more than one worker is allowed."""
    items = list(items)
    workers = min(max_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
