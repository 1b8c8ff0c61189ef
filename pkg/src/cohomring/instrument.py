"""Process-wide operation counters.

Diagnostic only: the counters let tests and the benchmark confirm that the
sparse product does work proportional to the number of term pairs while the
dense product walks coefficient positions. Not thread safe.
"""

_counts = {"coeff_mul": 0, "dense_positions": 0}


def reset() -> None:
    for key in _counts:
        _counts[key] = 0


def bump(key: str, amount: int = 1) -> None:
    _counts[key] += amount


def counts() -> dict:
    return dict(_counts)
