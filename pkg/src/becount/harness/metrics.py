from __future__ import annotations


def diff_sum_ratio(a: float, b: float) -> float:
    """``(a - b) / (a + b)``: near 1 when ``a >> b``, 0 when equal."""
    if a < 0 or b < 0:
        raise ValueError("diff_sum_ratio expects non-negative values")
    if a + b == 0:
        raise ZeroDivisionError("diff_sum_ratio undefined for a + b == 0")
    return (a - b) / (a + b)
