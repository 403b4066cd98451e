"""Bisection on a bracketed sign change.

All one-dimensional searches in this package are bisections: every bracket
comes with an argument for why the function crosses zero exactly once inside
it, so bisection is both sufficient and robust near tangency.
"""

from __future__ import annotations

from typing import Callable


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    residual_tol: float = 0.0,
    width_tol: float = 0.0,
    max_iter: int = 200,
) -> float:
    """Locate the sign change of f on [lo, hi].

    Stops when |f(mid)| <= residual_tol (if set), when the bracket width
    drops below width_tol (if set), or after max_iter halvings.  The caller
    guarantees a single sign change; a root sitting exactly on an endpoint
    is fine.
    """
    f_lo = f(lo)
    if residual_tol and abs(f_lo) <= residual_tol:
        return lo
    if residual_tol:
        f_hi = f(hi)
        if abs(f_hi) <= residual_tol:
            return hi
    lo_positive = f_lo > 0.0
    for _ in range(max_iter):
        if width_tol and (hi - lo) <= width_tol:
            break
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:  # exhausted float resolution
            break
        v = f(mid)
        if residual_tol and abs(v) <= residual_tol:
            return mid
        if (v > 0.0) == lo_positive:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
