"""Closed-form star witnesses for cycles, paths, and two-dimensional grids.

Each function returns a witness whose realization is exactly the named graph
under the package's vertex numbering (cycles: 0..n-1 around the cycle; grids:
row-major flat ids).
"""

from __future__ import annotations

from .stars import Witness


def cycle_witness(n: int) -> Witness:
    """Two-interval witness for the cycle on n >= 3 vertices.

    Weights alternate between a descending high band and an ascending low band
    so consecutive vertices sum into a narrow window; the second interval is a
    singleton that accepts only the wrap-around edge.
    """
    if n < 3:
        raise ValueError(f"cycle witness needs n >= 3, got {n}")
    if n % 2 == 0:
        base = n + n // 2
        weights = tuple(
            base - (i - 1) // 2 if i % 2 == 1 else i // 2
            for i in range(1, n + 1)
        )
        intervals = ((base, base + 1), (2 * n, 2 * n))
    else:
        weights = tuple(
            n - 1 if i == n else (n + i if i % 2 == 1 else n - i)
            for i in range(1, n + 1)
        )
        intervals = ((2 * n - 1, 2 * n + 1), (n, n))
    return Witness(weights, intervals)


def path_witness(n: int) -> Witness:
    """One-interval witness for the path on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"path witness needs n >= 1, got {n}")
    weights = tuple(2 * n - i if i % 2 == 0 else i + 1 for i in range(n))
    return Witness(weights, ((2 * n, 2 * n + 2),))


def grid2_witness(n1: int) -> Witness:
    """One-interval witness for the grid with n1 rows and 2 columns."""
    if n1 < 1:
        raise ValueError(f"two-column grid witness needs n1 >= 1, got {n1}")
    weights = tuple(
        2 * n1 - i if (i + j) % 2 == 0 else i + 1
        for i in range(n1)
        for j in range(2)
    )
    return Witness(weights, ((2 * n1, 2 * n1 + 2),))


def _square_weight(h: int, i: int, j: int) -> int:
    # The two ramps are offset by one so that same-parity pair sums stay
    # strictly clear of both accepting windows: without the offset the two
    # lightest even cells, (h-1, h-1) and (h-1, h-3), would sum to exactly
    # the top of the second window.
    if (i + j) % 2 == 1:
        return (i + j - 1) * h // 2 + i
    return (2 * h - 1) * h - (i + j) * h // 2 - i + 1


def grid_square_witness(h: int) -> Witness:
    """Two-interval witness for the h x h grid, h >= 1.

    Checkerboard weighting: odd-parity cells get small ascending weights and
    even-parity cells large descending ones, so the four orthogonal steps land
    in one of two short windows while diagonal and farther pairs miss both.
    """
    if h < 1:
        raise ValueError(f"square grid witness needs h >= 1, got {h}")
    weights = tuple(_square_weight(h, i, j) for i in range(h) for j in range(h))
    lo = 2 * h * (h - 1)
    return Witness(weights, ((lo, lo + 1), (lo + h + 1, lo + h + 2)))


def grid_witness(n1: int, n2: int) -> Witness:
    """Witness for the n1 x n2 grid with as few intervals as this module knows.

    One interval suffices when min(n1, n2) <= 2 (path or two-column layout);
    otherwise the square witness for h = max(n1, n2) is restricted to the
    occupied coordinate box, keeping both intervals.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError(f"grid witness needs n1, n2 >= 1, got ({n1}, {n2})")
    if min(n1, n2) == 1:
        return path_witness(max(n1, n2))
    if n2 == 2:
        return grid2_witness(n1)
    if n1 == 2:
        # transpose of the two-column layout: vertex (i, j) takes the weight
        # of (j, i) in the n2-row witness
        base = grid2_witness(n2)
        weights = tuple(base.weights[j * 2 + i] for i in range(2) for j in range(n2))
        return Witness(weights, base.intervals)
    h = max(n1, n2)
    full = grid_square_witness(h)
    weights = tuple(full.weights[i * h + j] for i in range(n1) for j in range(n2))
    return Witness(weights, full.intervals)
