"""Reference oracle: brute-force minimum interval count for fixed weights.

Deliberately independent of the package's run-counting oracle.  Candidate
intervals take both endpoints from the observed pair-sum values (any interval
can be shrunk to such endpoints without changing which sums it accepts).  The
search deepens over the interval count and places intervals left to right;
each placed interval must cover the leftmost still-uncovered edge sum and may
not swallow any non-edge sum.
"""

from __future__ import annotations

INFEASIBLE = "infeasible"


def naive_min_intervals(graph, weights):
    """Minimum number of intervals realizing `graph`, or INFEASIBLE."""
    n = graph.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    values = sorted({weights[u] + weights[v] for u, v in pairs})
    edge_vals = sorted({weights[u] + weights[v] for u, v in pairs if graph.has_edge(u, v)})
    nonedge_idx = {
        values.index(weights[u] + weights[v])
        for u, v in pairs
        if not graph.has_edge(u, v)
    }
    if not edge_vals:
        return 0
    edge_idx = [values.index(s) for s in edge_vals]

    def place(next_edge: int, prev_end: int, remaining: int) -> bool:
        if next_edge == len(edge_idx):
            return True
        if remaining == 0:
            return False
        e = edge_idx[next_edge]
        for a in range(prev_end + 1, e + 1):
            if any(t in nonedge_idx for t in range(a, e + 1)):
                continue
            for b in range(e, len(values)):
                if b in nonedge_idx:
                    break
                covered = next_edge
                while covered < len(edge_idx) and edge_idx[covered] <= b:
                    covered += 1
                if place(covered, b, remaining - 1):
                    return True
        return False

    for k in range(1, len(edge_idx) + 1):
        if place(0, -1, k):
            return k
    return INFEASIBLE
