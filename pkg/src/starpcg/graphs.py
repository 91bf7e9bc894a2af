"""Simple undirected graphs plus cycle/path/grid generators and grid geometry.

Vertices are always 0..n-1.  Grid vertices carry coordinate tuples; the flat
id is the mixed-radix row-major encoding (first coordinate most significant),
so for a two-dimensional shape (n1, n2) the vertex (i, j) has id i*n2 + j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

Coord = tuple[int, ...]
Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise ValueError("vertex count must be a non-negative integer")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @classmethod
    def from_dict(cls, obj: dict) -> "Graph":
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise ValueError('graph JSON must be {"n": int, "edges": [[u, v], ...]}')
        return cls(obj["n"], obj["edges"])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {u};" for u in range(self.n))
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GridShape:
    """Dimensions of a d-dimensional grid graph; every dim size >= 1."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.dims)
        if len(dims) < 1:
            raise ValueError("grid shape needs at least one dimension")
        if any(not isinstance(m, int) or m < 1 for m in dims):
            raise ValueError(f"dimension sizes must be integers >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def num_vertices(self) -> int:
        out = 1
        for m in self.dims:
            out *= m
        return out

    def contains(self, coord: Coord) -> bool:
        return len(coord) == self.d and all(0 <= c < m for c, m in zip(coord, self.dims))

    def flat_id(self, coord: Coord) -> int:
        if not self.contains(coord):
            raise ValueError(f"coordinate {coord} outside shape {self.dims}")
        out = 0
        for c, m in zip(coord, self.dims):
            out = out * m + c
        return out

    def coord_of(self, flat: int) -> Coord:
        if not (0 <= flat < self.num_vertices):
            raise ValueError(f"flat id {flat} outside shape {self.dims}")
        rev = []
        for m in reversed(self.dims):
            rev.append(flat % m)
            flat //= m
        return tuple(reversed(rev))

    def coords(self) -> Iterator[Coord]:
        """All coordinates in flat-id (row-major) order."""
        return product(*(range(m) for m in self.dims))

    def neighbor_coords(self, coord: Coord) -> list[Coord]:
        if not self.contains(coord):
            raise ValueError(f"coordinate {coord} outside shape {self.dims}")
        out = []
        for j in range(self.d):
            for delta in (-1, 1):
                c = coord[j] + delta
                if 0 <= c < self.dims[j]:
                    out.append(coord[:j] + (c,) + coord[j + 1 :])
        return out


def _as_shape(shape: GridShape | Sequence[int]) -> GridShape:
    return shape if isinstance(shape, GridShape) else GridShape(tuple(shape))


def make_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices with edges {i, i+1 mod n}."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> Graph:
    """Path on n >= 1 vertices; same as the one-dimensional grid."""
    if n < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_grid(shape: GridShape | Sequence[int]) -> Graph:
    """Grid graph: vertices are coordinates, edges join coords at L1 distance 1."""
    s = _as_shape(shape)
    edges = []
    for coord in s.coords():
        u = s.flat_id(coord)
        for j in range(s.d):
            if coord[j] + 1 < s.dims[j]:
                edges.append((u, s.flat_id(coord[:j] + (coord[j] + 1,) + coord[j + 1 :])))
    return Graph(s.num_vertices, edges)


def opposed(shape: GridShape | Sequence[int], u: Coord, v: Coord) -> bool:
    """True when u and v differ in exactly one coordinate, by exactly 2."""
    s = _as_shape(shape)
    if not s.contains(u):
        raise ValueError(f"coordinate {u} outside shape {s.dims}")
    if not s.contains(v):
        raise ValueError(f"coordinate {v} outside shape {s.dims}")
    diffs = [abs(a - b) for a, b in zip(u, v)]
    return sum(1 for d in diffs if d != 0) == 1 and max(diffs) == 2


def _step_dim(u: Coord, v: Coord) -> int | None:
    """Dimension along which v = u +- one unit, or None if v is not a grid neighbor."""
    dim = None
    for j, (a, b) in enumerate(zip(u, v)):
        if a == b:
            continue
        if abs(a - b) != 1 or dim is not None:
            return None
        dim = j
    return dim


def q_vertex(shape: GridShape | Sequence[int], u: Coord, v: Coord, vp: Coord) -> Coord:
    """The unique vertex x != u with N(u) & N(x) = {v, vp}.

    Requires v and vp to be distinct, non-opposed neighbors of u; then they
    step away from u in two different dimensions and x is u shifted by both
    unit displacements at once.
    """
    s = _as_shape(shape)
    for c in (u, v, vp):
        if not s.contains(c):
            raise ValueError(f"coordinate {c} outside shape {s.dims}")
    if v == vp:
        raise ValueError("v and vp must be distinct")
    j1 = _step_dim(u, v)
    j2 = _step_dim(u, vp)
    if j1 is None or j2 is None:
        raise ValueError("v and vp must both be grid neighbors of u")
    if j1 == j2:
        # distinct neighbors along one dimension are the opposed pair u-1, u+1
        raise ValueError(f"{v} and {vp} are opposed around {u}")
    x = list(u)
    x[j1] = v[j1]
    x[j2] = vp[j2]
    return tuple(x)


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by `vertices`, relabeled 0..len-1 in the given order."""
    order = list(vertices)
    if len(set(order)) != len(order):
        raise ValueError("vertex selection contains duplicates")
    for v in order:
        if not (0 <= v < graph.n):
            raise ValueError(f"vertex {v} out of range for n={graph.n}")
    pos = {v: i for i, v in enumerate(order)}
    edges = [
        (pos[u], pos[v])
        for u, v in graph.edges()
        if u in pos and v in pos
    ]
    return Graph(len(order), edges)
