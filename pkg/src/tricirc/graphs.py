"""Simple undirected graphs with optional vertex labels and edge-type tags."""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Optional, Sequence


class CoverVertex(NamedTuple):
    """Label of a cover vertex: a base vertex name and an index mod n."""

    base_vertex: str
    index: int

    def __str__(self) -> str:
        return f"{self.base_vertex}{self.index}"


class SimpleGraph:
    """Immutable simple graph on vertices 0..n-1.

    Loops and parallel edges are rejected at construction. Vertices may carry
    labels (e.g. CoverVertex pairs) and edges may carry type tags such as
    "K", "0", "R", "S".
    """

    __slots__ = ("n", "_adj", "labels", "edge_tags")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence] = None,
        edge_tags: Optional[dict[tuple[int, int], str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if b in adj[a]:
                raise ValueError(f"parallel edge ({a},{b})")
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )
        if labels is not None and len(labels) != n:
            raise ValueError("labels length must equal n")
        self.labels = tuple(labels) if labels is not None else None
        tags: dict[tuple[int, int], str] = {}
        if edge_tags:
            for (a, b), tag in edge_tags.items():
                key = (a, b) if a < b else (b, a)
                if key[1] not in self._adj[key[0]]:
                    raise ValueError(f"tag on non-edge {key}")
                tags[key] = tag
        self.edge_tags = tags

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (a, b) pairs with a < b, in sorted order."""
        return [(a, b) for a in range(self.n) for b in self._adj[a] if a < b]

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def edge_tag(self, a: int, b: int) -> Optional[str]:
        return self.edge_tags.get((a, b) if a < b else (b, a))

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count()})"

    def is_regular(self, valence: Optional[int] = None) -> bool:
        if self.n == 0:
            return True
        degs = {len(nb) for nb in self._adj}
        if len(degs) != 1:
            return False
        return valence is None or degs == {valence}

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if color[y] == -1:
                        color[y] = color[x] ^ 1
                        queue.append(y)
                    elif color[y] == color[x]:
                        return False
        return True

    def subgraph_by_tags(self, tags: Iterable[str]) -> "SimpleGraph":
        """Spanning subgraph keeping only edges whose tag is in `tags`."""
        if not self.edge_tags:
            raise ValueError("graph has no edge tags")
        keep = set(tags)
        edges = [e for e in self.edges() if self.edge_tags.get(e) in keep]
        kept_tags = {e: self.edge_tags[e] for e in edges}
        return SimpleGraph(self.n, edges, labels=self.labels, edge_tags=kept_tags)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Image graph under vertex map v -> perm[v]. Labels and tags follow."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a bijection on vertices")
        edges = [(perm[a], perm[b]) for a, b in self.edges()]
        labels = None
        if self.labels is not None:
            labels = [None] * self.n
            for v, lab in enumerate(self.labels):
                labels[perm[v]] = lab
        tags = {
            (perm[a], perm[b]): t for (a, b), t in self.edge_tags.items()
        }
        return SimpleGraph(self.n, edges, labels=labels, edge_tags=tags)

    def label_index(self) -> dict:
        """Map label -> vertex id (labels must be unique)."""
        if self.labels is None:
            raise ValueError("graph has no labels")
        out = {lab: v for v, lab in enumerate(self.labels)}
        if len(out) != self.n:
            raise ValueError("labels are not unique")
        return out


def cycle_components(g: SimpleGraph) -> list[int]:
    """Component cycle lengths of a graph whose components are all cycles.

    Raises ValueError if some component is not a single cycle.
    """
    lengths = []
    for comp in g.components():
        if any(g.degree(v) != 2 for v in comp):
            raise ValueError("component is not a cycle")
        # connected + all degrees 2 => a single cycle
        lengths.append(len(comp))
    return sorted(lengths)
