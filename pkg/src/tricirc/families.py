"""Parametrized cubic tricirculant families and related named graphs.

The four families t1..t4 are derived covers of the three-vertex pregraphs
delta(1)..delta(4) over Z_{2k}, with the standard voltages (k on semi-edges,
0 on tree links, r and s elsewhere). Vertices are numbered fibre-major:
u_i = i, v_i = 2k + i, w_i = 4k + i. Also here: the generalized Petersen
graphs, prisms and Moebius ladders they get compared against, the explicit
shift/mixing automorphisms, and the three-cycle torus decomposition of the
y-family.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Optional

from .graphs import SimpleGraph
from .symmetry import Permutation
from .voltage import NotAutomorphism, cover_connected, derived_cover, zeta_for

THEOREM_MIN_K = 9


@dataclass(frozen=True)
class FamilyParams:
    """Parameter tuple for one family instance; s is unused for type 3."""

    family_type: int
    k: int
    r: int
    s: Optional[int] = None

    def __post_init__(self):
        if self.family_type not in (1, 2, 3, 4):
            raise ValueError("family type must be 1..4")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.family_type == 3 and self.s is not None:
            raise ValueError("type 3 takes no s parameter")
        if self.family_type != 3 and self.s is None:
            raise ValueError(f"type {self.family_type} needs an s parameter")

    @property
    def n(self) -> int:
        return 2 * self.k

    @property
    def order(self) -> int:
        return 6 * self.k

    @property
    def connected(self) -> bool:
        """gcd criterion: the voltages must generate Z_{2k}."""
        if self.family_type == 3:
            return gcd(self.k, self.r) == 1
        return gcd(gcd(self.k, self.r), self.s) == 1

    @property
    def theorem_scope(self) -> bool:
        """True when k >= 9, where the general classification applies.

        Smaller k admits sporadic covers (extra isomorphisms, degenerate
        parameters) that the family-level statements exclude.
        """
        return self.k >= THEOREM_MIN_K

    def build(self) -> SimpleGraph:
        if self.family_type == 3:
            return t3(self.k, self.r)
        builder = {1: t1, 2: t2, 4: t4}[self.family_type]
        return builder(self.k, self.r, self.s)


def t1(k: int, r: int, s: int) -> SimpleGraph:
    """Semi-edge fibre on U (voltage k), spokes to V and W, and a double
    V-W bridge with voltages r and s. Raises NonSimpleCover on r = s etc."""
    return derived_cover(zeta_for(1, k, r, s))


def t2(k: int, r: int, s: int) -> SimpleGraph:
    """Semi-edge fibre on W, loop fibre on V (voltage s), spoke U-V, and a
    double U-W bridge with voltages 0 and r."""
    return derived_cover(zeta_for(2, k, r, s))


def t3(k: int, r: int) -> SimpleGraph:
    """Semi-edge on every fibre plus a triangle of links (0, 0, r)."""
    return derived_cover(zeta_for(3, k, r))


def t4(k: int, r: int, s: int) -> SimpleGraph:
    """Semi-edge fibre on U, loop fibres on W (voltage r) and V (voltage s)."""
    return derived_cover(zeta_for(4, k, r, s))


def family_connected(family_type: int, k: int, r: int, s: int = 0) -> bool:
    if family_type == 3:
        return cover_connected(zeta_for(3, k, r))
    return cover_connected(zeta_for(family_type, k, r, s))


def r_star(k: int) -> int:
    """The unique even r in Z_{2k} with 3 - 2r + k = 0 (mod 2k), branch
    picked by k mod 4."""
    if k % 2 == 0:
        raise ValueError("k must be odd")
    if k < 3:
        raise ValueError("k must be at least 3")
    value = (k + 3) // 2 if k % 4 == 1 else (k + 3) // 2 + k
    assert value % 2 == 0 and (3 - 2 * value + k) % (2 * k) == 0
    return value


def x_graph(k: int) -> SimpleGraph:
    """The distinguished vertex-transitive member of the t1 family."""
    return t1(k, r_star(k), 1)


def y_graph(k: int) -> SimpleGraph:
    """The distinguished vertex-transitive member of the t2 family."""
    if k % 2 == 0:
        raise ValueError("k must be odd")
    if k < 3:
        raise ValueError("k must be at least 3")
    return t2(k, 2, 1)


# -- comparison graphs --------------------------------------------------------

def gp(n: int, m: int) -> SimpleGraph:
    """Generalized Petersen graph: outer n-cycle u_i, inner star polygon v_i
    with step m, spokes u_i v_i. m is reduced modulo the GP(n,m) = GP(n,n-m)
    identification."""
    if n < 3:
        raise ValueError("outer cycle needs at least 3 vertices")
    m %= n
    m = min(m, n - m)
    if m == 0:
        raise ValueError("step must be nonzero mod n")
    if 2 * m == n:
        raise ValueError("step n/2 would double the inner edges")
    edges = []
    tags = {}
    for i in range(n):
        for a, b, tag in (
            (i, (i + 1) % n, "outer"),
            (i, n + i, "spoke"),
            (n + i, n + (i + m) % n, "inner"),
        ):
            edges.append((a, b))
            tags[(min(a, b), max(a, b))] = tag
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return SimpleGraph(2 * n, set(map(lambda e: (min(e), max(e)), edges)),
                       labels=labels, edge_tags=tags)


def prism(m: int) -> SimpleGraph:
    """Circular ladder: two m-cycles joined by a perfect matching."""
    if m < 3:
        raise ValueError("prism needs m >= 3")
    return gp(m, 1)


def moebius(m: int) -> SimpleGraph:
    """Moebius ladder: a 2m-cycle with antipodal chords."""
    if m < 3:
        raise ValueError("Moebius ladder needs m >= 3")
    edges = []
    tags = {}
    for i in range(2 * m):
        j = (i + 1) % (2 * m)
        edges.append((min(i, j), max(i, j)))
        tags[edges[-1]] = "rim"
    for i in range(m):
        edges.append((i, i + m))
        tags[edges[-1]] = "rung"
    return SimpleGraph(2 * m, set(edges), edge_tags=tags)


# -- explicit automorphisms ---------------------------------------------------

def _fibre_indexers(k: int):
    n = 2 * k

    def u(i):
        return i % n

    def v(i):
        return n + i % n

    def w(i):
        return 2 * n + i % n

    return n, u, v, w


def _shift(k: int) -> Permutation:
    n = 2 * k
    img = [0] * (6 * k)
    for f in range(3):
        for i in range(n):
            img[f * n + i] = f * n + (i + 1) % n
    return Permutation(img)


def family_automorphism(
    which: str, k: int, r: Optional[int] = None, s: Optional[int] = None
) -> Permutation:
    """Explicit automorphisms of the family graphs.

    rho: the fibre shift i -> i+1, the deck transformation every family
      carries; order 2k, three orbits.
    phi_x: mixes the three fibres of x_graph(k), swapping parity classes.
    phi_t1_bic: the fibre-mixing map of t1(k,r,s) vertex-transitive
      instances (defaults r = r_star(k), s = 1).
    phi_y: the fibre-mixing map of y_graph(k).

    The phi maps are validated against their graph before being returned.
    """
    n, u, v, w = _fibre_indexers(k)
    if which == "rho":
        return _shift(k)

    img = [0] * (6 * k)
    if which == "phi_x":
        rst = r_star(k)
        graph = x_graph(k)
        for i in range(n):
            if i % 2 == 0:
                img[u(i)] = w(i - rst + 2)
                img[w(i)] = v(i - 2 * rst + 2)
                img[v(i)] = u(i - rst + 2)
            else:
                img[u(i)] = v(i + rst - 2)
                img[v(i)] = w(i + 2 * rst - 2)
                img[w(i)] = u(i + rst - 2)
    elif which == "phi_t1_bic":
        r = r_star(k) if r is None else r
        s = 1 if s is None else s
        graph = t1(k, r, s)
        for i in range(n):
            if i % 2 == 0:
                img[u(i)] = v(i)
                img[v(i)] = w(i + r)
                img[w(i)] = u(i)
            else:
                img[u(i)] = w(i + k + s)
                img[v(i)] = u(i + k + s)
                img[w(i)] = v(i + k + s - r)
    elif which == "phi_y":
        graph = y_graph(k)
        for i in range(n):
            if i % 2 == 0:
                img[u(i)] = v(i + 1)
                img[v(i)] = u(i + 1)
                img[w(i)] = v(i)
            else:
                img[u(i)] = w(i + 2 + k)
                img[v(i)] = w(i + 2)
                img[w(i)] = u(i + k)
    else:
        raise ValueError(f"unknown automorphism name {which!r}")

    perm = Permutation(img)
    if not perm.is_automorphism(graph):
        raise NotAutomorphism(f"{which} transcription is wrong for k={k}")
    return perm


class TorusDecomposition(NamedTuple):
    cycles: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    matching: tuple[tuple[int, int], ...]


def torus_cycle_decomposition(g: SimpleGraph, k: int) -> TorusDecomposition:
    """Split the y-family graph into three stacked 2k-cycles.

    C1 alternates even-index W and U vertices, C2 the odd-index ones, C3 is
    the V fibre. Every other vertex of each cycle matches into the previous
    cycle and the rest into the next one; the leftover edges form a perfect
    matching. Raises ValueError when the structure is absent, which signals
    a construction bug or a graph that is not y_graph(k).
    """
    n, u, v, w = _fibre_indexers(k)
    if g.n != 6 * k:
        raise ValueError(f"expected {6 * k} vertices, got {g.n}")
    c1 = []
    c2 = []
    for i in range(0, n, 2):
        c1 += [w(i), u(i)]
        c2 += [w(i + 1), u(i + 1)]
    c3 = [v(i) for i in range(n)]

    cycle_edges = set()
    for cyc in (c1, c2, c3):
        if len(set(cyc)) != len(cyc):
            raise ValueError("cycle revisits a vertex")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"missing cycle edge ({a},{b})")
            cycle_edges.add((min(a, b), max(a, b)))
    if len(set(c1) | set(c2) | set(c3)) != g.n:
        raise ValueError("cycles do not cover the vertex set")

    rest = [e for e in g.edges() if e not in cycle_edges]
    matched = [x for e in rest for x in e]
    if sorted(matched) != list(range(g.n)):
        raise ValueError("leftover edges are not a perfect matching")

    which_cycle = {}
    for idx, cyc in enumerate((c1, c2, c3)):
        for x in cyc:
            which_cycle[x] = idx
    mate = {}
    for a, b in rest:
        mate[a] = b
        mate[b] = a
    for idx, cyc in enumerate((c1, c2, c3)):
        targets = [which_cycle[mate[x]] for x in cyc]
        up, down = (idx + 1) % 3, (idx - 1) % 3
        evens, odds = set(targets[0::2]), set(targets[1::2])
        if not (evens == {up} and odds == {down}
                or evens == {down} and odds == {up}):
            raise ValueError("matching does not alternate between neighbors")

    return TorusDecomposition(
        (tuple(c1), tuple(c2), tuple(c3)), tuple(rest)
    )
