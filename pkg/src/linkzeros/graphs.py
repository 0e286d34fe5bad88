"""Multigraphs, the named graph families, and link presentations.

Graphs are finite undirected multigraphs with loops, vertices labeled
``0 .. n-1``.  Edges are stored as a tuple of sorted endpoint pairs; the
order of the edge list never carries meaning.  Instances are treated as
immutable: deletion and contraction return new graphs.

The named families (cycles, fat links, wheels, hammocks and their doubled
or subdivided variants) are the planar checkerboard graphs underlying four
parametric families of alternating links; :func:`link_presentation` packages
a family member together with its crossing count, writhe, and shading data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import json

__all__ = [
    "Multigraph",
    "SignedMultigraph",
    "build_graph",
    "dual_pair",
    "link_component_count",
    "LinkPresentation",
    "link_presentation",
    "FAMILY_BOUNDS",
    "GRAPH_KINDS",
]

GRAPH_KINDS = ("C", "FL", "D1C", "DC", "Wheel", "H3", "HW")

# least n for which each link family is defined; F additionally needs odd n
FAMILY_BOUNDS = {"A": 3, "B": 3, "E": 2, "F": 5}


def _norm_edge(u: int, v: int) -> tuple:
    return (u, v) if u <= v else (v, u)


class Multigraph:
    """Undirected multigraph with loops.

    ``n`` is the vertex count; ``edges`` a tuple of (u, v) pairs with
    ``u <= v``.  Parallel edges are repeated entries; a loop is ``(v, v)``.
    """

    __slots__ = ("n", "edges", "_ckey")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} out of range for {n} vertices")
            es.append(_norm_edge(u, v))
        self.n = n
        self.edges = tuple(es)
        self._ckey = None

    # -- basics -----------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def is_loop(self, i: int) -> bool:
        u, v = self.edges[i]
        return u == v

    def component_count(self) -> int:
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        k = self.n
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                k -= 1
        return k

    def cyclomatic(self) -> int:
        """Independent circuits: e - n + (number of components)."""
        return len(self.edges) - self.n + self.component_count()

    def is_bridge(self, i: int) -> bool:
        """True when removing edge i increases the component count."""
        if self.is_loop(i):
            return False
        return self.delete_edge(i).component_count() > self.component_count()

    # -- minors ------------------------------------------------------------

    def delete_edge(self, i: int) -> "Multigraph":
        es = self.edges[:i] + self.edges[i + 1 :]
        return Multigraph(self.n, es)

    def contract_edge(self, i: int) -> "Multigraph":
        """Contract edge i (must not be a loop): merge its endpoints.

        The merged vertex keeps the smaller label; labels above the larger
        endpoint shift down by one.  Parallel copies of the contracted edge
        become loops.
        """
        u, v = self.edges[i]
        if u == v:
            raise ValueError("cannot contract a loop")

        def rename(w: int) -> int:
            if w == v:
                return u
            return w - 1 if w > v else w

        es = []
        for j, (a, b) in enumerate(self.edges):
            if j == i:
                continue
            es.append(_norm_edge(rename(a), rename(b)))
        return Multigraph(self.n - 1, es)

    def relabeled(self, perm: Sequence[int]) -> "Multigraph":
        """Apply a vertex permutation (perm[v] is the new label of v)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        es = [_norm_edge(perm[u], perm[v]) for u, v in self.edges]
        return Multigraph(self.n, es)

    # -- equality is labeled equality; canonical_key tests isomorphism ------

    def _labeled_form(self):
        return (self.n, tuple(sorted(self.edges)))

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._labeled_form() == other._labeled_form()

    def __hash__(self):
        return hash(self._labeled_form())

    def __repr__(self):
        return f"Multigraph({self.n}, {list(self.edges)!r})"

    # -- isomorphism -------------------------------------------------------

    def _adjacency(self):
        adj = [dict() for _ in range(self.n)]
        loops = [0] * self.n
        for u, v in self.edges:
            if u == v:
                loops[u] += 1
            else:
                adj[u][v] = adj[u].get(v, 0) + 1
                adj[v][u] = adj[v].get(u, 0) + 1
        return adj, loops

    def refined_colors(self) -> tuple:
        """Stable color refinement classes.

        Initial colors come from (loop count, degree); each round hashes the
        multiset of neighbor colors with multiplicities.  Color ids are
        assigned by sorted signature order every round, so the result does
        not depend on the vertex labeling.
        """
        n = self.n
        adj, loops = self._adjacency()
        colors = [0] * n
        sigs = sorted({(loops[v], self.degree(v)) for v in range(n)})
        ids = {s: i for i, s in enumerate(sigs)}
        colors = tuple(ids[(loops[v], self.degree(v))] for v in range(n))
        nclasses = len(sigs)
        while True:
            sig = []
            for v in range(n):
                nbr = tuple(sorted((colors[u], m) for u, m in adj[v].items()))
                sig.append((colors[v], loops[v], nbr))
            order = sorted(set(sig))
            ids = {s: i for i, s in enumerate(order)}
            new = tuple(ids[s] for s in sig)
            if len(order) == nclasses:
                return new
            nclasses = len(order)
            colors = new

    def iso_invariant(self) -> tuple:
        """Hashable isomorphism invariant (equal for isomorphic graphs).

        Not complete: rare non-isomorphic collisions are possible, so users
        needing certainty must confirm with :meth:`is_isomorphic`.
        """
        if self._ckey is not None:
            return self._ckey
        colors = self.refined_colors()
        adj, loops = self._adjacency()
        profile = []
        for v in range(self.n):
            nbr = tuple(sorted((colors[u], m) for u, m in adj[v].items()))
            profile.append((colors[v], loops[v], nbr))
        self._ckey = (self.n, self.edge_count, tuple(sorted(profile)))
        return self._ckey

    def is_isomorphic(self, other: "Multigraph") -> bool:
        """Exact multigraph isomorphism test.

        Fast invariant comparison first; survivors go to VF2 on simple
        graphs with multiplicity edge labels and refinement-color node
        labels (loop counts are folded into the node color).
        """
        if not isinstance(other, Multigraph):
            raise TypeError("expected a Multigraph")
        if self.n != other.n or self.edge_count != other.edge_count:
            return False
        if self.iso_invariant() != other.iso_invariant():
            return False
        import networkx as nx

        def to_nx(g: "Multigraph"):
            colors = g.refined_colors()
            adj, loops = g._adjacency()
            h = nx.Graph()
            for v in range(g.n):
                h.add_node(v, color=(colors[v], loops[v]))
            for v in range(g.n):
                for u, m in adj[v].items():
                    if u > v:
                        h.add_edge(v, u, m=m)
            return h

        return nx.is_isomorphic(
            to_nx(self),
            to_nx(other),
            node_match=lambda a, b: a["color"] == b["color"],
            edge_match=lambda a, b: a["m"] == b["m"],
        )

    # -- serialization --------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"vertices": self.n, "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        data = json.loads(text)
        g = cls(int(data["vertices"]), data["edges"])
        if "signs" in data and data["signs"] is not None:
            raise ValueError("signed graph passed to Multigraph; use SignedMultigraph")
        return g


class SignedMultigraph:
    """Multigraph with a +1/-1 sign per edge (mixed-crossing diagrams)."""

    __slots__ = ("graph", "signs")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], signs: Iterable[int]):
        self.graph = Multigraph(n, edges)
        ss = tuple(int(s) for s in signs)
        if len(ss) != self.graph.edge_count:
            raise ValueError("one sign per edge required")
        if any(s not in (1, -1) for s in ss):
            raise ValueError("signs must be +1 or -1")
        self.signs = ss

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> tuple:
        return self.graph.edges

    def count_sign(self, s: int) -> int:
        return sum(1 for x in self.signs if x == s)

    def all_positive(self) -> bool:
        return all(s == 1 for s in self.signs)

    def __eq__(self, other):
        if not isinstance(other, SignedMultigraph):
            return NotImplemented
        return self.graph == other.graph and self.signs == other.signs

    def __hash__(self):
        return hash((self.graph, self.signs))

    def __repr__(self):
        return f"SignedMultigraph({self.n}, {list(self.edges)!r}, {list(self.signs)!r})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": self.n,
                "edges": [list(e) for e in self.edges],
                "signs": list(self.signs),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SignedMultigraph":
        data = json.loads(text)
        return cls(int(data["vertices"]), data["edges"], data["signs"])


# ---------------------------------------------------------------------------
# named families


def build_graph(kind: str, n: int) -> Multigraph:
    """Construct a member of one of the named graph families.

    C_n      cycle on n vertices (C_1 is a single loop)
    FL_n     two vertices joined by n parallel edges
    D1C_n    cycle with one edge doubled (n vertices, n+1 edges)
    DC_n     cycle with every edge doubled (n vertices, 2n edges)
    Wheel_n  hub joined to every vertex of a rim cycle C_{n-1}
    H3_n     two poles joined by n internally disjoint 2-edge paths
    HW_n     wheel on m=(n-1)/2 rim vertices with every spoke subdivided
             once (n odd, n = 2m+1 vertices, 3m edges)
    """
    if kind == "C":
        if n < 1:
            raise ValueError("C_n needs n >= 1")
        return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "FL":
        if n < 1:
            raise ValueError("FL_n needs n >= 1")
        return Multigraph(2, [(0, 1)] * n)
    if kind == "D1C":
        if n < 2:
            raise ValueError("D1C_n needs n >= 2")
        edges = [(i, (i + 1) % n) for i in range(n)]
        edges.append((0, 1))
        return Multigraph(n, edges)
    if kind == "DC":
        if n < 2:
            raise ValueError("DC_n needs n >= 2")
        edges = []
        for i in range(n):
            edges.append((i, (i + 1) % n))
            edges.append((i, (i + 1) % n))
        return Multigraph(n, edges)
    if kind == "Wheel":
        if n < 3:
            raise ValueError("Wheel_n needs n >= 3")
        m = n - 1
        edges = [(1 + i, 1 + (i + 1) % m) for i in range(m)]
        edges += [(0, 1 + i) for i in range(m)]
        return Multigraph(n, edges)
    if kind == "H3":
        if n < 1:
            raise ValueError("H3_n needs n >= 1")
        # poles 0 and 1, midpoints 2 .. n+1
        edges = []
        for i in range(n):
            edges.append((0, 2 + i))
            edges.append((1, 2 + i))
        return Multigraph(n + 2, edges)
    if kind == "HW":
        if n < 3 or n % 2 == 0:
            raise ValueError("HW_n needs odd n >= 3")
        m = (n - 1) // 2
        # hub 0, rim 1..m, spoke midpoints m+1..2m
        edges = [(1 + i, 1 + (i + 1) % m) for i in range(m)]
        for i in range(1, m + 1):
            edges.append((0, m + i))
            edges.append((m + i, i))
        return Multigraph(n, edges)
    raise ValueError(f"unknown graph kind {kind!r}")


def dual_pair(kind: str, n: int) -> tuple:
    """A family member together with its planar dual.

    (C_n, FL_n) and (H3_n, DC_n) are dual pairs; wheels are self-dual.
    """
    if kind == "C":
        return build_graph("C", n), build_graph("FL", n)
    if kind == "FL":
        return build_graph("FL", n), build_graph("C", n)
    if kind == "H3":
        return build_graph("H3", n), build_graph("DC", n)
    if kind == "DC":
        return build_graph("DC", n), build_graph("H3", n)
    if kind == "Wheel":
        return build_graph("Wheel", n), build_graph("Wheel", n)
    raise ValueError(f"no dual pair registered for kind {kind!r}")


# ---------------------------------------------------------------------------
# link component count via the bicycle space


def _gf2_rank(rows: list) -> int:
    rank = 0
    basis: list = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


def link_component_count(g: Multigraph) -> int:
    """Number of components of the alternating link whose checkerboard
    graph is ``g``: one plus the GF(2) dimension of the bicycle space
    (cycle space intersected with cut space).

    That dimension equals log2 |T(g, -1, -1)|, which is how the result is
    cross-checked in the tests.
    """
    e = g.edge_count
    if e == 0:
        return 1
    # cut space generators: vertex stars (loops cancel mod 2)
    stars = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            stars[u] ^= 1 << i
            stars[v] ^= 1 << i
    # cycle space generators: fundamental cycles over a spanning forest,
    # each edge set encoded as a bitmask; path[v] is the tree path to the root
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    seen = [False] * g.n
    path = [0] * g.n
    tree_edges = set()
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            a = stack.pop()
            for b, i in adj[a]:
                if not seen[b]:
                    seen[b] = True
                    tree_edges.add(i)
                    path[b] = path[a] ^ (1 << i)
                    stack.append(b)
    cycles = []
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            cycles.append(1 << i)
        elif i not in tree_edges:
            cycles.append(path[u] ^ path[v] ^ (1 << i))
    rank_sum = _gf2_rank([r for r in stars if r] + [r for r in cycles if r])
    bicycle_dim = e - rank_sum
    return 1 + bicycle_dim


# ---------------------------------------------------------------------------
# link presentations


@dataclass(frozen=True)
class LinkPresentation:
    """An alternating link family member and its diagram bookkeeping.

    ``graph`` is the checkerboard graph of the shaded regions; ``n_dark``
    its vertex count and ``n_light`` the vertex count of the dual.  The
    crossing count, writhe, and link component count are what the Jones
    prefactor needs.
    """

    family: str
    n: int
    graph: Multigraph
    crossings: int
    writhe: int
    n_dark: int
    n_light: int
    n_components: int


def link_presentation(family: str, n: int) -> LinkPresentation:
    """Presentation data for member n of link family A, B, E, or F."""
    if family not in FAMILY_BOUNDS:
        raise ValueError(f"unknown family {family!r}")
    if n < FAMILY_BOUNDS[family]:
        raise ValueError(f"family {family} needs n >= {FAMILY_BOUNDS[family]}")
    if family == "A":
        g = build_graph("D1C", n - 1)
        writhe = -n if n % 2 else 4 - n
        crossings = n
        n_dark, n_light = n - 1, 3
    elif family == "B":
        g = build_graph("Wheel", n)
        writhe = 0
        crossings = 2 * (n - 1)
        n_dark, n_light = n, n
    elif family == "E":
        g = build_graph("H3", n)
        writhe = -2 * n
        crossings = 2 * n
        n_dark, n_light = n + 2, n
    else:  # F
        if n % 2 == 0:
            raise ValueError("family F needs odd n")
        g = build_graph("HW", n)
        m = (n - 1) // 2
        writhe = -m
        crossings = 3 * m
        n_dark, n_light = n, m + 1
    if n_dark != g.n:
        raise AssertionError("dark region count must match the graph")
    if n_dark + n_light != crossings + 2:
        raise AssertionError("checkerboard counts violate the Euler relation")
    return LinkPresentation(
        family=family,
        n=n,
        graph=g,
        crossings=crossings,
        writhe=writhe,
        n_dark=n_dark,
        n_light=n_light,
        n_components=link_component_count(g),
    )
