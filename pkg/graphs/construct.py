"""
Builders for graph families, products and amalgamations.

Index layouts are fixed so that witnesses are reproducible:

- products: vertex (g, h) has index g * n(H) + h
- join and disjoint union: G keeps 0..n(G)-1, H follows
- bloom: pendant j of host v has index n + v * k + j
- z_graph(k): cycle 0..2k+1, pendants 2k+2 on 0 and 2k+3 on k+1
- y_graph(k): path 0..2k+2, extra vertex 2k+3 adjacent to k and k+2
- hypercube_minus(d): vertex x of Q_d (x != 0) becomes x - 1
- identify: A keeps its indices, B follows with b mapped onto a
"""

from __future__ import annotations

import random
from typing import Iterable, Optional

from attrs import field, frozen

from graphs.errors import BadParameter, Disconnected
from graphs.graph import Graph, check_order, is_connected, iter_bits
from utils.data_loader import DataLoader
from utils.logger import setup_logger

logger = setup_logger(__name__)


# ==================== Standard families ====================


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"Path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], label=f"path:{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"Cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label=f"cycle:{n}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"Complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)), f"complete:{n}")


def star_graph(k: int) -> Graph:
    """K_{1,k} with the hub at index 0."""
    if k < 1:
        raise BadParameter(f"Star needs k >= 1 leaves, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)], label=f"star:{k}")


def paw_graph() -> Graph:
    """Triangle 0-1-2 with a leaf 3 on the apex 0."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)], label="paw")


def hypercube(d: int) -> Graph:
    """Q_d on 0..2^d-1; x ~ y when they differ in one bit."""
    if d < 0:
        raise BadParameter(f"Hypercube needs d >= 0, got {d}")
    n = 1 << d
    check_order(n)
    rows = []
    for x in range(n):
        row = 0
        for i in range(d):
            row |= 1 << (x ^ (1 << i))
        rows.append(row)
    return Graph(n, tuple(rows), f"hypercube:{d}")


def hypercube_minus(d: int) -> Graph:
    """
    Q_d with the all-zeros vertex removed.

    Raises:
        BadParameter: If d < 2
    """
    if d < 2:
        raise BadParameter(f"Punctured hypercube needs d >= 2, got {d}")
    cube = hypercube(d)
    rows = tuple(cube.adj[x] >> 1 for x in range(1, cube.n))
    return Graph(cube.n - 1, rows, f"qminus:{d}")


def z_graph(k: int) -> Graph:
    """
    C_{2k+2} with pendants on the antipodal vertices 0 and k+1.

    Raises:
        BadParameter: If k < 1
    """
    if k < 1:
        raise BadParameter(f"Z_k needs k >= 1, got {k}")
    m = 2 * k + 2
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(0, m), (k + 1, m + 1)]
    return Graph.from_edges(m + 2, edges, label=f"z:{k}")


def y_graph(k: int) -> Graph:
    """
    P_{2k+3} plus a vertex adjacent to both neighbours of the middle vertex.

    Raises:
        BadParameter: If k < 1
    """
    if k < 1:
        raise BadParameter(f"Y_k needs k >= 1, got {k}")
    m = 2 * k + 3
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(k, m), (k + 2, m)]
    return Graph.from_edges(m + 1, edges, label=f"y:{k}")


def complete_minus_edges(
    n: int, k: int, edges: Optional[Iterable[tuple[int, int]]] = None
) -> Graph:
    """
    K_n with k edges removed.

    Args:
        n: Order
        k: Number of removed edges, at most n // 2
        edges: Explicit edges to remove; defaults to the matching (0,1), (2,3), ...

    Raises:
        BadParameter: If k is out of range or an explicit edge is not in K_n
    """
    if n < 2 or not 0 <= k <= n // 2:
        raise BadParameter(f"complete_minus_edges needs 0 <= k <= n//2, got n={n}, k={k}")
    removed = list(edges) if edges is not None else [(2 * i, 2 * i + 1) for i in range(k)]
    if len(removed) != k:
        raise BadParameter(f"Expected {k} edges to remove, got {len(removed)}")
    rows = list(complete_graph(n).adj)
    for u, v in removed:
        if not (0 <= u < n and 0 <= v < n) or u == v or not rows[u] >> v & 1:
            raise BadParameter(f"Edge ({u}, {v}) is not an edge of K_{n}")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(n, tuple(rows), f"kminus:{n}:{k}")


# ==================== Products ====================


def _tag(graph: Graph) -> str:
    return graph.label or f"n{graph.n}"


def _spread(mask: int, stride: int) -> int:
    """Place bit i of mask at position i * stride."""
    out = 0
    for i in iter_bits(mask):
        out |= 1 << (i * stride)
    return out


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """
    Cartesian product; (g, h) ~ (g', h') when one coordinate is equal and the
    other is an edge.

    Raises:
        TooLarge: If n(G) * n(H) exceeds capacity
    """
    n_h = h.n
    check_order(g.n * n_h)
    spread = [_spread(row, n_h) for row in g.adj]
    rows = [
        (h.adj[y] << (x * n_h)) | (spread[x] << y)
        for x in range(g.n)
        for y in range(n_h)
    ]
    return Graph(g.n * n_h, tuple(rows), f"({_tag(g)})x({_tag(h)})")


def cartesian_power(g: Graph, m: int) -> Graph:
    """
    m-th Cartesian power; G^1 = G.

    Raises:
        BadParameter: If m < 1
        TooLarge: If n(G)^m exceeds capacity
    """
    if m < 1:
        raise BadParameter(f"Power needs m >= 1, got {m}")
    check_order(g.n ** m)
    result = g
    for _ in range(m - 1):
        result = cartesian_product(result, g)
    return result.with_label(f"({_tag(g)})^{m}")


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """
    Lexicographic product; (g, h) ~ (g', h') when gg' is an edge, or g = g'
    and hh' is an edge.

    Raises:
        TooLarge: If n(G) * n(H) exceeds capacity
    """
    n_h = h.n
    check_order(g.n * n_h)
    block = (1 << n_h) - 1
    blocks = [_spread(row, n_h) * block for row in g.adj]
    rows = [
        blocks[x] | (h.adj[y] << (x * n_h))
        for x in range(g.n)
        for y in range(n_h)
    ]
    return Graph(g.n * n_h, tuple(rows), f"({_tag(g)})o({_tag(h)})")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    check_order(g.n + h.n)
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows), f"({_tag(g)})+({_tag(h)})")


def join(g: Graph, h: Graph) -> Graph:
    """
    Disjoint union plus every edge between G and H.

    Raises:
        TooLarge: If n(G) + n(H) exceeds capacity
    """
    check_order(g.n + h.n)
    full_g = (1 << g.n) - 1
    full_h = (1 << h.n) - 1
    rows = [row | (full_h << g.n) for row in g.adj]
    rows += [(row << g.n) | full_g for row in h.adj]
    return Graph(g.n + h.n, tuple(rows), f"({_tag(g)})v({_tag(h)})")


# ==================== Attachments ====================


def bloom(g: Graph, k: int) -> Graph:
    """
    Attach k pendant vertices to every vertex.

    Raises:
        BadParameter: If k < 1
        Disconnected: If G is disconnected
        TooLarge: If n(G) * (k + 1) exceeds capacity
    """
    if k < 1:
        raise BadParameter(f"Bloom needs k >= 1, got {k}")
    if not is_connected(g):
        raise Disconnected("Bloom host must be connected")
    n = g.n
    check_order(n * (k + 1))
    edges = g.edges() + [(v, n + v * k + j) for v in range(n) for j in range(k)]
    return Graph.from_edges(n * (k + 1), edges, label=f"bloom:{_tag(g)}:{k}")


def center_regular_tree(level_degrees: Iterable[int], bicentral: bool = False) -> Graph:
    """
    Tree whose distance levels from the center each share one degree.

    Args:
        level_degrees: d_0..d_{r-1}; each root gets d_0 children, every
            level-i vertex gets d_i children
        bicentral: Use two adjacent roots instead of one

    Raises:
        BadParameter: If a degree is < 1, the sequence is empty, or a
            unicentral tree has d_0 < 2
        TooLarge: If the order exceeds capacity
    """
    degrees = list(level_degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise BadParameter(f"Level degrees must be a nonempty sequence of d >= 1: {degrees}")
    if not bicentral and degrees[0] < 2:
        raise BadParameter("A unicentral tree needs d_0 >= 2")

    roots = 2 if bicentral else 1
    order = roots
    width = roots
    for d in degrees:
        width *= d
        order += width
    check_order(order)

    edges = [(0, 1)] if bicentral else []
    frontier = list(range(roots))
    next_vertex = roots
    for d in degrees:
        children = []
        for v in frontier:
            for _ in range(d):
                edges.append((v, next_vertex))
                children.append(next_vertex)
                next_vertex += 1
        frontier = children
    tag = ",".join(map(str, degrees))
    return Graph.from_edges(order, edges, label=f"crt:{tag}{':bi' if bicentral else ''}")


def identify(a_graph: Graph, a: int, b_graph: Graph, b: int) -> Graph:
    """
    Amalgamate two graphs by merging vertex a of A with vertex b of B.

    Raises:
        VertexOutOfRange: If a or b is out of range
        TooLarge: If n(A) + n(B) - 1 exceeds capacity
    """
    a_graph.check_vertex(a)
    b_graph.check_vertex(b)
    n_a = a_graph.n
    order = n_a + b_graph.n - 1
    check_order(order)

    def place(x: int) -> int:
        if x == b:
            return a
        return n_a + x if x < b else n_a + x - 1

    edges = a_graph.edges() + [(place(x), place(y)) for x, y in b_graph.edges()]
    return Graph.from_edges(order, edges, label=f"({_tag(a_graph)})@({_tag(b_graph)})")


# ==================== Random graphs ====================


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p) graph; may be disconnected."""
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges, label=f"gnp:{n}")


def random_connected_graph(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """
    Random spanning tree plus independent extra edges.

    Args:
        n: Order (>= 1)
        rng: Seeded generator
        p: Probability of each extra edge
    """
    if n < 1:
        raise BadParameter(f"Random graph needs n >= 1, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for v in range(n):
        for u in range(v):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges), label=f"random:{n}")


# ==================== Family specs ====================

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "hypercube",
    "hypercube_minus",
    "paw",
    "Z",
    "Y",
    "bloom",
    "center_regular_tree",
    "complete_minus_edges",
    "corpus",
)

_ALIASES = {
    "path": "path",
    "p": "path",
    "cycle": "cycle",
    "c": "cycle",
    "complete": "complete",
    "k": "complete",
    "star": "star",
    "hypercube": "hypercube",
    "q": "hypercube",
    "qminus": "hypercube_minus",
    "paw": "paw",
    "z": "Z",
    "y": "Y",
    "bloom": "bloom",
    "crt": "center_regular_tree",
    "kminus": "complete_minus_edges",
    "corpus": "corpus",
}

_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "hypercube": 1,
    "hypercube_minus": 1,
    "paw": 0,
    "Z": 1,
    "Y": 1,
    "complete_minus_edges": 2,
}


def _int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise BadParameter(f"Expected an integer in family spec {spec!r}, got {text!r}") from None


@frozen
class FamilySpec:
    """
    Parsed family description such as "z:3", "qminus:4" or "bloom:cycle:5:2".

    Attributes:
        family: Family tag (one of FAMILIES)
        params: Integer parameters
        base: Host family for bloom
        bicentral: Two-root variant of center_regular_tree
        name: Entry id for the corpus family
    """

    family: str
    params: tuple[int, ...] = ()
    base: Optional[FamilySpec] = None
    bicentral: bool = False
    name: Optional[str] = field(default=None)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """
        Parse a CLI family string.

        Grammar: path:n, cycle:n, complete:n, star:k, hypercube:d (or q:d),
        qminus:d, paw, z:k, y:k, kminus:n:k, crt:d0,d1,...[:bi],
        bloom:<family spec>:k, corpus:<id>.

        Raises:
            BadParameter: If the string does not match the grammar
        """
        parts = text.strip().split(":")
        tag = _ALIASES.get(parts[0].lower())
        if tag is None:
            raise BadParameter(f"Unknown family in spec {text!r}")
        rest = parts[1:]

        if tag == "bloom":
            if len(rest) < 2:
                raise BadParameter(f"bloom needs a host spec and k: {text!r}")
            base = cls.parse(":".join(rest[:-1]))
            return cls("bloom", (_int(rest[-1], text),), base=base)
        if tag == "center_regular_tree":
            if not rest or len(rest) > 2 or (len(rest) == 2 and rest[1] != "bi"):
                raise BadParameter(f"crt spec must look like crt:d0,d1[:bi]: {text!r}")
            degrees = tuple(_int(d, text) for d in rest[0].split(","))
            return cls(tag, degrees, bicentral=len(rest) == 2)
        if tag == "corpus":
            if len(rest) != 1:
                raise BadParameter(f"corpus spec must look like corpus:<id>: {text!r}")
            return cls(tag, name=rest[0])
        if len(rest) != _ARITY[tag]:
            raise BadParameter(f"{parts[0]} takes {_ARITY[tag]} parameter(s): {text!r}")
        return cls(tag, tuple(_int(p, text) for p in rest))


def corpus_graph(graph_id: str) -> Graph:
    """
    Graph from the reference corpus (data/corpus.json).

    Raises:
        BadParameter: If the id is unknown
    """
    try:
        entry = DataLoader.get_corpus_graph(graph_id)
    except KeyError:
        raise BadParameter(f"Unknown corpus graph: {graph_id}") from None
    edges = [tuple(edge) for edge in entry["edges"]]
    return Graph.from_edges(entry["n"], edges, label=f"corpus:{graph_id}")


def standard_family(spec: FamilySpec) -> Graph:
    """
    Build the graph a FamilySpec names.

    Raises:
        BadParameter: If the parameters are out of range
    """
    family, params = spec.family, spec.params
    logger.debug(f"Building family {family} with params {params}")
    if family == "path":
        return path_graph(*params)
    if family == "cycle":
        return cycle_graph(*params)
    if family == "complete":
        return complete_graph(*params)
    if family == "star":
        return star_graph(*params)
    if family == "hypercube":
        return hypercube(*params)
    if family == "hypercube_minus":
        return hypercube_minus(*params)
    if family == "paw":
        return paw_graph()
    if family == "Z":
        return z_graph(*params)
    if family == "Y":
        return y_graph(*params)
    if family == "complete_minus_edges":
        return complete_minus_edges(*params)
    if family == "center_regular_tree":
        return center_regular_tree(params, bicentral=spec.bicentral)
    if family == "bloom":
        return bloom(standard_family(spec.base), *params)
    if family == "corpus":
        return corpus_graph(spec.name)
    raise BadParameter(f"Unknown family: {family}")


def build_from_spec(text: str) -> Graph:
    """Parse and build a family string in one step."""
    return standard_family(FamilySpec.parse(text))
