"""Graph core: labeled simple graphs with bitset adjacency, products and powers,
complements, directed graphs with line graphs, named constructions, JSON/DOT I/O.

Vertices are identified by position; labels are opaque strings, or tuples of
labels for product vertices. Equality between graphs is labeled equality:
same label sequence and same edge set. Nothing here tests isomorphism.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import re
from typing import Iterable, Iterator, Sequence

from .errors import InputError, SizeExceeded

# Global cap on vertex counts; powers check their result size against it too.
MAX_VERTICES = 4096


def label_str(label) -> str:
    """Canonical printable form of a label (tuples render as (a,b,...))."""
    if isinstance(label, tuple):
        return "(" + ",".join(label_str(p) for p in label) + ")"
    return str(label)


def _label_to_jsonable(label):
    if isinstance(label, tuple):
        return [_label_to_jsonable(p) for p in label]
    return label


def _label_from_jsonable(obj):
    if isinstance(obj, list):
        return tuple(_label_from_jsonable(p) for p in obj)
    if not isinstance(obj, str):
        raise InputError(f"labels must be strings or nested lists, got {type(obj).__name__}")
    return obj


class Graph:
    """Immutable simple graph: ordered labels plus one adjacency bitset per vertex."""

    __slots__ = ("labels", "adj", "_index")

    def __init__(self, labels: Sequence, adj: Sequence[int]):
        labels = tuple(labels)
        adj = tuple(adj)
        n = len(labels)
        if n > MAX_VERTICES:
            raise SizeExceeded(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        if len(adj) != n:
            raise InputError("adjacency length does not match label count")
        if len(set(labels)) != n:
            raise InputError("vertex labels must be unique")
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row & ~full:
                raise InputError(f"adjacency bits out of range at vertex {i}")
            if row >> i & 1:
                raise InputError(f"self-loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (adj[i] >> j & 1) != (adj[j] >> i & 1):
                    raise InputError(f"adjacency not symmetric at ({i},{j})")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown vertex label {label_str(label)}") from None

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Index pairs (i, j) with i < j, ascending."""
        for i in range(self.n):
            row = self.adj[i] >> (i + 1) << (i + 1)
            while row:
                j = (row & -row).bit_length() - 1
                yield (i, j)
                row &= row - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edge_label_set(self) -> frozenset:
        return frozenset(frozenset((self.labels[i], self.labels[j])) for i, j in self.edges())

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_edgeless(self) -> bool:
        return self.edge_count == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def build_graph(labels: Sequence, edges: Iterable) -> Graph:
    """Build a graph from labels and edges given as index pairs or label pairs."""
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    adj = [0] * len(labels)
    for e in edges:
        u, v = e
        if not isinstance(u, int):
            if u not in index or v not in index:
                raise InputError(f"edge endpoint {u!r} or {v!r} is not a vertex label")
            u, v = index[u], index[v]
        if not (0 <= u < len(labels) and 0 <= v < len(labels)):
            raise InputError(f"edge index ({u},{v}) out of range")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(labels, adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.labels, tuple((full & ~row) & ~(1 << i) for i, row in enumerate(g.adj)))


def _product(g: Graph, h: Graph, kind: str) -> Graph:
    """Strong or OR product; vertex (i, j) is labeled (g.labels[i], h.labels[j]),
    laid out row-major with g as the outer factor."""
    if g.n * h.n > MAX_VERTICES:
        raise SizeExceeded(f"product would have {g.n * h.n} vertices (cap {MAX_VERTICES})")
    labels = [(lg, lh) for lg in g.labels for lh in h.labels]
    n = g.n * h.n
    adj = [0] * n
    for u1 in range(g.n):
        for v1 in range(h.n):
            a = u1 * h.n + v1
            for u2 in range(g.n):
                gu = u1 == u2
                ge = g.has_edge(u1, u2)
                for v2 in range(h.n):
                    b = u2 * h.n + v2
                    if b <= a:
                        continue
                    hv = v1 == v2
                    he = h.has_edge(v1, v2)
                    if kind == "strong":
                        # three clauses: one side equal and the other adjacent,
                        # or both sides adjacent
                        ok = (gu and he) or (ge and hv) or (ge and he)
                    else:
                        # OR product: one side equal and the other adjacent, or
                        # both sides differ and at least one side adjacent
                        ok = (gu and he) or (hv and ge) or (not gu and not hv and (ge or he))
                    if ok:
                        adj[a] |= 1 << b
                        adj[b] |= 1 << a
    return Graph(labels, adj)


def strong_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, "strong")


def or_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, "or")


def flatten_product_labels(g: Graph) -> Graph:
    """Rewrite pair labels ((..a..), b) as flat tuples (..a.., b).

    Products of powers produce nested pairs; powers produce flat m-tuples.
    This makes the two comparable by labeled equality.
    """

    def flat(label):
        if not isinstance(label, tuple):
            return (label,)
        out = []
        for part in label:
            out.extend(flat(part))
        return tuple(out)

    return Graph(tuple(flat(lab) for lab in g.labels), g.adj)


def power(g: Graph, m: int, kind: str) -> Graph:
    """m-fold strong or OR power; vertices are m-tuples of g's labels in
    lexicographic (row-major) order. power(g, 1, kind) is g itself."""
    if kind not in ("strong", "or"):
        raise InputError(f"unknown product kind {kind!r}")
    if m < 1:
        raise InputError("power exponent must be >= 1")
    if g.n ** m > MAX_VERTICES:
        raise SizeExceeded(f"power would have {g.n ** m} vertices (cap {MAX_VERTICES})")
    if m == 1:
        return g
    tuples = list(itertools.product(range(g.n), repeat=m))
    labels = [tuple(g.labels[i] for i in t) for t in tuples]
    n = len(tuples)
    adj = [0] * n
    for a in range(n):
        ta = tuples[a]
        for b in range(a + 1, n):
            tb = tuples[b]
            if kind == "strong":
                ok = all(x == y or g.has_edge(x, y) for x, y in zip(ta, tb))
            else:
                ok = any(g.has_edge(x, y) for x, y in zip(ta, tb))
            if ok:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(labels, adj)


class DirectedGraph:
    """Immutable directed graph: ordered labels plus a sorted tuple of arcs (i, j)."""

    __slots__ = ("labels", "arcs", "_index")

    def __init__(self, labels: Sequence, arcs: Iterable[tuple[int, int]]):
        labels = tuple(labels)
        n = len(labels)
        if n > MAX_VERTICES:
            raise SizeExceeded(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        if len(set(labels)) != n:
            raise InputError("vertex labels must be unique")
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u},{v}) out of range")
            if u == v:
                raise InputError(f"loop arc at vertex {u}")
            if (u, v) in seen:
                raise InputError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "arcs", tuple(sorted(seen)))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    def __setattr__(self, name, value):
        raise AttributeError("DirectedGraph is immutable")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.labels == other.labels and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.labels, self.arcs))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, arcs={self.arc_count})"


def bidirect(g: Graph) -> DirectedGraph:
    """Both orientations of every edge; exactly 2 * edge_count arcs."""
    arcs = []
    for i, j in g.edges():
        arcs.append((i, j))
        arcs.append((j, i))
    return DirectedGraph(g.labels, arcs)


def directed_line_graph(d: DirectedGraph) -> Graph:
    """One vertex per arc, labeled "(u,v)"; two arcs are adjacent when they can
    be walked one after the other in some order (head of one is the tail of the
    other)."""
    labels = [f"({label_str(d.labels[u])},{label_str(d.labels[v])})" for u, v in d.arcs]
    n = len(d.arcs)
    if n > MAX_VERTICES:
        raise SizeExceeded(f"line graph would have {n} vertices (cap {MAX_VERTICES})")
    adj = [0] * n
    for a in range(n):
        u1, v1 = d.arcs[a]
        for b in range(a + 1, n):
            u2, v2 = d.arcs[b]
            if v1 == u2 or v2 == u1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(labels, adj)


# ---------------------------------------------------------------------------
# Named constructions


def _cycle(n: int) -> Graph:
    labels = [str(i + 1) for i in range(n)]
    edges = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(labels, edges)


# Integer coordinates defining the 13-vertex orthogonality graph; adjacency is
# recomputed from dot products, never hardcoded.
G13_COORDINATES: dict[str, tuple[int, int, int]] = {
    "A": (1, 0, 0),
    "B": (0, 1, 0),
    "C": (0, 0, 1),
    "L": (0, 1, 1),
    "M": (0, 1, -1),
    "N": (1, 0, 1),
    "P": (1, 0, -1),
    "Q": (1, 1, 0),
    "R": (1, -1, 0),
    "Y": (1, 1, -1),
    "X": (1, -1, 1),
    "Z": (-1, 1, 1),
    "W": (1, 1, 1),
}


def _g13() -> Graph:
    labels = list(G13_COORDINATES)
    coords = [G13_COORDINATES[lab] for lab in labels]
    edges = []
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if sum(a * b for a, b in zip(coords[i], coords[j])) == 0:
                edges.append((i, j))
    return build_graph(labels, edges)


def hypercube_parity_vectors(n: int) -> list[tuple[int, ...]]:
    """All vectors in {-1,1}^n with an even number of -1 entries, lexicographic
    with +1 sorting before -1."""
    out = []
    for signs in itertools.product((1, -1), repeat=n):
        if sum(1 for s in signs if s == -1) % 2 == 0:
            out.append(signs)
    return out


def sign_label(vector: tuple[int, ...]) -> str:
    return "".join("+" if s == 1 else "-" for s in vector)


def _h_graph(n: int) -> Graph:
    if n < 1 or n % 2 == 0:
        raise InputError("h(n) requires odd n >= 1")
    if 2 ** (n - 1) > MAX_VERTICES:
        raise SizeExceeded(f"h({n}) would have {2 ** (n - 1)} vertices (cap {MAX_VERTICES})")
    vectors = hypercube_parity_vectors(n)
    labels = [sign_label(v) for v in vectors]
    edges = []
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if sum(a * b for a, b in zip(vectors[i], vectors[j])) == -1:
                edges.append((i, j))
    return build_graph(labels, edges)


_NAME_RE = re.compile(r"^(?P<name>[a-z0-9]+)(?:\((?P<arg>\d+)\))?$")


def named_graph(name: str) -> Graph:
    """pentagon, complete(n), empty(n), g13, h(n)."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise InputError(f"unrecognized graph name {name!r}")
    base, arg = m.group("name"), m.group("arg")
    if base == "pentagon":
        if arg is not None:
            raise InputError("pentagon takes no argument")
        return _cycle(5)
    if base == "complete":
        if arg is None:
            raise InputError("complete(n) needs n")
        n = int(arg)
        if n < 1:
            raise InputError("complete(n) needs n >= 1")
        labels = [str(i + 1) for i in range(n)]
        return build_graph(labels, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if base == "empty":
        if arg is None:
            raise InputError("empty(n) needs n")
        n = int(arg)
        if n < 1:
            raise InputError("empty(n) needs n >= 1")
        return build_graph([str(i + 1) for i in range(n)], [])
    if base == "g13":
        if arg is not None:
            raise InputError("g13 takes no argument")
        return _g13()
    if base == "h":
        if arg is None:
            raise InputError("h(n) needs n")
        return _h_graph(int(arg))
    raise InputError(f"unrecognized graph name {name!r}")


# ---------------------------------------------------------------------------
# Serialization


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "n": g.n,
        "labels": [_label_to_jsonable(lab) for lab in g.labels],
        "edges": [[i, j] for i, j in sorted(g.edges())],
    }


def graph_from_json_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        labels = [_label_from_jsonable(lab) for lab in data["labels"]]
        edges = [(int(e[0]), int(e[1])) for e in data["edges"]]
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc
    if n != len(labels):
        raise InputError("graph JSON: n does not match label count")
    return build_graph(labels, edges)


def graph_hash(g: Graph) -> str:
    """Stable content hash of the labeled edge set, used to pin representations."""
    blob = json.dumps(graph_to_json_dict(g), separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: Graph) -> str:
    lines = ["graph {"]
    for lab in g.labels:
        lines.append(f"  {_dot_quote(label_str(lab))};")
    for i, j in sorted(g.edges()):
        lines.append(f"  {_dot_quote(label_str(g.labels[i]))} -- {_dot_quote(label_str(g.labels[j]))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(d: DirectedGraph) -> str:
    lines = ["digraph {"]
    for lab in d.labels:
        lines.append(f"  {_dot_quote(label_str(lab))};")
    for u, v in d.arcs:
        lines.append(f"  {_dot_quote(label_str(d.labels[u]))} -> {_dot_quote(label_str(d.labels[v]))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
