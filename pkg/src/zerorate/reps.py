"""Orthogonal representations: distinct non-adjacent vertices of the target
graph must receive orthogonal vectors.

Two arithmetic modes. "exact" holds unnormalized integer vectors and checks
orthogonality with integer dot products (scale never matters to the checks).
"float" holds unit-norm complex vectors with 1e-9 tolerances. Combinators
cover basis-vector representations from colorings, tensor products for strong
products of targets, and retargeting onto a graph with more edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    ImproperColoring,
    InputError,
    ModeMismatch,
    RepresentationMismatch,
    VerificationFailure,
)
from .graphs import (
    G13_COORDINATES,
    Graph,
    bidirect,
    complement,
    directed_line_graph,
    graph_hash,
    hypercube_parity_vectors,
    label_str,
    named_graph,
    sign_label,
    strong_product,
)

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class OrthRep:
    target: Graph
    dim: int
    mode: str  # "exact" or "float"
    vectors: tuple[tuple, ...]  # one vector per target vertex, in label order


def _inner(u, v, mode: str):
    if mode == "exact":
        return sum(a * b for a, b in zip(u, v))
    return sum(a.conjugate() * b for a, b in zip(u, v))


def check_vector_shapes(rep: OrthRep) -> None:
    """Structural checks only: mode, lengths, nonzero/unit-norm vectors."""
    if rep.mode not in ("exact", "float"):
        raise InputError(f"unknown representation mode {rep.mode!r}")
    if len(rep.vectors) != rep.target.n:
        raise VerificationFailure("one vector per vertex required", ())
    for i, vec in enumerate(rep.vectors):
        lab = rep.target.labels[i]
        if len(vec) != rep.dim:
            raise VerificationFailure(
                f"vector for {label_str(lab)} has length {len(vec)}, not {rep.dim}",
                (lab,),
            )
        if rep.mode == "exact":
            if not all(isinstance(c, int) for c in vec):
                raise VerificationFailure(
                    f"exact mode requires integer coordinates at {label_str(lab)}",
                    (lab,),
                )
            if all(c == 0 for c in vec):
                raise VerificationFailure(f"zero vector at {label_str(lab)}", (lab,))
        else:
            norm2 = _inner(vec, vec, "float")
            if abs(norm2.real - 1.0) > FLOAT_TOL or abs(norm2.imag) > FLOAT_TOL:
                raise VerificationFailure(
                    f"vector at {label_str(lab)} is not unit norm", (lab,)
                )


def verify_representation(rep: OrthRep, graph: Graph | None = None) -> None:
    """Raise VerificationFailure unless rep is a valid representation of
    ``graph`` (default: its own declared target). RepresentationMismatch when
    the vertex labels disagree."""
    g = rep.target if graph is None else graph
    if tuple(rep.target.labels) != tuple(g.labels):
        raise RepresentationMismatch("representation labels do not match the graph")
    check_vector_shapes(rep)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            ip = _inner(rep.vectors[i], rep.vectors[j], rep.mode)
            bad = ip != 0 if rep.mode == "exact" else abs(ip) > FLOAT_TOL
            if bad:
                raise VerificationFailure(
                    f"non-adjacent pair ({label_str(g.labels[i])},{label_str(g.labels[j])}) "
                    f"has inner product {ip}",
                    (g.labels[i], g.labels[j]),
                )


def representation_is_valid(rep: OrthRep, graph: Graph | None = None) -> bool:
    try:
        verify_representation(rep, graph)
    except (VerificationFailure, RepresentationMismatch, InputError):
        return False
    return True


def coloring_to_representation(g: Graph, colors: dict) -> OrthRep:
    """Basis-vector representation of g from a proper coloring of its
    complement (non-adjacent vertices must get distinct colors)."""
    comp = complement(g)
    assigned = []
    for lab in g.labels:
        if lab not in colors:
            raise ImproperColoring(f"no color for vertex {label_str(lab)}")
        assigned.append(colors[lab])
    for i, j in comp.edges():
        if assigned[i] == assigned[j]:
            raise ImproperColoring(
                f"vertices {label_str(g.labels[i])} and {label_str(g.labels[j])} are "
                "non-adjacent but share a color"
            )
    palette = sorted(set(assigned))
    index = {c: k for k, c in enumerate(palette)}
    dim = len(palette)
    vectors = tuple(
        tuple(1 if index[assigned[i]] == k else 0 for k in range(dim)) for i in range(g.n)
    )
    rep = OrthRep(g, dim, "exact", vectors)
    verify_representation(rep)
    return rep


def tensor_representation(r1: OrthRep, r2: OrthRep) -> OrthRep:
    """Kronecker products represent the strong product of the targets."""
    if r1.mode != r2.mode:
        raise ModeMismatch(f"cannot tensor modes {r1.mode!r} and {r2.mode!r}")
    target = strong_product(r1.target, r2.target)
    vectors = []
    for v1 in r1.vectors:
        for v2 in r2.vectors:
            vectors.append(tuple(a * b for a in v1 for b in v2))
    rep = OrthRep(target, r1.dim * r2.dim, r1.mode, tuple(vectors))
    verify_representation(rep)
    return rep


def retarget_representation(rep: OrthRep, graph: Graph) -> OrthRep:
    """Reuse the vectors on a graph with the same vertices; valid whenever the
    new graph has every edge of the old one (fewer orthogonality demands)."""
    moved = OrthRep(graph, rep.dim, rep.mode, rep.vectors)
    verify_representation(moved)
    return moved


def relabel_representation(rep: OrthRep, graph: Graph) -> OrthRep:
    """Move the vectors onto a graph with identical adjacency in index order
    (same structure, different vertex names)."""
    if graph.n != rep.target.n or tuple(graph.adj) != tuple(rep.target.adj):
        raise RepresentationMismatch(
            "graphs differ as indexed structures; relabeling preserves nothing"
        )
    moved = OrthRep(graph, rep.dim, rep.mode, rep.vectors)
    verify_representation(moved)
    return moved


# ---------------------------------------------------------------------------
# Built-in representations

_DIRECTIONS3: list[tuple[int, int, int]] = sorted(
    {
        t if next(c for c in t if c) > 0 else tuple(-c for c in t)
        for t in itertools.product((-1, 0, 1), repeat=3)
        if any(t)
    }
)


def _search_c5bar() -> OrthRep:
    """Exhaustive deterministic search for a 3-dimensional integer
    representation of the pentagon complement: cycle-adjacent vertices of the
    pentagon are the non-adjacent pairs and need orthogonal vectors."""
    target = complement(named_graph("pentagon"))
    chosen: list[tuple[int, int, int]] = []

    def ok(vec, pos) -> bool:
        if pos > 0 and sum(a * b for a, b in zip(chosen[pos - 1], vec)):
            return False
        if pos == 4 and sum(a * b for a, b in zip(chosen[0], vec)):
            return False
        return True

    def search(pos: int) -> bool:
        if pos == 5:
            return True
        for vec in _DIRECTIONS3:
            if ok(vec, pos):
                chosen.append(vec)
                if search(pos + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        raise ArithmeticError("no 3-dimensional integer pentagon-complement representation found")
    rep = OrthRep(target, 3, "exact", tuple(chosen))
    verify_representation(rep)
    return rep


def builtin_representation(name: str):
    """c5bar, g13bar, hbar(n), ldg13bar; every result is validated on build."""
    name = name.strip()
    if name == "c5bar":
        return _search_c5bar()
    if name == "g13bar":
        g13 = named_graph("g13")
        target = complement(g13)
        vectors = tuple(G13_COORDINATES[lab] for lab in g13.labels)
        rep = OrthRep(target, 3, "exact", vectors)
        verify_representation(rep)
        return rep
    if name.startswith("hbar(") and name.endswith(")"):
        n = int(name[5:-1])
        target = complement(named_graph(f"h({n})"))
        vecs = hypercube_parity_vectors(n)
        labels = {sign_label(v): v for v in vecs}
        vectors = tuple(labels[lab] + (1,) for lab in target.labels)
        rep = OrthRep(target, n + 1, "exact", vectors)
        verify_representation(rep)
        return rep
    if name == "ldg13bar":
        g13 = named_graph("g13")
        line = directed_line_graph(bidirect(g13))
        target = complement(line)
        # arc (u,v) inherits the coordinate vector of its tail u
        d = bidirect(g13)
        vectors = tuple(G13_COORDINATES[g13.labels[u]] for u, _ in d.arcs)
        rep = OrthRep(target, 3, "exact", vectors)
        verify_representation(rep)
        return rep
    raise InputError(f"unknown builtin representation {name!r}")


# ---------------------------------------------------------------------------
# Serialization


def rep_to_json_dict(rep: OrthRep) -> dict:
    vectors = {}
    for lab, vec in zip(rep.target.labels, rep.vectors):
        if rep.mode == "exact":
            vectors[label_str(lab)] = list(vec)
        else:
            vectors[label_str(lab)] = [[c.real, c.imag] for c in vec]
    return {
        "target_hash": graph_hash(rep.target),
        "dim": rep.dim,
        "mode": rep.mode,
        "vectors": vectors,
    }


def rep_from_json_dict(data: dict, target: Graph) -> OrthRep:
    try:
        mode = data["mode"]
        dim = int(data["dim"])
        vec_map = data["vectors"]
        declared = data["target_hash"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed representation JSON: {exc}") from exc
    if declared != graph_hash(target):
        raise RepresentationMismatch(
            "representation JSON was built for a different graph (hash mismatch)"
        )
    vectors = []
    for lab in target.labels:
        key = label_str(lab)
        if key not in vec_map:
            raise InputError(f"representation JSON lacks a vector for {key}")
        raw = vec_map[key]
        if mode == "exact":
            vectors.append(tuple(int(c) for c in raw))
        else:
            vectors.append(tuple(complex(c[0], c[1]) for c in raw))
    rep = OrthRep(target, dim, mode, tuple(vectors))
    verify_representation(rep)
    return rep
