"""One-way zero-error protocol built from an orthogonal representation.

The sender holding the m-block x encodes it as the representation vector of
its vertex in the m-instance graph; the receiver, knowing its side block y,
measures against the subspaces spanned by the vectors of the x-blocks it
considers possible, grouped by the value block they produce. The protocol is
exact when, under every y-block, groups with different value blocks span
orthogonal subspaces; that is verified here pair by pair, and any violation is
reported with the witnessing (y-block, x-block, x-block') triple.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import InputError, RepresentationMismatch, VerificationFailure
from .graphs import complement
from .instances import FunctionInstance, build_m_instance_graph
from .reps import OrthRep, check_vector_shapes, _inner

GRAM_BLOCK_TOL = 1e-8


@dataclass(frozen=True)
class ProtocolEntry:
    y_block: tuple
    x_block: tuple
    decoded: tuple
    certain: bool


@dataclass(frozen=True)
class ProtocolTranscript:
    m: int
    dim: int
    mode: str
    verified: bool
    rate_bits_per_instance: float
    entries: tuple[ProtocolEntry, ...]


def _block_vertex_index(xs: tuple[int, ...], nx: int, m: int) -> int:
    # vertex order of the m-instance graph is the row-major product order
    idx = 0
    for x in xs:
        idx = idx * nx + x
    return idx


def build_and_verify_protocol(
    inst: FunctionInstance, m: int, rep: OrthRep
) -> ProtocolTranscript:
    """Verify rep as a zero-error protocol for m parallel instances and return
    the full decoding transcript."""
    if m < 1:
        raise InputError("m must be at least 1")
    nx, ny = len(inst.x_labels), len(inst.y_labels)
    if ny**m > 10**6:
        raise InputError(f"{ny}^{m} y-blocks exceed the enumeration guard")
    gm = build_m_instance_graph(inst, m)
    required = complement(gm)
    if tuple(rep.target.labels) != tuple(required.labels):
        raise RepresentationMismatch(
            "representation vertices do not match the m-instance graph"
        )
    check_vector_shapes(rep)

    xs_by_y = [
        tuple(xi for xi in range(nx) if inst.support[xi] >> yi & 1) for yi in range(ny)
    ]

    def x_label_block(xs: tuple[int, ...]) -> tuple:
        return tuple(inst.x_labels[x] for x in xs)

    def y_label_block(ys: tuple[int, ...]) -> tuple:
        return tuple(inst.y_labels[y] for y in ys)

    entries: list[ProtocolEntry] = []
    for ys in itertools.product(range(ny), repeat=m):
        classes: dict[tuple, list[tuple[int, ...]]] = {}
        for xs in itertools.product(*(xs_by_y[y] for y in ys)):
            zs = tuple(inst.values[x][y] for x, y in zip(xs, ys))
            classes.setdefault(zs, []).append(xs)
        class_items = sorted(classes.items())
        for a in range(len(class_items)):
            for b in range(a + 1, len(class_items)):
                sq_sum = 0.0
                worst = None
                worst_mag = -1.0
                for xs1 in class_items[a][1]:
                    v1 = rep.vectors[_block_vertex_index(xs1, nx, m)]
                    for xs2 in class_items[b][1]:
                        v2 = rep.vectors[_block_vertex_index(xs2, nx, m)]
                        ip = _inner(v1, v2, rep.mode)
                        if rep.mode == "exact":
                            if ip != 0:
                                raise VerificationFailure(
                                    "blocks with different values are not orthogonal "
                                    f"under y-block {y_label_block(ys)}: "
                                    f"{x_label_block(xs1)} vs {x_label_block(xs2)} "
                                    f"(inner product {ip})",
                                    (y_label_block(ys), x_label_block(xs1), x_label_block(xs2)),
                                )
                        else:
                            mag = abs(ip)
                            sq_sum += mag * mag
                            if mag > worst_mag:
                                worst_mag = mag
                                worst = (xs1, xs2)
                if rep.mode == "float" and math.sqrt(sq_sum) > GRAM_BLOCK_TOL:
                    xs1, xs2 = worst
                    raise VerificationFailure(
                        "blocks with different values are not orthogonal "
                        f"under y-block {y_label_block(ys)}: cross-Gram norm "
                        f"{math.sqrt(sq_sum):.3e} at {x_label_block(xs1)} vs "
                        f"{x_label_block(xs2)}",
                        (y_label_block(ys), x_label_block(xs1), x_label_block(xs2)),
                    )
        for zs, blocks in class_items:
            decoded = tuple(inst.z_labels[z] for z in zs)
            for xs in blocks:
                entries.append(
                    ProtocolEntry(y_label_block(ys), x_label_block(xs), decoded, True)
                )
    return ProtocolTranscript(
        m=m,
        dim=rep.dim,
        mode=rep.mode,
        verified=True,
        rate_bits_per_instance=math.log2(rep.dim) / m,
        entries=tuple(entries),
    )


@dataclass(frozen=True)
class SampleSummary:
    shots: int
    correct: int
    accuracy: float


def sample_protocol(
    inst: FunctionInstance, m: int, rep: OrthRep, shots: int = 1000, seed: int = 0
) -> SampleSummary:
    """Monte Carlo demonstration: draw (x-block, y-block) pairs, simulate the
    receiver's projective measurement, count correct decodings. A verified
    protocol decodes every shot correctly up to floating-point noise."""
    import numpy as np

    if shots < 1:
        raise InputError("shots must be positive")
    build_and_verify_protocol(inst, m, rep)  # refuse to sample unverified setups
    nx, ny = len(inst.x_labels), len(inst.y_labels)

    vecs = np.array([[complex(c) for c in v] for v in rep.vectors], dtype=complex)
    norms = np.linalg.norm(vecs, axis=1)
    vecs = vecs / norms[:, None]

    xs_by_y = [
        tuple(xi for xi in range(nx) if inst.support[xi] >> yi & 1) for yi in range(ny)
    ]
    rng = np.random.default_rng(seed)
    correct = 0
    for _ in range(shots):
        ys = tuple(int(rng.integers(ny)) for _ in range(m))
        xs = tuple(int(rng.choice(xs_by_y[y])) for y in ys)
        true_zs = tuple(inst.values[x][y] for x, y in zip(xs, ys))
        phi = vecs[_block_vertex_index(xs, nx, m)]
        classes: dict[tuple, list[int]] = {}
        for cand in itertools.product(*(xs_by_y[y] for y in ys)):
            zs = tuple(inst.values[x][y] for x, y in zip(cand, ys))
            classes.setdefault(zs, []).append(_block_vertex_index(cand, nx, m))
        outcomes = sorted(classes)
        probs = []
        for zs in outcomes:
            stack = vecs[classes[zs]].T
            u, s, _ = np.linalg.svd(stack, full_matrices=False)
            basis = u[:, s > 1e-9]  # orthonormal basis of the exact class span
            probs.append(float(np.linalg.norm(basis.conj().T @ phi) ** 2))
        p = np.clip(np.array(probs), 0.0, None)
        p = p / p.sum()
        drawn = outcomes[int(rng.choice(len(outcomes), p=p))]
        if drawn == true_zs:
            correct += 1
    return SampleSummary(shots=shots, correct=correct, accuracy=correct / shots)
