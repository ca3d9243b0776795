"""Function instances with side information and their confusion graphs.

An instance is a partial function f(x, y) defined exactly where the joint
support is positive, plus an optional rational pmf. The confusion graph
joins two x values when some common-support y makes f disagree; the
m-instance graph does the same over blocks, built by direct enumeration
over y-blocks with early exit (no structural shortcuts, so it can serve as
the oracle the product-collapse predictions are tested against).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import AssumptionViolation, InputError, IsolatedVertex, SizeExceeded
from .graphs import MAX_VERTICES, Graph, build_graph, label_str

BOX_PLUS = "BOX_PLUS"


@dataclass(frozen=True)
class FunctionInstance:
    """Partial function table over X x Y with optional pmf.

    support is one bitset per x over y indices; values holds z indices and is
    defined exactly on the support; probs (if present) mirrors the support
    with positive Fractions summing to exactly 1.
    """

    x_labels: tuple[str, ...]
    y_labels: tuple[str, ...]
    z_labels: tuple[str, ...]
    support: tuple[int, ...]
    values: tuple[tuple[int | None, ...], ...]
    probs: tuple[tuple[Fraction | None, ...], ...] | None = None

    def __post_init__(self):
        nx, ny, nz = len(self.x_labels), len(self.y_labels), len(self.z_labels)
        for name, labs in (("X", self.x_labels), ("Y", self.y_labels), ("Z", self.z_labels)):
            if len(set(labs)) != len(labs):
                raise AssumptionViolation(f"{name} labels must be unique")
        if nx == 0 or ny == 0:
            raise AssumptionViolation("X and Y must be nonempty")
        if BOX_PLUS in self.z_labels and BOX_PLUS in self.x_labels:
            raise AssumptionViolation(f"{BOX_PLUS} may not appear both in X and Z")
        if len(self.support) != nx or len(self.values) != nx:
            raise AssumptionViolation("support/values shape must be one row per x")
        for xi in range(nx):
            if self.support[xi] >> ny:
                raise AssumptionViolation(f"support bits out of range for x={self.x_labels[xi]}")
            if self.support[xi] == 0:
                raise AssumptionViolation(
                    f"every x needs at least one supported y; x={self.x_labels[xi]} has none"
                )
            if len(self.values[xi]) != ny:
                raise AssumptionViolation("values rows must have one entry per y")
            for yi in range(ny):
                sup = bool(self.support[xi] >> yi & 1)
                val = self.values[xi][yi]
                if sup and (val is None or not 0 <= val < nz):
                    raise AssumptionViolation(
                        f"value must be defined on support at ({self.x_labels[xi]},{self.y_labels[yi]})"
                    )
                if not sup and val is not None:
                    raise AssumptionViolation(
                        f"value defined off support at ({self.x_labels[xi]},{self.y_labels[yi]})"
                    )
        if self.probs is not None:
            total = Fraction(0)
            for xi in range(nx):
                if len(self.probs[xi]) != ny:
                    raise AssumptionViolation("probs rows must have one entry per y")
                for yi in range(ny):
                    p = self.probs[xi][yi]
                    sup = bool(self.support[xi] >> yi & 1)
                    if sup:
                        if not isinstance(p, Fraction) or p <= 0:
                            raise AssumptionViolation("supported cells need positive rational probability")
                        total += p
                    elif p is not None:
                        raise AssumptionViolation("probability assigned off support")
            if total != 1:
                raise AssumptionViolation(f"probabilities must sum to exactly 1, got {total}")

    # -- basic access ------------------------------------------------------

    @property
    def nx(self) -> int:
        return len(self.x_labels)

    @property
    def ny(self) -> int:
        return len(self.y_labels)

    def supported(self, xi: int, yi: int) -> bool:
        return bool(self.support[xi] >> yi & 1)

    def value_label(self, xi: int, yi: int) -> str:
        v = self.values[xi][yi]
        if v is None:
            raise InputError(
                f"({self.x_labels[xi]},{self.y_labels[yi]}) is outside the support"
            )
        return self.z_labels[v]


def make_instance(x_labels, y_labels, z_labels, table, probs=None) -> FunctionInstance:
    """Build an instance from a dict {(x_label, y_label): z_label}.

    ``probs`` is an optional dict {(x_label, y_label): Fraction}.
    """
    x_labels = tuple(x_labels)
    y_labels = tuple(y_labels)
    z_labels = tuple(z_labels)
    xi = {x: i for i, x in enumerate(x_labels)}
    yi = {y: i for i, y in enumerate(y_labels)}
    zi = {z: i for i, z in enumerate(z_labels)}
    support = [0] * len(x_labels)
    values = [[None] * len(y_labels) for _ in x_labels]
    for (x, y), z in table.items():
        if x not in xi or y not in yi:
            raise InputError(f"table key ({x},{y}) is not in X x Y")
        if z not in zi:
            raise InputError(f"table value {z} is not in Z")
        support[xi[x]] |= 1 << yi[y]
        values[xi[x]][yi[y]] = zi[z]
    prob_rows = None
    if probs is not None:
        prob_rows = [[None] * len(y_labels) for _ in x_labels]
        for (x, y), p in probs.items():
            if x not in xi or y not in yi:
                raise InputError(f"probability key ({x},{y}) is not in X x Y")
            prob_rows[xi[x]][yi[y]] = Fraction(p)
        prob_rows = tuple(tuple(row) for row in prob_rows)
    return FunctionInstance(
        x_labels,
        y_labels,
        z_labels,
        tuple(support),
        tuple(tuple(row) for row in values),
        prob_rows,
    )


def with_uniform_probs(inst: FunctionInstance) -> FunctionInstance:
    cells = sum(row.bit_count() for row in inst.support)
    p = Fraction(1, cells)
    rows = tuple(
        tuple(p if inst.support[xi] >> yi & 1 else None for yi in range(inst.ny))
        for xi in range(inst.nx)
    )
    return FunctionInstance(
        inst.x_labels, inst.y_labels, inst.z_labels, inst.support, inst.values, rows
    )


# ---------------------------------------------------------------------------
# Confusion graphs


def _pair_tables(inst: FunctionInstance):
    """Per pair (a, b) of x indices: bitsets over y of common support and of
    common-support-with-differing-value."""
    nx, ny = inst.nx, inst.ny
    com = [[0] * nx for _ in range(nx)]
    dif = [[0] * nx for _ in range(nx)]
    for a in range(nx):
        for b in range(nx):
            c = inst.support[a] & inst.support[b]
            com[a][b] = c
            d = 0
            bits = c
            while bits:
                bit = bits & -bits
                y = bit.bit_length() - 1
                if inst.values[a][y] != inst.values[b][y]:
                    d |= bit
                bits &= bits - 1
            dif[a][b] = d
    return com, dif


def build_confusion_graph(inst: FunctionInstance) -> Graph:
    """Two x values are confusable when some common-support y separates f."""
    _, dif = _pair_tables(inst)
    edges = [
        (a, b)
        for a in range(inst.nx)
        for b in range(a + 1, inst.nx)
        if dif[a][b]
    ]
    return build_graph(inst.x_labels, edges)


def build_m_instance_graph(inst: FunctionInstance, m: int) -> Graph:
    """Block confusion graph on X^m, by direct enumeration over y-blocks.

    Edge rule: some y-block has positive support in every coordinate and a
    differing function value in at least one. The loop scans y-blocks with an
    early exit on the first witness; nothing about the single-instance
    structure is assumed, so this can act as an oracle for the product
    predictions.
    """
    if m < 1:
        raise InputError("m must be >= 1")
    if inst.nx ** m > MAX_VERTICES:
        raise SizeExceeded(f"|X|^m = {inst.nx ** m} exceeds the cap of {MAX_VERTICES}")
    if m == 1:
        return build_confusion_graph(inst)
    com, dif = _pair_tables(inst)
    xs = list(itertools.product(range(inst.nx), repeat=m))
    ys = list(itertools.product(range(inst.ny), repeat=m))
    labels = [tuple(inst.x_labels[i] for i in t) for t in xs]
    n = len(xs)
    adj = [0] * n
    rng = range(m)
    for a in range(n):
        ta = xs[a]
        for b in range(a + 1, n):
            tb = xs[b]
            for ybar in ys:
                ok = True
                diff = False
                for t in rng:
                    y = ybar[t]
                    if not com[ta[t]][tb[t]] >> y & 1:
                        ok = False
                        break
                    if dif[ta[t]][tb[t]] >> y & 1:
                        diff = True
                if ok and diff:
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
                    break
    return Graph(labels, adj)


# ---------------------------------------------------------------------------
# Non-edge classification and product collapse prediction


class Collapse(Enum):
    ALL_STRONG = "AllStrong"
    ALL_OR = "AllOr"
    BETWEEN = "Between"
    TRIVIAL = "Trivial"


@dataclass(frozen=True)
class NonEdgeClassification:
    """Every non-adjacent pair of the confusion graph, split into:

    C1: no common-support y at all.
    C2: common support exists but f never disagrees there.
    """

    c1_pairs: tuple[tuple[str, str], ...]
    c2_pairs: tuple[tuple[str, str], ...]

    def tag(self, x1: str, x2: str) -> str:
        if (x1, x2) in self.c1_pairs or (x2, x1) in self.c1_pairs:
            return "C1"
        if (x1, x2) in self.c2_pairs or (x2, x1) in self.c2_pairs:
            return "C2"
        raise InputError(f"({x1},{x2}) is not a non-edge of the confusion graph")

    @property
    def all_c1(self) -> bool:
        return not self.c2_pairs

    @property
    def all_c2(self) -> bool:
        return not self.c1_pairs


def classify_nonedges(inst: FunctionInstance) -> NonEdgeClassification:
    com, dif = _pair_tables(inst)
    c1 = []
    c2 = []
    for a in range(inst.nx):
        for b in range(a + 1, inst.nx):
            if dif[a][b]:
                continue  # edge
            pair = (inst.x_labels[a], inst.x_labels[b])
            if com[a][b]:
                c2.append(pair)
            else:
                c1.append(pair)
    return NonEdgeClassification(tuple(c1), tuple(c2))


def predict_product_collapse(inst: FunctionInstance) -> Collapse:
    """Which product power the block confusion graphs collapse to, for all m.

    Complete or edgeless confusion graphs make both collapses hold trivially.
    Otherwise all-C1 non-edges pin the strong power, all-C2 the OR power, and
    a mix sits strictly between at m >= 2.
    """
    g = build_confusion_graph(inst)
    if g.is_complete() or g.is_edgeless():
        return Collapse.TRIVIAL
    cls = classify_nonedges(inst)
    if cls.all_c1:
        return Collapse.ALL_STRONG
    if cls.all_c2:
        return Collapse.ALL_OR
    return Collapse.BETWEEN


# ---------------------------------------------------------------------------
# Instance constructors realizing a target confusion graph


def _pair_label(g: Graph, i: int, j: int) -> str:
    return "{" + label_str(g.labels[i]) + "," + label_str(g.labels[j]) + "}"


def construct_strong_instance(g: Graph) -> FunctionInstance:
    """Instance whose confusion graph is g with every non-edge of type C1.

    Y is the edge set, x is supported on its incident edges, and f returns x
    itself. Needs minimum degree 1 so Assumption 1 holds.
    """
    for i in range(g.n):
        if g.degree(i) == 0:
            raise IsolatedVertex(
                f"vertex {label_str(g.labels[i])} has degree 0; every x needs an incident edge"
            )
    edges = list(g.edges())
    x_labels = tuple(label_str(lab) for lab in g.labels)
    y_labels = tuple(_pair_label(g, i, j) for i, j in edges)
    support = [0] * g.n
    values = [[None] * len(edges) for _ in range(g.n)]
    for e, (i, j) in enumerate(edges):
        support[i] |= 1 << e
        support[j] |= 1 << e
        values[i][e] = i
        values[j][e] = j
    inst = FunctionInstance(
        x_labels,
        y_labels,
        x_labels,
        tuple(support),
        tuple(tuple(row) for row in values),
    )
    return with_uniform_probs(inst)


def construct_or_instance(g: Graph) -> FunctionInstance:
    """Instance whose confusion graph is g with every non-edge of type C2.

    Y is every unordered pair, x is supported on pairs containing it, and f
    returns x on edges but a shared filler symbol on non-edges.
    """
    if g.n < 2:
        raise InputError("need at least 2 vertices to form unordered pairs")
    x_labels = tuple(label_str(lab) for lab in g.labels)
    if BOX_PLUS in x_labels:
        raise AssumptionViolation(f"vertex label {BOX_PLUS} collides with the filler symbol")
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
    y_labels = tuple(_pair_label(g, i, j) for i, j in pairs)
    z_labels = x_labels + (BOX_PLUS,)
    box = len(x_labels)
    support = [0] * g.n
    values = [[None] * len(pairs) for _ in range(g.n)]
    for e, (i, j) in enumerate(pairs):
        support[i] |= 1 << e
        support[j] |= 1 << e
        if g.has_edge(i, j):
            values[i][e] = i
            values[j][e] = j
        else:
            values[i][e] = box
            values[j][e] = box
    inst = FunctionInstance(
        x_labels,
        y_labels,
        z_labels,
        tuple(support),
        tuple(tuple(row) for row in values),
    )
    return with_uniform_probs(inst)


# ---------------------------------------------------------------------------
# Built-in instances

_BUILTIN_TABLES = {
    # rows are y=1..5, columns x=1..5; '*' marks zero support
    "f_tilde": ("10***", "*10**", "**10*", "***10", "0***1"),
    "g_tilde": ("101**", "*101*", "**101", "1**10", "01**1"),
    "h_tilde": ("101**", "*10**", "**10*", "***10", "0***1"),
}


def builtin_instance(name: str) -> FunctionInstance:
    """f_tilde, g_tilde, h_tilde (the 5x5 tables), or pentagon_equality."""
    if name in _BUILTIN_TABLES:
        rows = _BUILTIN_TABLES[name]
        labels = tuple(str(i + 1) for i in range(5))
        table = {}
        for yi, row in enumerate(rows):
            for xi, ch in enumerate(row):
                if ch != "*":
                    table[(labels[xi], labels[yi])] = ch
        inst = make_instance(labels, labels, ("0", "1"), table)
        return with_uniform_probs(inst)
    if name == "pentagon_equality":
        labels = tuple(str(i) for i in range(5))
        table = {}
        probs = {}
        for x in range(5):
            for y in (x, (x + 1) % 5):
                table[(str(x), str(y))] = "1" if x == y else "0"
                probs[(str(x), str(y))] = Fraction(1, 10)
        return make_instance(labels, labels, ("0", "1"), table, probs)
    raise InputError(f"unknown builtin instance {name!r}")


# ---------------------------------------------------------------------------
# Serialization


def instance_to_json_dict(inst: FunctionInstance) -> dict:
    rows = []
    for yi in range(inst.ny):
        row = []
        for xi in range(inst.nx):
            if not inst.supported(xi, yi):
                row.append("*")
            else:
                entry = {"v": inst.z_labels[inst.values[xi][yi]]}
                if inst.probs is not None:
                    p = inst.probs[xi][yi]
                    entry["p"] = f"{p.numerator}/{p.denominator}"
                row.append(entry)
        rows.append(row)
    return {
        "X": list(inst.x_labels),
        "Y": list(inst.y_labels),
        "Z": list(inst.z_labels),
        "table": rows,
    }


def instance_from_json_dict(data: dict) -> FunctionInstance:
    try:
        x_labels = tuple(str(x) for x in data["X"])
        y_labels = tuple(str(y) for y in data["Y"])
        z_labels = tuple(str(z) for z in data["Z"])
        rows = data["table"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed instance JSON: {exc}") from exc
    if len(rows) != len(y_labels):
        raise InputError("instance JSON: table needs one row per y")
    table = {}
    probs = {}
    saw_prob = False
    saw_bare = False
    for yi, row in enumerate(rows):
        if len(row) != len(x_labels):
            raise InputError("instance JSON: each row needs one entry per x")
        for xi, entry in enumerate(row):
            if entry == "*":
                continue
            if not isinstance(entry, dict) or "v" not in entry:
                raise InputError(f"instance JSON: bad entry at row {yi}, column {xi}")
            table[(x_labels[xi], y_labels[yi])] = str(entry["v"])
            if "p" in entry:
                saw_prob = True
                txt = str(entry["p"])
                try:
                    if "/" in txt:
                        num, den = txt.split("/", 1)
                        p = Fraction(int(num), int(den))
                    else:
                        p = Fraction(int(txt))
                except (ValueError, ZeroDivisionError) as exc:
                    raise InputError(f"instance JSON: bad probability {txt!r}") from exc
                probs[(x_labels[xi], y_labels[yi])] = p
            else:
                saw_bare = True
    if saw_prob and saw_bare:
        raise InputError("instance JSON: probabilities must cover all supported cells or none")
    return make_instance(x_labels, y_labels, z_labels, table, probs if saw_prob else None)
