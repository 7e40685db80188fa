"""Move graphs on word sets and the derived class-level structures.

G(w) has the reduced words as vertices, with an edge per single supported
move, labeled braid or commutation.  Contracting the commutation edges gives
G_c(w) (vertices are commutation classes); contracting the braid edges gives
G_b(w).  Gamma(w) is the bipartite incidence graph on braid classes and
commutation classes with one edge per reduced word, and the intersection
table arranges the same data as a grid with at most one word per cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .classes import ClassPartition
from .coxeter_moves import BRAID, COMMUTATION
from .errors import InvariantViolation
from .reduced_words import Word, WordSet, word_text

INCIDENCE = "incidence"


class Edge(NamedTuple):
    u: int
    v: int
    kind: str
    word: Word | None = None  # witness for incidence edges


@dataclass(frozen=True)
class LabeledGraph:
    labels: tuple[str, ...]
    edges: tuple[Edge, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def kind_count(self, kind: str) -> int:
        return sum(1 for e in self.edges if e.kind == kind)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj


def build_word_graph(word_set: WordSet) -> LabeledGraph:
    """G(w): one vertex per word, one labeled edge per supported move.

    Commutation edges are listed before braid edges, each by (word, position),
    with every unordered pair recorded once.
    """
    words = word_set.words
    index = {u: k for k, u in enumerate(words)}
    c_edges: list[Edge] = []
    b_edges: list[Edge] = []
    for k, u in enumerate(words):
        for i in range(len(u) - 1):
            a, b = u[i], u[i + 1]
            if abs(a - b) > 1:
                v = index[u[:i] + bytes((b, a)) + u[i + 2 :]]
                if v > k:
                    c_edges.append(Edge(k, v, COMMUTATION))
        for i in range(1, len(u) - 1):
            a, b = u[i - 1], u[i]
            if u[i + 1] == a and abs(a - b) == 1:
                v = index[u[: i - 1] + bytes((b, a, b)) + u[i + 2 :]]
                if v > k:
                    b_edges.append(Edge(k, v, BRAID))
    labels = tuple(word_text(u) for u in words)
    return LabeledGraph(labels=labels, edges=tuple(c_edges + b_edges))


def contract(g: LabeledGraph, kind: str) -> LabeledGraph:
    """Contract all edges of one kind; vertices become that kind's classes.

    Contracting commutation edges yields G_c (vertices C1, C2, ...);
    contracting braid edges yields G_b (vertices B1, B2, ...).  Remaining
    edges are deduplicated and self-loops dropped.
    """
    n = g.vertex_count
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        if e.kind == kind:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    comp_id: dict[int, int] = {}
    for v in range(n):
        root = find(v)
        if root not in comp_id:
            comp_id[root] = len(comp_id)
    prefix = "C" if kind == COMMUTATION else "B"
    labels = tuple(f"{prefix}{k + 1}" for k in range(len(comp_id)))
    kept = set()
    for e in g.edges:
        if e.kind != kind:
            cu, cv = comp_id[find(e.u)], comp_id[find(e.v)]
            if cu != cv:
                kept.add((min(cu, cv), max(cu, cv), e.kind))
    edges = tuple(Edge(u, v, k) for u, v, k in sorted(kept))
    return LabeledGraph(labels=labels, edges=edges)


def is_connected(g: LabeledGraph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    seen[0] = True
    frontier = [0]
    count = 1
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    nxt.append(v)
        frontier = nxt
    return count == g.vertex_count


def is_bipartite(g: LabeledGraph) -> bool:
    color = [-1] * g.vertex_count
    adj = g.adjacency()
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if color[v] == -1:
                        color[v] = color[u] ^ 1
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return False
            frontier = nxt
    return True


def is_tree(g: LabeledGraph) -> bool:
    return is_connected(g) and g.edge_count == g.vertex_count - 1


def _check_same_word_set(bp: ClassPartition, cp: ClassPartition) -> None:
    if bp.kind != BRAID or cp.kind != COMMUTATION:
        raise ValueError("expected a braid partition and a commutation partition")
    if bp.word_set is not cp.word_set and bp.word_set != cp.word_set:
        raise ValueError("partitions are over different word sets")


def build_gamma(bp: ClassPartition, cp: ClassPartition) -> LabeledGraph:
    """Gamma(w): vertices B1..Bb then C1..Cc, one witness-labeled edge per word.

    A duplicate (braid class, commutation class) pair would mean some
    intersection holds two words, which is impossible; the builder raises
    rather than deduplicating.
    """
    _check_same_word_set(bp, cp)
    words = bp.word_set.words
    b = len(bp.classes)
    labels = tuple(f"B{k + 1}" for k in range(b)) + tuple(
        f"C{k + 1}" for k in range(len(cp.classes))
    )
    seen: dict[tuple[int, int], Word] = {}
    for k, u in enumerate(words):
        key = (bp.class_of[k], cp.class_of[k])
        if key in seen:
            raise InvariantViolation(
                f"braid class B{key[0] + 1} and commutation class C{key[1] + 1} share "
                f"two words, {word_text(seen[key])} and {word_text(u)}"
            )
        seen[key] = u
    edges = tuple(
        Edge(bi, b + ci, INCIDENCE, word) for (bi, ci), word in sorted(seen.items())
    )
    return LabeledGraph(labels=labels, edges=edges)


@dataclass(frozen=True)
class IntersectionTable:
    """Rows are braid classes, columns are commutation classes.

    Cells are stored sparsely; each holds the unique word in the row class
    intersected with the column class, when that intersection is nonempty.
    """

    rows: int
    cols: int
    cells: dict[tuple[int, int], Word]

    def cell(self, r: int, c: int) -> Word | None:
        return self.cells.get((r, c))

    def nonempty_count(self) -> int:
        return len(self.cells)

    def to_rows(self) -> list[list[str | None]]:
        """Dense row-major layout with word text, None for empty cells."""
        grid: list[list[str | None]] = [[None] * self.cols for _ in range(self.rows)]
        for (r, c), word in self.cells.items():
            grid[r][c] = word_text(word)
        return grid


def build_table(bp: ClassPartition, cp: ClassPartition) -> IntersectionTable:
    """The intersection table T(w) with exactly |R(w)| filled cells."""
    _check_same_word_set(bp, cp)
    words = bp.word_set.words
    cells: dict[tuple[int, int], Word] = {}
    for k, u in enumerate(words):
        key = (bp.class_of[k], cp.class_of[k])
        if key in cells:
            raise InvariantViolation(
                f"cell {key} would hold both {word_text(cells[key])} and {word_text(u)}"
            )
        cells[key] = u
    return IntersectionTable(rows=len(bp.classes), cols=len(cp.classes), cells=cells)


def jump_property(rows: int, cols: int, filled: set[tuple[int, int]]) -> bool:
    """The array property behind the lower bound on |R(w)|.

    True iff every row and every column holds a filled cell, the filled cells
    are mutually reachable by in-row / in-column jumps, and there are at
    least rows + cols - 1 of them.
    """
    if rows < 1 or cols < 1:
        return False
    if len(filled) < rows + cols - 1:
        return False
    row_seen = [False] * rows
    col_seen = [False] * cols
    for r, c in filled:
        row_seen[r] = True
        col_seen[c] = True
    if not (all(row_seen) and all(col_seen)):
        return False
    # Cells sharing a row or column are one jump apart; union them through
    # per-row and per-column anchors.
    cells = sorted(filled)
    cell_id = {rc: k for k, rc in enumerate(cells)}
    parent = list(range(len(cells)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    row_anchor: dict[int, int] = {}
    col_anchor: dict[int, int] = {}
    for rc in cells:
        k = cell_id[rc]
        r, c = rc
        if r in row_anchor:
            union(row_anchor[r], k)
        else:
            row_anchor[r] = k
        if c in col_anchor:
            union(col_anchor[c], k)
        else:
            col_anchor[c] = k
    root = find(0)
    return all(find(k) == root for k in range(len(cells)))


def verify_jump_property(table: IntersectionTable) -> bool:
    return jump_property(table.rows, table.cols, set(table.cells))


_EDGE_STYLE = {COMMUTATION: "solid", BRAID: "dashed", INCIDENCE: "solid"}


def export_dot(g: LabeledGraph, style: str = "word") -> str:
    """Deterministic undirected DOT output.

    Braid edges are dashed and commutation edges solid, following the figure
    convention; incidence edges carry their witness word as a label.  The
    style picks the node shape: ellipses for word graphs, boxes for class
    graphs.
    """
    if style not in ("word", "class"):
        raise ValueError(f"unknown style {style!r}")
    shape = "ellipse" if style == "word" else "box"
    lines = ["graph {", f"  node [shape={shape}];"]
    for label in g.labels:
        lines.append(f'  "{_dot_escape(label)}";')
    for e in g.edges:
        attrs = [f"style={_EDGE_STYLE[e.kind]}"]
        if e.word is not None:
            attrs.append(f'label="{_dot_escape(word_text(e.word))}"')
        lines.append(
            f'  "{_dot_escape(g.labels[e.u])}" -- "{_dot_escape(g.labels[e.v])}"'
            f' [{", ".join(attrs)}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
