"""Graphs, flag complexes and the graph-defined group families.

Graph file format: one edge per line, ``u v`` (simple) or ``u v m`` (Artin
label ``m >= 2``); an optional ``vertices: u, v, w`` line declares vertices,
including isolated ones; ``#`` starts a comment.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from rgood import words
from rgood.abelian import AbelianInvariants, h1_invariants
from rgood.errors import DisconnectedComplexError, ParseError, ValidationError
from rgood.presentations import DEFAULT_BUDGET, Presentation, tietze_simplify
from rgood.verdicts import Status
from rgood.words import Letter

_VERTEX = re.compile(r"[A-Za-z0-9_]+")

Edge = frozenset


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex")
        known = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise ValidationError(f"self-loop at {sorted(e)}")
            if not e <= known:
                raise ValidationError(f"edge {sorted(e)} uses an undeclared vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> SimpleGraph:
        order = list(dict.fromkeys(vertices))
        es = []
        for u, v in edges:
            for x in (u, v):
                if x not in order:
                    order.append(x)
            es.append(frozenset((u, v)))
        return cls(tuple(order), frozenset(es))

    @classmethod
    def complete(cls, n: int, prefix: str = "v") -> SimpleGraph:
        vs = [f"{prefix}{i}" for i in range(1, n + 1)]
        return cls(tuple(vs), frozenset(frozenset(e) for e in combinations(vs, 2)))

    @classmethod
    def cycle(cls, n: int, prefix: str = "v") -> SimpleGraph:
        vs = [f"{prefix}{i}" for i in range(1, n + 1)]
        return cls.from_edges(((vs[i], vs[(i + 1) % n]) for i in range(n)), vs)

    def index(self, v: str) -> int:
        return self.vertices.index(v)

    def adjacent(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, v: str) -> list[str]:
        return [u for u in self.vertices if u != v and self.adjacent(u, v)]

    def sorted_edges(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda e: (pos[e[0]], pos[e[1]]))

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return len(self.bfs_tree()[0]) == len(self.vertices)

    def nonadjacent_pairs(self) -> Iterable[tuple[str, str]]:
        return ((u, v) for u, v in combinations(self.vertices, 2) if not self.adjacent(u, v))

    def bfs_tree(self) -> tuple[list[str], set[frozenset[str]]]:
        """Vertices reached from the first vertex, and the BFS tree edges."""
        if not self.vertices:
            return [], set()
        root = self.vertices[0]
        seen = [root]
        tree: set[frozenset[str]] = set()
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if v not in seen:
                    seen.append(v)
                    tree.add(frozenset((u, v)))
                    queue.append(v)
        return seen, tree

    def generator_names(self) -> dict[str, str]:
        """Map vertices to generator identifiers (numeric vertex ``3`` becomes ``v3``)."""
        names = {v: v if words.is_identifier(v) else f"v{v}" for v in self.vertices}
        if len(set(names.values())) != len(names):
            raise ValidationError("vertex names collide after conversion to generator names")
        return names


@dataclass(frozen=True)
class LabeledArtinGraph:
    underlying: SimpleGraph
    labels: dict

    def __post_init__(self) -> None:
        labels = {frozenset(e): int(m) for e, m in self.labels.items()}
        if set(labels) != set(self.underlying.edges):
            raise ValidationError("every edge needs exactly one label")
        if any(m < 2 for m in labels.values()):
            raise ValidationError("Artin labels must be >= 2")
        object.__setattr__(self, "labels", labels)

    def __hash__(self) -> int:
        return hash((self.underlying, frozenset(self.labels.items())))

    def label(self, u: str, v: str) -> int:
        return self.labels[frozenset((u, v))]

    def is_even(self) -> bool:
        return all(m % 2 == 0 for m in self.labels.values())


def _parse_lines(text: str) -> tuple[list[str], list[list[str]]]:
    declared: list[str] = []
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            declared.extend(v.strip() for v in line[len("vertices:") :].split(",") if v.strip())
            continue
        rows.append(line.split())
        for tok in rows[-1][:2]:
            if not _VERTEX.fullmatch(tok):
                raise ParseError(f"line {lineno}: bad vertex name {tok!r}")
    for v in declared:
        if not _VERTEX.fullmatch(v):
            raise ParseError(f"bad vertex name {v!r}")
    return declared, rows


def parse_graph(text: str) -> SimpleGraph:
    declared, rows = _parse_lines(text)
    edges = []
    for row in rows:
        if len(row) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(row)!r}")
        if row[0] == row[1]:
            raise ValidationError(f"self-loop at {row[0]!r}")
        edges.append((row[0], row[1]))
    return SimpleGraph.from_edges(edges, declared)


def parse_artin_graph(text: str) -> LabeledArtinGraph:
    declared, rows = _parse_lines(text)
    edges, labels = [], {}
    for row in rows:
        if len(row) != 3 or not row[2].isdigit():
            raise ParseError(f"expected 'u v m', got {' '.join(row)!r}")
        if row[0] == row[1]:
            raise ValidationError(f"self-loop at {row[0]!r}")
        e = frozenset(row[:2])
        if e in labels:
            raise ValidationError(f"duplicate edge {row[0]} {row[1]}")
        edges.append((row[0], row[1]))
        labels[e] = int(row[2])
    return LabeledArtinGraph(SimpleGraph.from_edges(edges, declared), labels)


def format_graph(g: SimpleGraph) -> str:
    lines = [f"vertices: {', '.join(g.vertices)}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- group presentations of graph families -----------------------------------


def raag_presentation(g: SimpleGraph) -> Presentation:
    names = g.generator_names()
    rels = [
        words.commutator((Letter(names[u], 1),), (Letter(names[v], 1),)) for u, v in g.sorted_edges()
    ]
    return Presentation(tuple(names[v] for v in g.vertices), tuple(rels))


def _alternating(x: str, y: str, m: int) -> words.Word:
    return tuple(Letter(x if i % 2 == 0 else y, 1) for i in range(m))


def artin_presentation(a: LabeledArtinGraph) -> Presentation:
    """Relator ``(x y x ...)(y x y ...)^-1`` with ``m`` letters on each side, per edge."""
    g = a.underlying
    names = g.generator_names()
    rels = []
    for u, v in g.sorted_edges():
        m = a.label(u, v)
        x, y = names[u], names[v]
        rels.append(_alternating(x, y, m) + words.invert(_alternating(y, x, m)))
    return Presentation(tuple(names[v] for v in g.vertices), tuple(rels))


# -- flag complexes -----------------------------------------------------------


@dataclass(frozen=True)
class TwoComplex:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]
    triangles: tuple[tuple[str, str, str], ...]

    def __post_init__(self) -> None:
        for t in self.triangles:
            for e in combinations(t, 2):
                if frozenset(e) not in self.edges:
                    raise ValidationError(f"triangle {t} is missing edge {e}")

    @property
    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.vertices, self.edges)


def flag_two_skeleton(g: SimpleGraph) -> TwoComplex:
    """Vertices, edges and 3-cliques of ``g``; the 2-skeleton determines pi_1."""
    triangles = tuple(
        t for t in combinations(g.vertices, 3) if all(g.adjacent(u, v) for u, v in combinations(t, 2))
    )
    return TwoComplex(g.vertices, g.edges, triangles)


def complex_pi1_presentation(c: TwoComplex) -> Presentation:
    """Edge-path group presentation relative to a BFS spanning tree.

    Generators are the non-tree edges ``e<i>_<j>`` (vertex indices, ``i < j``,
    oriented from ``i`` to ``j``); each triangle contributes its boundary word.
    """
    g = c.graph
    reached, tree = g.bfs_tree()
    if len(reached) != len(g.vertices):
        raise DisconnectedComplexError("the complex is not connected")
    pos = {v: i for i, v in enumerate(g.vertices)}
    gen_of = {}
    for u, v in g.sorted_edges():
        if frozenset((u, v)) not in tree:
            gen_of[(u, v)] = f"e{pos[u]}_{pos[v]}"

    def edge_word(u: str, v: str) -> words.Word:
        if pos[u] < pos[v]:
            name = gen_of.get((u, v))
            return (Letter(name, 1),) if name else ()
        name = gen_of.get((v, u))
        return (Letter(name, -1),) if name else ()

    rels = []
    for x, y, z in c.triangles:
        x, y, z = sorted((x, y, z), key=pos.__getitem__)
        rels.append(edge_word(x, y) + edge_word(y, z) + edge_word(z, x))
    return Presentation(tuple(gen_of.values()), tuple(rels))


class TriState(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def simply_connected_status(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> TriState:
    """Sound semi-decision for simple connectivity of the flag complex.

    No only on disconnectedness or nonzero H1; Yes only when Tietze moves
    reduce pi_1 to the presentation with no generators.
    """
    if not g.is_connected():
        return TriState.NO
    p = complex_pi1_presentation(flag_two_skeleton(g))
    if not h1_invariants(p).is_trivial:
        return TriState.NO
    if not tietze_simplify(p, budget).generators:
        return TriState.YES
    return TriState.UNKNOWN


# -- Artin, RAAG and Bestvina-Brady rules ------------------------------------


def artin_even_witness(a: LabeledArtinGraph) -> tuple[str, str] | None:
    """First non-adjacent vertex pair of an even-type Artin graph, if any."""
    if not a.is_even():
        return None
    return next(iter(a.underlying.nonadjacent_pairs()), None)


@dataclass(frozen=True)
class AbelianFreeRank:
    rank: int


@dataclass(frozen=True)
class VeryLargeWitness:
    pair: tuple[str, str]


RaagOutcome = Union[AbelianFreeRank, VeryLargeWitness]


def raag_rule(g: SimpleGraph) -> RaagOutcome:
    if not g.vertices:
        raise ValidationError("a RAAG needs at least one vertex")
    pair = next(iter(g.nonadjacent_pairs()), None)
    if pair is None:
        return AbelianFreeRank(len(g.vertices))
    return VeryLargeWitness(pair)


@dataclass(frozen=True)
class BestvinaBradyOutcome:
    status: Status
    reason: str
    kernel: AbelianInvariants | None = None
    simply_connected: TriState | None = None


def bestvina_brady_rule(g: SimpleGraph) -> BestvinaBradyOutcome:
    if not g.is_connected():
        return BestvinaBradyOutcome(Status.UNKNOWN, "graph is disconnected")
    if g.is_complete():
        return BestvinaBradyOutcome(
            Status.GOOD, "complete graph: kernel is free abelian", AbelianInvariants(len(g.vertices) - 1)
        )
    sc = simply_connected_status(g)
    if sc is TriState.YES:
        return BestvinaBradyOutcome(Status.BAD, "flag complex simply connected", simply_connected=sc)
    if sc is TriState.NO:
        return BestvinaBradyOutcome(
            Status.UNKNOWN, "flag complex not simply connected: not finitely presented", simply_connected=sc
        )
    return BestvinaBradyOutcome(
        Status.UNKNOWN, "simple connectivity undetermined within the Tietze budget", simply_connected=sc
    )
