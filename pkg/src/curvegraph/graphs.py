"""Finite weighted graphs with exact rational data.

A graph is a finite vertex set with a positive measure m on vertices and a
positive symmetric weight b on edges. All arithmetic uses
``fractions.Fraction``, so every identity downstream can be checked as an
exact equality. Distances are combinatorial: edge weights decide adjacency
only, never path length.

Graph functions are plain mappings from vertex labels to ints or Fractions;
they must be total on the graph wherever the Laplacian is applied.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import (
    AsymmetricDuplicateEdge,
    DisconnectedGraph,
    DuplicateVertex,
    FormatError,
    HorizonExceeded,
    NonPositiveEdgeWeight,
    NonPositiveMeasure,
    PartialFunction,
    SelfLoop,
    UnknownVertex,
)

VertexId = Union[str, int]
RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an exact rational from an int, a Fraction, or a ``p/q`` string.

    Floats and decimal strings are rejected: exactness is the whole point.
    """
    if isinstance(value, bool):
        raise FormatError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if _RATIONAL_RE.match(text):
            try:
                return Fraction(text)
            except ZeroDivisionError:
                raise FormatError(f"zero denominator: {value!r}") from None
        raise FormatError(f"not a rational: {value!r}")
    raise FormatError(f"not a rational: {value!r}")


def format_rational(value: RationalLike) -> str:
    """Render a rational canonically as ``p/q`` in lowest terms."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def label_key(label: VertexId) -> tuple:
    """Total order over vertex labels; numeric labels sort numerically."""
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label, "")
    text = str(label)
    try:
        return (0, int(text), text)
    except ValueError:
        return (1, 0, text)


def _check_label(label) -> None:
    if isinstance(label, bool) or not isinstance(label, (str, int)):
        raise FormatError(f"vertex label must be a string or an integer: {label!r}")
    if isinstance(label, int) and label < 0:
        raise FormatError(f"integer vertex labels must be nonnegative: {label!r}")


@dataclass(frozen=True)
class WeightedGraph:
    """Validated, connected weighted graph. Build via :func:`validate_graph`."""

    vertices: Tuple[VertexId, ...]
    measure: Mapping[VertexId, Fraction]
    adjacency: Mapping[VertexId, Mapping[VertexId, Fraction]]

    def require_vertex(self, x: VertexId) -> None:
        if x not in self.measure:
            raise UnknownVertex(f"unknown vertex: {x!r}", vertex=str(x))

    def neighbors(self, x: VertexId) -> Tuple[Tuple[VertexId, Fraction], ...]:
        """Neighbors of x with their edge weights, in label order."""
        self.require_vertex(x)
        return tuple(self.adjacency[x].items())

    def weight(self, x: VertexId, y: VertexId) -> Fraction:
        self.require_vertex(x)
        self.require_vertex(y)
        return self.adjacency[x].get(y, Fraction(0))

    @property
    def edges(self) -> Tuple[Tuple[VertexId, VertexId, Fraction], ...]:
        """Each undirected edge once, as (u, v, b) with u before v in label order."""
        out = []
        for u in self.vertices:
            ku = label_key(u)
            for v, w in self.adjacency[u].items():
                if ku < label_key(v):
                    out.append((u, v, w))
        out.sort(key=lambda e: (label_key(e[0]), label_key(e[1])))
        return tuple(out)

    def to_records(self):
        """(vertex records, edge records) suitable for validate_graph."""
        return (
            [(v, self.measure[v]) for v in self.vertices],
            [(u, v, w) for u, v, w in self.edges],
        )


def validate_graph(
    vertex_records: Iterable[Tuple[VertexId, RationalLike]],
    edge_records: Iterable[Tuple[VertexId, VertexId, RationalLike]],
) -> WeightedGraph:
    """Check all graph invariants and return the canonical immutable form.

    Zero-weight edge records are dropped; repeating an unordered pair is only
    allowed with an identical weight. The graph must be connected.
    """
    measure: dict = {}
    for label, raw_m in vertex_records:
        _check_label(label)
        if label in measure:
            raise DuplicateVertex(f"duplicate vertex: {label!r}", vertex=str(label))
        m = parse_rational(raw_m)
        if m <= 0:
            raise NonPositiveMeasure(
                f"measure of {label!r} must be positive, got {m}", vertex=str(label)
            )
        measure[label] = m

    seen: dict = {}
    for u, v, raw_b in edge_records:
        for t in (u, v):
            if t not in measure:
                raise UnknownVertex(f"edge endpoint not a vertex: {t!r}", vertex=str(t))
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}", vertex=str(u))
        b = parse_rational(raw_b)
        if b < 0:
            raise NonPositiveEdgeWeight(
                f"weight of ({u!r}, {v!r}) must be nonnegative, got {b}",
                u=str(u),
                v=str(v),
            )
        pair = (u, v) if label_key(u) < label_key(v) else (v, u)
        if pair in seen:
            if seen[pair] != b:
                raise AsymmetricDuplicateEdge(
                    f"pair ({pair[0]!r}, {pair[1]!r}) listed twice with weights "
                    f"{seen[pair]} and {b}",
                    u=str(pair[0]),
                    v=str(pair[1]),
                )
            continue
        seen[pair] = b

    order = sorted(measure, key=label_key)
    nbrs = {u: {} for u in order}
    for (u, v), b in seen.items():
        if b > 0:
            nbrs[u][v] = b
            nbrs[v][u] = b
    adjacency = {
        u: {v: nbrs[u][v] for v in sorted(nbrs[u], key=label_key)} for u in order
    }

    if order:
        visited = {order[0]}
        queue = deque([order[0]])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if v not in visited:
                    visited.add(v)
                    queue.append(v)
        if len(visited) != len(order):
            missing = next(v for v in order if v not in visited)
            raise DisconnectedGraph(
                f"graph is not connected: {missing!r} unreachable from {order[0]!r}",
                vertex=str(missing),
            )

    return WeightedGraph(tuple(order), adjacency=adjacency, measure=measure)


def distance_map(g: WeightedGraph, source: VertexId) -> dict:
    """Combinatorial distances from source to every vertex (BFS)."""
    g.require_vertex(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: WeightedGraph, x: VertexId, y: VertexId) -> int:
    """Length of a shortest edge path between x and y."""
    g.require_vertex(y)
    return distance_map(g, x)[y]


@dataclass(frozen=True)
class RootedDecomposition:
    """Spheres around a root: sphere r holds the vertices at distance r."""

    root: VertexId
    dist: Mapping[VertexId, int]
    spheres: Tuple[Tuple[VertexId, ...], ...]

    @property
    def horizon(self) -> int:
        """Largest occupied radius (the root's eccentricity)."""
        return len(self.spheres) - 1

    def sphere(self, r: int) -> Tuple[VertexId, ...]:
        if r < 0 or r > self.horizon:
            raise HorizonExceeded(
                f"sphere {r} outside radius range 0..{self.horizon}", radius=r
            )
        return self.spheres[r]

    def radius_of(self, x: VertexId) -> int:
        if x not in self.dist:
            raise UnknownVertex(f"unknown vertex: {x!r}", vertex=str(x))
        return self.dist[x]


def rooted_decomposition(g: WeightedGraph, root: VertexId) -> RootedDecomposition:
    """Partition the vertex set into spheres around root."""
    dist = distance_map(g, root)
    horizon = max(dist.values())
    layers = [[] for _ in range(horizon + 1)]
    for v in g.vertices:
        layers[dist[v]].append(v)
    spheres = tuple(tuple(layer) for layer in layers)
    return RootedDecomposition(root=root, dist=dist, spheres=spheres)


def degree(g: WeightedGraph, x: VertexId) -> Fraction:
    """Weighted degree Deg(x) = (1/m(x)) * sum of b(x, y) over neighbors y."""
    g.require_vertex(x)
    total = sum(g.adjacency[x].values(), Fraction(0))
    return total / g.measure[x]


def laplacian(g: WeightedGraph, f: Mapping, x: VertexId) -> Fraction:
    """Formal Laplacian (Delta f)(x) = (1/m(x)) * sum b(x,y) (f(x) - f(y))."""
    g.require_vertex(x)
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise PartialFunction(
            f"function undefined on {len(missing)} vertices, e.g. {missing[0]!r}",
            vertex=str(missing[0]),
        )
    acc = Fraction(0)
    for y, w in g.adjacency[x].items():
        acc += w * (f[x] - f[y])
    return acc / g.measure[x]


def laplacian_of_distance(
    g: WeightedGraph, decomp: RootedDecomposition, x: VertexId
) -> Fraction:
    """Delta d(root, .) at x; needs the sphere past x, so not the outermost one."""
    r = decomp.radius_of(x)
    if r == decomp.horizon:
        raise HorizonExceeded(
            f"vertex {x!r} lies on the outermost sphere {r}; the next sphere "
            "is outside the data",
            radius=r,
        )
    return laplacian(g, decomp.dist, x)


def sphere_measure(g: WeightedGraph, decomp: RootedDecomposition, r: int) -> Fraction:
    """m(S_r): total vertex measure of sphere r."""
    return sum((g.measure[v] for v in decomp.sphere(r)), Fraction(0))


def sphere_boundary(g: WeightedGraph, decomp: RootedDecomposition, r: int) -> Fraction:
    """Total edge weight between sphere r and sphere r+1."""
    if r < 0 or r >= decomp.horizon:
        raise HorizonExceeded(
            f"boundary weight needs spheres {r} and {r + 1}; horizon is "
            f"{decomp.horizon}",
            radius=r,
        )
    total = Fraction(0)
    for x in decomp.spheres[r]:
        for y, w in g.adjacency[x].items():
            if decomp.dist[y] == r + 1:
                total += w
    return total


def ball_measure(g: WeightedGraph, decomp: RootedDecomposition, r: int) -> Fraction:
    """m(B_r): total vertex measure of the ball of radius r."""
    return sum(sphere_measure(g, decomp, s) for s in range(r + 1))


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def graph_to_json_dict(g: WeightedGraph) -> dict:
    """Canonical JSON form; ids become strings, rationals become ``p/q``."""
    return {
        "vertices": [
            {"id": str(v), "m": format_rational(g.measure[v])} for v in g.vertices
        ],
        "edges": [
            {"u": str(u), "v": str(v), "b": format_rational(w)}
            for u, v, w in g.edges
        ],
    }


def graph_from_json_dict(payload) -> WeightedGraph:
    if not isinstance(payload, dict):
        raise FormatError("graph document must be a JSON object")
    for key in ("vertices", "edges"):
        if key not in payload or not isinstance(payload[key], list):
            raise FormatError(f"graph document needs a {key!r} array")
    vertex_records = []
    for entry in payload["vertices"]:
        if not isinstance(entry, dict) or "id" not in entry or "m" not in entry:
            raise FormatError(f"bad vertex entry: {entry!r}")
        label = entry["id"]
        _check_label(label)
        vertex_records.append((label, entry["m"]))
    edge_records = []
    for entry in payload["edges"]:
        if not isinstance(entry, dict) or not {"u", "v", "b"} <= set(entry):
            raise FormatError(f"bad edge entry: {entry!r}")
        edge_records.append((entry["u"], entry["v"], entry["b"]))
    return validate_graph(vertex_records, edge_records)


def loads_json(text: str, source: str = "<string>"):
    """Parse JSON, reporting the parse position in the error detail."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}",
            source=source,
            line=exc.lineno,
            column=exc.colno,
        ) from None


def graph_from_json(text: str, source: str = "<string>") -> WeightedGraph:
    return graph_from_json_dict(loads_json(text, source))


def graph_to_json(g: WeightedGraph) -> str:
    return json.dumps(graph_to_json_dict(g), indent=2) + "\n"
