"""Birth-death chains and the reduction of a rooted graph to one.

A birth-death chain is the weighted path graph on radii 0..horizon; reducing
a rooted graph to its associated chain aggregates each sphere's measure and
each inter-sphere boundary weight. A rooted graph is a model when inner and
outer curvature are constant on every sphere; its associated chain then
carries the same curvature data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from .curvature import average_curvature, inner_curvature, outer_curvature
from .errors import (
    CurvegraphError,
    FormatError,
    HorizonExceeded,
    NonPositiveEntry,
    SequenceNotNonincreasing,
)
from .graphs import (
    RationalLike,
    VertexId,
    WeightedGraph,
    format_rational,
    parse_rational,
    rooted_decomposition,
    sphere_boundary,
    sphere_measure,
    validate_graph,
)


@dataclass(frozen=True)
class BirthDeathChain:
    """Measures m(0..horizon) and nearest-neighbor weights b(r, r+1).

    ``weights[r]`` joins radius r to radius r+1, so there is one weight fewer
    than measures. All entries are positive rationals.
    """

    measures: Tuple[Fraction, ...]
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        measures = tuple(parse_rational(v) for v in self.measures)
        weights = tuple(parse_rational(v) for v in self.weights)
        if not measures:
            raise FormatError("a chain needs at least the radius-0 entry")
        if len(weights) != len(measures) - 1:
            raise FormatError(
                f"chain with {len(measures)} measures needs "
                f"{len(measures) - 1} weights, got {len(weights)}"
            )
        for r, m in enumerate(measures):
            if m <= 0:
                raise NonPositiveEntry(f"measure at radius {r} must be positive", radius=r)
        for r, b in enumerate(weights):
            if b <= 0:
                raise NonPositiveEntry(f"weight at radius {r} must be positive", radius=r)
        object.__setattr__(self, "measures", measures)
        object.__setattr__(self, "weights", weights)

    @property
    def horizon(self) -> int:
        return len(self.measures) - 1

    def outer_curvature(self, r: int) -> Fraction:
        if r < 0 or r > self.horizon - 1:
            raise HorizonExceeded(
                f"chain outer curvature defined for 0 <= r <= {self.horizon - 1}",
                radius=r,
            )
        return self.weights[r] / self.measures[r]

    def inner_curvature(self, r: int) -> Fraction:
        if r < 0 or r > self.horizon:
            raise HorizonExceeded(
                f"chain inner curvature defined for 0 <= r <= {self.horizon}",
                radius=r,
            )
        if r == 0:
            return Fraction(0)
        return self.weights[r - 1] / self.measures[r]

    def curvature_gap(self, r: int) -> Fraction:
        """Outer minus inner curvature at radius r."""
        return self.outer_curvature(r) - self.inner_curvature(r)

    def ball_measure(self, r: int) -> Fraction:
        if r < 0 or r > self.horizon:
            raise HorizonExceeded(f"ball measure defined for 0 <= r <= {self.horizon}", radius=r)
        return sum(self.measures[: r + 1], Fraction(0))


def associated_bdc(g: WeightedGraph, root: VertexId) -> BirthDeathChain:
    """Collapse each sphere around root to one state of a birth-death chain."""
    decomp = rooted_decomposition(g, root)
    h = decomp.horizon
    measures = tuple(sphere_measure(g, decomp, r) for r in range(h + 1))
    weights = tuple(sphere_boundary(g, decomp, r) for r in range(h))
    return BirthDeathChain(measures=measures, weights=weights)


@dataclass(frozen=True)
class ModelVerdict:
    """Whether curvature is constant on every sphere, with counterexamples.

    Each failure is (radius, side, vertex_a, vertex_b): the first pair on
    that sphere whose curvatures differ.
    """

    is_model: bool
    failures: Tuple[Tuple[int, str, VertexId, VertexId], ...]


def is_model(g: WeightedGraph, root: VertexId) -> ModelVerdict:
    """Check per-sphere constancy of inner and outer curvature.

    The outer side is only checked through horizon - 1; the data cannot
    price the outermost sphere's outgoing edges.
    """
    decomp = rooted_decomposition(g, root)
    failures = []
    for r in range(decomp.horizon + 1):
        shell = decomp.sphere(r)
        for side, fn in (("inner", inner_curvature), ("outer", outer_curvature)):
            if side == "outer" and r == decomp.horizon:
                continue
            baseline = fn(g, decomp, shell[0])
            for v in shell[1:]:
                if fn(g, decomp, v) != baseline:
                    failures.append((r, side, shell[0], v))
                    break
    return ModelVerdict(is_model=not failures, failures=tuple(failures))


def bdc_as_graph(chain: BirthDeathChain) -> WeightedGraph:
    """The chain as a path graph on integer vertices 0..horizon."""
    vertices = [(r, chain.measures[r]) for r in range(chain.horizon + 1)]
    edges = [(r, r + 1, chain.weights[r]) for r in range(chain.horizon)]
    return validate_graph(vertices, edges)


def sphere_volume_step(
    subject: Union[BirthDeathChain, WeightedGraph],
    r: int,
    root: VertexId = None,
) -> Tuple[Fraction, Fraction]:
    """Both sides of m(S_{r+1}) * avg-inner(r+1) = m(S_r) * avg-outer(r).

    Works on a chain directly or on a rooted graph via sphere averages; the
    two sides are computed independently and must agree exactly.
    """
    if isinstance(subject, BirthDeathChain):
        if r < 0 or r + 1 > subject.horizon:
            raise HorizonExceeded(
                f"volume step needs radii {r} and {r + 1} within horizon "
                f"{subject.horizon}",
                radius=r,
            )
        lhs = subject.measures[r + 1] * subject.inner_curvature(r + 1)
        rhs = subject.measures[r] * subject.outer_curvature(r)
    else:
        decomp = rooted_decomposition(subject, root)
        if r < 0 or r + 1 > decomp.horizon:
            raise HorizonExceeded(
                f"volume step needs radii {r} and {r + 1} within horizon "
                f"{decomp.horizon}",
                radius=r,
            )
        lhs = sphere_measure(subject, decomp, r + 1) * average_curvature(
            subject, decomp, r + 1, "inner"
        )
        rhs = sphere_measure(subject, decomp, r) * average_curvature(
            subject, decomp, r, "outer"
        )
    if lhs != rhs:
        raise CurvegraphError(
            f"volume step identity failed at radius {r}: {lhs} != {rhs}"
        )
    return lhs, rhs


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def make_unweighted_chain(n: int) -> BirthDeathChain:
    """Chain with all measures and weights 1, horizon n."""
    if n < 1:
        raise ValueError(f"horizon must be at least 1, got {n}")
    one = Fraction(1)
    return BirthDeathChain(measures=(one,) * (n + 1), weights=(one,) * n)


def make_example_gprime(n: int) -> BirthDeathChain:
    """Chain with m(r) = r + 1 and b(r, r+1) = 1/(r+1)^2, horizon n.

    Its curvature gap is negative yet summable, while the sphere volume r + 1
    strictly dominates the unweighted chain's: curvature-gap domination alone
    does not force a volume comparison.
    """
    if n < 1:
        raise ValueError(f"horizon must be at least 1, got {n}")
    measures = tuple(Fraction(r + 1) for r in range(n + 1))
    weights = tuple(Fraction(1, (r + 1) ** 2) for r in range(n))
    return BirthDeathChain(measures=measures, weights=weights)


def make_mirror_model(chain: BirthDeathChain) -> WeightedGraph:
    """Two copies of the chain glued at radius 0, on labels -horizon..horizon.

    Rooted at "0" this is a model with the same averaged curvatures as the
    chain for every r >= 1, but each sphere has twice the measure and the
    root's outer curvature doubles.
    """
    h = chain.horizon
    if h < 1:
        raise ValueError("mirror model needs horizon at least 1")
    vertices = [("0", chain.measures[0])]
    for r in range(1, h + 1):
        vertices.append((str(r), chain.measures[r]))
        vertices.append((str(-r), chain.measures[r]))
    edges = []
    for r in range(h):
        edges.append((str(r), str(r + 1), chain.weights[r]))
        edges.append((str(-r) if r else "0", str(-(r + 1)), chain.weights[r]))
    return validate_graph(vertices, edges)


def make_ollivier_matching_chain(seq: Sequence[RationalLike]) -> BirthDeathChain:
    """Chain whose sphere curvatures are 1 at r = 1 and 0 afterwards, with
    curvature gap matching the given nonincreasing sequence.

    ``seq`` must be positive, nonincreasing, and start at 1; state r of the
    result has inner and outer curvature seq[r] (outer also seq[0] = 1 at the
    root), so measures never fall below 1.
    """
    values = [parse_rational(v) for v in seq]
    if not values:
        raise NonPositiveEntry("sequence must be nonempty")
    for i, a in enumerate(values):
        if a <= 0:
            raise NonPositiveEntry(f"sequence entry {i} must be positive", index=i)
    if values[0] != 1:
        raise CurvegraphError(f"sequence must start at 1, got {values[0]}")
    for i in range(1, len(values)):
        if values[i] > values[i - 1]:
            raise SequenceNotNonincreasing(
                f"entry {i} exceeds entry {i - 1}: {values[i]} > {values[i - 1]}",
                index=i,
            )
    measures = [Fraction(1)]
    weights = []
    for r in range(len(values) - 1):
        # outer curvature at r equals values[r]; inner at r+1 equals values[r+1]
        weights.append(values[r] * measures[r])
        measures.append(weights[r] / values[r + 1])
    return BirthDeathChain(measures=tuple(measures), weights=tuple(weights))


def make_figure1() -> WeightedGraph:
    """Seven-vertex model graph whose min-max sphere curvature at radius 2
    disagrees with its associated chain's closed-form value."""
    vertices = [
        ("w", 1),
        ("x", 1),
        ("x'", 1),
        ("y", 1),
        ("y'", 3),
        ("z", 1),
        ("z'", 3),
    ]
    edges = [
        ("w", "x", 1),
        ("w", "x'", 1),
        ("x", "y", 1),
        ("x", "y'", 1),
        ("x'", "y'", 2),
        ("y", "z", 1),
        ("y'", "z'", 3),
    ]
    return validate_graph(vertices, edges)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def chain_to_json_dict(chain: BirthDeathChain) -> dict:
    return {
        "m": [format_rational(v) for v in chain.measures],
        "b": [format_rational(v) for v in chain.weights],
    }


def chain_from_json_dict(payload) -> BirthDeathChain:
    if not isinstance(payload, dict):
        raise FormatError("chain document must be a JSON object")
    for key in ("m", "b"):
        if key not in payload or not isinstance(payload[key], list):
            raise FormatError(f"chain document needs a {key!r} array")
    return BirthDeathChain(
        measures=tuple(parse_rational(v) for v in payload["m"]),
        weights=tuple(parse_rational(v) for v in payload["b"]),
    )


def chain_to_json(chain: BirthDeathChain) -> str:
    return json.dumps(chain_to_json_dict(chain), indent=2) + "\n"
