"""Generalized theta graphs: specs, construction, triangle-growth
classification, edge-criticality, and the exact disjoint-copy clique formula."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graphs import Graph

SUBQUADRATIC = "Subquadratic"
NEARLY_QUADRATIC = "NearlyQuadratic"
QUADRATIC = "Quadratic"

_THETA_RE = re.compile(r"^\s*theta\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$")


class ThetaSpec:
    """Multiset of path lengths (p1,...,pk) for a generalized theta graph:
    two roots joined by k internally disjoint paths.

    Lengths are stored sorted ascending; at most one length may equal 1
    (two length-1 paths would be a multi-edge).
    """

    __slots__ = ("lengths",)

    def __init__(self, lengths):
        lens = tuple(sorted(int(p) for p in lengths))
        if len(lens) < 2:
            raise ValueError("theta graph needs at least 2 paths")
        if any(p < 1 for p in lens):
            raise ValueError("path lengths must be positive")
        if sum(1 for p in lens if p == 1) > 1:
            raise ValueError("at most one path of length 1 (no multi-edges)")
        self.lengths = lens

    @classmethod
    def parse(cls, text: str) -> "ThetaSpec":
        m = _THETA_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse theta spec {text!r}; expected theta(p1,p2,...)")
        return cls(int(p) for p in m.group(1).split(","))

    @property
    def k(self) -> int:
        return len(self.lengths)

    @property
    def vertex_count(self) -> int:
        return 2 + sum(p - 1 for p in self.lengths)

    @property
    def edge_count(self) -> int:
        return sum(self.lengths)

    def __eq__(self, other):
        if not isinstance(other, ThetaSpec):
            return NotImplemented
        return self.lengths == other.lengths

    def __hash__(self):
        return hash(self.lengths)

    def __str__(self):
        return "theta(" + ",".join(str(p) for p in self.lengths) + ")"

    def __repr__(self):
        return f"ThetaSpec({self.lengths})"


@dataclass(frozen=True)
class MagnitudeClass:
    """Growth class of the maximum triangle count over graphs avoiding the
    theta graph: Subquadratic (with exponent margin alpha), NearlyQuadratic,
    or Quadratic."""

    label: str
    t: int
    alpha: Fraction | None = None

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "t": self.t,
            "alpha_num": None if self.alpha is None else self.alpha.numerator,
            "alpha_den": None if self.alpha is None else self.alpha.denominator,
            "alpha_note": None if self.alpha is None
            else "fixed margin 1/t^4; not tuned",
        }


def build_theta(spec: ThetaSpec) -> Graph:
    """Concrete theta graph: roots are vertices 0 and 1, internal path
    vertices follow in path order."""
    edges = []
    nxt = 2
    for p in spec.lengths:
        if p == 1:
            edges.append((0, 1))
            continue
        prev = 0
        for _ in range(p - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def theta_triangle_count(spec: ThetaSpec) -> int:
    """Triangles in the theta graph by rule: one per length-2 path when a
    length-1 path exists (a triangle is a 1-path plus a 2-path)."""
    if 1 not in spec.lengths:
        return 0
    return sum(1 for p in spec.lengths if p == 2)


def contains_theta1223(spec: ThetaSpec) -> bool:
    """Whether the theta graph contains theta(1,2,2,3) as a subgraph.

    Root-to-root simple paths in a theta graph are exactly the defining
    paths, so containment reduces to multiset inclusion of {1,2,2,3}.
    """
    lens = spec.lengths
    return (lens.count(1) >= 1 and lens.count(2) >= 2 and lens.count(3) >= 1)


def classify(spec: ThetaSpec) -> MagnitudeClass:
    """Growth trichotomy for the maximum triangle count of graphs avoiding
    this theta graph."""
    t = spec.vertex_count
    if theta_triangle_count(spec) <= 1:
        return MagnitudeClass(SUBQUADRATIC, t, Fraction(1, t ** 4))
    if not contains_theta1223(spec):
        return MagnitudeClass(NEARLY_QUADRATIC, t)
    return MagnitudeClass(QUADRATIC, t)


def is_edge_critical(spec: ThetaSpec) -> bool:
    """True iff exactly one path's parity differs from all the others
    (equivalently: deleting an edge of that path makes the graph bipartite
    while the graph itself is not)."""
    odd = sum(1 for p in spec.lengths if p % 2 == 1)
    even = spec.k - odd
    return (odd == 1 and even >= 1) or (even == 1 and odd >= 1)


def turan_formula(n: int, k: int, r: int) -> int:
    """Exact maximum number of r-cliques in an n-vertex graph avoiding k
    disjoint copies of an edge-critical theta graph (valid for 3 <= r <= k+1
    and large n); equals the r-clique count of the apex construction."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if not 3 <= r <= k + 1:
        raise ValueError(f"formula valid for 3 <= r <= k+1; got r={r}, k={k}")
    if n < k:
        raise ValueError("need n >= k")
    q = n - k + 1
    return comb(k - 1, r) + comb(k - 1, r - 1) * q + comb(k - 1, r - 2) * (q * q // 4)
