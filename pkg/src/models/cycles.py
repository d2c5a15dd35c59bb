"""
Cycle models: single cycles, labelled cycle families and collapse quotients.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .graph import MetricGraph, Subdiamond


@dataclass(frozen=True)
class Cycle:
    """A simple closed walk, stored as its vertex sequence without repetition."""

    vertices: Tuple[int, ...]
    edge_length: Fraction = Fraction(1)

    @property
    def hops(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> Fraction:
        return self.hops * self.edge_length

    def canonical(self) -> "Cycle":
        """
        Rotate to start at the least vertex id and orient toward the
        smaller of its two cycle neighbours.
        """
        seq = self.vertices
        if not seq:
            return self
        start = seq.index(min(seq))
        rotated = seq[start:] + seq[:start]
        reverse = (rotated[0],) + tuple(reversed(rotated[1:]))
        return Cycle(min(rotated, reverse), self.edge_length)

    def cyclic_distance(self, i: int, j: int) -> int:
        """Hop distance between positions i and j along the cycle."""
        gap = abs(i - j)
        return min(gap, self.hops - gap)

    def is_valid_in(self, graph: MetricGraph) -> bool:
        """Consecutive vertices adjacent, closing edge present, no repeats."""
        seq = self.vertices
        if len(seq) < 3 or len(set(seq)) != len(seq):
            return False
        return all(seq[(i + 1) % len(seq)] in graph.adjacency[seq[i]] for i in range(len(seq)))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "length": str(self.length)}


@dataclass
class CycleFamily:
    """
    Cycles of a Laakso graph indexed by a quaternary tree.

    ``tree`` maps a label sequence over {0, 1, 2, 3} of length at most
    s - t to its cycle; ``copies`` maps the same labels to the edge path
    of the gadget copy whose central cycle it is.
    """

    n: int
    s: int
    t: int
    tree: Dict[Tuple[int, ...], Cycle] = field(default_factory=dict)
    copies: Dict[Tuple[int, ...], Tuple[int, ...]] = field(default_factory=dict)
    canonical_cycle: Cycle = None

    @property
    def root(self) -> Cycle:
        return self.tree[()]

    def labels(self) -> List[Tuple[int, ...]]:
        """Tree labels, shorter first, lexicographic within a depth."""
        return sorted(self.tree, key=lambda label: (len(label), label))

    def violations(self) -> List[str]:
        """Check lengths, child disjointness, parent contact and root contact."""
        problems = []
        for label in self.labels():
            cycle = self.tree[label]
            expected = 4 ** (self.s - len(label))
            if cycle.hops != expected:
                problems.append(f"cycle {label} has {cycle.hops} hops, expected {expected}")
            children = [label + (digit,) for digit in range(4) if label + (digit,) in self.tree]
            for i, left in enumerate(children):
                for right in children[i + 1:]:
                    if set(self.tree[left].vertices) & set(self.tree[right].vertices):
                        problems.append(f"children {left} and {right} share a vertex")
            for child in children:
                if not set(self.tree[child].vertices) & set(cycle.vertices):
                    problems.append(f"child {child} does not meet its parent {label}")
        if self.canonical_cycle is not None and not (
                set(self.root.vertices) & set(self.canonical_cycle.vertices)):
            problems.append("root does not meet the canonical cycle")
        return problems

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "cycles": [
                {"label": "".join(map(str, label)), **self.tree[label].to_dict()}
                for label in self.labels()
            ],
        }


@dataclass(frozen=True)
class QuotientGraph:
    """
    Result of replacing subdiamonds by paths.

    ``projection[v]`` is the quotient vertex of original vertex v.
    """

    graph: MetricGraph
    projection: Tuple[int, ...]
    collapsed: Tuple[Subdiamond, ...]
    original: MetricGraph

    def violations(self, pairs=None, samples: int = 100, seed: int = 0) -> List[str]:
        """Invariant check; see ``quotient_violations``."""
        from ..cycles.collapse import quotient_violations

        return quotient_violations(self, pairs, samples, seed)

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.graph.vertex_count,
            "edge_count": self.graph.edge_count,
            "projection": list(self.projection),
            "collapsed": [sub.to_dict() for sub in self.collapsed],
        }
