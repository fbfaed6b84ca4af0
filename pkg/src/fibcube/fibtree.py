"""Fibonacci trees with two leaf labelings by binary words.

The tree with index n has the tree n-1 as left subtree and the tree n-2
as right subtree; indices 0 and 1 are single leaves. Both labelings
decorate the F(n+1) leaves with the words of length n-1 that have no
adjacent 1s, one word per leaf. The depth labeling ("theta") makes the
depth of each leaf equal the eccentricity of its word in the Fibonacci
cube of dimension n-1; the plain labeling ("standard") does not, which
the checker demonstrates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from .cube import CubeGraph
from .words import BitWord, WordClass


class LabelingKind(Enum):
    STANDARD = "standard"
    THETA = "theta"


@dataclass(frozen=True)
class Leaf:
    label: BitWord


@dataclass(frozen=True)
class Internal:
    left: "Node"
    right: "Node"


Node = Union[Leaf, Internal]


def _label_rows(n: int, labeling: LabelingKind) -> list[tuple[str, int]]:
    """(label, depth) for every leaf, left to right.

    Base labels: index 1 carries the empty word; index 2 has left leaf
    "1" and right leaf "0". Growing from index k-1 and k-2 to index k,
    right leaves gain "01" (standard) or "00" (theta); left leaves gain
    "0" (standard) or, for theta, "0" after a trailing 1 and "1"
    otherwise.
    """
    if n < 1:
        raise ValueError("tree index must be >= 1")
    if n == 1:
        return [("", 0)]
    prev2: list[tuple[str, int]] = [("", 0)]
    prev1: list[tuple[str, int]] = [("1", 1), ("0", 1)]
    theta = labeling is LabelingKind.THETA
    for _ in range(3, n + 1):
        if theta:
            left = [(lbl + ("0" if lbl.endswith("1") else "1"), d + 1) for lbl, d in prev1]
            right = [(lbl + "00", d + 1) for lbl, d in prev2]
        else:
            left = [(lbl + "0", d + 1) for lbl, d in prev1]
            right = [(lbl + "01", d + 1) for lbl, d in prev2]
        prev2, prev1 = prev1, left + right
    return prev1


class LeafTree:
    """A labeled Fibonacci tree. Immutable once built."""

    def __init__(self, n: int, labeling: LabelingKind, rows: list[tuple[BitWord, int]]):
        self.n = n
        self.labeling = labeling
        self._rows = tuple(rows)
        self._depth_by_label = {label: depth for label, depth in rows}
        if len(self._depth_by_label) != len(rows):
            raise AssertionError("leaf labels are not distinct")
        self._root: Node | None = None

    @property
    def leaf_count(self) -> int:
        return len(self._rows)

    def leaves(self) -> tuple[tuple[BitWord, int], ...]:
        """(label, depth) pairs in left-to-right order."""
        return self._rows

    def leaves_breadth_first(self) -> list[tuple[BitWord, int]]:
        """Shallowest leaves first, left to right within a level."""
        return sorted(self._rows, key=lambda row: row[1])

    def depth_of(self, label: BitWord) -> int:
        try:
            return self._depth_by_label[label]
        except KeyError:
            raise ValueError(f"label {label!s} does not occur in this tree") from None

    @property
    def root(self) -> Node:
        if self._root is None:
            it = iter(self._rows)
            self._root = _build_node(self.n, it)
            if next(it, None) is not None:
                raise AssertionError("leaf rows left over after building the tree")
        return self._root

    def render(self) -> str:
        """One leaf per line, indented by depth: 'depth label'."""
        lines = []
        for label, depth in self._rows:
            lines.append(f"{'  ' * depth}{depth} {str(label) or 'ε'}")
        return "\n".join(lines)


def _build_node(n: int, rows: Iterator[tuple[BitWord, int]]) -> Node:
    if n <= 1:
        label, _ = next(rows)
        return Leaf(label)
    return Internal(_build_node(n - 1, rows), _build_node(n - 2, rows))


def build(n: int, labeling: LabelingKind = LabelingKind.THETA) -> LeafTree:
    rows = [(BitWord.from_string(lbl), d) for lbl, d in _label_rows(n, labeling)]
    return LeafTree(n, labeling, rows)


def depth_sum(n: int, labeling: LabelingKind = LabelingKind.THETA) -> int:
    """Total depth over all leaves; depends only on the tree shape."""
    return sum(d for _, d in _label_rows(n, labeling))


@dataclass(frozen=True)
class DepthEccCheck:
    """Outcome of playing leaf depths against cube eccentricities."""

    n: int
    labeling: LabelingKind
    ok: bool
    leaf_count: int
    # first (label, depth, eccentricity) mismatch in breadth-first leaf order
    counterexample: tuple[BitWord, int, int] | None


def verify_depth_eccentricity(n: int, labeling: LabelingKind = LabelingKind.THETA) -> DepthEccCheck:
    """Check, for every vertex of the dimension-n Fibonacci cube, that its
    eccentricity equals the depth of the leaf carrying it in the labeled
    tree of index n+1. Leaves are visited shallowest first, so the first
    counterexample reported is the shallowest one."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    tree = build(n + 1, labeling)
    graph = CubeGraph(WordClass.FIBONACCI, n)
    ecc = dict(zip(graph.vertex_bits, graph.eccentricities("hamming")))
    if tree.leaf_count != len(ecc):
        raise AssertionError("leaf count differs from vertex count")
    for label, depth in tree.leaves_breadth_first():
        e = ecc.get(label.bits)
        if e is None:
            raise AssertionError(f"leaf label {label!s} is not a vertex")
        if e != depth:
            return DepthEccCheck(n, labeling, False, tree.leaf_count, (label, depth, e))
    return DepthEccCheck(n, labeling, True, tree.leaf_count, None)
