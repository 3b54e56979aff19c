"""Plane-embedded rooted trees and the Halin graphs built on top of them.

Vertices are dense integers 0..n-1.  A tree's planar embedding is carried
entirely by the order of each vertex's child list; the leaf cycle of a Halin
graph is the left-to-right leaf sequence of that embedding, closed last to
first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import CycleDetected, DisconnectedInput, DuplicateChild, InvalidSubstrate

VertexId = int


class EdgeKind(Enum):
    TREE = "tree"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Edge:
    """Unordered vertex pair; endpoints are stored normalized (u < v)."""

    u: VertexId
    v: VertexId
    kind: EdgeKind

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("self-loop")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def endpoints(self) -> Tuple[VertexId, VertexId]:
        return (self.u, self.v)

    def other(self, w: VertexId) -> VertexId:
        return self.v if w == self.u else self.u


def _normalize_pair(a: VertexId, b: VertexId) -> Tuple[VertexId, VertexId]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class EmbeddedTree:
    """Rooted tree with ordered (= plane-embedded) child lists.

    Immutable after construction; safe for concurrent reads.
    """

    root: VertexId
    children: Tuple[Tuple[VertexId, ...], ...]
    parent: Tuple[Optional[VertexId], ...]

    @property
    def n(self) -> int:
        return len(self.children)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def is_leaf(self, v: VertexId) -> bool:
        return not self.children[v]

    def leaves(self) -> List[VertexId]:
        return leaves_in_embedding_order(self)

    def degree(self, v: VertexId) -> int:
        return len(self.children[v]) + (0 if v == self.root else 1)

    def edges(self) -> List[Edge]:
        return [
            Edge(*_normalize_pair(v, c), kind=EdgeKind.TREE)
            for v in self.vertices
            for c in self.children[v]
        ]

    def subtree_sizes(self) -> List[int]:
        """Size of the subtree rooted at each vertex (iterative postorder)."""
        size = [1] * self.n
        for v in reversed(self.dfs_order()):
            for c in self.children[v]:
                size[v] += size[c]
        return size

    def dfs_order(self) -> List[VertexId]:
        """Preorder traversal following child-list (embedding) order."""
        order: List[VertexId] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def height(self) -> int:
        """Height counting a single vertex as 1."""
        depth = [1] * self.n
        h = 1
        for v in self.dfs_order():
            for c in self.children[v]:
                depth[c] = depth[v] + 1
                if depth[c] > h:
                    h = depth[c]
        return h


def build_embedded_tree(
    root: VertexId, child_lists: Mapping[VertexId, Sequence[VertexId]]
) -> EmbeddedTree:
    """Assemble an EmbeddedTree from per-vertex ordered child lists.

    Vertex ids must cover exactly 0..n-1.  Child order is preserved verbatim
    (it is the planar embedding).

    Raises:
        DuplicateChild: a vertex appears twice as a child.
        CycleDetected: the parent relation is cyclic (includes re-rooting
            the root under a descendant).
        DisconnectedInput: some vertex is unreachable from the root.
    """
    mentioned = {root}
    for v, cs in child_lists.items():
        mentioned.add(v)
        mentioned.update(cs)
    n = len(mentioned)
    if mentioned != set(range(n)):
        raise DisconnectedInput(
            f"vertex ids must be the contiguous range 0..{n - 1}, got {sorted(mentioned)}"
        )

    children: List[Tuple[VertexId, ...]] = [()] * n
    parent: List[Optional[VertexId]] = [None] * n
    for v, cs in child_lists.items():
        children[v] = tuple(cs)
        for c in cs:
            if c == v:
                raise CycleDetected(f"vertex {v} is its own child")
            if c == root:
                raise CycleDetected(f"the root cannot be a child of {v}")
            if parent[c] is not None:
                if parent[c] == v:
                    raise DuplicateChild(f"vertex {v} lists child {c} twice")
                raise DuplicateChild(f"vertex {c} has two parents")
            parent[c] = v

    # reachability doubles as the acyclicity check given n-1 parent links
    seen = 1
    stack = [root]
    visited = [False] * n
    visited[root] = True
    while stack:
        v = stack.pop()
        for c in children[v]:
            if not visited[c]:
                visited[c] = True
                seen += 1
                stack.append(c)
    if seen != n:
        raise DisconnectedInput("child lists do not connect every vertex to the root")

    return EmbeddedTree(root=root, children=tuple(children), parent=tuple(parent))


def leaves_in_embedding_order(tree: EmbeddedTree) -> List[VertexId]:
    """Leaves in depth-first, child-order (left-to-right) sequence."""
    return [v for v in tree.dfs_order() if tree.is_leaf(v)]


def validate_halin_substrate(tree: EmbeddedTree) -> List[str]:
    """Check that gluing a leaf cycle onto ``tree`` yields min degree 3.

    Returns a list of violations; empty means the tree is a valid substrate.
    Required: at least 3 leaves, root with >= 3 children, every internal
    non-root vertex with >= 2 children.
    """
    violations = []
    n_leaves = sum(1 for v in tree.vertices if tree.is_leaf(v))
    if n_leaves < 3:
        violations.append(f"needs >= 3 leaves, has {n_leaves}")
    if len(tree.children[tree.root]) < 3:
        violations.append(
            f"root has {len(tree.children[tree.root])} children, needs >= 3"
        )
    for v in tree.vertices:
        if v != tree.root and tree.children[v] and len(tree.children[v]) < 2:
            violations.append(f"internal vertex {v} has 1 child, needs >= 2")
    return violations


@dataclass(frozen=True)
class HalinGraph:
    """A plane tree plus the cycle through its leaves in embedding order."""

    tree: EmbeddedTree
    cycle_order: Tuple[VertexId, ...] = field(compare=False)

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def m(self) -> int:
        return self.n - 1 + len(self.cycle_order)

    def tree_edges(self) -> List[Edge]:
        return self.tree.edges()

    def cycle_edges(self) -> List[Edge]:
        k = len(self.cycle_order)
        return [
            Edge(*_normalize_pair(self.cycle_order[i], self.cycle_order[(i + 1) % k]),
                 kind=EdgeKind.CYCLE)
            for i in range(k)
        ]

    def edges(self) -> List[Edge]:
        return self.tree_edges() + self.cycle_edges()

    def degree(self, v: VertexId) -> int:
        return self.tree.degree(v) + (2 if self.tree.is_leaf(v) else 0)

    def cycle_neighbors(self, leaf: VertexId) -> Tuple[VertexId, VertexId]:
        k = len(self.cycle_order)
        i = self.cycle_order.index(leaf)
        return (self.cycle_order[(i - 1) % k], self.cycle_order[(i + 1) % k])


def halin_from_tree(tree: EmbeddedTree) -> HalinGraph:
    """Close the leaves of a valid substrate tree into a Halin graph.

    The cycle order is always recomputed from the embedding; it is never an
    independent degree of freedom.
    """
    violations = validate_halin_substrate(tree)
    if violations:
        raise InvalidSubstrate(violations)
    return HalinGraph(tree=tree, cycle_order=tuple(leaves_in_embedding_order(tree)))
