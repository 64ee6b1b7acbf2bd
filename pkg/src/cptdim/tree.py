"""Host trees: loading, center rooting, LCA, paths and traversals.

Nodes are the integers 1..n.  Children of every node are kept in ascending
id order; this canonical order is what "left to right" means throughout,
and a child's canonical index is its 1-based rank among its siblings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import InvalidTreeError

if TYPE_CHECKING:
    from .drawings import DrawingDescriptor

PREORDER = "preorder"
LEVELWISE = "levelwise"


class Tree:
    """Unrooted tree on nodes 1..n given by its edge list."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InvalidTreeError(f"a tree needs at least one node, got n={n}")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        count = 0
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidTreeError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if u == v:
                raise InvalidTreeError(f"self-loop at node {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidTreeError(f"repeated edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        if count != n - 1:
            raise InvalidTreeError(f"a tree on {n} nodes has {n - 1} edges, got {count}")
        for a in adj:
            a.sort()
        self.adj = adj
        if len(self._bfs(1)[1]) != n:
            raise InvalidTreeError("edges do not connect all nodes (the input has a cycle "
                                   "or is disconnected)")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def _bfs(self, src: int) -> tuple[list[int], list[int]]:
        dist = [-1] * (self.n + 1)
        dist[src] = 0
        order = [src]
        q = deque([src])
        while q:
            u = q.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    order.append(w)
                    q.append(w)
        return dist, order

    def eccentricities(self) -> list[int]:
        """Eccentricity of every node (index 0 unused), via two farthest-node sweeps."""
        d1, order = self._bfs(1)
        a = max(order, key=lambda v: (d1[v], -v))
        da, order = self._bfs(a)
        b = max(order, key=lambda v: (da[v], -v))
        db, _ = self._bfs(b)
        return [0] + [max(da[v], db[v]) for v in range(1, self.n + 1)]

    def centers(self) -> list[int]:
        ecc = self.eccentricities()
        best = min(ecc[1:])
        return [v for v in range(1, self.n + 1) if ecc[v] == best]


def load_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    return Tree(n, edges)


@dataclass(frozen=True)
class TreePath:
    """Path between u and v (u == v allowed); length counts vertices."""

    u: int
    v: int
    top: int
    length: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Listing:
    """A traversal: order[i] is the node at rank i + 1, position[v] its rank.

    ``kind`` records which traversal produced it so that consumers may use
    shortcuts valid for that traversal; ``None`` means arbitrary.
    """

    order: tuple[int, ...]
    position: tuple[int, ...]
    kind: str | None = None

    @classmethod
    def from_order(cls, order: Sequence[int], kind: str | None = None) -> Listing:
        position = [0] * (len(order) + 1)
        for i, v in enumerate(order, start=1):
            position[v] = i
        if sorted(order) != list(range(1, len(order) + 1)):
            raise ValueError("a listing must be a bijection onto the nodes")
        return cls(tuple(order), tuple(position), kind)


class RootedTree:
    """A tree rooted at ``root``; immutable after construction."""

    def __init__(self, tree: Tree, root: int):
        if not 1 <= root <= tree.n:
            raise InvalidTreeError(f"root {root} is not a node")
        n = tree.n
        self.n = n
        self.root = root
        self.unrooted = tree
        parent = [0] * (n + 1)
        level = [0] * (n + 1)
        children: list[tuple[int, ...]] = [()] * (n + 1)
        dist, order = tree._bfs(root)
        for v in order:
            level[v] = dist[v]
            kids = tuple(w for w in tree.adj[v] if w != parent[v])
            children[v] = kids
            for w in kids:
                parent[w] = v
        self.parent = tuple(parent)
        self.level = tuple(level)
        self.children = tuple(children)
        self.radius = max(level[1:])
        self.maxdeg = max(tree.degree(v) for v in range(1, n + 1))
        self.branching = max(len(c) for c in children[1:])
        self.leafcount = sum(1 for v in range(1, n + 1) if tree.degree(v) == 1)

        # canonical preorder intervals for O(1) ancestor tests
        tin = [0] * (n + 1)
        tout = [0] * (n + 1)
        pre = []
        stack = [root]
        while stack:
            v = stack.pop()
            tin[v] = len(pre)
            pre.append(v)
            stack.extend(reversed(children[v]))
        for v in reversed(pre):
            tout[v] = tin[v] + 1 + sum(tout[w] - tin[w] for w in children[v])
        self.tin = tuple(tin)
        self.tout = tuple(tout)
        self._canonical_preorder = tuple(pre)

    def __repr__(self):
        return (f"RootedTree(n={self.n}, root={self.root}, radius={self.radius}, "
                f"maxdeg={self.maxdeg}, leaves={self.leafcount})")

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return self.unrooted.edges

    def child_index(self, v: int) -> int:
        """1-based canonical index of v among its siblings (0 for the root)."""
        if v == self.root:
            return 0
        return self.children[self.parent[v]].index(v) + 1

    def is_ancestor(self, a: int, v: int) -> bool:
        """True when a is v or an ancestor of v."""
        return self.tin[a] <= self.tin[v] < self.tout[a]

    def lca(self, u: int, v: int) -> int:
        """Lowest common ancestor by level-aligned parent walking, O(radius)."""
        level, parent = self.level, self.parent
        while level[u] > level[v]:
            u = parent[u]
        while level[v] > level[u]:
            v = parent[v]
        while u != v:
            u = parent[u]
            v = parent[v]
        return u

    def is_incomparable(self, u: int, v: int) -> bool:
        return not (self.is_ancestor(u, v) or self.is_ancestor(v, u))

    def dist(self, u: int, v: int) -> int:
        return self.level[u] + self.level[v] - 2 * self.level[self.lca(u, v)]

    def path(self, u: int, v: int) -> TreePath:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise ValueError(f"path ({u}, {v}) has an endpoint outside 1..{self.n}")
        top = self.lca(u, v)
        return TreePath(u, v, top, self.level[u] + self.level[v] - 2 * self.level[top] + 1)

    def on_path(self, p: TreePath, w: int) -> bool:
        # w lies on the path iff it is below the top and above one endpoint
        return self.is_ancestor(p.top, w) and (self.is_ancestor(w, p.u) or self.is_ancestor(w, p.v))

    def path_contains(self, p: TreePath, q: TreePath) -> bool:
        """True iff every vertex of q lies on p."""
        return self.on_path(p, q.u) and self.on_path(p, q.v)

    def path_vertices(self, p: TreePath) -> list[int]:
        """Vertices of p from u to v."""
        left, right = [], []
        x = p.u
        while x != p.top:
            left.append(x)
            x = self.parent[x]
        x = p.v
        while x != p.top:
            right.append(x)
            x = self.parent[x]
        return left + [p.top] + right[::-1]

    def preorder(self, d: DrawingDescriptor | None = None) -> Listing:
        """Depth-first preorder visiting children in the order the drawing gives."""
        if d is None:
            return self.canonical_preorder
        from .drawings import child_order
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(child_order(self, d, v)))
        return Listing.from_order(order, PREORDER)

    @cached_property
    def canonical_preorder(self) -> Listing:
        return Listing.from_order(self._canonical_preorder, PREORDER)

    @cached_property
    def levelwise(self) -> Listing:
        """Deepest level first, left to right within a level, root last."""
        tin = self.tin
        order = sorted(self.nodes, key=lambda v: (-self.level[v], tin[v]))
        return Listing.from_order(order, LEVELWISE)


def root_at(tree: Tree, root: int) -> RootedTree:
    return RootedTree(tree, root)


def root_at_center(tree: Tree) -> RootedTree:
    """Root at a minimum-eccentricity node; the smaller id wins a tie."""
    return RootedTree(tree, tree.centers()[0])


def lca(t: RootedTree, u: int, v: int) -> int:
    return t.lca(u, v)


def is_incomparable(t: RootedTree, u: int, v: int) -> bool:
    return t.is_incomparable(u, v)


def path_between(t: RootedTree, u: int, v: int) -> TreePath:
    return t.path(u, v)


def path_contains(t: RootedTree, p: TreePath, q: TreePath) -> bool:
    return t.path_contains(p, q)


def preorder(t: RootedTree, d: DrawingDescriptor | None = None) -> Listing:
    return t.preorder(d)


def levelwise(t: RootedTree) -> Listing:
    return t.levelwise
