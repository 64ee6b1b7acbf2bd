"""CPT posets, traversal-induced linear extensions and realizers.

Each element of a CPT instance is a path of the host tree, and x < y iff
path(x) is a proper subset of path(y).  A traversal of the tree induces a
linear extension: elements are sorted by the position of the last-listed
vertex of their path, then by path length, then by element id (ascending
for preorders, descending for the level-wise listing, so that elements
with identical paths get reversed somewhere).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from ._bits import bound_formula
from .drawings import DrawingFamily, build_drawing_family
from .tree import LEVELWISE, PREORDER, Listing, RootedTree, TreePath


@dataclass
class CptInstance:
    tree: RootedTree
    elements: list[tuple[int, TreePath]]

    def __post_init__(self):
        ids = [x for x, _ in self.elements]
        if len(set(ids)) != len(ids):
            raise ValueError("element ids must be distinct")
        for x, p in self.elements:
            for w in p.endpoints:
                if not 1 <= w <= self.tree.n:
                    raise ValueError(f"element {x}: endpoint {w} is not a node of the tree")

    @classmethod
    def from_endpoints(cls, tree: RootedTree, paths: Iterable[tuple[int, int, int]]) -> CptInstance:
        """Build from (id, u, v) triples."""
        return cls(tree, [(x, tree.path(u, v)) for x, u, v in paths])

    @property
    def p(self) -> int:
        return len(self.elements)

    @property
    def ids(self) -> list[int]:
        return [x for x, _ in self.elements]

    @cached_property
    def _id_rank(self) -> list[int]:
        # rank of each element (by list index) in ascending id order
        order = sorted(range(self.p), key=lambda i: self.elements[i][0])
        rank = [0] * self.p
        for r, i in enumerate(order):
            rank[i] = r
        return rank

    @cached_property
    def _by_endpoint(self) -> list[list[int]]:
        lists: list[list[int]] = [[] for _ in range(self.tree.n + 1)]
        for i, (_, path) in enumerate(self.elements):
            lists[path.u].append(i)
            if path.v != path.u:
                lists[path.v].append(i)
        rank = self._id_rank
        for lst in lists:
            lst.sort(key=lambda i: (self.elements[i][1].length, rank[i]))
        return lists

    @cached_property
    def _by_top(self) -> list[list[int]]:
        lists: list[list[int]] = [[] for _ in range(self.tree.n + 1)]
        for i, (_, path) in enumerate(self.elements):
            lists[path.top].append(i)
        rank = self._id_rank
        for lst in lists:
            lst.sort(key=lambda i: (self.elements[i][1].length, -rank[i]))
        return lists


class Poset:
    """Finite strict partial order given by its set of (x, y) pairs meaning x < y."""

    def __init__(self, elements: Sequence[Hashable], less: Iterable[tuple], check: bool = True):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("repeated element in ground set")
        self.less = frozenset(less)
        m = np.zeros((len(self.elements), len(self.elements)), dtype=bool)
        for x, y in self.less:
            m[self.index[x], self.index[y]] = True
        self.matrix = m
        if check:
            if m.diagonal().any():
                raise ValueError("relation is not irreflexive")
            if (m & m.T).any():
                raise ValueError("relation is not antisymmetric")
            mi = m.astype(np.int64)
            if ((mi @ mi > 0) & ~m).any():
                raise ValueError("relation is not transitive")

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self.less)} relations)"

    def lt(self, x, y) -> bool:
        return (x, y) in self.less

    def comparable(self, x, y) -> bool:
        return x == y or (x, y) in self.less or (y, x) in self.less

    def incomparable_pairs(self) -> list[tuple]:
        """Ordered pairs (x, y), x != y, with neither x < y nor y < x."""
        m = self.matrix
        inc = ~(m | m.T)
        np.fill_diagonal(inc, False)
        e = self.elements
        return [(e[i], e[j]) for i, j in zip(*np.nonzero(inc))]


@dataclass(frozen=True)
class LinearExtension:
    order: tuple

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __str__(self):
        return " ".join(map(str, self.order))


@dataclass(frozen=True)
class Realizer:
    extensions: tuple[LinearExtension, ...]
    family: DrawingFamily | None = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)

    def __getitem__(self, i):
        return self.extensions[i]


def poset_from_paths(inst: CptInstance) -> Poset:
    t = inst.tree
    less = []
    for x, p in inst.elements:
        for y, q in inst.elements:
            if p.length < q.length and t.path_contains(q, p):
                less.append((x, y))
    return Poset(inst.ids, less)


def _last_vertex(t: RootedTree, path: TreePath, position: Sequence[int]) -> int:
    return max(t.path_vertices(path), key=lambda w: position[w])


def extension_from_listing(inst: CptInstance, listing: Listing) -> LinearExtension:
    """Linear extension induced by a traversal listing.

    Preorder and level-wise listings take O(n + p) using per-vertex path
    lists sorted by length; any other listing falls back to scanning paths.
    """
    els = inst.elements
    out = []
    if listing.kind == PREORDER:
        pos = listing.position
        by_end = inst._by_endpoint
        for v in listing.order:
            pv = pos[v]
            for i in by_end[v]:
                path = els[i][1]
                other = path.v if path.u == v else path.u
                if pos[other] <= pv:
                    out.append(els[i][0])
    elif listing.kind == LEVELWISE:
        by_top = inst._by_top
        for v in listing.order:
            out.extend(els[i][0] for i in by_top[v])
    else:
        pos = listing.position
        rank = inst._id_rank
        keys = [(pos[_last_vertex(inst.tree, p, pos)], p.length, rank[i])
                for i, (_, p) in enumerate(els)]
        out = [els[i][0] for i in sorted(range(len(els)), key=keys.__getitem__)]
    return LinearExtension(tuple(out))


def build_realizer(inst: CptInstance, family: DrawingFamily | None = None) -> Realizer:
    """One extension per drawing's preorder, then the level-wise one."""
    t = inst.tree
    if family is None:
        family = build_drawing_family(t)
    exts = [extension_from_listing(inst, t.preorder(d)) for d in family]
    exts.append(extension_from_listing(inst, t.levelwise))
    return Realizer(tuple(exts), family)


def _positions(poset: Poset, realizer: Iterable[LinearExtension]) -> np.ndarray:
    rows = []
    ground = set(poset.elements)
    for k, ext in enumerate(realizer):
        order = tuple(ext)
        if len(order) != len(ground) or set(order) != ground:
            raise ValueError(f"extension {k} is not an ordering of the poset's ground set")
        row = np.empty(len(order), dtype=np.int64)
        row[[poset.index[x] for x in order]] = np.arange(len(order))
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(poset))


def is_linear_extension(poset: Poset, ext: LinearExtension) -> bool:
    pos = _positions(poset, [ext])[0]
    m = poset.matrix
    return not (m & ~(pos[:, None] < pos[None, :])).any()


def verify_realizer(poset: Poset, realizer: Iterable[LinearExtension]) -> bool:
    """Every member extends the poset and the members' intersection is the poset."""
    pos = _positions(poset, realizer)
    m = poset.matrix
    before_all = np.ones_like(m)
    for row in pos:
        before = row[:, None] < row[None, :]
        if (m & ~before).any():
            return False
        before_all &= before
    return bool((before_all == m).all())


def corollary_bound(t: RootedTree, delta: int | None = None) -> int:
    """2 ceil(log2 log2 D) + 2 ceil(log2 r) + 3, with D the maximum degree by default."""
    return bound_formula(t.maxdeg if delta is None else delta, t.radius)


def dimension_bound(t: RootedTree) -> int:
    """min(leaf count, 2 ceil(log2 log2 b) + 2 ceil(log2 r) + 3) for a center-rooted tree.

    b is the branching factor, the arity the drawing construction actually
    needs; it never exceeds the maximum degree.  The leaf-count side is
    reported only, no realizer of that size is built.
    """
    formula = bound_formula(t.branching, t.radius)
    if t.leafcount == 0:
        return formula
    return min(t.leafcount, formula)
