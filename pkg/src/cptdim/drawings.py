"""Families of drawings of a rooted tree that are 3-suitable for its preorders.

A drawing only matters through the left-to-right order of each node's
children, so a drawing is represented by a small descriptor that yields that
order on demand; the padded full tree is never built.

The family for a tree of branching factor b and radius r consists of

* one uniform drawing per permutation of a weakly 3-suitable family of [b]
  (every node orders its children by the same permutation),
* for t = 1..ceil(log2 r), the drawing that uses the first permutation but
  reverses it at nodes whose level has bit t-1 set,

plus the mirror image of each.  The masked drawings are the radius-doubling
step unrolled: doubling from radius k to 2k draws the top half and every
bottom subtree with the radius-k drawing, and adds one drawing that mirrors
the bottom subtrees only, i.e. reverses child orders at levels whose residue
mod 2k is at least k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._bits import ceil_log2, ceil_loglog2
from .errors import SizeError
from .permutations import STRONG, Permutation, build_weakly_3suitable
from .tree import RootedTree

MAX_VERIFY_NODES = 400


@dataclass(frozen=True)
class DrawingDescriptor:
    base: Permutation
    mask_bit: int | None = None
    mirrored: bool = False

    def __post_init__(self):
        if self.mask_bit is not None and self.mask_bit < 1:
            raise ValueError(f"mask_bit must be >= 1, got {self.mask_bit}")

    def mirror(self) -> DrawingDescriptor:
        return DrawingDescriptor(self.base, self.mask_bit, not self.mirrored)

    def permutation_at(self, level: int) -> tuple[int, ...]:
        """Child-index order used at a node of the given level, before mirroring."""
        if self.mask_bit is not None and (level >> (self.mask_bit - 1)) & 1:
            return self.base.order[::-1]
        return self.base.order

    def dump(self) -> str:
        if self.mask_bit is None:
            line = f"uniform {self.base}"
        else:
            line = f"mask {self.mask_bit} {self.base}"
        return line + " mirrored" if self.mirrored else line

    @classmethod
    def parse(cls, line: str) -> DrawingDescriptor:
        words = line.split()
        mirrored = bool(words) and words[-1] == "mirrored"
        if mirrored:
            words = words[:-1]
        if not words or words[0] not in ("uniform", "mask"):
            raise ValueError(f"bad descriptor line: {line!r}")
        if words[0] == "mask":
            return cls(Permutation(tuple(map(int, words[2:]))), int(words[1]), mirrored)
        return cls(Permutation(tuple(map(int, words[1:]))), None, mirrored)


def uniform(order: Sequence[int]) -> DrawingDescriptor:
    return DrawingDescriptor(Permutation(tuple(order)))


def child_order(t: RootedTree, d: DrawingDescriptor, v: int) -> tuple[int, ...]:
    kids = t.children[v]
    deg = len(kids)
    if deg > d.base.n:
        raise ValueError(f"node {v} has {deg} children but the drawing orders only {d.base.n}")
    out = tuple(kids[i - 1] for i in d.permutation_at(t.level[v]) if i <= deg)
    return out[::-1] if d.mirrored else out


@dataclass(frozen=True)
class DrawingFamily:
    tree: RootedTree
    descriptors: tuple[DrawingDescriptor, ...]
    kind: str = STRONG
    degenerate: bool = False

    def __len__(self):
        return len(self.descriptors)

    def __iter__(self):
        return iter(self.descriptors)

    def dump(self) -> str:
        return "".join(d.dump() + "\n" for d in self.descriptors)


def family_size(branching: int, radius: int) -> int:
    return 2 * (ceil_loglog2(branching) + 1 + ceil_log2(radius))


def build_drawing_family(t: RootedTree, branching: int | None = None) -> DrawingFamily:
    """3-suitable drawing family of size 2(ceil(log2 log2 b) + 1 + ceil(log2 r)).

    ``b`` is the largest number of children of any node (the arity, for a
    full tree); it can be raised explicitly but not below the tree's own.
    """
    b = t.branching if branching is None else branching
    if b < t.branching:
        raise ValueError(f"branching {b} is below the tree's {t.branching}")
    b = max(b, 2)
    if t.radius == 0:
        ident = DrawingDescriptor(Permutation(tuple(range(1, b + 1))))
        return DrawingFamily(t, (ident, ident.mirror()), STRONG, degenerate=True)
    pi = build_weakly_3suitable(b)
    weak = [DrawingDescriptor(p) for p in pi]
    weak += [DrawingDescriptor(pi[0], bit) for bit in range(1, ceil_log2(t.radius) + 1)]
    return DrawingFamily(t, tuple(weak) + tuple(d.mirror() for d in weak), STRONG)


def _before_masks(t: RootedTree, d: DrawingDescriptor) -> list[int]:
    # bit tin[u] of result[v] set iff u precedes v in the drawing's preorder
    masks = [0] * (t.n + 1)
    acc = 0
    for v in t.preorder(d).order:
        masks[v] = acc
        acc |= 1 << t.tin[v]
    return masks


def _incomparable_masks(t: RootedTree) -> list[int]:
    full = (1 << t.n) - 1
    out = [0] * (t.n + 1)
    for v in t.nodes:
        below = ((1 << t.tout[v]) - 1) ^ ((1 << t.tin[v]) - 1)
        above = 0
        x = v
        while x != t.root:
            x = t.parent[x]
            above |= 1 << t.tin[x]
        out[v] = full & ~below & ~above
    return out


def verify_drawing_family(t: RootedTree, fam: DrawingFamily | Sequence[DrawingDescriptor],
                          mode: str = "strong", max_nodes: int = MAX_VERIFY_NODES) -> bool:
    """Check (weak) 3-suitability over all pairwise incomparable triples.

    For each distinguished node a and each descriptor, the incomparable
    nodes preceding a form a set S; a pair {b, c} is served when some S
    holds both.  Pairs are checked per b with bitsets, so the cost is
    O(n^2 |fam|) word operations rather than a triple loop.
    """
    if mode not in ("strong", "weak"):
        raise ValueError(f"mode must be 'strong' or 'weak', got {mode!r}")
    if t.n > max_nodes:
        raise SizeError(f"tree has {t.n} nodes; verification is limited to {max_nodes}")
    descriptors = list(fam)
    incomp = _incomparable_masks(t)
    before = [_before_masks(t, d) for d in descriptors]
    node_at = list(t._canonical_preorder)
    for a in t.nodes:
        ia = incomp[a]
        if ia == 0:
            continue
        sets = [bm[a] & ia for bm in before]
        if mode == "weak":
            # ia excludes a itself, so its complement of "before" is "after"
            sets += [~bm[a] & ia for bm in before]
        rest = ia
        while rest:
            low = rest & -rest
            rest ^= low
            b = node_at[low.bit_length() - 1]
            need = ia & incomp[b]
            if not need:
                continue
            covered = 0
            for s in sets:
                if s & low:
                    covered |= s
            if need & ~covered:
                return False
    return True
