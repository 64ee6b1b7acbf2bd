"""Test-instance generators: the P(1,2;m) tightness family and random instances."""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass

from .errors import SizeError
from .realizer import CptInstance
from .tree import Tree, root_at_center

MAX_P12_LEAVES = 4096


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    delta: int | None = None
    radius: int | None = None
    n: int | None = None
    p: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind == "p12":
            if self.delta is None or self.radius is None or self.delta < 2 or self.radius < 1:
                raise ValueError("p12 needs delta >= 2 and radius >= 1")
        elif self.kind == "random":
            if self.n is None or self.p is None or self.n < 1 or self.p < 1:
                raise ValueError("random needs n >= 1 and p >= 1")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def generate(self) -> CptInstance:
        if self.kind == "p12":
            return gen_p12(self.delta, self.radius)
        return gen_random_instance(self.n, self.p, self.seed or 0)


def complete_tree(delta: int, radius: int) -> Tree:
    """Complete delta-ary tree of the given radius, nodes numbered breadth-first from 1."""
    edges = []
    frontier = [1]
    nxt = 2
    for _ in range(radius):
        new = []
        for v in frontier:
            for _ in range(delta):
                edges.append((v, nxt))
                new.append(nxt)
                nxt += 1
        frontier = new
    return Tree(nxt - 1, edges)


def gen_p12(delta: int, radius: int) -> CptInstance:
    """P(1,2;m), m = delta**radius, modelled on the complete delta-ary tree.

    Elements 1..m are the single-leaf paths (leaf i is the i-th leaf in
    preorder); elements m+1.. are the leaf-to-leaf paths {i, j}, i < j, in
    lexicographic order.
    """
    if delta < 2 or radius < 1:
        raise ValueError("need delta >= 2 and radius >= 1")
    m = delta ** radius
    if m > MAX_P12_LEAVES:
        raise SizeError(f"delta**radius = {m} exceeds the limit of {MAX_P12_LEAVES} leaves")
    t = root_at_center(complete_tree(delta, radius))
    # breadth-first numbering keeps the deepest level in preorder
    leaves = [v for v in t.canonical_preorder.order if t.level[v] == radius]
    triples = [(i, leaves[i - 1], leaves[i - 1]) for i in range(1, m + 1)]
    nxt = m + 1
    for i, j in itertools.combinations(range(1, m + 1), 2):
        triples.append((nxt, leaves[i - 1], leaves[j - 1]))
        nxt += 1
    return CptInstance.from_endpoints(t, triples)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labelled tree on 1..n, decoded from a random Pruefer sequence."""
    if n <= 2:
        return Tree(n, [(1, 2)] if n == 2 else [])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)


def gen_random_instance(n: int, p: int, seed: int, duplicates: int = 0) -> CptInstance:
    """Random tree and p paths with uniform endpoints; identical paths may occur.

    ``duplicates`` extra elements copy the path of an earlier element,
    sometimes with its endpoints swapped.
    """
    if n < 1 or p < 1:
        raise ValueError("need n >= 1 and p >= 1")
    rng = random.Random(seed)
    t = root_at_center(random_tree(n, rng))
    triples = [(i, rng.randint(1, n), rng.randint(1, n)) for i in range(1, p + 1)]
    for i in range(p + 1, p + duplicates + 1):
        _, u, v = triples[rng.randrange(len(triples))]
        if rng.random() < 0.5:
            u, v = v, u
        triples.append((i, u, v))
    return CptInstance.from_endpoints(t, triples)
