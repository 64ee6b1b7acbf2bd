"""Flat-file formats.

tree:         "n", then n-1 lines "u v"
paths:        "p", then p lines "id u v"
permutations: "n k", then k lines of n integers
realizer:     "k p", then k lines of p element ids, lowest first
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import InvalidTreeError, ParseError
from .permutations import PermutationFamily
from .realizer import CptInstance, Realizer
from .tree import RootedTree, Tree, root_at_center


def _lines(text: str):
    for no, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield no, line.split()


def _ints(words, no, source, count=None):
    if count is not None and len(words) != count:
        raise ParseError(f"expected {count} integers, got {len(words)}", source, no)
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(f"not an integer in {' '.join(words)!r}", source, no) from None


def parse_tree(text: str, source=None) -> Tree:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty tree file", source, 1)
    no, words = rows[0]
    (n,) = _ints(words, no, source, 1)
    if n < 1:
        raise ParseError(f"node count must be positive, got {n}", source, no)
    if len(rows) - 1 != n - 1:
        raise ParseError(f"expected {n - 1} edge lines, got {len(rows) - 1}", source,
                         rows[-1][0])
    edges = []
    for no, words in rows[1:]:
        u, v = _ints(words, no, source, 2)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", source, no)
        edges.append((u, v))
    try:
        return Tree(n, edges)
    except InvalidTreeError as e:
        raise ParseError(f"invalid tree: {e}", source) from None


def format_tree(tree: Tree | RootedTree) -> str:
    edges = tree.edges
    return f"{tree.n}\n" + "".join(f"{u} {v}\n" for u, v in edges)


def parse_paths(text: str, n: int | None = None, source=None) -> list[tuple[int, int, int]]:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty paths file", source, 1)
    no, words = rows[0]
    (p,) = _ints(words, no, source, 1)
    if p < 0 or len(rows) - 1 != p:
        raise ParseError(f"header announces {p} paths, found {len(rows) - 1}", source, no)
    out = []
    seen = set()
    for no, words in rows[1:]:
        x, u, v = _ints(words, no, source, 3)
        if x in seen:
            raise ParseError(f"repeated element id {x}", source, no)
        seen.add(x)
        if n is not None and not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"path ({u}, {v}) has an endpoint outside 1..{n}", source, no)
        out.append((x, u, v))
    return out


def format_paths(inst: CptInstance) -> str:
    return f"{inst.p}\n" + "".join(f"{x} {path.u} {path.v}\n" for x, path in inst.elements)


def format_permutations(f: PermutationFamily) -> str:
    return f"{f.n} {len(f)}\n" + "".join(f"{m}\n" for m in f.members)


def parse_permutations(text: str, source=None) -> PermutationFamily:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty permutations file", source, 1)
    no, words = rows[0]
    n, k = _ints(words, no, source, 2)
    if len(rows) - 1 != k:
        raise ParseError(f"header announces {k} permutations, found {len(rows) - 1}", source, no)
    orders = [_ints(words, no, source, n) for no, words in rows[1:]]
    try:
        return PermutationFamily.from_orders(orders, n=n)
    except ValueError as e:
        raise ParseError(str(e), source) from None


def format_realizer(realizer: Realizer | Iterable) -> str:
    exts = [tuple(e) for e in realizer]
    p = len(exts[0]) if exts else 0
    return f"{len(exts)} {p}\n" + "".join(" ".join(map(str, e)) + "\n" for e in exts)


def parse_realizer(text: str, source=None) -> list[tuple[int, ...]]:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty realizer file", source, 1)
    no, words = rows[0]
    k, p = _ints(words, no, source, 2)
    if len(rows) - 1 != k:
        raise ParseError(f"header announces {k} extensions, found {len(rows) - 1}", source, no)
    return [tuple(_ints(words, no, source, p)) for no, words in rows[1:]]


def read_tree(path) -> Tree:
    return parse_tree(Path(path).read_text(), source=str(path))


def read_instance(tree_path, paths_path) -> CptInstance:
    t = root_at_center(read_tree(tree_path))
    triples = parse_paths(Path(paths_path).read_text(), n=t.n, source=str(paths_path))
    return CptInstance.from_endpoints(t, triples)
