"""Weakly 3-suitable and 3-suitable families of permutations of [n].

A family of permutations of [n] is *3-suitable* when, for every 3-subset
and every distinguished element of it, some member lists the distinguished
element after the other two.  It is *weakly* 3-suitable when "after both"
may be replaced by "before both".

The builder follows the classical block construction: for n = 2**(2**k),
split [n] into 2**(2**(k-1)) blocks of equal size, take a weakly 3-suitable
family L_1..L_k of the block size, and let R_i order the blocks by L_i and
each block internally by L_i.  One more permutation is R_1 with every block
reversed.  Other n are padded with dummies which are deleted afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from ._bits import ceil_loglog2

WEAK = "weakly-3-suitable"
STRONG = "3-suitable"
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class Permutation:
    """A linear order of 1..n, stored rank to element (first = lowest)."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(x) for x in self.order))
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.order)}: {self.order}")

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self) -> list[int]:
        """Element to rank inverse; index 0 is unused."""
        pos = [0] * (self.n + 1)
        for rank, x in enumerate(self.order):
            pos[x] = rank
        return pos

    def reversed(self) -> Permutation:
        return Permutation(self.order[::-1])

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __str__(self):
        return " ".join(map(str, self.order))


@dataclass(frozen=True)
class PermutationFamily:
    n: int
    members: tuple[Permutation, ...]
    kind: str = UNVERIFIED

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.kind not in (WEAK, STRONG, UNVERIFIED):
            raise ValueError(f"unknown family kind {self.kind!r}")
        for m in self.members:
            if m.n != self.n:
                raise ValueError(f"member of size {m.n} in a family over [{self.n}]")

    @classmethod
    def from_orders(cls, orders: Iterable[Sequence[int]], kind: str = UNVERIFIED,
                    n: int | None = None) -> PermutationFamily:
        members = tuple(Permutation(tuple(o)) for o in orders)
        if n is None:
            if not members:
                raise ValueError("cannot infer n from an empty family")
            n = members[0].n
        return cls(n, members, kind)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


@lru_cache(maxsize=None)
def _power_family(k: int) -> tuple[np.ndarray, ...]:
    # Family of k + 1 permutations of range(2**(2**k)), zero-based.
    if k == 0:
        base = np.arange(2, dtype=np.int64)
        base.setflags(write=False)
        return (base,)
    m = 1 << (1 << (k - 1))
    sub = _power_family(k - 1)
    out = []
    for L in sub:
        # block b (elements b*m .. b*m+m-1) placed by L, its contents by L
        R = (L[:, None] * m + L[None, :]).ravel()
        out.append(R)
    first = sub[0]
    out.append((first[:, None] * m + first[::-1][None, :]).ravel())
    for R in out:
        R.setflags(write=False)
    return tuple(out)


def build_weakly_3suitable(n: int) -> PermutationFamily:
    """Weakly 3-suitable family of ceil(log2 log2 n) + 1 permutations of [n].

    Runs in O(n log log n); the sub-family for each block size is built once.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k = ceil_loglog2(n)
    if k == 0:
        return PermutationFamily(n, (Permutation(tuple(range(1, n + 1))),), WEAK)
    members = []
    for R in _power_family(k):
        kept = R[R < n] + 1
        members.append(Permutation(tuple(kept.tolist())))
    return PermutationFamily(n, tuple(members), WEAK)


def close_under_reversal(f: PermutationFamily) -> PermutationFamily:
    if f.kind != WEAK:
        raise ValueError(f"expected a weakly 3-suitable family, got kind {f.kind!r}")
    return PermutationFamily(f.n, f.members + tuple(m.reversed() for m in f.members), STRONG)


def build_3suitable(n: int) -> PermutationFamily:
    """3-suitable family of 2 ceil(log2 log2 n) + 2 permutations of [n]."""
    return close_under_reversal(build_weakly_3suitable(n))


def _position_matrix(f: PermutationFamily) -> np.ndarray:
    pos = np.zeros((len(f), f.n + 1), dtype=np.int32)
    for i, m in enumerate(f.members):
        pos[i, list(m.order)] = np.arange(f.n, dtype=np.int32)
    return pos


def _check_triples(f: PermutationFamily, weak: bool, chunk: int = 1 << 16) -> bool:
    if f.n < 3:
        return True
    if len(f) == 0:
        return False
    pos = _position_matrix(f)
    triples = itertools.combinations(range(1, f.n + 1), 3)
    while True:
        block = np.fromiter(itertools.chain.from_iterable(itertools.islice(triples, chunk)),
                            dtype=np.int64)
        if block.size == 0:
            return True
        block = block.reshape(-1, 3)
        P = pos[:, block]  # (members, triples, 3)
        for j in range(3):
            a = P[:, :, j]
            b = P[:, :, (j + 1) % 3]
            c = P[:, :, (j + 2) % 3]
            ok = ((a > b) & (a > c)).any(axis=0)
            if weak:
                ok |= ((a < b) & (a < c)).any(axis=0)
            if not ok.all():
                return False


def is_weakly_3suitable(f: PermutationFamily) -> bool:
    """Brute force over every 3-subset and distinguished element, O(|f| n^3)."""
    return _check_triples(f, weak=True)


def is_3suitable(f: PermutationFamily) -> bool:
    return _check_triples(f, weak=False)
