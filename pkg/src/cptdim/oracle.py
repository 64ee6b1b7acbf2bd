"""Brute-force ground truth for tiny posets."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SizeError
from .realizer import LinearExtension, Poset, Realizer

MAX_ELEMENTS = 12


@dataclass(frozen=True)
class DimensionResult:
    value: int | None
    witness: Realizer | None = None
    kmax: int | None = None

    @property
    def exceeded(self) -> bool:
        return self.value is None

    def __str__(self):
        if self.value is None:
            return f"> {self.kmax}"
        return str(self.value)


def _topological(size: int, succ: list[int]) -> list[int]:
    # smallest-index-first topological order of the closure given by succ bitsets
    pred_count = [0] * size
    for a in range(size):
        s = succ[a]
        while s:
            low = s & -s
            pred_count[low.bit_length() - 1] += 1
            s ^= low
    done = []
    used = 0
    while len(done) < size:
        # every remaining node whose predecessors are all placed
        for a in range(size):
            if not used >> a & 1 and pred_count[a] == 0:
                break
        done.append(a)
        used |= 1 << a
        s = succ[a]
        while s:
            low = s & -s
            pred_count[low.bit_length() - 1] -= 1
            s ^= low
    return done


def _search(size, base_succ, base_pred, pairs, k):
    """Assign every critical pair (x, y) to one of k orders that puts y before x.

    Each of the k orders is kept as a transitively closed relation in
    bitsets; adding y < x is feasible iff x < y is not already implied.
    Orders are interchangeable, so a pair may only open the first unused one.
    """
    succ = [list(base_succ) for _ in range(k)]
    pred = [list(base_pred) for _ in range(k)]

    def add(j, lo, hi):
        s, p = succ[j], pred[j]
        low_side = p[lo] | (1 << lo)
        high_side = s[hi] | (1 << hi)
        a = low_side
        while a:
            bit = a & -a
            s[bit.bit_length() - 1] |= high_side
            a ^= bit
        b = high_side
        while b:
            bit = b & -b
            p[bit.bit_length() - 1] |= low_side
            b ^= bit

    def rec(idx, used):
        while idx < len(pairs):
            x, y = pairs[idx]
            if any(succ[j][y] >> x & 1 for j in range(used)):
                idx += 1
                continue
            break
        else:
            return True
        x, y = pairs[idx]
        for j in range(min(used + 1, k)):
            if succ[j][x] >> y & 1:
                continue
            saved_s, saved_p = list(succ[j]), list(pred[j])
            add(j, y, x)
            if rec(idx + 1, max(used, j + 1)):
                return True
            succ[j], pred[j] = saved_s, saved_p
        return False

    if rec(0, 0):
        return succ
    return None


def critical_pairs(poset: Poset) -> list[tuple[int, int]]:
    """Index pairs (x, y) that some extension must reverse by putting y before x.

    (x, y) is critical when x, y are incomparable, everything below x is
    below y and everything above y is above x.  Extensions reversing all
    critical pairs already realize the poset.
    """
    m = poset.matrix
    size = len(poset)
    out = []
    for x in range(size):
        for y in range(size):
            if x == y or m[x, y] or m[y, x]:
                continue
            if (m[:, x] & ~m[:, y]).any() or (m[y, :] & ~m[x, :]).any():
                continue
            out.append((x, y))
    return out


def exact_dimension(poset: Poset, kmax: int = 6, max_elements: int = MAX_ELEMENTS) -> DimensionResult:
    """Smallest k <= kmax such that k linear extensions realize the poset."""
    size = len(poset)
    if size > max_elements:
        raise SizeError(f"poset has {size} elements; exact dimension is limited to {max_elements}")
    if size <= 1:
        witness = Realizer((LinearExtension(poset.elements),))
        return DimensionResult(1, witness, kmax)
    m = poset.matrix
    base_succ = [sum(1 << j for j in range(size) if m[i, j]) for i in range(size)]
    base_pred = [sum(1 << i for i in range(size) if m[i, j]) for j in range(size)]
    pairs = critical_pairs(poset)
    for k in range(1, kmax + 1):
        found = _search(size, base_succ, base_pred, pairs, k)
        if found is not None:
            exts = []
            for succ in found:
                order = _topological(size, succ)
                exts.append(LinearExtension(tuple(poset.elements[i] for i in order)))
            return DimensionResult(k, Realizer(tuple(exts)), kmax)
    return DimensionResult(None, None, kmax)


def p12_lower_bound(n: int) -> float:
    """log2 log2 n, which the dimension of P(1,2;n) strictly exceeds."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return math.log2(math.log2(n))
