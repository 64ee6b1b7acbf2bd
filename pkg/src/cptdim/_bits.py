"""Integer logarithms used by the size formulas."""


def ceil_log2(x: int) -> int:
    """Smallest k >= 0 with 2**k >= x (0 for x <= 1)."""
    if x <= 1:
        return 0
    return (x - 1).bit_length()


def ceil_loglog2(x: int) -> int:
    """Smallest k >= 0 with 2**(2**k) >= x (0 for x <= 2)."""
    k = 0
    while (1 << (1 << k)) < x:
        k += 1
    return k


def bound_formula(delta: int, radius: int) -> int:
    return 2 * ceil_loglog2(delta) + 2 * ceil_log2(radius) + 3
