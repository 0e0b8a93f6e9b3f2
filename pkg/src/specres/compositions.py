"""Integer compositions and the partial-sum weights built from them.

A composition is a plain tuple of positive integers.  ``s_p`` is the
product of its left partial sums, ``s_p'`` the same product for the
reversed tuple, and ``q_p`` (odd length only) the product of the
even-indexed partial sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod


def partial_sums(p):
    out = []
    s = 0
    for x in p:
        s += x
        out.append(s)
    return out


def nodd(p):
    return sum(1 for x in p if x % 2)


def neven(p):
    return sum(1 for x in p if x % 2 == 0)


def compositions(n, *, length=None, parity=None, parts=None, odd_parts=None, even_parts=None):
    """Yield the compositions of ``n`` that pass every given filter.

    ``length`` fixes the number of parts, ``parity`` is ``"odd"`` or
    ``"even"`` for the number of parts, ``parts`` restricts the allowed part
    values, ``odd_parts``/``even_parts`` fix how many parts are odd/even.
    Filters prune the search as it runs.  Output is ordered by length,
    then lexicographically.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if parity not in (None, "odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    allowed = sorted(set(range(1, n + 1) if parts is None else (x for x in parts if 1 <= x <= n)))
    if not allowed:
        return
    lo, hi = allowed[0], allowed[-1]
    n_odd_allowed = any(x % 2 for x in allowed)
    n_even_allowed = any(x % 2 == 0 for x in allowed)

    lengths = range(1, n // lo + 1) if length is None else [length]
    for ell in lengths:
        if ell < 1 or ell * lo > n or ell * hi < n:
            continue
        if parity == "odd" and ell % 2 == 0 or parity == "even" and ell % 2:
            continue
        if odd_parts is not None and (odd_parts > ell or (odd_parts and not n_odd_allowed)):
            continue
        if even_parts is not None and (even_parts > ell or (even_parts and not n_even_allowed)):
            continue
        yield from _fill(n, ell, allowed, lo, hi, odd_parts, even_parts, ())


def _fill(remaining, slots, allowed, lo, hi, want_odd, want_even, prefix):
    if slots == 0:
        if remaining == 0:
            yield prefix
        return
    n_odd = sum(1 for x in prefix if x % 2)
    n_even = len(prefix) - n_odd
    for x in allowed:
        rest = remaining - x
        if rest < (slots - 1) * lo:
            break
        if rest > (slots - 1) * hi:
            continue
        o, e = n_odd + x % 2, n_even + (1 - x % 2)
        if want_odd is not None and (o > want_odd or o + slots - 1 < want_odd):
            continue
        if want_even is not None and (e > want_even or e + slots - 1 < want_even):
            continue
        yield from _fill(rest, slots - 1, allowed, lo, hi, want_odd, want_even, prefix + (x,))


def count_compositions(n, **filters):
    return sum(1 for _ in compositions(n, **filters))


def s_product(p):
    """Product of the left partial sums of ``p``."""
    return prod(partial_sums(p))


def weight_s(p):
    """``(s_p, s_p')``: partial-sum products of ``p`` and of its reversal."""
    return s_product(p), s_product(tuple(reversed(p)))


def weight_q(p):
    """Product ``s_2 s_4 ... s_{l-1}`` of even-indexed partial sums (odd length only)."""
    if len(p) % 2 == 0:
        raise ValueError(f"q weight needs an odd number of parts, got {tuple(p)}")
    return prod(partial_sums(p)[1::2])


def adjacent_sum_product(p):
    """``(p_1 + p_2)(p_2 + p_3) ... (p_{l-1} + p_l)``; 1 for a single part."""
    return prod(a + b for a, b in zip(p, p[1:]))


def cube_identity_sides(p):
    """Both sides of the cubic partial-sum identity for ``p``.

    ``lhs = (sum p)^3 - sum p^3`` and
    ``rhs = sum_j s_j (s_l - s_j) (p_j + p_{j+1})`` over ``j < l``.
    """
    p = tuple(p)
    if len(p) < 2:
        raise ValueError("cube identity needs at least two parts")
    s = partial_sums(p)
    total = s[-1]
    lhs = total ** 3 - sum(x ** 3 for x in p)
    rhs = sum(s[j] * (total - s[j]) * (p[j] + p[j + 1]) for j in range(len(p) - 1))
    return lhs, rhs


def cube_identity_constant(max_n):
    """Ratio lhs/rhs of :func:`cube_identity_sides`, checked constant for all n <= max_n.

    Raises ``ArithmeticError`` naming the first composition that breaks the
    ratio found at ``n = 2``.
    """
    constant = None
    for n in range(2, max_n + 1):
        for p in compositions(n):
            if len(p) < 2:
                continue
            lhs, rhs = cube_identity_sides(p)
            ratio = Fraction(lhs, rhs)
            if constant is None:
                constant = ratio
            elif ratio != constant:
                raise ArithmeticError(f"ratio {ratio} at {p} differs from {constant}")
    return constant


@lru_cache(maxsize=None)
def composition_table(n):
    """All compositions of ``n`` with their s-weights, cached: ``[(p, s_p, s_p')]``."""
    return tuple((p,) + weight_s(p) for p in compositions(n))
