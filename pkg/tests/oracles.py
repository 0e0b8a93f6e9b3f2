"""Brute-force reference computations used by the tests.

They loop over all 2^(n-1) cut patterns directly and never touch the
package's enumeration or summation helpers.
"""

from fractions import Fraction
from itertools import product
from math import prod


def cut_compositions(n):
    for cuts in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def s_weight(p):
    acc, out = 0, 1
    for x in p:
        acc += x
        out *= acc
    return out


def free_rho(n):
    """Word coefficients of rho_n for the free potential."""
    return {p: Fraction(n, s_weight(p) * s_weight(p[::-1])) for p in cut_compositions(n)}


def free_inverse(n):
    """Word coefficients of U_n as a polynomial in free residues."""
    out = {}
    for p in cut_compositions(n):
        adj = prod(p[i] + p[i + 1] for i in range(len(p) - 1))
        out[p] = Fraction((-1) ** (len(p) - 1) * n, adj)
    return out


def scalar_rho(U, n):
    """rho_n for commuting rational U given as a list U[1..]."""
    total = Fraction(0)
    for p in cut_compositions(n):
        total += Fraction(n, s_weight(p) * s_weight(p[::-1])) * prod(U[x] for x in p)
    return total
