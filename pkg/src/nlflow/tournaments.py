"""Closed-form NL-flow polynomials for complete (acyclic) digraphs, the
condensation formula for general complete digraphs, and the term-level
shortcuts (leading, constant, linear coefficients).
"""

from __future__ import annotations

from math import comb

from .digraphs import Digraph
from .polynomials import IntPolynomial


def compositions(n: int, p: int):
    """All C(n-1, p-1) compositions of n into p positive parts, in
    lexicographic order.
    """
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")

    def gen(rest, parts):
        if parts == 1:
            yield (rest,)
            return
        for first in range(1, rest - parts + 2):
            for tail in gen(rest - first, parts - 1):
                yield (first,) + tail

    return gen(n, p)


def complete_acyclic_nl_poly(n: int) -> IntPolynomial:
    """NL-flow polynomial of the complete acyclic digraph on n vertices:

        sum_{p=1}^{n} (-1)^(p-1) sum_{compositions (k_1..k_p) of n}
            x^(sum_i C(k_i - 1, 2))

    n = 1 gives 1 (the empty flow).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs: dict[int, int] = {}
    for p in range(1, n + 1):
        sign = -1 if p % 2 == 0 else 1
        for parts in compositions(n, p):
            e = sum(comb(k - 1, 2) for k in parts)
            coeffs[e] = coeffs.get(e, 0) + sign
    return IntPolynomial(coeffs)


def complete_digraph_nl_poly(sizes) -> IntPolynomial:
    """NL-flow polynomial of a complete digraph whose condensation has
    strong components of the given sizes, listed in topological order.

    Compositions run over the d components; each block of consecutive
    components contributes x^C(n_j - 1, 2) with n_j the block vertex count.
    """
    sizes = tuple(int(k) for k in sizes)
    if not sizes:
        raise ValueError("sizes must be a nonempty tuple of component sizes")
    if any(k < 1 for k in sizes):
        raise ValueError("component sizes must be >= 1")
    d = len(sizes)
    prefix = [0]
    for k in sizes:
        prefix.append(prefix[-1] + k)
    coeffs: dict[int, int] = {}
    for p in range(1, d + 1):
        sign = -1 if p % 2 == 0 else 1
        for parts in compositions(d, p):
            e = 0
            at = 0
            for dj in parts:
                nj = prefix[at + dj] - prefix[at]
                e += comb(nj - 1, 2)
                at += dj
            coeffs[e] = coeffs.get(e, 0) + sign
    return IntPolynomial(coeffs)


def constant_term(n: int) -> int:
    """phi(0) for the complete acyclic digraph on n vertices; periodic in
    n mod 3 and satisfies c(n) = -(c(n-1) + c(n-2)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return {0: -1, 1: 1, 2: 0}[n % 3]


def linear_term(n: int) -> int:
    """Coefficient of x in the complete acyclic polynomial, n >= 4."""
    if n < 4:
        raise ValueError("linear_term is defined for n >= 4")
    r = n % 3
    if r == 0:
        num = n
    elif r == 1:
        num = -2 * (n - 1)
    else:
        num = n - 2
    assert num % 3 == 0
    return num // 3


def leading_terms(n: int) -> list[tuple[int, int]]:
    """The two highest terms, as (exponent, coefficient), n >= 4."""
    if n < 4:
        raise ValueError("leading_terms is defined for n >= 4")
    return [(comb(n - 1, 2), 1), (comb(n - 2, 2), -2)]


def complete_acyclic_digraph(n: int) -> Digraph:
    """Arcs i -> j for all i < j."""
    return Digraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def strong_tournament(k: int) -> Digraph:
    """A strongly connected tournament on k vertices (k = 1 or k >= 3).

    Rotational layout: i beats the next (k-1)//2 vertices mod k; for even
    k the diameter pairs are oriented low -> high.  The difference-1 arcs
    form a hamiltonian cycle, so the result is strong.
    """
    if k == 2:
        raise ValueError("no strong tournament on 2 vertices exists")
    if k < 1:
        raise ValueError("k must be >= 1")
    arcs = []
    half = (k - 1) // 2
    for i in range(k):
        for step in range(1, half + 1):
            arcs.append((i, (i + step) % k))
    if k % 2 == 0 and k >= 4:
        for i in range(k // 2):
            arcs.append((i, i + k // 2))
    return Digraph(k, tuple(arcs))


def complete_digraph_witness(sizes) -> Digraph:
    """An explicit complete digraph whose strong components, in
    topological order, are strong tournaments of the given sizes.

    Size-2 components are rejected: a 2-vertex tournament is never strong.
    """
    sizes = tuple(int(k) for k in sizes)
    if any(k == 2 for k in sizes):
        raise ValueError("size-2 strong components are impossible in a tournament")
    n = sum(sizes)
    arcs = []
    offset = 0
    offsets = []
    for k in sizes:
        comp = strong_tournament(k)
        arcs.extend((t + offset, h + offset) for t, h in comp.arcs)
        offsets.append(offset)
        offset += k
    for i, ki in enumerate(sizes):
        for j in range(i + 1, len(sizes)):
            kj = sizes[j]
            for u in range(offsets[i], offsets[i] + ki):
                for v in range(offsets[j], offsets[j] + kj):
                    arcs.append((u, v))
    return Digraph(n, tuple(arcs))
