"""Exhaustive ground-truth counters: group flows, integer flows, acyclic
colorings, the equivalence theorem, and polynomiality fits.

These stay independent of the Moebius-inversion formulas they validate.
Group-flow counting enumerates every assignment in G^m; integer-flow
counting enumerates every flow via the cotree coordinates (each free-arc
assignment determines the rest by exact integer conservation), which is
the same set of candidates with the non-flows skipped.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .digraphs import (
    Digraph,
    contract,
    incidence_matrix,
    is_acyclic,
    is_totally_cyclic,
    rank,
)
from .errors import BudgetExceededError, WitnessMismatchError
from .groups import AbelianGroup, abelian_groups_of_order, cyclic
from .linalg import rref
from .polynomials import interpolate_rational

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 18


def is_group_flow(d: Digraph, g: AbelianGroup, f) -> bool:
    """Kirchhoff conservation at every vertex, in g.

    f maps arc index -> group element (residue tuple); loops contribute to
    both sides and never violate.
    """
    sums = [g.zero] * d.n
    for j, (t, h) in enumerate(d.arcs):
        val = tuple(f[j])
        sums[t] = g.add(sums[t], val)
        sums[h] = g.add(sums[h], g.neg(val))
    return all(s == g.zero for s in sums)


@lru_cache(maxsize=1_000_000)
def _support_cyclic(d: Digraph, mask: int) -> bool:
    """Is the contraction of this support (as an arc-index bitmask)
    totally cyclic?  Digraphs are immutable, so a global memo is safe and
    pays off across repeated counts on the same digraph.
    """
    supp = frozenset(j for j in range(d.m) if mask >> j & 1)
    return is_totally_cyclic(contract(d, supp))


def _sum_cyclic_supports(d: Digraph, support_counts) -> int:
    total = 0
    for mask in np.nonzero(support_counts)[0]:
        if _support_cyclic(d, int(mask)):
            total += int(support_counts[mask])
    return total


def count_nl_group_flows(d: Digraph, g: AbelianGroup, budget: int = DEFAULT_BUDGET) -> int:
    """Number of assignments A -> G that are flows with totally cyclic
    support contraction.  Enumerates all |G|^m assignments, chunked.
    """
    k = g.order
    m = d.m
    if k**m > budget:
        raise BudgetExceededError(f"|G|^m = {k}^{m} exceeds budget {budget}")
    if m == 0:
        return 1 if is_totally_cyclic(d) else 0

    inc_t = np.array(incidence_matrix(d), dtype=np.int64).T  # m x n
    arcpow = np.array([k ** (m - 1 - j) for j in range(m)], dtype=np.int64)
    strides = []
    s = 1
    for f in reversed(g.factors):
        strides.append((f, s))
        s *= f
    strides.reverse()
    bits = 1 << np.arange(m, dtype=np.int64)

    support_counts = np.zeros(1 << m, dtype=np.int64)
    total = k**m
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        assign = (idx[:, None] // arcpow[None, :]) % k
        ok = np.ones(len(idx), dtype=bool)
        for f, stride in strides:
            digits = (assign // stride) % f
            ok &= ((digits @ inc_t) % f == 0).all(axis=1)
        flows = assign[ok]
        supp = (flows != 0) @ bits
        support_counts += np.bincount(supp, minlength=1 << m)
    return _sum_cyclic_supports(d, support_counts)


@lru_cache(maxsize=100_000)
def _cotree_expression(d: Digraph):
    """Free (cotree) columns and the integer matrix expressing the basic
    (tree) arc values from them: x_basic = -expr @ x_free.

    Total unimodularity of the incidence matrix makes expr integral.
    """
    rows, pivots = rref(incidence_matrix(d))
    free = [c for c in range(d.m) if c not in pivots]
    expr = []
    for r in range(len(pivots)):
        row = []
        for c in free:
            v = rows[r][c]
            if v.denominator != 1:
                raise AssertionError("incidence rref produced a non-integer entry")
            row.append(int(v))
        expr.append(row)
    return pivots, free, expr


def count_nl_integer_kflows(d: Digraph, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of integer flows with entries in {0, +-1, ..., +-(k-1)}
    (exact conservation over the integers) whose support contraction is
    totally cyclic.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = d.m
    if m == 0:
        return 1 if is_totally_cyclic(d) else 0
    pivots, free, expr = _cotree_expression(d)
    base = 2 * k - 1
    if base ** len(free) > budget:
        raise BudgetExceededError(
            f"(2k-1)^nullity = {base}^{len(free)} exceeds budget {budget}"
        )

    expr_t = np.array(expr, dtype=np.int64).reshape(len(pivots), len(free)).T
    freepow = np.array(
        [base ** (len(free) - 1 - j) for j in range(len(free))], dtype=np.int64
    )
    bits_free = np.array([1 << c for c in free], dtype=np.int64)
    bits_piv = np.array([1 << c for c in pivots], dtype=np.int64)

    support_counts = np.zeros(1 << m, dtype=np.int64)
    total = base ** len(free)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        x_free = (idx[:, None] // freepow[None, :]) % base - (k - 1)
        x_basic = -(x_free @ expr_t)
        ok = (np.abs(x_basic) <= k - 1).all(axis=1)
        supp = (x_free[ok] != 0) @ bits_free + (x_basic[ok] != 0) @ bits_piv
        support_counts += np.bincount(supp, minlength=1 << m)
    return _sum_cyclic_supports(d, support_counts)


def count_nl_integer_kflows_naive(d: Digraph, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Reference counter enumerating the full (2k-1)^m box; used to
    cross-check the cotree enumeration in tests.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = d.m
    if m == 0:
        return 1 if is_totally_cyclic(d) else 0
    base = 2 * k - 1
    if base**m > budget:
        raise BudgetExceededError(f"(2k-1)^m = {base}^{m} exceeds budget {budget}")
    inc_t = np.array(incidence_matrix(d), dtype=np.int64).T
    arcpow = np.array([base ** (m - 1 - j) for j in range(m)], dtype=np.int64)
    bits = 1 << np.arange(m, dtype=np.int64)
    support_counts = np.zeros(1 << m, dtype=np.int64)
    total = base**m
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        assign = (idx[:, None] // arcpow[None, :]) % base - (k - 1)
        ok = ((assign @ inc_t) == 0).all(axis=1)
        supp = (assign[ok] != 0) @ bits
        support_counts += np.bincount(supp, minlength=1 << m)
    return _sum_cyclic_supports(d, support_counts)


def count_acyclic_colorings(d: Digraph, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of maps V -> {1..k} where every color class induces an
    acyclic subdigraph.  Requires a loopless digraph.
    """
    if any(t == h for t, h in d.arcs):
        raise ValueError("acyclic colorings are only defined for loopless digraphs")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k**d.n > budget:
        raise BudgetExceededError(f"k^n = {k}^{d.n} exceeds budget {budget}")
    from itertools import product

    count = 0
    for coloring in product(range(k), repeat=d.n):
        mono = tuple(a for a in d.arcs if coloring[a[0]] == coloring[a[1]])
        if is_acyclic(Digraph(d.n, mono)):
            count += 1
    return count


def exists_nl_group_flow(d: Digraph, g: AbelianGroup, budget: int = DEFAULT_BUDGET) -> bool:
    return count_nl_group_flows(d, g, budget) > 0


def exists_nl_integer_kflow(d: Digraph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    return count_nl_integer_kflows(d, k, budget) > 0


def check_equivalence_theorem(d: Digraph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Existence must agree across Z_k, every abelian group of order k,
    and integer flows with entries bounded by k-1.
    """
    flags = [exists_nl_group_flow(d, cyclic(k), budget)]
    flags.extend(
        exists_nl_group_flow(d, g, budget) for g in abelian_groups_of_order(k)
    )
    flags.append(exists_nl_integer_kflow(d, k, budget))
    return len(set(flags)) == 1


def fit_integer_flow_polynomial(d: Digraph, k_range, budget: int = DEFAULT_BUDGET):
    """Interpolate the integer NL-k-flow counts over k_range to a
    polynomial of degree <= m - rk(A); at least one extra point must be
    supplied and must match the interpolant exactly.

    Returns an IntPolynomial when the coefficients come out integral,
    otherwise the exact RationalPolynomial (the counts are Ehrhart-like:
    always integer-valued, not always integer-coefficient).
    """
    k_range = list(k_range)
    bound = d.m - rank(d, d.all_arcs)
    if len(k_range) < bound + 2:
        raise ValueError(
            f"need at least {bound + 2} evaluation points (degree bound {bound} "
            f"plus a held-out witness), got {len(k_range)}"
        )
    points = [(k, count_nl_integer_kflows(d, k, budget)) for k in k_range]
    try:
        poly = interpolate_rational(points, bound)
    except WitnessMismatchError as exc:
        raise WitnessMismatchError(f"polynomiality violated: {exc}") from None
    return poly.to_int_polynomial() if poly.is_integral() else poly
