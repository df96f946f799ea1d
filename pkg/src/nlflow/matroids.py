"""NL-flow theory over regular oriented matroids given by totally
unimodular matrices: total cyclicity via exact Farkas certificates,
kernel counting, contraction, and the group/integer flow oracles.

The oriented matroid is represented linear-algebraically: flows are the
rational kernel of the matrix, coflows its row space.  All feasibility
decisions are exact; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .digraphs import Digraph, incidence_matrix
from .errors import BudgetExceededError
from .groups import AbelianGroup
from .linalg import farkas_nonneg_solve, kernel_basis, matrix_rank
from .oracles import DEFAULT_BUDGET, _CHUNK

DEFAULT_TU_CHECK_BOUND = 8


@dataclass(frozen=True)
class TUMatrix:
    """Integer matrix with entries in {0, +-1}; rows are stored as tuples
    so instances are hashable and safely cacheable.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        for row in rows:
            for x in row:
                if x not in (-1, 0, 1):
                    raise ValueError(f"entry {x} outside {{0, +-1}}")

    @property
    def p(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def from_digraph(cls, d: Digraph) -> "TUMatrix":
        return cls(tuple(tuple(row) for row in incidence_matrix(d)))


def read_matrix(text: str) -> TUMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        p, q = (int(x) for x in lines[0].split())
    except Exception as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    if len(lines) - 1 != p:
        raise ValueError(f"expected {p} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        entries = [int(x) for x in ln.split()]
        if len(entries) != q:
            raise ValueError(f"row {ln!r} does not have {q} entries")
        rows.append(tuple(entries))
    return TUMatrix(tuple(rows))


def write_matrix(m: TUMatrix) -> str:
    lines = [f"{m.p} {m.q}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"


def _int_det(rows) -> int:
    """Fraction-free Bareiss determinant of a small integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            swap = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
            if swap is None:
                return 0
            a[c], a[swap] = a[swap], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def is_totally_unimodular(m: TUMatrix, max_dim: int = DEFAULT_TU_CHECK_BOUND) -> bool:
    """Brute-force certificate: every square submatrix determinant is in
    {0, +-1}.  Refuses matrices with min(p, q) beyond max_dim.
    """
    if min(m.p, m.q) > max_dim:
        raise BudgetExceededError(
            f"TU certificate limited to min dimension {max_dim}, got {min(m.p, m.q)}"
        )
    for size in range(1, min(m.p, m.q) + 1):
        for rsel in combinations(range(m.p), size):
            for csel in combinations(range(m.q), size):
                sub = [[m.rows[i][j] for j in csel] for i in rsel]
                if _int_det(sub) not in (-1, 0, 1):
                    return False
    return True


@lru_cache(maxsize=100_000)
def _kernel_basis_cached(m: TUMatrix):
    return tuple(tuple(v) for v in kernel_basis([list(r) for r in m.rows], m.q))


def full_row_rank(m: TUMatrix) -> bool:
    return matrix_rank([list(r) for r in m.rows]) == m.p


def count_group_kernel(m: TUMatrix, g: AbelianGroup, budget: int = 10**6) -> int:
    """|{x in G^q : M x = 0 in G}| = |G|^(q-p) for full-row-rank TU M.

    The closed count is confirmed by exhaustive enumeration whenever
    |G|^q fits the budget.
    """
    if not full_row_rank(m):
        raise ValueError("matrix is not of full row rank; row-reduce it first")
    k = g.order
    value = k ** (m.q - m.p)
    if k**m.q <= budget:
        brute = sum(
            1
            for x in _group_tuples(g, m.q)
            if _is_group_kernel_element(m, g, x)
        )
        if brute != value:
            raise AssertionError(
                f"kernel count mismatch: closed form {value}, enumeration {brute}"
            )
    return value


def _group_tuples(g: AbelianGroup, q: int):
    from itertools import product

    return product(list(g.elements()), repeat=q)


def _is_group_kernel_element(m: TUMatrix, g: AbelianGroup, x) -> bool:
    for row in m.rows:
        acc = g.zero
        for coef, val in zip(row, x):
            if coef == 1:
                acc = g.add(acc, val)
            elif coef == -1:
                acc = g.add(acc, g.neg(val))
        if acc != g.zero:
            return False
    return True


# --- total cyclicity and the Farkas alternative ---------------------------


def positive_span_certificate(vectors, q: int):
    """Given spanning vectors of a subspace of Q^q, return either
    ("positive", x) with x in the span and x >= 1 componentwise, or
    ("obstruction", g) with g >= 0, g != 0, orthogonal to the span.

    Exactly one side exists (Farkas); validity of either excludes the
    other because g . x would have to be both 0 and >= sum(g) > 0.
    """
    if q == 0:
        return "positive", []
    r = len(vectors)
    # Feasibility of K lam >= 1 with lam free: columns [K, -K, -I].
    a = []
    for i in range(q):
        row = [Fraction(vectors[j][i]) for j in range(r)]
        row += [-x for x in row]
        row += [Fraction(-1) if i == t else Fraction(0) for t in range(q)]
        a.append(row)
    status, sol = farkas_nonneg_solve(a, [Fraction(1)] * q)
    if status == "feasible":
        lam = [sol[j] - sol[r + j] for j in range(r)]
        x = [
            sum(lam[j] * Fraction(vectors[j][i]) for j in range(r))
            for i in range(q)
        ]
        return "positive", x
    return "obstruction", sol


def farkas_certificate(m: TUMatrix):
    """Alternative for total cyclicity of the matroid of m: a strictly
    positive kernel vector, or a nonnegative nonzero row-space vector.
    """
    return positive_span_certificate(_kernel_basis_cached(m), m.q)


def is_totally_cyclic_matroid(m: TUMatrix) -> bool:
    return farkas_certificate(m)[0] == "positive"


@dataclass(frozen=True)
class ContractedFlowSpace:
    """Flow space of a matroid contraction: the kernel projected onto the
    surviving coordinates, kept as an exact rational spanning set.
    """

    columns: tuple[int, ...]
    vectors: tuple[tuple[Fraction, ...], ...]

    def is_totally_cyclic(self) -> bool:
        kind, _ = positive_span_certificate(list(self.vectors), len(self.columns))
        return kind == "positive"


def contract_matroid(m: TUMatrix, s) -> ContractedFlowSpace:
    s = frozenset(s)
    if not s <= set(range(m.q)):
        raise ValueError("contraction set outside column range")
    keep = tuple(c for c in range(m.q) if c not in s)
    vectors = tuple(
        tuple(v[c] for c in keep) for v in _kernel_basis_cached(m)
    )
    return ContractedFlowSpace(columns=keep, vectors=vectors)


@lru_cache(maxsize=500_000)
def _support_contraction_cyclic(m: TUMatrix, mask: int) -> bool:
    supp = frozenset(j for j in range(m.q) if mask >> j & 1)
    return contract_matroid(m, supp).is_totally_cyclic()


def _sum_cyclic_supports_matroid(m: TUMatrix, support_counts) -> int:
    total = 0
    for mask in np.nonzero(support_counts)[0]:
        if _support_contraction_cyclic(m, int(mask)):
            total += int(support_counts[mask])
    return total


def count_nl_group_flows_matroid(m: TUMatrix, g: AbelianGroup, budget: int = DEFAULT_BUDGET) -> int:
    """Kernel elements over G whose support contraction is totally cyclic."""
    k = g.order
    q = m.q
    if k**q > budget:
        raise BudgetExceededError(f"|G|^q = {k}^{q} exceeds budget {budget}")
    if q == 0:
        return 1 if is_totally_cyclic_matroid(m) else 0

    mat_t = np.array(m.rows, dtype=np.int64).reshape(m.p, q).T
    colpow = np.array([k ** (q - 1 - j) for j in range(q)], dtype=np.int64)
    strides = []
    s = 1
    for f in reversed(g.factors):
        strides.append((f, s))
        s *= f
    strides.reverse()
    bits = 1 << np.arange(q, dtype=np.int64)

    support_counts = np.zeros(1 << q, dtype=np.int64)
    total = k**q
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        assign = (idx[:, None] // colpow[None, :]) % k
        ok = np.ones(len(idx), dtype=bool)
        for f, stride in strides:
            digits = (assign // stride) % f
            ok &= ((digits @ mat_t) % f == 0).all(axis=1)
        supp = (assign[ok] != 0) @ bits
        support_counts += np.bincount(supp, minlength=1 << q)
    return _sum_cyclic_supports_matroid(m, support_counts)


def count_nl_integer_kflows_matroid(m: TUMatrix, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Integer kernel elements with entries in {0, +-1, ..., +-(k-1)} and
    totally cyclic support contraction; exact integer arithmetic.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    q = m.q
    base = 2 * k - 1
    if base**q > budget:
        raise BudgetExceededError(f"(2k-1)^q = {base}^{q} exceeds budget {budget}")
    if q == 0:
        return 1 if is_totally_cyclic_matroid(m) else 0

    mat_t = np.array(m.rows, dtype=np.int64).reshape(m.p, q).T
    colpow = np.array([base ** (q - 1 - j) for j in range(q)], dtype=np.int64)
    bits = 1 << np.arange(q, dtype=np.int64)

    support_counts = np.zeros(1 << q, dtype=np.int64)
    total = base**q
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        assign = (idx[:, None] // colpow[None, :]) % base - (k - 1)
        ok = ((assign @ mat_t) == 0).all(axis=1)
        supp = (assign[ok] != 0) @ bits
        support_counts += np.bincount(supp, minlength=1 << q)
    return _sum_cyclic_supports_matroid(m, support_counts)


def fit_integer_flow_polynomial_matroid(m: TUMatrix, k_range, budget: int = DEFAULT_BUDGET):
    """Interpolate integer NL-k-flow counts of the matroid, degree bound
    q - rank(M), with held-out witnesses.  Integer coefficients when they
    exist, exact rational ones otherwise.
    """
    from .errors import WitnessMismatchError
    from .polynomials import interpolate_rational

    k_range = list(k_range)
    bound = m.q - matrix_rank([list(r) for r in m.rows])
    if len(k_range) < bound + 2:
        raise ValueError(
            f"need at least {bound + 2} evaluation points, got {len(k_range)}"
        )
    points = [(k, count_nl_integer_kflows_matroid(m, k, budget)) for k in k_range]
    try:
        poly = interpolate_rational(points, bound)
    except WitnessMismatchError as exc:
        raise WitnessMismatchError(f"polynomiality violated: {exc}") from None
    return poly.to_int_polynomial() if poly.is_integral() else poly
