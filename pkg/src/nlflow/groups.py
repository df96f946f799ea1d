"""Finite abelian groups as products of cyclic factors; elements are
residue tuples with componentwise addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(f) for f in self.factors))
        if any(f < 2 for f in self.factors):
            raise ValueError("cyclic factor orders must be >= 2")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def zero(self):
        return (0,) * len(self.factors)

    def elements(self):
        return product(*(range(f) for f in self.factors))

    def add(self, a, b):
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def spec(self) -> str:
        if not self.factors:
            return "z1"
        return "x".join(f"z{f}" for f in self.factors)


def cyclic(k: int) -> AbelianGroup:
    return AbelianGroup(() if k == 1 else (k,))


def parse_group_spec(spec: str) -> AbelianGroup:
    """Grammar: `z4`, `z2xz2`, `z3xz9`; `z1` is the trivial group."""
    parts = spec.strip().lower().split("x")
    factors = []
    for p in parts:
        if not p.startswith("z"):
            raise ValueError(f"bad group spec {spec!r}: expected terms like z4")
        try:
            f = int(p[1:])
        except ValueError as exc:
            raise ValueError(f"bad group spec {spec!r}") from exc
        if f < 1:
            raise ValueError(f"bad group spec {spec!r}: orders must be >= 1")
        if f > 1:
            factors.append(f)
    return AbelianGroup(tuple(factors))


def _factorize(k: int) -> dict[int, int]:
    out = {}
    p = 2
    while p * p <= k:
        while k % p == 0:
            out[p] = out.get(p, 0) + 1
            k //= p
        p += 1
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def _partitions(e: int):
    """Integer partitions of e as non-increasing tuples."""
    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return gen(e, e)


def abelian_groups_of_order(k: int) -> list[AbelianGroup]:
    """One representative per isomorphism class, via the primary
    decomposition: one exponent partition per prime power in k.
    """
    if k < 1:
        raise ValueError("group order must be >= 1")
    if k == 1:
        return [AbelianGroup()]
    primes = sorted(_factorize(k).items())
    choices = [[tuple(p**a for a in part) for part in _partitions(e)] for p, e in primes]
    groups = []
    from itertools import product as iproduct

    for combo in iproduct(*choices):
        factors = tuple(f for block in combo for f in block)
        groups.append(AbelianGroup(factors))
    return groups
