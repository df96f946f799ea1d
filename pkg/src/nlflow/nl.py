"""The central formulas: NL-flow polynomial from the dicut lattice and
NL-coflow polynomial from the dicycle lattice, both via Moebius inversion
from the full arc set.
"""

from __future__ import annotations

from .cuts import DEFAULT_LATTICE_CAP, build_cut_lattice, build_cycle_lattice
from .digraphs import Digraph, rank
from .polynomials import IntPolynomial


def nl_flow_polynomial(d: Digraph, cap: int = DEFAULT_LATTICE_CAP) -> IntPolynomial:
    """phi(x) = sum over lattice elements B of mu(A, B) * x^(|B| - rk(B)).

    Evaluating at k = |G| counts the NL-G-flows of d for every finite
    abelian group G of that order.
    """
    lattice = build_cut_lattice(d, cap)
    out = IntPolynomial.zero()
    for b in lattice.elements:
        mu = lattice.mobius_from_top(b)
        if mu:
            out = out + IntPolynomial.monomial(len(b) - rank(d, b), mu)
    return out


def nl_coflow_polynomial(d: Digraph, cap: int = DEFAULT_LATTICE_CAP) -> IntPolynomial:
    """psi(x) = sum over dicycle-lattice elements B of
    mu(A, B) * x^(rk(A) - rk(A \\ B)).

    The exponent is the dimension of the space of coflows supported
    inside B (coflows vanishing on the contracted cycles), which is what
    the inversion from above actually sums; it coincides with rk(B) on
    simple digraphs but not in the presence of parallel digons.

    For loopless d with c weak components, k^c * psi(k) counts the acyclic
    vertex k-colorings of d.
    """
    lattice = build_cycle_lattice(d, cap)
    rk_all = rank(d, d.all_arcs)
    out = IntPolynomial.zero()
    for b in lattice.elements:
        mu = lattice.mobius_from_top(b)
        if mu:
            out = out + IntPolynomial.monomial(rk_all - rank(d, lattice.top - b), mu)
    return out
