"""Solution families built from the closed-form characterizations.

Each constructor returns the deduplicated, lexicographically sorted list of
value tables generated by its witnesses.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import Carrier, EquationInstance, FiniteSemigroup, Involution, TableFun2, quadratic_extension
from .morphisms import (
    additive_maps,
    biadditive_maps,
    enumerate_additive,
    enumerate_biadditive,
    enumerate_multiplicative,
    has_sign_condition,
    is_antisymmetric,
    is_symmetric,
    is_symmetric_form,
    multiplicative_maps,
)


def _require(inst, kind):
    if inst.kind != kind:
        raise ValueError(f"expected a {kind} instance, got {inst.kind}")


def cosine_of(chi, rho, K: Carrier):
    """``u -> (chi(u) + chi(rho(u))) / 2``."""
    A, half = K.add_table, K.half_table
    return tuple(half[A[chi[u]][chi[rho[u]]]] for u in range(len(rho)))


@lru_cache(maxsize=64)
def dalembert_witnesses(inst: EquationInstance, extension: bool = False):
    """Map each family member to the first multiplicative witness producing it.

    With ``extension=True`` the witnesses range over ``F_{q^2}`` and only
    members whose values all lie in the base field ``F_q`` are kept.
    """
    _require(inst, "dalembert")
    K = inst.carrier
    field = quadratic_extension(K) if extension else K
    rho = inst.rho.map
    found = {}
    for chi in enumerate_multiplicative(inst.S, field):
        f = cosine_of(chi, rho, field)
        if all(v < K.order for v in f) and f not in found:
            found[TableFun2(f)] = chi
    return found


def dalembert_family(inst: EquationInstance, extension: bool = False) -> list[TableFun2]:
    return sorted(dalembert_witnesses(inst, extension))


def jensen_family(inst: EquationInstance) -> list[TableFun2]:
    _require(inst, "jensen")
    G = inst.carrier
    A = G.add_table
    out = set()
    for a in enumerate_additive(inst.S, G, "antisym", inst.sigma, inst.tau):
        for c in G.elements:
            out.add(TableFun2(A[v][c] for v in a))
    return sorted(out)


def quadratic_witnesses(inst: EquationInstance):
    """Pairs ``(B, T)`` allowed by the characterization, in enumeration order."""
    _require(inst, "quadratic")
    H = inst.carrier
    forms = enumerate_biadditive(inst.S, H, True, (inst.sigma, inst.tau))
    shifts = enumerate_additive(inst.S, H, "sym", inst.sigma, inst.tau)
    return [(B, T) for B in forms for T in shifts]


def quadratic_family(inst: EquationInstance) -> list[TableFun2]:
    A = inst.carrier.add_table
    out = set()
    for B, T in quadratic_witnesses(inst):
        out.add(TableFun2(A[b][t] for b, t in zip(B.quadratic(), T)))
    return sorted(out)


def family(inst: EquationInstance, extension: bool = False) -> list[TableFun2]:
    if inst.kind == "dalembert":
        return dalembert_family(inst, extension)
    if inst.kind == "jensen":
        return jensen_family(inst)
    return quadratic_family(inst)


# ---------------------------------------------------------------------------
# single-variable families (diagonal restrictions with tau = sigma)


def corollary_family(
    S: FiniteSemigroup, sigma: Involution, carrier: Carrier, kind: str
) -> list[tuple[int, ...]]:
    """Closed-form solutions ``g : S -> carrier`` of the one-variable equations.

    dalembert: ``(m(x) + m(s(x))) / 2`` with m multiplicative;
    jensen: ``psi(x) + a`` with psi additive and ``psi o s = -psi``;
    quadratic: ``b(x, x) + psi(x)`` with b symmetric biadditive,
    ``b(s(x), y) = -b(x, y)``, and psi additive with ``psi o s = psi``.
    """
    s = sigma.map
    A = carrier.add_table
    out = set()
    if kind == "dalembert":
        for m in multiplicative_maps(S, carrier):
            out.add(cosine_of(m, s, carrier))
    elif kind == "jensen":
        for psi in additive_maps(S, carrier):
            if is_antisymmetric(psi, s, carrier):
                for c in carrier.elements:
                    out.add(tuple(A[v][c] for v in psi))
    elif kind == "quadratic":
        n = S.size
        forms = [
            b
            for b in biadditive_maps(S, carrier)
            if is_symmetric_form(b, n) and has_sign_condition(b, s, carrier)
        ]
        shifts = [psi for psi in additive_maps(S, carrier) if is_symmetric(psi, s)]
        for b in forms:
            for psi in shifts:
                out.add(tuple(A[b[x * n + x]][psi[x]] for x in range(n)))
    else:
        raise ValueError(f"unknown equation kind {kind!r}")
    return sorted(out)
