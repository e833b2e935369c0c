"""Checkers for the equations, the identities their solutions must satisfy,
and membership of solutions in the closed-form families.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Carrier, EquationInstance, TableFun2, quadratic_extension
from .errors import BudgetExceeded, CarrierMismatch, NotASolution, SigmaTauMismatch
from .families import cosine_of, dalembert_witnesses, family
from .morphisms import BiadditiveForm
from .solver import DEFAULT_BUDGET, rhs_table, solve


def _check_shape(inst, f):
    if len(f) != inst.cells:
        raise CarrierMismatch(
            f"function has {len(f)} cells, instance needs {inst.cells}"
        )
    bad = [v for v in f if not 0 <= v < inst.carrier.order]
    if bad:
        raise CarrierMismatch(f"value {bad[0]} is not an element of {inst.carrier.name}")


def check_equation(inst: EquationInstance, f) -> list[tuple[int, int, int, int]]:
    """Every ``(x, y, z, w)`` at which f violates the instance's equation."""
    _check_shape(inst, f)
    S = inst.S
    n = S.size
    op, s, t = S.op, inst.sigma.map, inst.tau.map
    A = inst.carrier.add_table
    R = rhs_table(inst)
    bad = []
    for x in range(n):
        for y in range(n):
            xy, xsy = op[x][y], op[x][s[y]]
            for z in range(n):
                fxz = f[x * n + z]
                for w in range(n):
                    lhs = A[f[xy * n + op[z][w]]][f[xsy * n + op[z][t[w]]]]
                    if lhs != R[fxz][f[y * n + w]]:
                        bad.append((x, y, z, w))
    return bad


def check_solution_symmetry(inst: EquationInstance, f) -> bool:
    """``f(s(y), t(w)) == f(y, w)`` everywhere."""
    rho = inst.rho.map
    return all(f[rho[u]] == f[u] for u in range(inst.cells))


# ---------------------------------------------------------------------------
# d'Alembert: the auxiliary odd part F


@dataclass(frozen=True)
class ProofWitnessF:
    base_point: tuple[int, int]
    table: TableFun2

    @property
    def is_zero(self):
        return not any(self.table)


def proof_witness_F(inst: EquationInstance, f, base_point) -> ProofWitnessF:
    """``F(x, z) = f(x + y0, z + w0) - f(x + s(y0), z + t(w0))`` for base point (y0, w0)."""
    P = inst.S.square
    v0 = inst.S.pair(*base_point)
    rv0 = inst.rho.map[v0]
    K = inst.carrier
    table = TableFun2(K.sub(f[P.op[u][v0]], f[P.op[u][rv0]]) for u in P.elements)
    return ProofWitnessF(tuple(base_point), table)


def check_F_antisymmetry(inst: EquationInstance, f, base_point) -> bool:
    F = proof_witness_F(inst, f, base_point).table
    rho, neg = inst.rho.map, inst.carrier.neg_table
    return all(F[rho[u]] == neg[F[u]] for u in range(inst.cells))


def check_sine_addition(inst: EquationInstance, f, base_point, require_group=True):
    """``F(u + v) == F(u) f(v) + F(v) f(u)`` for all pairs u, v.

    Returns None (not applicable) on semigroups that are not groups unless
    ``require_group=False``.
    """
    if require_group and not inst.S.is_group:
        return None
    F = proof_witness_F(inst, f, base_point).table
    K = inst.carrier
    A, M = K.add_table, K.mul_table
    op = inst.S.square.op
    N = inst.cells
    return all(
        F[op[u][v]] == A[M[F[u]][f[v]]][M[F[v]][f[u]]]
        for u in range(N)
        for v in range(N)
    )


@dataclass(frozen=True)
class DalembertWitness:
    """A multiplicative ``chi`` with ``f = (chi + chi o rho) / 2``.

    ``field`` is the carrier chi takes values in; ``extended`` is True when
    chi leaves the base field.  ``method`` records how it was found:
    "search" (base field enumeration), "alpha" (square-root construction) or
    "extension" (enumeration over the quadratic extension).
    """

    chi: TableFun2
    field: Carrier
    extended: bool
    method: str


def _is_multiplicative(chi, P, E: Carrier):
    M, op = E.mul_table, P.op
    return all(chi[op[u][v]] == M[chi[u]][chi[v]] for u in P.elements for v in P.elements)


def alpha_witness(inst: EquationInstance, f, E: Carrier | None = None):
    """Build ``chi = f + alpha F`` with ``alpha^2 = F(u0)^-2 (f(2 u0) - f(u0)^2)``.

    Uses the first base point and first ``u0`` at which F is nonzero.  Returns
    None if F vanishes at every base point or the construction does not verify.
    """
    K = inst.carrier
    E = E or quadratic_extension(K)
    P = inst.S.square
    op = P.op
    for v0 in P.elements:
        F = proof_witness_F(inst, f, inst.S.unpair(v0)).table
        u0 = next((u for u in P.elements if F[u] != 0), None)
        if u0 is None:
            continue
        inv_F0 = K.inv(F[u0])
        residue = K.sub(f[op[u0][u0]], K.mul(f[u0], f[u0]))
        alpha = E.sqrt(K.mul(K.mul(inv_F0, inv_F0), residue))
        chi = TableFun2(E.add(f[u], E.mul(alpha, F[u])) for u in P.elements)
        if _is_multiplicative(chi, P, E) and cosine_of(chi, inst.rho.map, E) == tuple(f):
            return chi
        return None
    return None


def membership_dalembert(inst: EquationInstance, f, extension: bool = True):
    """Find a multiplicative witness for f, or return None (not a member).

    The base field is tried first.  Only then does the search move to
    ``F_{q^2}``: the square-root construction when the odd part F is nonzero
    somewhere, otherwise (or if that fails) full enumeration there.
    """
    K = inst.carrier
    f = TableFun2(f)
    base = dalembert_witnesses(inst, False)
    if f in base:
        return DalembertWitness(TableFun2(base[f]), K, False, "search")
    if not extension:
        return None
    E = quadratic_extension(K)
    chi = alpha_witness(inst, f, E)
    if chi is not None:
        return DalembertWitness(chi, E, any(v >= K.order for v in chi), "alpha")
    ext = dalembert_witnesses(inst, True)
    if f in ext:
        chi = TableFun2(ext[f])
        return DalembertWitness(chi, E, any(v >= K.order for v in chi), "extension")
    return None


# ---------------------------------------------------------------------------
# quadratic: reconstruct B and T


@dataclass(frozen=True)
class QuadraticDecomposition:
    B: BiadditiveForm
    T: TableFun2
    residual: int
    biadditive: bool
    symmetric: bool
    sign_condition: bool
    T_additive: bool
    T_symmetric: bool

    @property
    def ok(self):
        return (
            self.residual == 0
            and self.biadditive
            and self.symmetric
            and self.sign_condition
            and self.T_additive
            and self.T_symmetric
        )


def quadratic_decompose(inst: EquationInstance, f) -> QuadraticDecomposition:
    """Recover ``f(u) = B(u, u) + T(u)`` from a quadratic-type solution.

    ``B(u, r) = (f(u + r) - f(u + rho(r))) / 4`` and ``T(u) = f(u + rho(u)) / 2``.
    """
    bad = check_equation(inst, f)
    if bad:
        raise NotASolution(bad)
    H = inst.carrier
    A, neg, half = H.add_table, H.neg_table, H.half_table
    P = inst.S.square
    op, rho = P.op, inst.rho.map
    N = P.size

    B = [
        half[half[A[f[op[u][r]]][neg[f[op[u][rho[r]]]]]]]
        for u in range(N)
        for r in range(N)
    ]
    T = TableFun2(half[f[op[u][rho[u]]]] for u in range(N))

    biadditive = all(
        B[op[u][v] * N + r] == A[B[u * N + r]][B[v * N + r]]
        and B[r * N + op[u][v]] == A[B[r * N + u]][B[r * N + v]]
        for u in range(N)
        for v in range(N)
        for r in range(N)
    )
    symmetric = all(B[u * N + r] == B[r * N + u] for u in range(N) for r in range(N))
    sign = all(B[rho[u] * N + r] == neg[B[u * N + r]] for u in range(N) for r in range(N))
    T_additive = all(T[op[u][v]] == A[T[u]][T[v]] for u in range(N) for v in range(N))
    T_symmetric = all(T[rho[u]] == T[u] for u in range(N))
    residual = sum(1 for u in range(N) if A[B[u * N + u]][T[u]] != f[u])
    form = BiadditiveForm(tuple(B), N, symmetric, sign)
    return QuadraticDecomposition(form, T, residual, biadditive, symmetric, sign, T_additive, T_symmetric)


# ---------------------------------------------------------------------------
# Jensen


def check_jensen_invariance(inst: EquationInstance, f) -> bool:
    """``f(x + y + s(y), z + w + t(w)) == f(x, z)`` everywhere."""
    op, rho = inst.S.square.op, inst.rho.map
    N = inst.cells
    return all(f[op[u][op[v][rho[v]]]] == f[u] for u in range(N) for v in range(N))


@dataclass(frozen=True)
class JensenDecomposition:
    a: TableFun2
    c: int
    constant: bool  # f(u + rho(u)) takes a single value
    additive: bool
    antisymmetric: bool

    @property
    def ok(self):
        return self.constant and self.additive and self.antisymmetric


def jensen_decompose(inst: EquationInstance, f) -> JensenDecomposition:
    """Split ``f = a + c`` with ``c = f(u + rho(u))`` and check a's properties."""
    G = inst.carrier
    op, rho = inst.S.square.op, inst.rho.map
    N = inst.cells
    shifted = {f[op[u][rho[u]]] for u in range(N)}
    c = f[op[0][rho[0]]]
    a = TableFun2(G.sub(v, c) for v in f)
    additive = all(a[op[u][v]] == G.add(a[u], a[v]) for u in range(N) for v in range(N))
    antisym = all(a[rho[u]] == G.neg(a[u]) for u in range(N))
    return JensenDecomposition(a, c, len(shifted) == 1, additive, antisym)


# ---------------------------------------------------------------------------
# one-variable reduction


@dataclass(frozen=True)
class DiagonalReduction:
    g: tuple[int, ...]
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def diagonal_reduce(inst: EquationInstance, f) -> DiagonalReduction:
    """Restrict to ``g(x) = f(x, x)`` and check the matching one-variable equation."""
    if inst.sigma != inst.tau:
        raise SigmaTauMismatch("diagonal reduction needs sigma == tau")
    g = TableFun2(f).diagonal()
    S = inst.S
    op, s = S.op, inst.sigma.map
    A = inst.carrier.add_table
    R = rhs_table(inst)
    bad = [
        (x, y)
        for x in S.elements
        for y in S.elements
        if A[g[op[x][y]]][g[op[x][s[y]]]] != R[g[x]][g[y]]
    ]
    return DiagonalReduction(g, bad)


# ---------------------------------------------------------------------------
# per-solution and per-instance reports


def identity_checks(inst: EquationInstance, f, extension: bool = True) -> dict:
    """Every applicable check on one function: name -> True / False / None (n/a).

    The first failing equation quadruple, if any, is stored under "violation".
    """
    out = {}
    bad = check_equation(inst, f)
    out["equation"] = not bad
    if bad:
        out["violation"] = bad[0]
    S = inst.S
    points = [S.unpair(v) for v in range(inst.cells)]
    if inst.kind in ("dalembert", "quadratic"):
        out["symmetry"] = check_solution_symmetry(inst, f)
    if inst.kind == "dalembert":
        out["F_antisymmetry"] = all(check_F_antisymmetry(inst, f, p) for p in points)
        if S.is_group:
            out["sine_addition"] = all(check_sine_addition(inst, f, p) for p in points)
        else:
            out["sine_addition"] = None
        out["membership"] = membership_dalembert(inst, f, extension) is not None
    elif inst.kind == "jensen":
        out["invariance"] = check_jensen_invariance(inst, f)
        out["decomposition"] = jensen_decompose(inst, f).ok
    elif not bad:
        out["decomposition"] = quadratic_decompose(inst, f).ok
    else:
        out["decomposition"] = False
    if inst.sigma == inst.tau:
        out["diagonal"] = diagonal_reduce(inst, f).ok
    return out


def set_relation(family_set, brute_set):
    if family_set == brute_set:
        return "equal"
    if family_set < brute_set:
        return "proper-subset"
    if family_set > brute_set:
        return "proper-superset"
    return "incomparable"


@dataclass
class InstanceReport:
    inst: EquationInstance
    skipped: bool = False
    brute_force: int = 0
    family: int = 0
    common: int = 0
    relation: str = ""
    nodes: int = 0
    extension_used: int | None = None
    tallies: dict = field(default_factory=dict)  # name -> [passed, failed, n/a]

    @property
    def failures(self):
        return sum(t[1] for t in self.tallies.values())


def instance_report(
    inst: EquationInstance,
    budget: int = DEFAULT_BUDGET,
    seeded: bool = False,
    extension: bool = True,
    workers: int = 1,
) -> InstanceReport:
    """Solve, construct the family, compare, and tally every identity check.

    For d'Alembert instances with ``extension`` the family is the one built
    from witnesses over ``F_{q^2}`` and ``extension_used`` counts solutions
    with no base-field witness.
    """
    report = InstanceReport(inst)
    try:
        result = solve(inst, budget, seeded=seeded, workers=workers)
    except BudgetExceeded:
        report.skipped = True
        return report
    brute = set(result.solutions)
    fam = set(family(inst, extension))
    report.brute_force = len(brute)
    report.family = len(fam)
    report.common = len(brute & fam)
    report.relation = set_relation(fam, brute)
    report.nodes = result.nodes

    for f in result.solutions:
        for name, value in identity_checks(inst, f, extension).items():
            if name == "violation":
                continue
            tally = report.tallies.setdefault(name, [0, 0, 0])
            tally[0 if value else (2 if value is None else 1)] += 1
    if inst.kind == "dalembert" and extension:
        report.extension_used = sum(
            1
            for f in result.solutions
            if (w := membership_dalembert(inst, f, True)) is not None and w.extended
        )
    return report
