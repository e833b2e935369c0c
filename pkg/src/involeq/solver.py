"""Exhaustive backtracking search for all solutions of an equation instance.

The unknown is the value table of ``f`` on ``S x S``.  Cells are assigned in
pair-index order; the constraint for a pair ``(u, v)`` of cells reads

    f(u + v) + f(u + rho(v)) == RHS(f(u), f(v))

and is tested the moment its last referenced cell receives a value.

Seeding first merges cells that every solution must agree on, so the search
runs over equivalence classes instead of raw cells.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import EquationInstance, TableFun2
from .errors import BudgetExceeded

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class SearchResult:
    solutions: list[TableFun2]
    nodes: int
    variables: int


def rhs_table(inst: EquationInstance):
    """``R[c][d]`` = right side given ``f(u) = c`` and ``f(v) = d``."""
    K = inst.carrier
    A, rng = K.add_table, K.elements
    dbl = [A[c][c] for c in rng]
    if inst.kind == "dalembert":
        M = K.mul_table
        return [[dbl[M[c][d]] for d in rng] for c in rng]
    if inst.kind == "jensen":
        return [[dbl[c] for _ in rng] for c in rng]
    return [[dbl[A[c][d]] for d in rng] for c in rng]


def constraint_cells(inst: EquationInstance):
    """Quadruples ``(u+v, u+rho(v), u, v)`` of cell indices, one per ``(u, v)``."""
    P = inst.S.square
    op, rho = P.op, inst.rho.map
    return [(op[u][v], op[u][rho[v]], u, v) for u in P.elements for v in P.elements]


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def seed_classes(inst: EquationInstance) -> list[int]:
    """Variable index of every cell after merging cells forced equal.

    d'Alembert and quadratic solutions satisfy ``f(rho(u)) = f(u)``; Jensen
    solutions satisfy ``f(u + v + rho(v)) = f(u)``.
    """
    P = inst.S.square
    rho = inst.rho.map
    uf = _UnionFind(P.size)
    if inst.kind in ("dalembert", "quadratic"):
        for u in P.elements:
            uf.union(u, rho[u])
    else:
        op = P.op
        for v in P.elements:
            shift = op[v][rho[v]]
            for u in P.elements:
                uf.union(u, op[u][shift])
    return _number_classes([uf.find(u) for u in P.elements])


def _number_classes(roots):
    numbering = {}
    for r in roots:
        numbering.setdefault(r, len(numbering))
    return [numbering[r] for r in roots]


def _plan(inst, var_of):
    """Deduplicated constraints in variable space, bucketed by trigger variable."""
    jensen = inst.kind == "jensen"
    seen = set()
    for a, b, c, d in constraint_cells(inst):
        va, vb, vc, vd = var_of[a], var_of[b], var_of[c], var_of[d]
        if va > vb:
            va, vb = vb, va
        if jensen:
            # the Jensen right side ignores f(v)
            vd = vc
        elif vc > vd:
            vc, vd = vd, vc
        seen.add((va, vb, vc, vd))
    nvars = max(var_of) + 1
    triggers = [[] for _ in range(nvars)]
    for q in sorted(seen):
        triggers[max(q)].append(q)
    return nvars, triggers


def _search(inst, var_of, budget, first=None):
    nvars, triggers = _plan(inst, var_of)
    A = inst.carrier.add_table
    R = rhs_table(inst)
    m = inst.carrier.order
    vals = [0] * nvars
    found = []
    nodes = 0

    def dfs(k):
        nonlocal nodes
        if k == nvars:
            found.append(tuple(vals))
            return
        trig = triggers[k]
        choices = range(m) if (k > 0 or first is None) else (first,)
        for c in choices:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(budget, len(found))
            vals[k] = c
            for a, b, cc, d in trig:
                if A[vals[a]][vals[b]] != R[vals[cc]][vals[d]]:
                    break
            else:
                dfs(k + 1)

    dfs(0)
    tables = [TableFun2(v[i] for i in var_of) for v in found]
    return tables, nodes


def _search_job(args):
    return _search(*args)


def solve(
    inst: EquationInstance,
    budget: int = DEFAULT_BUDGET,
    seeded: bool = False,
    workers: int = 1,
) -> SearchResult:
    """Run the search and return every solution together with the node count.

    With ``workers > 1`` the subtrees under each value of the first variable
    are searched in separate processes and merged in canonical order; each
    worker is held to the full budget and the aggregate is checked afterwards,
    so the outcome matches a serial run.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    var_of = seed_classes(inst) if seeded else list(range(inst.cells))
    nvars = max(var_of) + 1
    if workers <= 1:
        tables, nodes = _search(inst, var_of, budget)
    else:
        jobs = [(inst, var_of, budget, c) for c in inst.carrier.elements]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_job, jobs))
        tables = [t for part, _ in parts for t in part]
        nodes = sum(n for _, n in parts)
        if nodes > budget:
            raise BudgetExceeded(budget, len(tables))
    tables.sort()
    log.debug("%s: %d solutions, %d nodes, %d variables", inst.describe(), len(tables), nodes, nvars)
    return SearchResult(tables, nodes, nvars)


def brute_force(inst: EquationInstance, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[TableFun2]:
    return solve(inst, budget, seeded=False, workers=workers).solutions


def seeded_brute_force(inst: EquationInstance, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[TableFun2]:
    return solve(inst, budget, seeded=True, workers=workers).solutions
