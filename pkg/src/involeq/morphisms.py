"""Enumeration of multiplicative, additive and biadditive functions.

Every enumerator reduces to one engine: list all homomorphisms from a finite
commutative semigroup ``P`` into a finite magma given by its table.  The
two-variable objects live on ``P = S x S`` (``S.square``); the single-variable
corollary objects use ``P = S`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Carrier, FiniteSemigroup, Involution, TableFun2, square_pair_involution


def homomorphisms(P: FiniteSemigroup, table) -> list[tuple[int, ...]]:
    """All ``h`` with ``h(u + v) = table[h(u)][h(v)]``, lexicographically ordered.

    Cells are branched in index order.  Every assignment is closed under the
    operation: once ``h(u)`` and ``h(v)`` are known, ``h(u + v)`` is forced,
    so only a generating set is ever branched on.
    """
    n = P.size
    m = len(table)
    op = P.op
    val = [-1] * n
    stack = []
    out = []

    def propagate(i, c):
        pending = [(i, c)]
        while pending:
            i, c = pending.pop()
            cur = val[i]
            if cur != -1:
                if cur != c:
                    return False
                continue
            val[i] = c
            stack.append(i)
            row_i = op[i]
            trow = table[c]
            for j in stack:
                s = row_i[j]
                want = trow[val[j]]
                have = val[s]
                if have == -1:
                    pending.append((s, want))
                elif have != want:
                    return False
        return True

    def undo(mark):
        while len(stack) > mark:
            val[stack.pop()] = -1

    def search(start):
        i = start
        while i < n and val[i] != -1:
            i += 1
        if i == n:
            out.append(tuple(val))
            return
        for c in range(m):
            mark = len(stack)
            if propagate(i, c):
                search(i + 1)
            undo(mark)

    search(0)
    out.sort()
    return out


def pointwise_group(funcs, G: Carrier):
    """Addition table of a list of functions closed under pointwise addition."""
    index = {f: k for k, f in enumerate(funcs)}
    A = G.add_table
    return [
        [index[tuple(A[a][b] for a, b in zip(f, g))] for g in funcs]
        for f in funcs
    ]


def multiplicative_maps(P: FiniteSemigroup, K: Carrier):
    return homomorphisms(P, K.mul_table)


def additive_maps(P: FiniteSemigroup, G: Carrier):
    return homomorphisms(P, G.add_table)


def biadditive_maps(P: FiniteSemigroup, H: Carrier):
    """All ``B : P x P -> H`` additive in each slot, as flat tables ``B[u*|P| + v]``.

    A biadditive B is the same thing as an additive map ``u -> B(u, .)`` from P
    into the group of additive maps ``P -> H``.
    """
    rows = additive_maps(P, H)
    outer = homomorphisms(P, pointwise_group(rows, H))
    forms = [tuple(v for r in choice for v in rows[r]) for choice in outer]
    forms.sort()
    return forms


def is_symmetric_form(B, n):
    return all(B[u * n + v] == B[v * n + u] for u in range(n) for v in range(u + 1, n))


def has_sign_condition(B, rho, G):
    n = len(rho)
    neg = G.neg_table
    return all(B[rho[u] * n + v] == neg[B[u * n + v]] for u in range(n) for v in range(n))


def is_antisymmetric(a, rho, G):
    return all(a[rho[u]] == G.neg_table[a[u]] for u in range(len(rho)))


def is_symmetric(a, rho):
    return all(a[rho[u]] == a[u] for u in range(len(rho)))


# ---------------------------------------------------------------------------
# two-variable API


@dataclass(frozen=True)
class BiadditiveForm:
    """``B : (S x S) x (S x S) -> carrier`` stored as ``values[u * |S|^2 + v]``."""

    values: tuple[int, ...]
    pairs: int  # |S|^2
    symmetric: bool = False
    sign_condition: bool = False

    def __call__(self, u, v):
        return self.values[u * self.pairs + v]

    def quadratic(self):
        """The diagonal ``u -> B(u, u)``."""
        n = self.pairs
        return tuple(self.values[u * n + u] for u in range(n))


def enumerate_multiplicative(S: FiniteSemigroup, K: Carrier) -> list[TableFun2]:
    if not K.is_field:
        raise ValueError(f"multiplicative functions need a field, got {K.name}")
    return [TableFun2(chi) for chi in multiplicative_maps(S.square, K)]


def enumerate_additive(
    S: FiniteSemigroup,
    G: Carrier,
    condition: str | None = None,
    sigma: Involution | None = None,
    tau: Involution | None = None,
) -> list[TableFun2]:
    """Additive ``a : S x S -> G``, optionally filtered by behaviour under (sigma, tau).

    ``condition="antisym"`` keeps ``a(s(x), t(z)) = -a(x, z)``;
    ``condition="sym"`` keeps ``a(s(x), t(z)) = a(x, z)``.
    """
    funcs = additive_maps(S.square, G)
    if condition is not None:
        rho = square_pair_involution(sigma, tau).map
        if condition == "antisym":
            funcs = [a for a in funcs if is_antisymmetric(a, rho, G)]
        elif condition == "sym":
            funcs = [a for a in funcs if is_symmetric(a, rho)]
        else:
            raise ValueError(f"unknown condition {condition!r}")
    return [TableFun2(a) for a in funcs]


def enumerate_biadditive(
    S: FiniteSemigroup,
    H: Carrier,
    require_symmetric: bool = True,
    require_sign: tuple[Involution, Involution] | None = None,
) -> list[BiadditiveForm]:
    """Biadditive forms on ``S x S``; ``require_sign=(sigma, tau)`` keeps those with
    ``B((s(x), t(z)), v) = -B((x, z), v)``."""
    N = S.size**2
    forms = biadditive_maps(S.square, H)
    if require_symmetric:
        forms = [B for B in forms if is_symmetric_form(B, N)]
    if require_sign is not None:
        rho = square_pair_involution(*require_sign).map
        forms = [B for B in forms if has_sign_condition(B, rho, H)]
    return [
        BiadditiveForm(B, N, is_symmetric_form(B, N), require_sign is not None)
        for B in forms
    ]
