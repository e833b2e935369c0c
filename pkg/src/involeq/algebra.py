"""Finite carriers: commutative semigroups, involutions and coefficient structures.

Elements are plain integer indices.  A pair ``(x, z)`` of ``S x S`` is
encoded as ``x * |S| + z`` everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import isqrt

from .errors import (
    AlgebraError,
    EvenCharacteristic,
    EvenOrder,
    NotAssociative,
    NotCommutative,
    NotInvolution,
)


# ---------------------------------------------------------------------------
# semigroups


@dataclass(frozen=True)
class FiniteSemigroup:
    size: int
    op: tuple[tuple[int, ...], ...]
    is_group: bool = False
    identity: int | None = None

    @property
    def elements(self):
        return range(self.size)

    def __call__(self, a, b):
        return self.op[a][b]

    @cached_property
    def square(self) -> FiniteSemigroup:
        """The componentwise product ``S x S`` on row-major pair indices."""
        n = self.size
        op = self.op
        table = tuple(
            tuple(op[x][y] * n + op[z][w] for y in range(n) for w in range(n))
            for x in range(n)
            for z in range(n)
        )
        identity = None
        if self.identity is not None:
            identity = self.identity * n + self.identity
        return FiniteSemigroup(n * n, table, self.is_group, identity)

    def pair(self, x, z):
        return x * self.size + z

    def unpair(self, u):
        return divmod(u, self.size)

    def inverse(self, a):
        if not self.is_group:
            raise AlgebraError("inverse requested in a semigroup that is not a group")
        e = self.identity
        for b in self.elements:
            if self.op[a][b] == e:
                return b
        raise AssertionError("group without inverse")


def _find_identity(n, op):
    for e in range(n):
        if all(op[e][a] == a for a in range(n)):
            return e
    return None


def build_semigroup(n: int, table) -> FiniteSemigroup:
    """Validate a Cayley table and return the commutative semigroup it defines.

    Raises NotCommutative / NotAssociative carrying the first counterexample
    found in lexicographic order.
    """
    if n < 1:
        raise AlgebraError("semigroup must have at least one element")
    op = tuple(tuple(int(v) for v in row) for row in table)
    if len(op) != n or any(len(row) != n for row in op):
        raise AlgebraError(f"Cayley table must be {n}x{n}")
    for row in op:
        for v in row:
            if not 0 <= v < n:
                raise AlgebraError(f"table entry {v} outside [0, {n})")
    for a in range(n):
        for b in range(a + 1, n):
            if op[a][b] != op[b][a]:
                raise NotCommutative(a, b)
    for a, b, c in product(range(n), repeat=3):
        if op[op[a][b]][c] != op[a][op[b][c]]:
            raise NotAssociative(a, b, c)

    identity = _find_identity(n, op)
    is_group = identity is not None and all(identity in row for row in op)
    return FiniteSemigroup(n, op, is_group, identity)


def cyclic(n: int) -> FiniteSemigroup:
    if n < 1:
        raise AlgebraError("cyclic group order must be positive")
    op = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteSemigroup(n, op, True, 0)


def truncated_addition(m: int) -> FiniteSemigroup:
    """``{1, ..., m}`` with ``a + b := min(a + b, m)``; index ``i`` stands for ``i + 1``.

    For ``m >= 2`` this semigroup has no identity.
    """
    table = [[min(a + b + 2, m) - 1 for b in range(m)] for a in range(m)]
    return build_semigroup(m, table)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    n, m = S.size, T.size
    table = [
        [S.op[a // m][b // m] * m + T.op[a % m][b % m] for b in range(n * m)]
        for a in range(n * m)
    ]
    return build_semigroup(n * m, table)


# ---------------------------------------------------------------------------
# involutions


@dataclass(frozen=True)
class Involution:
    base: FiniteSemigroup
    map: tuple[int, ...]

    def __call__(self, x):
        return self.map[x]

    @property
    def is_identity(self):
        return all(self.map[x] == x for x in range(len(self.map)))


def make_involution(S: FiniteSemigroup, mapping) -> Involution:
    mapping = tuple(int(v) for v in mapping)
    if len(mapping) != S.size:
        raise NotInvolution(f"map has length {len(mapping)}, expected {S.size}")
    if any(not 0 <= v < S.size for v in mapping):
        raise NotInvolution("map value outside the semigroup")
    for x in S.elements:
        if mapping[mapping[x]] != x:
            raise NotInvolution(f"map is not involutive at {x}")
    for x, y in product(S.elements, repeat=2):
        if mapping[S.op[x][y]] != S.op[mapping[x]][mapping[y]]:
            raise NotInvolution(f"map is not an endomorphism at ({x}, {y})")
    return Involution(S, mapping)


def identity_involution(S: FiniteSemigroup) -> Involution:
    return Involution(S, tuple(S.elements))


def negation(S: FiniteSemigroup) -> Involution:
    if not S.is_group:
        raise NotInvolution("negation needs a group")
    return make_involution(S, [S.inverse(x) for x in S.elements])


def enumerate_involutions(S: FiniteSemigroup) -> list[Involution]:
    """All involutive endomorphisms of S, in lexicographic order of their maps.

    Depth-first over ``sigma(0), sigma(1), ...``; a partial map is rejected as
    soon as it breaks involutivity or the endomorphism law on assigned
    elements.
    """
    n = S.size
    op = S.op
    sigma = [-1] * n
    found = []

    def consistent(x):
        v = sigma[x]
        if v < x:
            if sigma[v] != x:
                return False
        elif any(sigma[y] in (x, v) for y in range(x)):
            return False
        # each triple (y, t, y+t) is checked when its largest element is assigned
        for y in range(x + 1):
            sy = sigma[y]
            s = op[x][y]
            if sigma[s] != -1 and sigma[s] != op[v][sy]:
                return False
        for y in range(x):
            for t in range(x):
                s = op[y][t]
                if s == x and op[sigma[y]][sigma[t]] != v:
                    return False
        return True

    def extend(x):
        if x == n:
            found.append(Involution(S, tuple(sigma)))
            return
        for v in range(n):
            sigma[x] = v
            if consistent(x):
                extend(x + 1)
        sigma[x] = -1

    extend(0)
    # final exhaustive confirmation; the incremental checks are only pruning
    return [make_involution(S, s.map) for s in found]


def square_pair_involution(sigma: Involution, tau: Involution) -> Involution:
    """The componentwise map ``(x, z) -> (sigma(x), tau(z))`` on ``S x S``."""
    if sigma.base != tau.base:
        raise NotInvolution("sigma and tau act on different semigroups")
    S = sigma.base
    n = S.size
    mapping = tuple(sigma.map[u // n] * n + tau.map[u % n] for u in range(n * n))
    return Involution(S.square, mapping)


# ---------------------------------------------------------------------------
# coefficient carriers


@dataclass(frozen=True)
class Carrier:
    """Finite abelian group of odd order, optionally a field.

    ``name`` is canonical and determines the structure, so equality and
    hashing use it alone.  Element 0 is the additive identity and, for
    fields, 1 is the multiplicative identity.
    """

    name: str
    kind: str  # "gf", "zmod", "sum" or "ext"
    order: int
    add_table: tuple = field(repr=False, compare=False)
    neg_table: tuple = field(repr=False, compare=False)
    half_table: tuple = field(repr=False, compare=False)
    mul_table: tuple | None = field(default=None, repr=False, compare=False)
    inv_table: tuple | None = field(default=None, repr=False, compare=False)
    characteristic: int | None = None
    # for quadratic extensions: elements below subfield_order form the base field
    subfield_order: int | None = None

    @property
    def is_field(self):
        return self.mul_table is not None

    @property
    def elements(self):
        return range(self.order)

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def double(self, a):
        return self.add_table[a][a]

    def halve(self, a):
        return self.half_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.inv_table[a]

    def sqrt(self, a):
        """Smallest square root of ``a`` in the field, or None."""
        for r in self.elements:
            if self.mul_table[r][r] == a:
                return r
        return None

    def __str__(self):
        return self.name


def _group_carrier(name, kind, add, characteristic=None, mul=None, **extra):
    n = len(add)
    add = tuple(tuple(row) for row in add)
    neg = tuple(row.index(0) for row in add)
    half = [None] * n
    for y in range(n):
        d = add[y][y]
        if half[d] is not None:
            raise EvenOrder(
                f"{name}: 2*{half[d]} = 2*{y} = {d}, so the group is not 2-cancellative"
            )
        half[d] = y
    inv = None
    if mul is not None:
        mul = tuple(tuple(row) for row in mul)
        inv = tuple([0] + [mul[a].index(1) for a in range(1, n)])
    return Carrier(
        name,
        kind,
        n,
        add,
        neg,
        tuple(half),
        mul,
        inv,
        characteristic,
        **extra,
    )


def _factor_prime_power(q):
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


# polynomials over F_p are coefficient lists, lowest degree first


def _poly_mulmod(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
    prod = prod[:k] + [0] * (k - len(prod))
    return prod[:k]


def _has_factor(poly, p):
    """True if the monic ``poly`` has a monic factor of degree 1..deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = list(poly)
            for top in range(k, d - 1, -1):
                c = rem[top]
                if c:
                    for i in range(d + 1):
                        rem[top - d + i] = (rem[top - d + i] - c * divisor[i]) % p
            if not any(rem[:d]):
                return True
    return False


def irreducible_polynomial(p, k):
    """Lexicographically first monic irreducible polynomial of degree k over F_p."""
    for low in product(range(p), repeat=k):
        poly = list(reversed(low)) + [1]
        if k == 1 or (poly[0] != 0 and not _has_factor(poly, p)):
            return poly
    raise AssertionError("no irreducible polynomial found")


def galois_field(q: int) -> Carrier:
    pk = _factor_prime_power(q)
    if pk is None:
        raise AlgebraError(f"no field of order {q}: not a prime power")
    p, k = pk
    if p == 2:
        raise EvenCharacteristic(f"GF({q}) has characteristic 2")
    modulus = irreducible_polynomial(p, k)

    def digits(a):
        out = []
        for _ in range(k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def number(coeffs):
        return sum(c * p**i for i, c in enumerate(coeffs))

    polys = [digits(a) for a in range(q)]
    add = [
        [number([(x + y) % p for x, y in zip(polys[a], polys[b])]) for b in range(q)]
        for a in range(q)
    ]
    mul = [[number(_poly_mulmod(polys[a], polys[b], modulus, p)) for b in range(q)] for a in range(q)]
    return _group_carrier(f"gf {q}", "gf", add, characteristic=p, mul=mul)


def zmod(n: int) -> Carrier:
    if n < 1:
        raise AlgebraError("group order must be positive")
    if n % 2 == 0:
        raise EvenOrder(f"Z/{n} has even order: 2*0 = 2*{n // 2} = 0")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    return _group_carrier(f"zmod {n}", "zmod", add)


def direct_sum(moduli) -> Carrier:
    """Direct sum of cyclic groups, mixed-radix encoded (first modulus least significant)."""
    moduli = tuple(int(m) for m in moduli)
    if not moduli or any(m < 1 for m in moduli):
        raise AlgebraError("direct sum needs positive moduli")
    evens = [m for m in moduli if m % 2 == 0]
    if evens:
        raise EvenOrder(f"summand Z/{evens[0]} has even order")
    n = 1
    for m in moduli:
        n *= m

    def split(a):
        out = []
        for m in moduli:
            a, r = divmod(a, m)
            out.append(r)
        return out

    def join(parts):
        a, scale = 0, 1
        for r, m in zip(parts, moduli):
            a += r * scale
            scale *= m
        return a

    parts = [split(a) for a in range(n)]
    add = [
        [join([(x + y) % m for x, y, m in zip(parts[a], parts[b], moduli)]) for b in range(n)]
        for a in range(n)
    ]
    name = "sum " + " ".join(str(m) for m in moduli)
    return _group_carrier(name, "sum", add)


def make_carrier(kind: str, order) -> Carrier:
    """Build a carrier from a descriptor: ``("gf", q)``, ``("zmod", n)`` or ``("sum", moduli)``."""
    if kind == "gf":
        return galois_field(int(order))
    if kind == "zmod":
        return zmod(int(order))
    if kind == "sum":
        return direct_sum(order)
    raise AlgebraError(f"unknown carrier kind {kind!r}")


def quadratic_extension(K: Carrier) -> Carrier:
    """``K(sqrt d)`` for the smallest non-square ``d`` of K.

    ``a + b*sqrt(d)`` is encoded as ``a + b*q``, so the base field sits inside
    as the elements ``0 .. q-1`` with unchanged labels.
    """
    if not K.is_field:
        raise AlgebraError("quadratic extension needs a field")
    q = K.order
    squares = {K.mul(r, r) for r in K.elements}
    d = next(a for a in K.elements if a not in squares)
    A, M = K.add_table, K.mul_table
    add = [[0] * (q * q) for _ in range(q * q)]
    mul = [[0] * (q * q) for _ in range(q * q)]
    for x in range(q * q):
        a, b = x % q, x // q
        for y in range(q * q):
            c, e = y % q, y // q
            add[x][y] = A[a][c] + q * A[b][e]
            real = A[M[a][c]][M[d][M[b][e]]]
            imag = A[M[a][e]][M[b][c]]
            mul[x][y] = real + q * imag
    return _group_carrier(
        f"{K.name}^2",
        "ext",
        add,
        characteristic=K.characteristic,
        mul=mul,
        subfield_order=q,
    )


# ---------------------------------------------------------------------------
# functions on S x S


class TableFun2(tuple):
    """Flat value table of ``f : S x S -> carrier``; ``f(x, z) = table[x*|S| + z]``.

    A plain tuple underneath, so ordering, hashing and set membership are the
    tuple ones and mix freely with ordinary tuples.
    """

    __slots__ = ()

    @property
    def size(self):
        return isqrt(len(self))

    def __call__(self, x, z):
        return self[x * self.size + z]

    @classmethod
    def from_function(cls, S, fn):
        return cls(fn(x, z) for x in S.elements for z in S.elements)

    def diagonal(self):
        n = self.size
        return tuple(self[x * n + x] for x in range(n))

    def __repr__(self):
        return f"TableFun2({list(self)})"


# ---------------------------------------------------------------------------
# equation instances

KINDS = ("dalembert", "jensen", "quadratic")


@dataclass(frozen=True)
class EquationInstance:
    """One concrete equation ``f(x+y, z+w) + f(x+s(y), z+t(w)) = RHS`` to solve.

    ``kind`` selects the right side: ``2f(x,z)f(y,w)`` (dalembert),
    ``2f(x,z)`` (jensen) or ``2f(x,z) + 2f(y,w)`` (quadratic).
    """

    S: FiniteSemigroup
    sigma: Involution
    tau: Involution
    carrier: Carrier
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise AlgebraError(f"unknown equation kind {self.kind!r}")
        if self.sigma.base != self.S or self.tau.base != self.S:
            raise NotInvolution("sigma and tau must be involutions of S")
        if self.kind == "dalembert" and not self.carrier.is_field:
            raise AlgebraError(
                f"d'Alembert equation needs a field carrier, got {self.carrier.name}"
            )

    @cached_property
    def rho(self) -> Involution:
        """The pair involution ``(x, z) -> (sigma(x), tau(z))``."""
        return square_pair_involution(self.sigma, self.tau)

    @property
    def cells(self):
        return self.S.size**2

    def describe(self):
        return (
            f"{self.kind} on |S|={self.S.size} sigma={list(self.sigma.map)} "
            f"tau={list(self.tau.map)} over {self.carrier.name}"
        )
