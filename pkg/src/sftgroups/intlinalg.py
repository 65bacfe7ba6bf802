"""Exact integer linear algebra over Python ints: Smith/Hermite normal forms,
kernels, cokernels, and finitely generated abelian groups with an
automorphism-orbit decision.

No floating point is used anywhere; matrices are lists of lists of ints and
every canonical form (SNF pivot rule, column-HNF kernel bases) is pinned so
repeated runs produce identical output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import NoSolution, TorsionTooLarge

Matrix = list  # list[list[int]]

DEFAULT_ORBIT_BOUND = 10**4


# --- elementary matrix helpers ---------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    oi[j] += aik * bk[j]
    return out


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matrix_power(a: Matrix, k: int) -> Matrix:
    result = identity_matrix(len(a))
    base = [row[:] for row in a]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def determinant(a: Matrix) -> int:
    """Bareiss fraction-free determinant (exact)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: Matrix) -> int:
    return len(row_hermite_form(a))


def stable_kernel_index(a: Matrix) -> int:
    """Least j with rank(a^j) == rank(a^(j+1)); j <= dim always."""
    n = len(a)
    power = identity_matrix(n)
    prev_rank = n
    for j in range(n + 1):
        power = mat_mul(power, a)
        r = rank(power)
        if r == prev_rank:
            return j
        prev_rank = r
    return n


# --- normal forms -----------------------------------------------------------


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, S, V) with U*a*V = S, U and V unimodular, S diagonal with
    a divisibility chain and non-negative entries.

    Pivot rule: smallest nonzero absolute value, ties broken row-major.
    """
    m = len(a)
    n = len(a[0]) if a else 0
    s = [[int(x) for x in row] for row in a]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    def _diagonalize(start: int):
        t = start
        while t < min(m, n):
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = s[i][j]
                    if x and (best is None or abs(x) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return
            bi, bj = best
            if bi != t:
                s[t], s[bi] = s[bi], s[t]
                u[t], u[bi] = u[bi], u[t]
            if bj != t:
                for row in s:
                    row[t], row[bj] = row[bj], row[t]
                for row in v:
                    row[t], row[bj] = row[bj], row[t]
            if s[t][t] < 0:
                negate_row(t)
            while True:
                dirty = False
                for i in range(t + 1, m):
                    if s[i][t]:
                        q = s[i][t] // s[t][t]
                        if q:
                            s[i] = [x - q * y for x, y in zip(s[i], s[t])]
                            u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                        if s[i][t]:  # remainder strictly smaller: promote it
                            s[t], s[i] = s[i], s[t]
                            u[t], u[i] = u[i], u[t]
                            dirty = True
                for j in range(t + 1, n):
                    if s[t][j]:
                        q = s[t][j] // s[t][t]
                        if q:
                            for row in s:
                                row[j] -= q * row[t]
                            for row in v:
                                row[j] -= q * row[t]
                        if s[t][j]:
                            for row in s:
                                row[t], row[j] = row[j], row[t]
                            for row in v:
                                row[t], row[j] = row[j], row[t]
                            dirty = True
                if s[t][t] < 0:
                    negate_row(t)
                if not dirty and all(s[i][t] == 0 for i in range(t + 1, m)) \
                        and all(s[t][j] == 0 for j in range(t + 1, n)):
                    break
            t += 1

    _diagonalize(0)
    # enforce the divisibility chain d_i | d_{i+1}
    k = min(m, n)
    while True:
        bad = None
        for i in range(k - 1):
            di, dj = s[i][i], s[i + 1][i + 1]
            if dj != 0 and (di == 0 or dj % di != 0):
                bad = i
                break
        if bad is None:
            break
        # fold the offending entry into row `bad` and re-diagonalize from there
        s[bad] = [x + y for x, y in zip(s[bad], s[bad + 1])]
        u[bad] = [x + y for x, y in zip(u[bad], u[bad + 1])]
        _diagonalize(bad)
    return u, s, v


def row_hermite_form(a: Matrix) -> Matrix:
    """Row HNF: canonical upper-echelon basis of the row lattice.

    Pivots positive, entries above each pivot reduced into [0, pivot).
    Zero rows are dropped; the result is unique for the row lattice.
    """
    if not a:
        return []
    b = [[int(x) for x in row] for row in a]
    m, n = len(b), len(b[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if b[i][c] and (piv is None or abs(b[i][c]) < abs(b[piv][c])):
                piv = i
        if piv is None:
            continue
        b[r], b[piv] = b[piv], b[r]
        while True:
            done = True
            for i in range(r + 1, m):
                if b[i][c]:
                    q = b[i][c] // b[r][c]
                    if q:
                        b[i] = [x - q * y for x, y in zip(b[i], b[r])]
                    if b[i][c]:
                        b[r], b[i] = b[i], b[r]
                        done = False
            if done:
                break
        if b[r][c] < 0:
            b[r] = [-x for x in b[r]]
        for j in range(r):
            q = b[j][c] // b[r][c]
            if q:
                b[j] = [x - q * y for x, y in zip(b[j], b[r])]
        r += 1
        if r == m:
            break
    return b[:r]


def kernel_basis(a: Matrix) -> list[tuple[int, ...]]:
    """HNF-reduced lattice basis of {x : a x = 0}, one vector per basis element."""
    m = len(a)
    n = len(a[0]) if a else 0
    _, s, v = smith_normal_form(a)
    free_cols = [j for j in range(n) if j >= min(m, n) or s[j][j] == 0]
    if not free_cols:
        return []
    vectors = [[v[i][j] for i in range(n)] for j in free_cols]
    return [tuple(row) for row in row_hermite_form(vectors)]


def integer_solve(a: Matrix, b: list[int]) -> list[int]:
    """A particular integer solution of a x = b; raises NoSolution if none."""
    m = len(a)
    n = len(a[0]) if a else 0
    u, s, v = smith_normal_form(a)
    c = mat_vec(u, list(b))
    y = [0] * n
    for i in range(m):
        d = s[i][i] if i < min(m, n) else 0
        if d == 0:
            if c[i] != 0:
                raise NoSolution("right-hand side not in the image lattice")
        else:
            if c[i] % d != 0:
                raise NoSolution("right-hand side not in the image lattice")
            y[i] = c[i] // d
    return mat_vec(v, y)


# --- finitely generated abelian groups --------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """Element of an FgAbelianGroup in (torsion, free) coordinates."""

    group: "FgAbelianGroup"
    torsion: tuple[int, ...]
    free: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        assert self.group == other.group
        t = tuple((x + y) % d for x, y, d in zip(self.torsion, other.torsion, self.group.torsion))
        return GroupElement(self.group, t, tuple(x + y for x, y in zip(self.free, other.free)))

    def __neg__(self) -> "GroupElement":
        t = tuple((-x) % d for x, d in zip(self.torsion, self.group.torsion))
        return GroupElement(self.group, t, tuple(-x for x in self.free))

    def is_zero(self) -> bool:
        return not any(self.torsion) and not any(self.free)

    def flat(self) -> tuple[int, ...]:
        """Display order: free coordinates first, torsion last."""
        return self.free + self.torsion

    def render(self) -> str:
        if self.group.is_trivial():
            return "0"
        coords = self.flat()
        if len(coords) == 1:
            return str(coords[0])
        return "(" + ", ".join(map(str, coords)) + ")"


@dataclass(frozen=True)
class FgAbelianGroup:
    """Invariant factors + free rank, with an optional projection from Z^n.

    Projection rows are ordered torsion generators first, then free
    generators; ``torsion`` is the divisibility chain with 1-factors dropped.
    """

    torsion: tuple[int, ...]
    free_rank: int
    ambient_dim: int = 0
    projection: tuple[tuple[int, ...], ...] = ()

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def torsion_order(self) -> int:
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def same_invariants(self, other: "FgAbelianGroup") -> bool:
        return self.torsion == other.torsion and self.free_rank == other.free_rank

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.torsion), (0,) * self.free_rank)

    def element(self, torsion: tuple[int, ...], free: tuple[int, ...]) -> GroupElement:
        assert len(torsion) == len(self.torsion) and len(free) == self.free_rank
        t = tuple(x % d for x, d in zip(torsion, self.torsion))
        return GroupElement(self, t, tuple(free))

    def project(self, vec: list[int]) -> GroupElement:
        """Map an ambient Z^n vector to its class."""
        assert len(vec) == self.ambient_dim
        k = len(self.torsion)
        coords = [sum(r * x for r, x in zip(row, vec)) for row in self.projection]
        torsion = tuple(c % d for c, d in zip(coords[:k], self.torsion))
        return GroupElement(self, torsion, tuple(coords[k:]))

    def render(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for d, reps in itertools.groupby(self.torsion):
            count = len(list(reps))
            parts.append(f"Z_{d}" if count == 1 else f"(Z_{d})^{count}")
        return " + ".join(parts) if parts else "0"


def cokernel(a: Matrix) -> FgAbelianGroup:
    """Present Z^rows / Im(a) with the projection induced by the SNF."""
    m = len(a)
    n = len(a[0]) if a else 0
    u, s, _ = smith_normal_form(a)
    torsion_rows = []
    free_rows = []
    for i in range(m):
        d = s[i][i] if i < min(m, n) else 0
        if d == 0:
            free_rows.append(i)
        elif d > 1:
            torsion_rows.append(i)
    factors = tuple(s[i][i] for i in torsion_rows)
    projection = tuple(tuple(u[i]) for i in torsion_rows + free_rows)
    return FgAbelianGroup(factors, len(free_rows), m, projection)


def tensor_with_z2(group: FgAbelianGroup) -> FgAbelianGroup:
    """G (x) Z_2: each even factor and each free generator contributes a Z_2."""
    count = group.free_rank + sum(1 for d in group.torsion if d % 2 == 0)
    return FgAbelianGroup((2,) * count, 0)


def direct_sum(g1: FgAbelianGroup, g2: FgAbelianGroup) -> FgAbelianGroup:
    """Abstract direct sum (invariant data only, no projection)."""
    factors = sorted(list(g1.torsion) + list(g2.torsion))
    # re-normalize into a divisibility chain via the SNF of the diagonal
    diag = [[0] * len(factors) for _ in range(len(factors))]
    for i, d in enumerate(factors):
        diag[i][i] = d
    _, s, _ = smith_normal_form(diag)
    chain = tuple(s[i][i] for i in range(len(factors)) if s[i][i] > 1)
    return FgAbelianGroup(chain, g1.free_rank + g2.free_rank)


# --- automorphism orbits -----------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _indicator(torsion: tuple[int, ...], t: tuple[int, ...]) -> tuple:
    """Aut-orbit invariant of t in the torsion group: per prime, the sequence
    of p-heights of t, p*t, p^2*t, ... until zero (Ulm indicator)."""
    order = 1
    for d in torsion:
        order *= d
    profile = []
    for p in _prime_factors(order):
        exps = []
        for d in torsion:
            e = 0
            while d % p == 0:
                e += 1
                d //= p
            exps.append(e)
        current = tuple(x % (p ** e) for x, e in zip(t, exps))
        heights = []
        while any(current):
            h = 0
            while all(x % (p ** min(h + 1, e)) == 0 for x, e in zip(current, exps)):
                h += 1
            heights.append(h)
            current = tuple((p * x) % (p ** e) if e else 0 for x, e in zip(current, exps))
        profile.append((p, tuple(heights)))
    return tuple(profile)


def orbit_equivalent(group: FgAbelianGroup, a: GroupElement, b: GroupElement,
                     bound: int = DEFAULT_ORBIT_BOUND) -> bool:
    """Decide whether some automorphism of the group maps a to b.

    Rule: gcds of the free parts must agree (= g); then some R in
    Aut(torsion) must satisfy R*t_a = t_b modulo g*T, since the orbit of the
    free part under GL is its gcd class and Hom(Z^r, T) contributes exactly
    g*T.  The Aut(torsion) search enumerates candidates with the same Ulm
    indicator as t_a (the classical orbit invariant).
    """
    g1 = gcd(*a.free) if a.free else 0
    g2 = gcd(*b.free) if b.free else 0
    if g1 != g2:
        return False
    torsion = group.torsion
    if not torsion:
        return True
    if a.torsion == b.torsion:
        return True
    order = group.torsion_order()
    if order > bound:
        raise TorsionTooLarge(f"torsion order {order} exceeds bound {bound}")
    g = g1
    ranges = [range(d) for d in torsion]
    if g == 0:
        g_subgroup = {(0,) * len(torsion)}
    else:
        g_subgroup = {tuple((g * x) % d for x, d in zip(t, torsion))
                      for t in itertools.product(*ranges)}
    target_profile = _indicator(torsion, a.torsion)
    for candidate in itertools.product(*ranges):
        if _indicator(torsion, candidate) != target_profile:
            continue
        diff = tuple((x - y) % d for x, y, d in zip(candidate, b.torsion, torsion))
        if diff in g_subgroup:
            return True
    return False
