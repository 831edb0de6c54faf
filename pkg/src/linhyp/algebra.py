"""Finite fields GF(p^e) and deterministic generators for the named families.

Field elements are coefficient tuples of length e over [0, p); the modulus is
the lexicographically smallest monic irreducible polynomial of its degree
(coefficients compared high power first), found by exhaustive testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import Graph, Hypergraph, incidence_graph
from .rng import SplitMix64


class AlgebraError(ValueError):
    """Bad parameter for a field or family constructor."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return (p, e) with q = p^e and p prime, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        e, rest = 0, q
        while rest % p == 0:
            rest //= p
            e += 1
        return (p, e) if rest == 1 else None
    return (q, 1)  # q itself prime


def _poly_mul_mod(a: tuple, b: tuple, modulus: tuple, p: int) -> tuple:
    # coefficients low power first; modulus is monic of degree e
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for k in range(e):
                prod[d - e + k] = (prod[d - e + k] - c * modulus[k]) % p
    out = prod[:e]
    out += [0] * (e - len(out))
    return tuple(out)


def _is_irreducible(coeffs_low: tuple, p: int) -> bool:
    """Check a monic polynomial (low-first coefficients, monic lead) for
    irreducibility by exhaustive trial division over F_p."""
    deg = len(coeffs_low) - 1
    if deg == 1:
        return True
    # no roots
    for x in range(p):
        acc, xp = 0, 1
        for c in coeffs_low:
            acc = (acc + c * xp) % p
            xp = (xp * x) % p
        if acc == 0:
            return False
    if deg <= 3:
        return True
    # trial division by monic polynomials of degree 2..deg//2
    for d in range(2, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            rem = list(coeffs_low)
            while len(rem) >= len(divisor) and any(rem):
                while rem and rem[-1] == 0:
                    rem.pop()
                if len(rem) < len(divisor):
                    break
                lead = rem[-1]
                shift = len(rem) - len(divisor)
                for k, dv in enumerate(divisor):
                    rem[shift + k] = (rem[shift + k] - lead * dv) % p
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                return False
    return True


@dataclass(frozen=True)
class FiniteField:
    """GF(p^e) with elements as length-e coefficient tuples (low power first)."""

    p: int
    e: int
    modulus: tuple[int, ...]  # monic, low power first, length e+1

    @property
    def q(self) -> int:
        return self.p**self.e

    def zero(self) -> tuple:
        return (0,) * self.e

    def one(self) -> tuple:
        return (1,) + (0,) * (self.e - 1)

    def elements(self) -> list[tuple]:
        """All q elements in a fixed lexicographic order (high power first)."""
        return [
            tuple(reversed(t))
            for t in itertools.product(range(self.p), repeat=self.e)
        ]

    def add(self, a: tuple, b: tuple) -> tuple:
        if self.e == 1:
            return ((a[0] + b[0]) % self.p,)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        if self.e == 1:
            return ((a[0] - b[0]) % self.p,)
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % self.p for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        if self.e == 1:
            return ((a[0] * b[0]) % self.p,)
        return _poly_mul_mod(a, b, self.modulus, self.p)

    def inv(self, a: tuple) -> tuple:
        if a == self.zero():
            raise ZeroDivisionError("zero has no inverse")
        if self.e == 1:
            return (pow(a[0], self.p - 2, self.p),)
        # q-2 power via square and multiply
        result = self.one()
        base = a
        k = self.q - 2
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    """The field of order q = p^e, or raise if q is not a prime power."""
    pe = prime_power(q)
    if pe is None:
        raise AlgebraError(f"{q} is not a prime power")
    p, e = pe
    if e == 1:
        return FiniteField(p, 1, (0, 1))
    # smallest monic irreducible of degree e, coefficients read high to low
    for tail_high in itertools.product(range(p), repeat=e):
        coeffs_low = tuple(reversed(tail_high)) + (1,)
        if _is_irreducible(coeffs_low, p):
            return FiniteField(p, e, coeffs_low)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def affine_plane(q: int) -> Hypergraph:
    """AG(2,q) as a q-uniform hypergraph: q^2 points, q^2+q lines."""
    if q < 2:
        raise AlgebraError("affine plane needs order >= 2")
    field = gf(q)
    elems = field.elements()
    idx = {x: i for i, x in enumerate(elems)}

    def point(x: tuple, y: tuple) -> int:
        return idx[x] * q + idx[y]

    lines = []
    for m in elems:  # y = m x + b
        for b in elems:
            lines.append(
                [point(x, field.add(field.mul(m, x), b)) for x in elems]
            )
    for c in elems:  # x = c
        lines.append([point(c, y) for y in elems])
    return Hypergraph(q * q, lines)


def projective_plane(q: int) -> Hypergraph:
    """PG(2,q): points are 1-dim subspaces of GF(q)^3, lines 2-dim subspaces.

    Each line is enumerated from a null-space basis of its dual vector, so
    construction costs O(q) per line and stays usable into the hundreds.
    """
    field = gf(q)
    elems = field.elements()
    zero, one = field.zero(), field.one()
    points = []
    for x in elems:
        for y in elems:
            points.append((one, x, y))
    for y in elems:
        points.append((zero, one, y))
    points.append((zero, zero, one))
    pidx = {pt: i for i, pt in enumerate(points)}

    def normalize(vec):
        for lead in vec:
            if lead != zero:
                inv = field.inv(lead)
                return tuple(field.mul(inv, c) for c in vec)
        raise AssertionError("zero vector has no projective class")

    def null_basis(a, b, c):
        # two independent solutions of a x + b y + c z = 0
        if c != zero:
            cinv = field.inv(c)
            u = (one, zero, field.neg(field.mul(a, cinv)))
            v = (zero, one, field.neg(field.mul(b, cinv)))
        elif b != zero:
            binv = field.inv(b)
            u = (one, field.neg(field.mul(a, binv)), zero)
            v = (zero, zero, one)
        else:  # a != 0, b = c = 0: solutions are y, z free
            u = (zero, one, zero)
            v = (zero, zero, one)
        return u, v

    lines = []
    for a, b, c in points:  # dual coordinates range over the same classes
        u, v = null_basis(a, b, c)
        members = [pidx[normalize(v)]]
        for t in elems:
            w = tuple(field.add(uc, field.mul(t, vc)) for uc, vc in zip(u, v))
            members.append(pidx[normalize(w)])
        lines.append(members)
    return Hypergraph(len(points), lines)


def affine_residual(q: int, s: int) -> Hypergraph:
    """Delete the first s points of the lexicographically first line of AG(2,q)."""
    if not 1 <= s <= q:
        raise AlgebraError(f"s must lie in [1, {q}]")
    plane = affine_plane(q)
    first_line = plane.edges[0]
    from .core import delete_vertices

    return delete_vertices(plane, first_line[:s])


def l_k(k: int) -> Hypergraph:
    """The unique k-uniform 2-regular linear intersecting hypergraph L_k.

    Vertices are the 2-subsets of [k+1]; edge i collects the pairs meeting i.
    """
    if k < 2:
        raise AlgebraError("L_k needs k >= 2")
    pairs = list(itertools.combinations(range(k + 1), 2))
    pair_idx = {pq: i for i, pq in enumerate(pairs)}
    edges = [
        [pair_idx[tuple(sorted((i, j)))] for j in range(k + 1) if j != i]
        for i in range(k + 1)
    ]
    return Hypergraph(len(pairs), edges)


def family_f(i: int) -> Hypergraph:
    """Member F_i of the tight family for the degree-2 bound.

    F_0 is the single 4-edge; F_i adds 12 vertices in three new disjoint
    4-edges plus one linking edge through the lowest-id vertex of degree <= 1
    of F_{i-1} and the lowest-id vertex of each new edge.  The result is
    connected, linear, with maximum degree 2.
    """
    if i < 0:
        raise AlgebraError("family index must be >= 0")
    n = 4
    edges: list[list[int]] = [[0, 1, 2, 3]]
    for _ in range(i):
        deg = [0] * n
        for e in edges:
            for v in e:
                deg[v] += 1
        anchor = min(v for v in range(n) if deg[v] <= 1)
        new_edges = [[n + 4 * j + t for t in range(4)] for j in range(3)]
        link = [anchor] + [e[0] for e in new_edges]
        edges = edges + new_edges + [link]
        n += 12
    return Hypergraph(n, edges)


def random_linear(
    n: int, k: int, max_deg: int, m_target: int, seed: int
) -> Hypergraph:
    """Seeded greedy generator of a k-uniform linear hypergraph with
    maximum degree <= max_deg; stops at m_target edges or when the retry
    budget runs out, returning whatever was built."""
    if k > n or k < 1 or max_deg < 1 or m_target < 0:
        raise AlgebraError("infeasible parameters")
    if k * m_target > max_deg * n:
        raise AlgebraError("degree budget cannot host that many edges")
    rng = SplitMix64(seed)
    deg = [0] * n
    accepted: list[tuple[int, ...]] = []
    masks: list[int] = []
    budget = 200 * max(m_target, 1)
    while len(accepted) < m_target and budget > 0:
        budget -= 1
        pool = [v for v in range(n) if deg[v] < max_deg]
        if len(pool) < k:
            break
        pick = rng.sample(pool, k)
        cand = tuple(sorted(pick))
        mask = 0
        for v in cand:
            mask |= 1 << v
        if any((mask & old).bit_count() > 1 for old in masks):
            continue
        accepted.append(cand)
        masks.append(mask)
        for v in cand:
            deg[v] += 1
    return Hypergraph(n, accepted)


def heawood() -> Graph:
    """The Heawood graph, as the incidence graph of PG(2,2)."""
    return incidence_graph(projective_plane(2))


def g30() -> Graph:
    """The 4-regular quadrilateral-free bipartite graph on 30 vertices
    (incidence graph of AG(2,4) minus one point)."""
    return incidence_graph(affine_residual(4, 1))


def fano_complement() -> Hypergraph:
    """Complement of the Fano plane: 4-uniform, non-linear, n = m = 7."""
    from .core import complement_hypergraph

    return complement_hypergraph(projective_plane(2))
