"""Constructors for the Heisenberg-type families and their p-power data.

Basis ordering conventions (0-based indices in parentheses):

* twisted superalgebra, sdim (2m+2, 2n+t):
  e_1..e_2m (0..2m-1), e_{2m+1} = center (2m), e_{2m+2} = twist (2m+1),
  then w_1..w_2n (2m+2 .. 2m+1+2n), then h_1..h_t.
* Heisenberg superalgebra with even center, sdim (2m+1, n):
  e_1..e_2m, center, then w_1..w_n.

The distinguished codimension-one ideal of the twisted superalgebra is the
span of everything except the twist generator; it is exposed as its own
algebra with the inherited structure constants together with the inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .gf import BadPrime, check_odd_prime
from .pmap import PMapSpec, ZeroParameter, restrictable_predicate
from .supalg import Element, SuperAlgebra


class NotRestrictable(ValueError):
    """Twist parameters do not admit a p-power structure."""


@dataclass(frozen=True)
class TwistedParams:
    """Parameters of a twisted family member over F_p."""

    p: int
    m: int
    n: int
    t: int
    lam: Tuple[int, ...]
    kappa: Tuple[int, ...]
    mu: Tuple[int, ...] = None

    def __post_init__(self):
        check_odd_prime(self.p)
        if min(self.m, self.n, self.t) < 0:
            raise ValueError("m, n, t must be non-negative")
        object.__setattr__(self, "lam", tuple(int(v) % self.p for v in self.lam))
        object.__setattr__(self, "kappa", tuple(int(v) % self.p for v in self.kappa))
        mu = self.mu if self.mu is not None else (0,) * (2 * self.m + 2)
        object.__setattr__(self, "mu", tuple(int(v) % self.p for v in mu))
        if len(self.lam) != self.m or len(self.kappa) != self.n:
            raise ValueError("lambda/kappa must have lengths m and n")
        if len(self.mu) != 2 * self.m + 2:
            raise ValueError("mu must have length 2m+2")
        if any(v == 0 for v in self.lam) or any(v == 0 for v in self.kappa):
            raise ZeroParameter("twist parameters must be nonzero")

    @property
    def sdim(self):
        return (2 * self.m + 2, 2 * self.n + self.t)

    @property
    def theorem_scope(self) -> bool:
        """True when the closed-form dimension counts apply (m, n, t >= 1);
        outside this range reports are flagged empirical-only."""
        return self.m >= 1 and self.n >= 1 and self.t >= 1

    def unit_norm(self) -> int:
        """The common (p-1)-th power of the twist parameters (1 over F_p)."""
        if self.m >= 1:
            return pow(self.lam[0], self.p - 1, self.p)
        if self.n >= 1:
            return pow(self.kappa[0], self.p - 1, self.p)
        return 1

    def label(self) -> str:
        return (
            f"p={self.p},m={self.m},n={self.n},t={self.t},"
            f"lam={list(self.lam)},kappa={list(self.kappa)},mu={list(self.mu)}"
        )


@dataclass
class IdealEmbedding:
    """Bracket-preserving inclusion of the codimension-one ideal."""

    sub: SuperAlgebra
    parent: SuperAlgebra
    parent_indices: Tuple[int, ...]  # image of each sub basis vector

    def include(self, x: Element) -> Element:
        v = np.zeros(self.parent.dim, dtype=np.int64)
        for i, j in enumerate(self.parent_indices):
            v[j] = x.coords[i]
        return Element(self.parent, v)

    def restrict(self, y: Element) -> Element:
        """Pull a parent element supported on the image back to the ideal."""
        v = np.zeros(self.sub.dim, dtype=np.int64)
        mask = np.ones(self.parent.dim, dtype=bool)
        for i, j in enumerate(self.parent_indices):
            v[i] = y.coords[j]
            mask[j] = False
        if np.any(y.coords[mask]):
            raise ValueError("element is not supported on the ideal")
        return Element(self.sub, v)

    def preserves_brackets(self) -> bool:
        for i in range(self.sub.dim):
            for j in range(self.sub.dim):
                lhs = self.include(self.sub.bracket(self.sub.basis_element(i), self.sub.basis_element(j)))
                rhs = self.parent.bracket(
                    self.include(self.sub.basis_element(i)), self.include(self.sub.basis_element(j))
                )
                if lhs != rhs:
                    return False
        return True

    def image_is_ideal(self) -> bool:
        image = set(self.parent_indices)
        for i in range(self.parent.dim):
            for j in sorted(image):
                out = self.parent.bracket(
                    self.parent.basis_element(i), self.parent.basis_element(j)
                )
                if any(out.coords[k] and k not in image for k in range(self.parent.dim)):
                    return False
        return True


def _heisenberg_names(m: int, n: int):
    even = [f"e{i}" for i in range(1, 2 * m + 2)]
    odd = [f"w{j}" for j in range(1, n + 1)]
    return even, odd


def make_heisenberg(p: int, m: int, n: int) -> SuperAlgebra:
    """Heisenberg superalgebra with even one-dimensional center:
    [e_i, e_{m+i}] = [w_j, w_j] = center."""
    check_odd_prime(p)
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    even, odd = _heisenberg_names(m, n)
    d = len(even) + len(odd)
    z = 2 * m  # center index
    c = np.zeros((d, d, d), dtype=np.int64)
    for i in range(m):
        c[i, m + i, z] = 1
        c[m + i, i, z] = p - 1
    for j in range(n):
        c[2 * m + 1 + j, 2 * m + 1 + j, z] = 1
    return SuperAlgebra(p, even, odd, c)


def _twisted_even_block(p, m, lam, c, idx):
    """Fill the even-block brackets shared by both twisted constructors.

    idx maps logical names: idx('e', i) for 1-based e_i, idx('z'), idx('u')
    for the center and twist generator.
    """
    z = idx("z")
    u = idx("u")
    for i in range(1, m + 1):
        a, b = idx("e", i), idx("e", m + i)
        c[a, b, z] = 1
        c[b, a, z] = p - 1
        c[u, a, b] = lam[i - 1]
        c[a, u, b] = (-lam[i - 1]) % p
        c[u, b, a] = lam[i - 1]
        c[b, u, a] = (-lam[i - 1]) % p


def _twisted_pmap(A: SuperAlgebra, params: TwistedParams) -> PMapSpec:
    p, m = params.p, params.m
    z, u = 2 * m, 2 * m + 1
    norm = params.unit_norm()
    values = []
    for i in range(2 * m + 1):
        v = np.zeros(A.dim, dtype=np.int64)
        v[z] = params.mu[i]
        values.append(Element(A, v))
    v = np.zeros(A.dim, dtype=np.int64)
    v[u] = norm
    v[z] = params.mu[2 * m + 1]
    values.append(Element(A, v))
    return PMapSpec(A, values)


def make_twisted_algebra(p: int, m: int, lam: Sequence[int], mu: Sequence[int] = None):
    """Twisted Heisenberg Lie algebra (purely even superalgebra) together
    with its canonical p-power structure."""
    params = TwistedParams(p, m, 0, 0, tuple(lam), (), tuple(mu) if mu is not None else None)
    even = [f"e{i}" for i in range(1, 2 * m + 3)]
    d = len(even)
    c = np.zeros((d, d, d), dtype=np.int64)
    _twisted_even_block(p, m, params.lam, c, _index_map(m))
    A = SuperAlgebra(p, even, [], c)
    return A, _twisted_pmap(A, params)


def _index_map(m):
    def idx(kind, i=None):
        if kind == "e":
            return i - 1
        if kind == "z":
            return 2 * m
        if kind == "u":
            return 2 * m + 1
        raise KeyError(kind)

    return idx


def make_twisted_super(params: TwistedParams):
    """Twisted Heisenberg Lie superalgebra with its canonical p-power
    structure and the inclusion of its codimension-one Heisenberg ideal.

    Returns (algebra, pmap, ideal_embedding).
    """
    p, m, n, t = params.p, params.m, params.n, params.t
    if not restrictable_predicate(p, params.lam, params.kappa):
        raise NotRestrictable(
            "parameters do not satisfy the power condition (or p = 2)"
        )
    even = [f"e{i}" for i in range(1, 2 * m + 3)]
    odd = [f"w{j}" for j in range(1, 2 * n + 1)] + [f"h{k}" for k in range(1, t + 1)]
    d = len(even) + len(odd)
    c = np.zeros((d, d, d), dtype=np.int64)
    idx = _index_map(m)
    _twisted_even_block(p, m, params.lam, c, idx)
    z, u = idx("z"), idx("u")

    def w(j):  # 1-based omega index
        return 2 * m + 2 + (j - 1)

    def h(k):  # 1-based eta index
        return 2 * m + 2 + 2 * n + (k - 1)

    for j in range(1, n + 1):
        c[w(j), w(j), z] = 1
        c[w(n + j), w(n + j), z] = p - 1
        kap = params.kappa[j - 1]
        c[u, w(j), w(n + j)] = kap
        c[w(j), u, w(n + j)] = (-kap) % p
        c[u, w(n + j), w(j)] = kap
        c[w(n + j), u, w(j)] = (-kap) % p
    for k in range(1, t + 1):
        c[h(k), h(k), z] = 1
    A = SuperAlgebra(p, even, odd, c)
    P = _twisted_pmap(A, params)

    # codimension-one ideal: drop the twist generator, inherit everything else
    sub_indices = tuple(i for i in range(d) if i != u)
    sub_even = [even[i] for i in range(len(even)) if i != u]
    sub_c = c[np.ix_(sub_indices, sub_indices, sub_indices)]
    sub = SuperAlgebra(p, sub_even, odd, sub_c)
    emb = IdealEmbedding(sub, A, sub_indices)
    return A, P, emb


def sorted_unit_tuples(p: int, length: int) -> List[Tuple[int, ...]]:
    """Canonical (sorted) tuples of units, for parameter sweeps."""
    if length == 0:
        return [()]
    out = []

    def rec(start, acc):
        if len(acc) == length:
            out.append(tuple(acc))
            return
        for v in range(start, p):
            rec(v, acc + [v])

    rec(1, [])
    return out


def all_unit_tuples(p: int, length: int) -> List[Tuple[int, ...]]:
    """Full enumeration (order-sensitive) of unit tuples."""
    if length == 0:
        return [()]
    smaller = all_unit_tuples(p, length - 1)
    return [s + (v,) for s in smaller for v in range(1, p)]
