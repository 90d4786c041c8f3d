"""p-power structures on the even part of a superalgebra.

A candidate [p]-operator is specified by its values on the even basis and
extended to arbitrary even elements from the defining axioms alone: scalar
homogeneity, the additivity rule with the s_i correction terms, applied by
peeling one basis coordinate at a time.  The closed-form evaluation for the
twisted family is implemented separately (``closed_form_p_power``) so the two
routes can serve as independent cross-checks of each other.

``s_terms`` expands ad(tg+h)^(p-1)(g) as an exact polynomial in t with element
coefficients; i*s_i is the coefficient of t^(i-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .gf import check_odd_prime
from .supalg import Element, OddArgument, OwnerMismatch, SuperAlgebra


class ZeroParameter(ValueError):
    """A twist parameter must be a unit in F_p."""


class SupportOutsideEvenTwistedBasis(ValueError):
    """closed_form_p_power needs support inside e_1..e_{2m+2}."""


@dataclass
class PMapSpec:
    """[p]-operator candidate: one even value per even basis index."""

    algebra: SuperAlgebra
    basis_values: List[Element]

    def __post_init__(self):
        if len(self.basis_values) != self.algebra.even_dim:
            raise ValueError("need one value per even basis element")
        for v in self.basis_values:
            if v.algebra is not self.algebra:
                raise OwnerMismatch("basis value belongs to a different algebra")
            if not v.is_even():
                raise OddArgument("p-power values must be even elements")

    def value_matrix(self) -> np.ndarray:
        """Rows = coordinates of b_i^{[p]} over the full basis."""
        return np.vstack([v.coords for v in self.basis_values])


@dataclass
class RestrictabilityVerdict:
    restricted: bool
    failing_axiom: Optional[str] = None  # A1-scalar / A2-additivity / A3-ad-power / module-condition
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.restricted


def _require_even(x: Element, what: str):
    if not x.is_even():
        raise OddArgument(f"{what} requires an even element")


def s_terms(g: Element, h: Element) -> List[Element]:
    """The correction terms s_1, ..., s_{p-1} of the additivity axiom.

    ad(tg+h)^(p-1)(g) is computed as a polynomial in t of degree <= p-1 with
    element coefficients; then s_i = i^{-1} * (coefficient of t^(i-1)).
    """
    A = g.algebra
    if h.algebra is not A:
        raise OwnerMismatch("s_terms arguments must share one algebra")
    _require_even(g, "s_terms")
    _require_even(h, "s_terms")
    p = A.p
    # poly[:, k] = coordinates of the t^k coefficient
    poly = np.zeros((A.dim, p), dtype=np.int64)
    poly[:, 0] = g.coords
    adg = A.ad_matrix_any(g).a
    adh = A.ad_matrix_any(h).a
    for _ in range(p - 1):
        nxt = np.zeros_like(poly)
        nxt[:, 1:] += adg @ poly[:, :-1]
        nxt += adh @ poly
        poly = np.mod(nxt, p)
    out = []
    for i in range(1, p):
        coeff = poly[:, i - 1]
        inv_i = pow(i, p - 2, p)
        out.append(Element(A, (coeff * inv_i) % p))
    return out


def p_power(P: PMapSpec, x: Element) -> Element:
    """Extend the basis values of P to an arbitrary even element.

    Peels one basis coordinate at a time and applies the homogeneity and
    additivity axioms; independent of the peeling order (tested property).
    """
    A = P.algebra
    if x.algebra is not A:
        raise OwnerMismatch("element belongs to a different algebra")
    _require_even(x, "p_power")
    p = A.p
    support = [int(i) for i in np.nonzero(x.coords)[0]]
    if not support:
        return A.zero()
    if len(support) == 1:
        k = support[0]
        a = int(x.coords[k])
        return P.basis_values[k].scale(pow(a, p, p))
    k = support[0]
    g = A.basis_element(k).scale(int(x.coords[k]))
    h = x - g
    total = p_power(P, g) + p_power(P, h)
    for s in s_terms(g, h):
        total = total + s
    return total


def closed_form_p_power(m: int, lam, mu, x: Element) -> Element:
    """Literal evaluation of the closed p-power formula for the twisted
    family on an even element supported on e_1..e_{2m+2}.

    With a = coordinates of x and L = lam_1^(p-1):
      x^[p] = a_{2m+2}^(p-1) L Σ_{i<=2m} a_i e_i  +  a_{2m+2}^p L e_{2m+2}
            + (Σ a_i^p mu_i + 2^{-1} a_{2m+2}^(p-2) Σ_i lam_i^(p-2)(a_i^2 - a_{m+i}^2)) e_{2m+1}
    """
    A = x.algebra
    p = A.p
    ne = 2 * m + 2
    if A.even_dim < ne:
        raise SupportOutsideEvenTwistedBasis("algebra is too small for these parameters")
    if np.any(x.coords[ne:]):
        raise SupportOutsideEvenTwistedBasis(
            "element must be supported on the twisted even basis"
        )
    lam = [int(v) % p for v in lam]
    mu = [int(v) % p for v in mu]
    if len(lam) != m or len(mu) != ne:
        raise ValueError("parameter vectors have the wrong length")
    if any(v == 0 for v in lam):
        raise ZeroParameter("twist parameters must be nonzero")
    L = pow(lam[0], p - 1, p) if m >= 1 else 1
    a = [int(v) for v in x.coords[:ne]]
    a_top = a[ne - 1]
    out = np.zeros(A.dim, dtype=np.int64)
    lead = pow(a_top, p - 1, p) * L % p
    for i in range(2 * m):
        out[i] = lead * a[i] % p
    out[ne - 1] = pow(a_top, p, p) * L % p
    center = 0
    for i in range(ne):
        center += pow(a[i], p, p) * mu[i]
    half = pow(2, p - 2, p)
    s = 0
    for i in range(m):
        s += pow(lam[i], p - 2, p) * (a[i] * a[i] - a[m + i] * a[m + i])
    center += half * pow(a_top, p - 2, p) % p * (s % p)
    out[ne - 2] = (out[ne - 2] + center) % p
    return Element(A, np.mod(out, p))


def restrictable_predicate(p: int, lam, kappa) -> bool:
    """True iff p > 2 and all (p-1)-th powers of the twist parameters agree.

    Parameters must be units; a zero entry raises ZeroParameter.
    """
    if not isinstance(p, (int, np.integer)) or int(p) < 2:
        raise ValueError(f"p must be a prime, got {p!r}")
    p = int(p)
    vals = [int(v) % p for v in list(lam) + list(kappa)]
    if any(v == 0 for v in vals):
        raise ZeroParameter("twist parameters must lie in the unit group")
    if p == 2:
        return False
    check_odd_prime(p)
    powers = {pow(v, p - 1, p) for v in vals}
    return len(powers) <= 1


def verify_restricted(P: PMapSpec, samples: int = 25, rng=None) -> RestrictabilityVerdict:
    """Check the defining axioms of a [p]-operator and the restricted-module
    condition on the odd part.

    Exhaustive where cheap (ad-power axiom on the even basis, module
    condition against every odd basis vector), randomized for the scalar and
    additivity axioms.  The verdict carries a replayable witness on failure.
    """
    A = P.algebra
    if rng is None:
        rng = np.random.default_rng(0)
    p = A.p

    # (ad x)^p = ad(x^[p]) on the even basis
    for i in range(A.even_dim):
        bi = A.basis_element(i)
        lhs = A.ad_matrix(bi).power(p)
        rhs = A.ad_matrix(P.basis_values[i])
        if lhs != rhs:
            return RestrictabilityVerdict(False, "A3-ad-power", (bi, P.basis_values[i]))

    for _ in range(samples):
        a = int(rng.integers(0, p))
        x = A.random_element(rng, parity=0)
        if p_power(P, x.scale(a)) != p_power(P, x).scale(pow(a, p, p)):
            return RestrictabilityVerdict(False, "A1-scalar", (a, x))

    for _ in range(samples):
        g = A.random_element(rng, parity=0)
        h = A.random_element(rng, parity=0)
        rhs = p_power(P, g) + p_power(P, h)
        for s in s_terms(g, h):
            rhs = rhs + s
        if p_power(P, g + h) != rhs:
            return RestrictabilityVerdict(False, "A2-additivity", (g, h))

    # (ad x)^p = ad(x^[p]) for random even x (covers mixed coordinates)
    for _ in range(samples):
        x = A.random_element(rng, parity=0)
        if A.ad_matrix(x).power(p) != A.ad_matrix(p_power(P, x)):
            return RestrictabilityVerdict(False, "A3-ad-power", (x, p_power(P, x)))

    # odd part is a restricted module: p-fold bracket by g = bracket by g^[p]
    evens = [A.basis_element(i) for i in range(A.even_dim)]
    for _ in range(samples):
        evens.append(A.random_element(rng, parity=0))
    for g in evens:
        adg = A.ad_matrix(g)
        lhs = adg.power(p)
        gp = p_power(P, g)
        adgp = A.ad_matrix(gp)
        for j in range(A.even_dim, A.dim):
            h = A.basis_element(j)
            if not np.array_equal(lhs.apply(h.coords), adgp.apply(h.coords)):
                return RestrictabilityVerdict(False, "module-condition", (g, h))
    return RestrictabilityVerdict(True)


def replay_witness(P: PMapSpec, verdict: RestrictabilityVerdict) -> bool:
    """Re-run the failed check from the stored witness; True = failure
    reproduces."""
    if verdict.restricted or verdict.witness is None:
        return False
    A = P.algebra
    p = A.p
    tag = verdict.failing_axiom
    if tag == "A1-scalar":
        a, x = verdict.witness
        return p_power(P, x.scale(a)) != p_power(P, x).scale(pow(a, p, p))
    if tag == "A2-additivity":
        g, h = verdict.witness
        rhs = p_power(P, g) + p_power(P, h)
        for s in s_terms(g, h):
            rhs = rhs + s
        return p_power(P, g + h) != rhs
    if tag == "A3-ad-power":
        x, _ = verdict.witness
        return A.ad_matrix(x).power(p) != A.ad_matrix(p_power(P, x))
    if tag == "module-condition":
        g, h = verdict.witness
        lhs = A.ad_matrix(g).power(p).apply(h.coords)
        rhs = A.bracket(p_power(P, g), h).coords
        return not np.array_equal(lhs, rhs)
    return False
