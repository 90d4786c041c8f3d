"""Structure-constant Lie superalgebra engine.

A superalgebra is given by an ordered graded basis (even block first, then
odd block) and the dense tensor c with c[i,j,k] = coefficient of basis k in
[b_i, b_j].  The three graded axioms (super-antisymmetry, parity grading,
graded Jacobi) are validated eagerly at construction; dimensions are tiny, so
early failure localizes bad input.

Elements are coordinate vectors over the full basis.  Mixed-parity elements
are allowed everywhere the mathematics permits: the bracket is the bilinear
extension of the structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .gf import BadPrime, Matrix, check_odd_prime


class OwnerMismatch(ValueError):
    """Elements belong to different algebras."""


class TooFewArguments(ValueError):
    """Nested bracket needs at least two arguments."""


class OddArgument(ValueError):
    """An operation defined on the even part received an odd element."""


class InvalidStructure(ValueError):
    """Structure constants violate a graded axiom."""


class SchemaError(ValueError):
    """Malformed JSON description of an algebra."""


@dataclass
class AxiomReport:
    """Result of the exhaustive axiom check over basis triples."""

    ok: bool
    failing_check: Optional[str] = None
    failing_triple: Optional[tuple] = None

    def __bool__(self):
        return self.ok


class SuperAlgebra:
    """Finite-dimensional Lie superalgebra over F_p given by structure
    constants.  Immutable after construction."""

    def __init__(self, p, even_names, odd_names, tensor, validate=True):
        self.p = check_odd_prime(p)
        self.even_dim = len(even_names)
        self.odd_dim = len(odd_names)
        self.basis_names = tuple(even_names) + tuple(odd_names)
        if len(set(self.basis_names)) != len(self.basis_names):
            raise SchemaError("basis names must be distinct")
        d = self.dim
        c = np.mod(np.asarray(tensor, dtype=np.int64), self.p)
        if c.shape != (d, d, d):
            raise InvalidStructure(f"tensor must have shape {(d, d, d)}")
        c.setflags(write=False)
        self.c = c
        # parity[i] = 0 for the even block, 1 for the odd block
        self.parity = np.array([0] * self.even_dim + [1] * self.odd_dim, dtype=np.int64)
        self._caches = {}
        if validate:
            report = verify_superalgebra(self)
            if not report.ok:
                raise InvalidStructure(
                    f"{report.failing_check} fails at basis triple {report.failing_triple}"
                )

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def sdim(self):
        return (self.even_dim, self.odd_dim)

    def parity_of(self, i: int) -> int:
        return int(self.parity[i])

    def index_of(self, name: str) -> int:
        return self.basis_names.index(name)

    # -- elements ------------------------------------------------------------

    def element(self, coords) -> "Element":
        v = np.mod(np.asarray(coords, dtype=np.int64), self.p)
        if v.shape != (self.dim,):
            raise ValueError(f"coordinate vector must have length {self.dim}")
        return Element(self, v)

    def zero(self) -> "Element":
        return self.element(np.zeros(self.dim, dtype=np.int64))

    def basis_element(self, i: int) -> "Element":
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return self.element(v)

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def random_element(self, rng, parity=None) -> "Element":
        v = rng.integers(0, self.p, size=self.dim)
        if parity == 0:
            v[self.even_dim:] = 0
        elif parity == 1:
            v[: self.even_dim] = 0
        return self.element(v)

    # -- bracket -------------------------------------------------------------

    def bracket(self, x: "Element", y: "Element") -> "Element":
        if x.algebra is not self or y.algebra is not self:
            raise OwnerMismatch("bracket arguments must share one algebra")
        out = np.einsum("i,ijk,j->k", x.coords, self.c, y.coords) % self.p
        return Element(self, out)

    def nested_bracket(self, args: Sequence["Element"]) -> "Element":
        """Left-nested iterated bracket [[...[[g1,g2],g3],...],gj]."""
        if len(args) < 2:
            raise TooFewArguments("nested bracket needs at least two arguments")
        acc = self.bracket(args[0], args[1])
        for g in args[2:]:
            acc = self.bracket(acc, g)
        return acc

    def ad_matrix(self, x: "Element") -> Matrix:
        """Matrix of y -> [x, y] in the full ordered basis (x must be even)."""
        if x.algebra is not self:
            raise OwnerMismatch("element belongs to a different algebra")
        if not x.is_even():
            raise OddArgument("ad_matrix is defined for even elements")
        return self.ad_matrix_any(x)

    def ad_matrix_any(self, x: "Element") -> Matrix:
        # Used internally where odd x is legitimate (nested p-brackets).
        m = np.einsum("i,ijk->kj", x.coords, self.c) % self.p
        return Matrix(m, self.p)

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        """Emit the ingestion schema: nonzero brackets for i <= j only (the
        super-antisymmetric completion restores the rest)."""
        brackets = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                vals = [
                    [int(self.c[i, j, k]), self.basis_names[k]]
                    for k in range(self.dim)
                    if self.c[i, j, k]
                ]
                if vals:
                    brackets.append(
                        {"i": self.basis_names[i], "j": self.basis_names[j], "value": vals}
                    )
        return {
            "p": self.p,
            "even": list(self.basis_names[: self.even_dim]),
            "odd": list(self.basis_names[self.even_dim:]),
            "brackets": brackets,
        }


@dataclass(frozen=True)
class Element:
    """Coordinate vector over the owner's ordered basis."""

    algebra: SuperAlgebra
    coords: np.ndarray = field(compare=False)

    def __post_init__(self):
        self.coords.setflags(write=False)

    def is_even(self) -> bool:
        return not self.coords[self.algebra.even_dim:].any()

    def is_odd(self) -> bool:
        return not self.coords[: self.algebra.even_dim].any()

    def is_zero(self) -> bool:
        return not self.coords.any()

    def even_part(self) -> "Element":
        v = self.coords.copy()
        v[self.algebra.even_dim:] = 0
        return Element(self.algebra, v)

    def odd_part(self) -> "Element":
        v = self.coords.copy()
        v[: self.algebra.even_dim] = 0
        return Element(self.algebra, v)

    def _match(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise OwnerMismatch("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._match(other)
        return Element(self.algebra, (self.coords + other.coords) % self.algebra.p)

    def __sub__(self, other: "Element") -> "Element":
        self._match(other)
        return Element(self.algebra, (self.coords - other.coords) % self.algebra.p)

    def __neg__(self) -> "Element":
        return Element(self.algebra, (-self.coords) % self.algebra.p)

    def scale(self, a: int) -> "Element":
        return Element(self.algebra, (self.coords * (int(a) % self.algebra.p)) % self.algebra.p)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and bool(np.array_equal(self.coords, other.coords))
        )

    def __repr__(self):
        terms = [
            f"{int(c)}*{self.algebra.basis_names[i]}"
            for i, c in enumerate(self.coords)
            if c
        ]
        return " + ".join(terms) if terms else "0"


def bracket(x: Element, y: Element) -> Element:
    return x.algebra.bracket(x, y)


def nested_bracket(*args: Element) -> Element:
    if not args:
        raise TooFewArguments("nested bracket needs at least two arguments")
    return args[0].algebra.nested_bracket(list(args))


def verify_superalgebra(A: SuperAlgebra) -> AxiomReport:
    """Exhaustively check super-antisymmetry, parity grading and graded
    Jacobi over all basis triples.  Failures are reported, not raised."""
    p = A.p
    c = A.c.astype(np.int64)
    par = A.parity
    # sign[i,j] = (-1)^{|i||j|}
    sign = np.where(np.outer(par, par) % 2 == 1, -1, 1).astype(np.int64)

    anti = (c + sign[:, :, None] * c.transpose(1, 0, 2)) % p
    bad = np.argwhere(anti != 0)
    if bad.size:
        return AxiomReport(False, "super-antisymmetry", tuple(int(v) for v in bad[0]))

    # c[i,j,k] = 0 unless |k| = |i| + |j| (mod 2)
    good_parity = (par[:, None, None] + par[None, :, None] - par[None, None, :]) % 2 == 0
    bad = np.argwhere((c != 0) & ~good_parity)
    if bad.size:
        return AxiomReport(False, "parity-grading", tuple(int(v) for v in bad[0]))

    # nested[i,j,k,:] = [[b_i,b_j],b_k]; the three cyclic terms are
    # sign(x,z)*nested[x,y,z] + sign(y,x)*nested[y,z,x] + sign(z,y)*nested[z,x,y]
    nested = np.einsum("ijl,lkm->ijkm", c, c) % p
    jac = (
        sign[:, None, :, None] * nested
        + sign[:, :, None, None] * nested.transpose(2, 0, 1, 3)
        + sign[None, :, :, None] * nested.transpose(1, 2, 0, 3)
    ) % p
    bad = np.argwhere(jac != 0)
    if bad.size:
        x, y, z, _ = bad[0]
        return AxiomReport(False, "graded-jacobi", (int(x), int(y), int(z)))
    return AxiomReport(True)


# -- JSON ingestion -----------------------------------------------------------


def superalgebra_from_json(doc: dict) -> SuperAlgebra:
    """Build an algebra from {"p", "even", "odd", "brackets"}.

    Unlisted pairs default to zero.  The super-antisymmetric completion is
    applied automatically; duplicate or mirror entries must agree with it or
    the document is rejected.
    """
    try:
        p = int(doc["p"])
        even = list(doc["even"])
        odd = list(doc["odd"])
        brackets = list(doc.get("brackets", []))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"missing or malformed field: {exc}") from exc
    names = even + odd
    if len(set(names)) != len(names):
        raise SchemaError("basis names must be distinct")
    index = {n: i for i, n in enumerate(names)}
    d = len(names)
    parity = [0] * len(even) + [1] * len(odd)
    c = np.zeros((d, d, d), dtype=np.int64)
    seen = set()
    for entry in brackets:
        try:
            i = index[entry["i"]]
            j = index[entry["j"]]
            value = entry["value"]
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed bracket entry {entry!r}") from exc
        if (i, j) in seen:
            raise SchemaError(f"duplicate bracket entry for ({entry['i']}, {entry['j']})")
        seen.add((i, j))
        vec = np.zeros(d, dtype=np.int64)
        for coeff, name in value:
            if name not in index:
                raise SchemaError(f"unknown basis name {name!r}")
            vec[index[name]] = (vec[index[name]] + int(coeff)) % p
        mirror = (-vec if (parity[i] * parity[j]) % 2 == 0 else vec) % p
        if (j, i) in seen:
            if not np.array_equal(c[j, i], mirror):
                raise SchemaError(
                    f"bracket ({entry['i']},{entry['j']}) contradicts its mirror entry"
                )
            # mirror already wrote c[i, j]
            continue
        c[i, j] = vec
        if i == j:
            if not np.array_equal(vec, mirror):
                raise SchemaError(
                    f"diagonal bracket ({entry['i']},{entry['i']}) must respect the sign rule"
                )
        else:
            c[j, i] = mirror
    return SuperAlgebra(p, even, odd, c)
