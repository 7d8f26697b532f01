"""Intersection theory of quantum ruled surfaces.

A quantum ruled surface is the noncommutative projectivization
``P(E) -> X`` of a rank-2 bimodule over a smooth projective curve of
genus g, determined together with an invertible rank-1 class Q.  Its
Grothendieck group is K0(X)[T]/(1 - E T + Q T^2), free over K0(X) with
basis {1, T}, where the exponent-i coefficient of a class records a
pullback from the curve twisted by -i.

The Euler pairing of two surface classes is evaluated by pushing the
second argument down to the curve.  Twisting both arguments by the same
amount is an auto-equivalence, so only the relative twist matters, and
the derived pushforward of a twisted pullback is controlled by the
graded pieces B_n of the homogeneous coordinate ring: the direct image
contributes B_n, the first derived image contributes the dual of
B_{-2-n} (nothing survives at n = -1).  Concretely

    (a T^i, b T^j)  =  euler_form_base(a, b*B_{i-j} - b*dual(B_{j-i-2}))

extended biadditively, with B_k = 0 for k < 0.

Intersection numbers of curve-like (total rank zero) classes are the
negated Euler pairing.  On the rank-zero part of the lattice, the
radical of the pairing is spanned by fiber - fiber(-1); modding it out
leaves a rank-2 lattice with basis a fiber and the section class
H = [O] - [O(-1)], whose intersection matrix is [[0, 1], [1, deg E]].
The integer e = -H.H = -deg E is the analogue of the classical
numerical invariant of a ruled surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import K0Class, curve, euler_form_base
from .bundle import PnBundleSpec
from .errors import BaseMismatch, RankConstraintViolation
from .intlinalg import integer_kernel
from .series import LaurentPoly, hilbert_coeff_ruled


@dataclass(frozen=True)
class RuledSurface:
    """A quantum ruled surface over a genus-g curve.

    ``E`` is the rank-2 class of the defining bimodule pushed to the
    curve, ``Q`` the rank-1 class of the invertible relation submodule.
    """

    genus: int
    E: K0Class
    Q: K0Class

    def __post_init__(self):
        base = curve(self.genus)
        if self.E.base != base or self.Q.base != base:
            raise BaseMismatch(f"E and Q must live over {base!r}")
        if self.E.rank != 2:
            raise RankConstraintViolation(f"rank(E) must be 2, got {self.E.rank}")
        if self.Q.rank != 1:
            raise RankConstraintViolation(f"rank(Q) must be 1, got {self.Q.rank}")

    @classmethod
    def from_degrees(cls, genus: int, deg_e: int, deg_q: int) -> RuledSurface:
        x = curve(genus)
        return cls(genus, x.k0(2, deg_e), x.k0(1, deg_q))

    @property
    def base(self):
        return self.E.base

    def hilbert_coeff(self, n: int) -> K0Class:
        """Class B_n of the degree-n piece of the coordinate ring."""
        return hilbert_coeff_ruled(self.E, self.Q, n)

    def bundle_spec(self) -> PnBundleSpec:
        return PnBundleSpec(self.base, 1, (self.base.one, self.E, self.Q))

    def relation_poly(self) -> LaurentPoly:
        """1 - E T + Q T^2, the generator of the relation ideal."""
        return self.bundle_spec().relation_poly()

    # -- classes -----------------------------------------------------

    def class_of(self, terms) -> SurfaceClass:
        rep = terms if isinstance(terms, LaurentPoly) else LaurentPoly(self.base, terms)
        return SurfaceClass(self, rep)

    def zero_class(self) -> SurfaceClass:
        return SurfaceClass(self, LaurentPoly.zero(self.base))

    def structure_class(self, n: int = 0) -> SurfaceClass:
        """Class of O(n); the exponent -n carries the identity coefficient."""
        return self.class_of({-n: self.base.one})

    def fiber_class(self) -> SurfaceClass:
        """Pullback of a point class: (0,1) in degree zero."""
        return self.class_of({0: self.base.k0(0, 1)})

    def section_class(self) -> SurfaceClass:
        """The K-theoretic section H = [O] - [O(-1)]."""
        return self.class_of({0: self.base.one, 1: -self.base.one})

    # -- pairings ----------------------------------------------------

    def pushforward(self, c: SurfaceClass) -> K0Class:
        """K-theoretic derived pushforward to the curve, [f_*] - [R^1 f_*]."""
        self._require_own(c)
        total = self.base.zero
        for i, coeff in c.rep.terms():
            total = total + coeff * (self.hilbert_coeff(-i) - self.hilbert_coeff(i - 2).dual())
        return total

    def euler_form(self, a: SurfaceClass, b: SurfaceClass) -> int:
        """Alternating sum of Ext dimensions between two surface classes."""
        self._require_own(a)
        self._require_own(b)
        total = 0
        for i, ai in a.rep.terms():
            for j, bj in b.rep.terms():
                push = bj * self.hilbert_coeff(i - j) - bj * self.hilbert_coeff(j - i - 2).dual()
                total += euler_form_base(ai, push)
        return total

    def intersect(self, a: SurfaceClass, b: SurfaceClass) -> int:
        """Intersection number of curve-like classes: minus the Euler form."""
        return -self.euler_form(a, b)

    def e_invariant(self) -> int:
        """-H.H = -deg E, the numerical invariant of the ruling."""
        return -self.E.degree

    def neron_severi(self) -> IntersectionLattice:
        """Rank-zero lattice, its Euler Gram matrix, radical, and quotient.

        The rank-zero subgroup of the surface's Grothendieck lattice has
        basis {fiber, fiber - fiber(-1), H}.  The two-sided radical of
        the Euler pairing is computed as the integer kernel of the Gram
        matrix stacked on its transpose; the quotient is the
        Neron-Severi lattice with basis {fiber, H} and the intersection
        (negated Euler) pairing.
        """
        u = self.fiber_class()
        v = u - u.twist(1)
        w = self.section_class()
        basis = (u, v, w)
        names = ("fiber", "fiber.H", "H")
        gram = tuple(tuple(self.euler_form(r, c) for c in basis) for r in basis)
        stacked = [list(row) for row in gram]
        stacked += [[gram[i][j] for i in range(3)] for j in range(3)]
        radical = tuple(tuple(vec) for vec in integer_kernel(stacked))
        if not _complements_to_unimodular(radical):
            raise RuntimeError("radical does not complement the fiber and section classes")
        ns_gram = (
            (-gram[0][0], -gram[0][2]),
            (-gram[2][0], -gram[2][2]),
        )
        return IntersectionLattice(basis, names, gram, radical, (u, w), ("fiber", "H"), ns_gram)

    def _require_own(self, c: SurfaceClass) -> None:
        if c.surface != self:
            raise BaseMismatch("class belongs to a different surface")


def _complements_to_unimodular(radical) -> bool:
    # {fiber, radical..., H} must be a basis of the full rank-zero lattice
    if len(radical) != 1:
        return False
    rows = [[1, 0, 0], list(radical[0]), [0, 0, 1]]
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    return det in (1, -1)


@dataclass(frozen=True)
class SurfaceClass:
    """A Grothendieck class on a ruled surface.

    ``rep`` is a Laurent polynomial whose exponent-i coefficient is the
    class of a pullback from the curve twisted by -i; representatives are
    not normalized modulo the relation ideal, and do not need to be for
    any pairing computed here.
    """

    surface: RuledSurface
    rep: LaurentPoly

    def __post_init__(self):
        if self.rep.base != self.surface.base:
            raise BaseMismatch(f"representative over {self.rep.base!r}, surface over {self.surface.base!r}")

    def coeff(self, i: int) -> K0Class:
        return self.rep.coeff(i)

    def rank(self) -> int:
        """Total rank: the sum of the ranks of all coefficients."""
        return sum(c.rank for _, c in self.rep.terms())

    def twist(self, k: int) -> SurfaceClass:
        """Degree shift M -> M(-k)."""
        return SurfaceClass(self.surface, self.rep.shift(k))

    def pushforward(self) -> K0Class:
        return self.surface.pushforward(self)

    def _require_same_surface(self, other: SurfaceClass) -> None:
        if self.surface != other.surface:
            raise BaseMismatch("classes belong to different surfaces")

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        self._require_same_surface(other)
        return SurfaceClass(self.surface, self.rep + other.rep)

    def __sub__(self, other: SurfaceClass) -> SurfaceClass:
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        self._require_same_surface(other)
        return SurfaceClass(self.surface, self.rep - other.rep)

    def __neg__(self) -> SurfaceClass:
        return SurfaceClass(self.surface, -self.rep)

    def __mul__(self, other):
        if isinstance(other, int):
            return SurfaceClass(self.surface, self.rep * other)
        return NotImplemented

    __rmul__ = __mul__


@dataclass(frozen=True)
class IntersectionLattice:
    """Gram data of the rank-zero lattice of a ruled surface.

    ``gram`` is the Euler pairing on ``basis``; ``radical_basis`` holds
    coordinate vectors (in that basis) spanning the two-sided radical;
    ``ns_gram`` is the intersection pairing on the quotient basis
    ``ns_basis`` = (fiber, H).
    """

    basis: tuple[SurfaceClass, ...]
    basis_names: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    radical_basis: tuple[tuple[int, ...], ...]
    ns_basis: tuple[SurfaceClass, ...]
    ns_basis_names: tuple[str, ...]
    ns_gram: tuple[tuple[int, ...], ...]
