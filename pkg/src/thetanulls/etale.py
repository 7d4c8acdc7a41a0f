"""Invariant theta characteristics on an unramified (fixed-point-free) cover.

The cover of a genus-b base is cut out by a nonzero 2-torsion class in
V = GF(2)^(2b); the covering curve has genus g = 2b - 1 and carries
2^(g+1) invariant theta characteristics, falling into two families:

* square roots of K_B twisted by the cover class, identified in pairs by
  the twist -- always even, modelled here as abstract labels in V modulo
  the cover class;
* pullbacks of theta characteristics of the base, i.e. quadratic forms q
  on V modulo translation by the cover class -- with parity q(cover).

The vanishing family is the forms with q(cover) = 0 and Arf invariant 1;
it sits inside the affine subspace {q(cover) = 0} of size 2^(g-1), all
of whose members are even, and is syzygetic (triple products stay even).
Only the generic vanishing mechanism (odd base bundle) is modelled;
accidental vanishing on special bases is out of scope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gf2 import GF2Vector, SymplecticSpace, swap_pairs
from .quadforms import QuadraticForm, affine_difference


@dataclass(frozen=True)
class EtaleCoverSpec:
    """An unramified double cover: base genus and the 2-torsion cover class."""

    b: int
    cover_class: GF2Vector

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ValueError("base genus must be at least 1")
        if self.cover_class.dim != 2 * self.b:
            raise ValueError("cover class must live in GF(2)^(2b)")
        if self.cover_class.is_zero:
            raise ValueError("the cover class of a connected cover is nonzero")

    @property
    def g(self) -> int:
        return 2 * self.b - 1

    @property
    def space(self) -> SymplecticSpace:
        return SymplecticSpace(self.b)

    @classmethod
    def default(cls, b: int) -> "EtaleCoverSpec":
        """Cover cut out by the first basis vector; counts are independent
        of the choice."""
        return cls(b, GF2Vector(1, 2 * b))


@dataclass(frozen=True)
class EtaleThetaChar:
    """Tagged union: a twist-class label (root case) or a quadratic form."""

    root_label: GF2Vector | None = None
    form: QuadraticForm | None = None

    def __post_init__(self) -> None:
        if (self.root_label is None) == (self.form is None):
            raise ValueError("exactly one of root_label and form must be set")

    @property
    def is_root_case(self) -> bool:
        return self.root_label is not None


def canonical_root(spec: EtaleCoverSpec, label: GF2Vector) -> EtaleThetaChar:
    """Root-case representative: the smaller of the label and its twist."""
    return EtaleThetaChar(root_label=min(label, label + spec.cover_class))


def canonical_form(spec: EtaleCoverSpec, q: QuadraticForm) -> EtaleThetaChar:
    """Form-case representative: the smaller basis-value word of q and its
    translate by the cover class."""
    return EtaleThetaChar(form=min(q, q.translate(spec.cover_class), key=lambda f: f.basis_values))


def enumerate_etale(spec: EtaleCoverSpec) -> list[EtaleThetaChar]:
    """All 2^(g+1) invariant theta characteristics, root cases first."""
    dim = 2 * spec.b
    rho = spec.cover_class.bits
    out = [
        EtaleThetaChar(root_label=GF2Vector(bits, dim))
        for bits in range(1 << dim)
        if bits < bits ^ rho
    ]
    shift = swap_pairs(rho, dim)
    space = spec.space
    out.extend(
        EtaleThetaChar(form=QuadraticForm(space, bv))
        for bv in range(1 << dim)
        if bv < bv ^ shift
    )
    return out


def parity_etale(spec: EtaleCoverSpec, tc: EtaleThetaChar) -> int:
    """Root cases are even; form cases have parity q(cover)."""
    if tc.is_root_case:
        return 0
    return tc.form(spec.cover_class)


def vanishing_thetanulls(spec: EtaleCoverSpec) -> list[EtaleThetaChar]:
    """The canonical forms with q(cover) = 0 and Arf invariant 1.

    Well defined on representatives: translating by the cover class
    preserves q(cover), and preserves the Arf invariant exactly when
    q(cover) = 0.  Empty for a genus-1 base.
    """
    return [
        tc
        for tc in enumerate_etale(spec)
        if not tc.is_root_case and tc.form(spec.cover_class) == 0 and tc.form.arf() == 1
    ]


def count_vanishing(b: int) -> int:
    """Closed form 2^(b-2) (2^(b-1) - 1) = 2^(g-2) - 2^((g-3)/2)."""
    if b < 1:
        raise ValueError("base genus must be at least 1")
    if b < 2:
        return 0
    return (1 << (b - 2)) * ((1 << (b - 1)) - 1)


def even_subspace(spec: EtaleCoverSpec) -> list[EtaleThetaChar]:
    """The affine subspace {q(cover) = 0} of size 2^(g-1), all even; it
    contains every vanishing thetanull and is closed under triple
    products."""
    return [
        tc
        for tc in enumerate_etale(spec)
        if not tc.is_root_case and tc.form(spec.cover_class) == 0
    ]


def _require_forms(*chars: EtaleThetaChar) -> list[QuadraticForm]:
    forms = []
    for tc in chars:
        if tc.is_root_case:
            raise ValueError("triple products are only defined within the form case")
        forms.append(tc.form)
    return forms


def triple_product(
    spec: EtaleCoverSpec, t1: EtaleThetaChar, t2: EtaleThetaChar, t3: EtaleThetaChar
) -> EtaleThetaChar:
    """The theta characteristic t2 (x) t3 (x) t1^{-1} via the affine structure."""
    q1, q2, q3 = _require_forms(t1, t2, t3)
    step2 = affine_difference(q1, q2)
    step3 = affine_difference(q1, q3)
    return canonical_form(spec, q1.translate(step2 + step3))


def triple_parity(
    spec: EtaleCoverSpec, t1: EtaleThetaChar, t2: EtaleThetaChar, t3: EtaleThetaChar
) -> int:
    """Parity of the triple product; 0 whenever all three factors lie in
    the q(cover) = 0 subspace, which is the syzygetic property."""
    q1, q2, q3 = _require_forms(t1, t2, t3)
    step2 = affine_difference(q1, q2)
    step3 = affine_difference(q1, q3)
    return q1.translate(step2 + step3)(spec.cover_class)


def etale_report(spec: EtaleCoverSpec, check_syzygies: bool = True) -> dict:
    """Counts and structural checks for one cover, JSON-ready."""
    chars = enumerate_etale(spec)
    parities = [parity_etale(spec, tc) for tc in chars]
    vanishing = vanishing_thetanulls(spec)
    subspace = even_subspace(spec)
    report = {
        "b": spec.b,
        "g": spec.g,
        "total": len(chars),
        "even": parities.count(0),
        "odd": parities.count(1),
        "T_size": len(vanishing),
        "subspace_dim": spec.g - 1,
        "subspace_size": len(subspace),
    }
    if check_syzygies:
        report["syzygetic_ok"] = all(
            triple_parity(spec, *triple) == 0
            for triple in itertools.combinations(vanishing, 3)
        )
    return report
