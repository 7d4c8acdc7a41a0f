"""Quadratic refinements of the symplectic pairing and the Arf invariant.

A form q is stored by its values on the standard basis and extended by

    q(sum c_i e_i) = sum c_i q(e_i) + sum_{i<j} c_i c_j e(e_i, e_j),

which makes q(u + v) = q(u) + q(v) + e(u, v) hold identically.  With the
interleaved basis the cross term collapses to sum_i c_{2i} c_{2i+1}, so
evaluation, translation and the Arf invariant are all word operations.
Enumerating all forms on a space is enumerating bit words of length 2n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .gf2 import (
    GF2Vector,
    Subspace,
    SymplecticSpace,
    even_positions_mask,
    swap_pairs,
    symplectic_basis,
)

VALUE_TABLE_MAX_DIM = 24


@dataclass(frozen=True)
class QuadraticForm:
    """Quadratic form refining the symplectic pairing of ``space``."""

    space: SymplecticSpace
    basis_values: int

    def __post_init__(self) -> None:
        if not 0 <= self.basis_values < (1 << self.space.dim):
            raise ValueError("basis values out of range for the space")

    def __call__(self, v: GF2Vector) -> int:
        if v.dim != self.space.dim:
            raise ValueError(f"dimension mismatch: {v.dim} vs {self.space.dim}")
        even = even_positions_mask(v.dim)
        linear = (self.basis_values & v.bits).bit_count()
        cross = (v.bits & (v.bits >> 1) & even).bit_count()
        return (linear + cross) & 1

    def value_on_basis(self, index: int) -> int:
        return (self.basis_values >> index) & 1

    def arf(self) -> int:
        """Arf invariant as sum_i q(a_i) q(b_i) over the hyperbolic pairs."""
        bv = self.basis_values
        return (bv & (bv >> 1) & even_positions_mask(self.space.dim)).bit_count() & 1

    def translate(self, alpha: GF2Vector) -> "QuadraticForm":
        """The form x -> q(x) + e(alpha, x); the affine action of the space."""
        if alpha.dim != self.space.dim:
            raise ValueError("dimension mismatch")
        return QuadraticForm(self.space, self.basis_values ^ swap_pairs(alpha.bits, alpha.dim))

    def restrict(self, subspace: Subspace) -> "QuadraticForm":
        """Restriction to a subspace on which the pairing is nondegenerate.

        The subspace is re-expressed in hyperbolic pairs (deterministically,
        ties broken by basis order) and the result lives on a fresh space of
        half that dimension.  When the ambient splits as S + S-perp the Arf
        invariant is additive over the two restrictions.
        """
        pairs = symplectic_basis(subspace)
        small = SymplecticSpace(len(pairs))
        bv = 0
        for i, (u, v) in enumerate(pairs):
            bv |= self(u) << (2 * i)
            bv |= self(v) << (2 * i + 1)
        return QuadraticForm(small, bv)


def all_forms(space: SymplecticSpace) -> Iterator[QuadraticForm]:
    """All 2^(2n) quadratic forms on the space, in basis-value order."""
    for bv in range(1 << space.dim):
        yield QuadraticForm(space, bv)


def affine_difference(q1: QuadraticForm, q2: QuadraticForm) -> GF2Vector:
    """The unique v with q2 = q1.translate(v).

    The difference of two forms is the linear functional with basis values
    q1(e_i) + q2(e_i); against the interleaved pairing its dual vector is
    the pair-swap of that word.
    """
    if q1.space != q2.space:
        raise ValueError("forms live on different spaces")
    diff = q1.basis_values ^ q2.basis_values
    return GF2Vector(swap_pairs(diff, q1.space.dim), q1.space.dim)


def value_table(q: QuadraticForm) -> int:
    """Values of q over all vectors, packed into one word (bit v = q(v)).

    Built by doubling along the basis: extending by e_j adds
    q(e_j) + e(v, e_j) to the previous block, and e(v, e_j) is the partner
    bit of v, which for the interleaved order is constant (j even) or a
    half-block pattern (j odd).
    """
    dim = q.space.dim
    if dim > VALUE_TABLE_MAX_DIM:
        raise ValueError(f"value table supported up to dimension {VALUE_TABLE_MAX_DIM}")
    table = 0
    for j in range(dim):
        size = 1 << j
        block = (1 << size) - 1
        carry = block if (q.basis_values >> j) & 1 else 0
        if j % 2 == 1:
            half = 1 << (j - 1)
            carry ^= ((1 << half) - 1) << half
        table |= ((table ^ carry) & block) << size
    return table


def zero_count(q: QuadraticForm) -> int:
    """Number of vectors on which q vanishes (exhaustive table)."""
    dim = q.space.dim
    return (1 << dim) - value_table(q).bit_count()


def arf_by_zero_count(q: QuadraticForm) -> int:
    """Independent Arf evaluation: the invariant is 0 exactly when q has
    2^(2n-1) + 2^(n-1) zeros.  Never used as the primary path."""
    dim = q.space.dim
    if dim == 0:
        return 0
    zeros = zero_count(q)
    majority = 1 << (dim - 1)
    gap = 1 << (dim // 2 - 1)
    if zeros == majority + gap:
        return 0
    if zeros == majority - gap:
        return 1
    raise AssertionError("zero count incompatible with a quadratic refinement")
