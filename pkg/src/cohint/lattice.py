"""Character/cocharacter lattice data: weight multisets, symmetry classes,
pairings and the per-cocharacter dimension counts.

Weights and cocharacters both live in Z^n written in one fixed basis, so the
pairing between them is the plain dot product and every computation below is
integer arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InputError, InternalCheckError
from .matrices import IntMatrix, det, mat_vec

Weight = tuple[int, ...]
Cocharacter = tuple[int, ...]

DEFAULT_GROUP_CAP = 10080


class SymmetryClass(enum.Enum):
    SYMMETRIC = "symmetric"
    WEAKLY_SYMMETRIC = "weakly_symmetric"
    NOT_WEAKLY_SYMMETRIC = "not_weakly_symmetric"


@dataclass(frozen=True)
class WeightMultiset:
    """Weights with multiplicities, stored deduplicated in lexicographic order."""

    entries: tuple[tuple[Weight, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "WeightMultiset":
        acc: dict[Weight, int] = {}
        for coords, mult in pairs:
            w = tuple(int(c) for c in coords)
            mult = int(mult)
            if mult < 1:
                raise InputError(f"multiplicity must be >= 1, got {mult} for {w}")
            acc[w] = acc.get(w, 0) + mult
        return cls(tuple(sorted(acc.items())))

    def __iter__(self):
        return iter(self.entries)

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def supports(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)

    def nonzero_supports(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries if any(w))

    def multiplicity(self, w: Weight) -> int:
        for v, m in self.entries:
            if v == w:
                return m
        return 0

    def negated(self) -> "WeightMultiset":
        return WeightMultiset.from_pairs(
            (tuple(-c for c in w), m) for w, m in self.entries
        )

    def transformed(self, matrix: IntMatrix) -> "WeightMultiset":
        return WeightMultiset.from_pairs(
            (mat_vec(matrix, w), m) for w, m in self.entries
        )

    def with_multiplicity(self):
        """Iterate weights repeated according to multiplicity."""
        for w, m in self.entries:
            for _ in range(m):
                yield w


def pairing(lam: Cocharacter, alpha: Weight) -> int:
    if len(lam) != len(alpha):
        raise InputError(
            f"pairing length mismatch: cocharacter rank {len(lam)} vs weight rank {len(alpha)}"
        )
    return sum(a * b for a, b in zip(lam, alpha))


def primitive_ray(alpha: Weight) -> Weight:
    """Primitive direction of a nonzero weight: divide by the gcd, keep the sign."""
    g = math.gcd(*(abs(c) for c in alpha))
    return tuple(c // g for c in alpha)


@dataclass(frozen=True)
class GroupData:
    """Lattice-level description of a reductive group: rank, Weyl generators
    acting on the character lattice, and the adjoint weight multiset."""

    name: str
    rank: int
    weyl_generators: tuple[IntMatrix, ...]
    g_weights: WeightMultiset

    @property
    def dim(self) -> int:
        return self.g_weights.total()

    def validate(self, cap: int = DEFAULT_GROUP_CAP) -> list[str]:
        """Check all structural invariants; returns non-fatal warnings."""
        from .weyl import enumerate_group  # local import to avoid a cycle

        if self.rank < 1:
            raise InputError("rank must be a positive integer")
        for k, gen in enumerate(self.weyl_generators):
            if len(gen) != self.rank or any(len(row) != self.rank for row in gen):
                raise InputError(f"weyl_generators[{k}] is not a {self.rank}x{self.rank} matrix")
            if abs(det(gen)) != 1:
                raise InputError(f"weyl_generators[{k}] is not invertible over the integers")
        for w, _ in self.g_weights:
            if len(w) != self.rank:
                raise InputError(f"g_weights entry {w} has wrong length (rank is {self.rank})")
        enumerate_group(self.weyl_generators, self.rank, cap)
        for k, gen in enumerate(self.weyl_generators):
            if self.g_weights.transformed(gen) != self.g_weights:
                raise InputError(f"g_weights are not stable under weyl_generators[{k}]")
        zero = tuple(0 for _ in range(self.rank))
        if self.g_weights.multiplicity(zero) != self.rank:
            raise InputError(
                "g_weights must contain the zero weight with multiplicity equal to the rank"
            )
        if self.g_weights.negated() != self.g_weights:
            raise InputError("g_weights must equal their negation as a multiset")
        warnings = []
        for w, m in self.g_weights:
            if any(w) and m > 1:
                warnings.append(
                    f"nonzero adjoint weight {w} has multiplicity {m}; "
                    "formulas remain well-defined but the data is unusual"
                )
        return warnings


@dataclass(frozen=True)
class RepresentationData:
    """Lattice-level description of a representation: its weight multiset."""

    v_weights: WeightMultiset

    @property
    def dim(self) -> int:
        return self.v_weights.total()

    def validate(self, group: GroupData) -> None:
        for w, _ in self.v_weights:
            if len(w) != group.rank:
                raise InputError(f"v_weights entry {w} has wrong length (rank is {group.rank})")
        for k, gen in enumerate(group.weyl_generators):
            if self.v_weights.transformed(gen) != self.v_weights:
                raise InputError(f"v_weights are not stable under weyl_generators[{k}]")


def symmetry_class(rep: RepresentationData) -> SymmetryClass:
    ws = rep.v_weights
    if ws.negated() == ws:
        return SymmetryClass.SYMMETRIC
    rays: dict[Weight, int] = {}
    for w, m in ws:
        key = primitive_ray(w) if any(w) else w
        rays[key] = rays.get(key, 0) + m
    neg_rays = {tuple(-c for c in k): m for k, m in rays.items()}
    if rays == neg_rays:
        return SymmetryClass.WEAKLY_SYMMETRIC
    return SymmetryClass.NOT_WEAKLY_SYMMETRIC


def slice_weights(
    ws: WeightMultiset, lam: Cocharacter
) -> tuple[WeightMultiset, WeightMultiset, WeightMultiset]:
    """Partition a weight multiset by the sign of the pairing with lam."""
    neg, zero, pos = [], [], []
    for w, m in ws:
        p = pairing(lam, w)
        (neg if p < 0 else zero if p == 0 else pos).append((w, m))
    empty = WeightMultiset(())
    return (
        WeightMultiset.from_pairs(neg) if neg else empty,
        WeightMultiset.from_pairs(zero) if zero else empty,
        WeightMultiset.from_pairs(pos) if pos else empty,
    )


@dataclass(frozen=True)
class NumericInvariants:
    dim_v_fixed: int
    dim_g_fixed: int
    d_lambda: int
    r_lambda: int


def numeric_invariants(
    group: GroupData, rep: RepresentationData, lam: Cocharacter
) -> NumericInvariants:
    """Fixed-space dimensions and the shifts d_lambda, r_lambda at a cocharacter."""
    if symmetry_class(rep) is SymmetryClass.NOT_WEAKLY_SYMMETRIC:
        raise InputError("numeric invariants require a weakly symmetric weight multiset")
    _, v_zero, v_pos = slice_weights(rep.v_weights, lam)
    _, g_zero, g_pos = slice_weights(group.g_weights, lam)
    dim_v = v_zero.total()
    dim_g = g_zero.total()
    d_lambda = dim_v - dim_g
    r_lambda = v_pos.total() - g_pos.total()
    d0 = rep.dim - group.dim
    if d_lambda + 2 * r_lambda != d0:
        raise InternalCheckError(
            f"dimension identity failed at {lam}: d={d_lambda}, r={r_lambda}, expected {d0}"
        )
    return NumericInvariants(dim_v, dim_g, d_lambda, r_lambda)
