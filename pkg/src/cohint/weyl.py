"""Finite integer matrix group machinery: closure enumeration, stabilizers,
cosets, the averaged invariant form and exact Molien series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .lattice import Cocharacter, Weight, DEFAULT_GROUP_CAP
from .matrices import (
    IntMatrix,
    QMatrix,
    det_one_minus_q,
    identity,
    int_inverse,
    mat_mul,
    mat_vec,
    series_inverse,
    transpose,
)


@dataclass(frozen=True)
class WeylElement:
    """One group element: its action on the character lattice and the
    contragredient (inverse-transpose) action on the cocharacter lattice."""

    index: int
    matrix: IntMatrix
    cochar_matrix: IntMatrix


class WeylGroup:
    """Fully enumerated finite matrix group with multiplication tables.

    Elements are ordered by their matrix entries (flattened, lexicographic),
    which fixes every downstream basis and coset choice.
    """

    def __init__(self, matrices: Sequence[IntMatrix], rank: int):
        mats = sorted(set(matrices))
        self.rank = rank
        self.elements = tuple(
            WeylElement(i, m, transpose(int_inverse(m))) for i, m in enumerate(mats)
        )
        self._index = {m: i for i, m in enumerate(mats)}
        self.identity_index = self._index[identity(rank)]
        order = len(mats)
        self.mul = tuple(
            tuple(self._index[mat_mul(a, b)] for b in mats) for a in mats
        )
        inv = [0] * order
        for i in range(order):
            inv[i] = next(j for j in range(order) if self.mul[i][j] == self.identity_index)
        self.inv = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element(self, i: int) -> WeylElement:
        return self.elements[i]

    def product(self, i: int, j: int) -> int:
        return self.mul[i][j]

    def subgroup(self, members) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(members))))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))


@dataclass(frozen=True)
class Subgroup:
    """Index mask over one enumerated parent group."""

    parent: WeylGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, index: int) -> bool:
        return index in set(self.members)

    def elements(self) -> tuple[WeylElement, ...]:
        return tuple(self.parent.elements[i] for i in self.members)

    def is_closed(self) -> bool:
        mset = set(self.members)
        if self.parent.identity_index not in mset:
            return False
        return all(self.parent.mul[a][b] in mset for a in mset for b in mset)


def enumerate_group(
    generators: Sequence[IntMatrix], rank: int, cap: int = DEFAULT_GROUP_CAP
) -> WeylGroup:
    """Breadth-first closure of the generators; errors out past the cap."""
    gens = [tuple(tuple(int(x) for x in row) for row in g) for g in generators]
    for g in gens:
        try:
            int_inverse(g)
        except ValueError as exc:
            raise InputError(f"generator {g} is not invertible over the integers") from exc
    seen = {identity(rank)}
    frontier = list(seen)
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = mat_mul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
                    if len(seen) > cap:
                        raise InputError(
                            f"group not finite within cap (cap={cap}); "
                            "check the generators or raise --group-cap"
                        )
        frontier = new
    return WeylGroup(tuple(seen), rank)


def char_action(w: WeylElement, alpha: Weight) -> Weight:
    return mat_vec(w.matrix, alpha)


def cochar_action(w: WeylElement, lam: Cocharacter) -> Cocharacter:
    return mat_vec(w.cochar_matrix, lam)


def point_stabilizer(group: WeylGroup, lam: Cocharacter) -> Subgroup:
    """Elements fixing the cocharacter lam."""
    lam = tuple(lam)
    return group.subgroup(
        w.index for w in group.elements if cochar_action(w, lam) == lam
    )


def set_stabilizer(
    group: WeylGroup, zero_set: tuple[Sequence[Weight], Sequence[Weight]]
) -> Subgroup:
    """Elements mapping each of the two weight sets onto itself."""
    zero_v, zero_g = (frozenset(map(tuple, s)) for s in zero_set)
    members = []
    for w in group.elements:
        if (
            frozenset(char_action(w, a) for a in zero_v) == zero_v
            and frozenset(char_action(w, a) for a in zero_g) == zero_g
        ):
            members.append(w.index)
    return group.subgroup(members)


def coset_representatives(h: Subgroup, k: Subgroup) -> tuple[WeylElement, ...]:
    """One representative per left coset wH inside K: the identity for its own
    coset, otherwise the least element index."""
    if h.parent is not k.parent:
        raise InputError("subgroups must share the same parent group")
    hset = set(h.members)
    if not hset <= set(k.members):
        raise InputError("H is not contained in K")
    group = h.parent
    order = sorted(set(k.members), key=lambda i: (i != group.identity_index, i))
    assigned: set[int] = set()
    reps = []
    for idx in order:
        if idx in assigned:
            continue
        reps.append(group.elements[idx])
        assigned.update(group.mul[idx][j] for j in h.members)
    return tuple(reps)


def averaged_form(group: WeylGroup) -> QMatrix:
    """The positive definite invariant form (1/|W|) sum_w w^T w on characters."""
    n = group.rank
    acc = [[Fraction(0)] * n for _ in range(n)]
    for w in group.elements:
        m = w.matrix
        for i in range(n):
            for j in range(n):
                acc[i][j] += sum(m[k][i] * m[k][j] for k in range(n))
    scale = Fraction(1, group.order)
    return tuple(tuple(x * scale for x in row) for row in acc)


def molien_coefficients(
    elements: Sequence[tuple[Sequence[Sequence], Fraction | int]], cutoff: int
) -> tuple[Fraction, ...]:
    """Series coefficients of (1/N) sum_i s_i / det(I - q M_i) through q^cutoff."""
    n = len(elements)
    if n == 0:
        raise InputError("molien_coefficients needs at least one element")
    total = [Fraction(0)] * (cutoff + 1)
    for matrix, scalar in elements:
        inv = series_inverse(det_one_minus_q(matrix), cutoff)
        s = Fraction(scalar)
        for p in range(cutoff + 1):
            total[p] += s * inv[p]
    scale = Fraction(1, n)
    return tuple(x * scale for x in total)
