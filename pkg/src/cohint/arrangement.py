"""Stratification of cocharacter space by the weight hyperplane arrangement.

A stratum is a flat of the arrangement cut out by the nonzero weights of the
representation and the adjoint representation, together with the weights
vanishing on it, a generic integer representative and the attached dimension
counts.  Flats are canonicalized as Hermite-normal-form bases of saturated
integer sublattices, so equality of strata is plain tuple equality.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from .errors import InputError, InternalCheckError
from .lattice import (
    Cocharacter,
    GroupData,
    NumericInvariants,
    RepresentationData,
    SymmetryClass,
    Weight,
    numeric_invariants,
    pairing,
    primitive_ray,
    symmetry_class,
    DEFAULT_GROUP_CAP,
)
from .matrices import IntMatrix, dot, hnf, int_kernel, saturate_span
from .weyl import (
    Subgroup,
    WeylGroup,
    cochar_action,
    enumerate_group,
    point_stabilizer,
    set_stabilizer,
)


@dataclass(frozen=True)
class Flat:
    """Saturated integer basis (HNF rows) of a rational subspace of
    cocharacter space; two flats are equal iff the bases are identical."""

    basis: IntMatrix

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class Stratum:
    index: int
    flat: Flat
    zero_v: tuple[Weight, ...]
    zero_g: tuple[Weight, ...]
    rep: Cocharacter
    dims: NumericInvariants


def leq(a: Stratum, b: Stratum) -> bool:
    """The stratum order: a <= b iff both zero-sets of a sit inside b's."""
    return set(a.zero_v) <= set(b.zero_v) and set(a.zero_g) <= set(b.zero_g)


@dataclass(frozen=True)
class Stratification:
    group: GroupData
    rep: RepresentationData
    weyl: WeylGroup
    hyperplanes: tuple[Weight, ...]
    strata: tuple[Stratum, ...]
    order: tuple[tuple[bool, ...], ...]
    orbits: tuple[tuple[int, ...], ...]
    orbit_of: tuple[int, ...]
    point_stabilizers: tuple[Subgroup, ...]
    set_stabilizers: tuple[Subgroup, ...]
    u_bases: tuple[IntMatrix, ...]
    top_index: int

    def leq(self, i: int, j: int) -> bool:
        return self.order[i][j]

    def strictly_below(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(len(self.strata)) if j != i and self.order[j][i])

    @property
    def top(self) -> Stratum:
        return self.strata[self.top_index]

    def orbit_representatives(self) -> tuple[Stratum, ...]:
        return tuple(self.strata[orbit[0]] for orbit in self.orbits)

    def all_supports(self) -> tuple[Weight, ...]:
        return tuple(
            sorted(
                set(self.rep.v_weights.nonzero_supports())
                | set(self.group.g_weights.nonzero_supports())
            )
        )


def representative_cocharacter(
    flat: Flat, nonzero_supports, zero_supports, rank: int | None = None
) -> Cocharacter:
    """Deterministic generic integer point of the flat: coefficients
    (1, M, M^2, ...) over the basis rows for growing M.  The zero flat gets
    the zero cocharacter."""
    if not flat.basis:
        if rank is None:
            raise InputError("the zero flat needs an explicit rank")
        return (0,) * rank
    n = len(flat.basis[0])
    k = len(flat.basis)
    outside = [u for u in nonzero_supports if u not in set(zero_supports)]
    m = 1
    while True:
        lam = tuple(
            sum(m**i * flat.basis[i][j] for i in range(k)) for j in range(n)
        )
        if all(dot(lam, u) != 0 for u in outside):
            return lam
        m += 1


def align_representative(child: Stratum, parent_rep: Cocharacter, supports) -> Cocharacter:
    """Representative of the child's class whose pairings agree in sign with
    parent_rep wherever parent_rep does not vanish (child + b * parent search)."""
    base = child.rep
    if not any(parent_rep):
        return base
    b = 1
    while True:
        nu = tuple(x + b * y for x, y in zip(base, parent_rep))
        ok = True
        for u in supports:
            pp = dot(parent_rep, u)
            if pp != 0 and (dot(nu, u) > 0) != (pp > 0):
                ok = False
                break
            if pp != 0 and dot(nu, u) == 0:
                ok = False
                break
        if ok:
            return nu
        b *= 2


def with_representative(strat: Stratification, stratum: Stratum, rep: Cocharacter) -> Stratum:
    """Copy of the stratum carrying another valid generic representative."""
    for u in strat.all_supports():
        vanishes = dot(rep, u) == 0
        in_zero = u in set(stratum.zero_v) | set(stratum.zero_g)
        if vanishes != in_zero:
            raise InputError(f"{rep} is not a generic representative of stratum {stratum.index}")
    dims = numeric_invariants(strat.group, strat.rep, rep)
    return dataclasses.replace(stratum, rep=rep, dims=dims)


def generic_points(supports, n: int, count: int, start: int = 2):
    """Deterministic rational points (1, t, t^2, ...) avoiding all the given
    weight hyperplanes; used for evaluation oracles."""
    points = []
    t = start
    while len(points) < count:
        pt = tuple(t**i for i in range(n))
        if all(dot(pt, u) != 0 for u in supports if any(u)):
            points.append(pt)
        t += 1
    return tuple(points)


def enumerate_strata(
    group: GroupData,
    rep: RepresentationData,
    cap: int = DEFAULT_GROUP_CAP,
) -> Stratification:
    """Close the weight hyperplanes under intersection and attach all
    per-stratum data: zero-sets, representatives, order, orbits, stabilizers."""
    if symmetry_class(rep) is SymmetryClass.NOT_WEAKLY_SYMMETRIC:
        raise InputError("stratification requires a weakly symmetric weight multiset")
    n = group.rank
    weyl = enumerate_group(group.weyl_generators, n, cap)

    v_supports = rep.v_weights.nonzero_supports()
    g_supports = group.g_weights.nonzero_supports()
    hyperplanes = tuple(sorted({_canonical_normal(u) for u in v_supports + g_supports}))

    full_space = int_kernel((), n)
    flats: dict[IntMatrix, tuple[int, ...]] = {}

    def containing(basis: IntMatrix) -> tuple[int, ...]:
        return tuple(
            i for i, h in enumerate(hyperplanes)
            if all(dot(b, h) == 0 for b in basis)
        )

    queue = [full_space]
    flats[full_space] = containing(full_space)
    while queue:
        basis = queue.pop()
        normals = [hyperplanes[i] for i in flats[basis]]
        for i, h in enumerate(hyperplanes):
            if i in flats[basis]:
                continue
            new_basis = int_kernel(normals + [h], n)
            if new_basis not in flats:
                flats[new_basis] = containing(new_basis)
                queue.append(new_basis)

    ordered = sorted(flats, key=lambda b: (-len(b), b))
    strata = []
    u_bases = []
    all_v = rep.v_weights.supports()
    all_g = group.g_weights.supports()
    nonzero_supports = tuple(sorted(set(v_supports) | set(g_supports)))
    for idx, basis in enumerate(ordered):
        flat = Flat(basis)
        zero_v = tuple(w for w in all_v if all(dot(b, w) == 0 for b in basis))
        zero_g = tuple(w for w in all_g if all(dot(b, w) == 0 for b in basis))
        zero_supports = tuple(w for w in zero_v + zero_g if any(w))
        rep_cochar = (
            (0,) * n if not basis else
            representative_cocharacter(flat, nonzero_supports, zero_supports)
        )
        dims = numeric_invariants(group, rep, rep_cochar)
        zero_g_total = sum(group.g_weights.multiplicity(w) for w in zero_g)
        if dims.dim_g_fixed != zero_g_total:
            raise InternalCheckError("zero-set bookkeeping disagrees with slice counts")
        u_basis = saturate_span(list(zero_supports), n)
        if len(u_basis) + flat.dim != n:
            raise InternalCheckError("flat dimension and zero-set span do not fill the rank")
        strata.append(Stratum(idx, flat, zero_v, zero_g, rep_cochar, dims))
        u_bases.append(u_basis)

    count = len(strata)
    order = tuple(
        tuple(leq(strata[i], strata[j]) for j in range(count)) for i in range(count)
    )
    maxima = [i for i in range(count) if all(order[j][i] for j in range(count))]
    if len(maxima) != 1:
        raise InternalCheckError("the stratum order does not have a unique maximum")
    top_index = maxima[0]

    index_of = {s.flat.basis: s.index for s in strata}
    orbit_of = [-1] * count
    orbits = []
    for i in range(count):
        if orbit_of[i] >= 0:
            continue
        members = set()
        frontier = [i]
        while frontier:
            j = frontier.pop()
            if j in members:
                continue
            members.add(j)
            for w in weyl.elements:
                image = hnf([cochar_action(w, b) for b in strata[j].flat.basis])
                k = index_of.get(image)
                if k is None:
                    raise InternalCheckError("the group action does not permute the strata")
                if k not in members:
                    frontier.append(k)
        orbit = tuple(sorted(members))
        for j in orbit:
            orbit_of[j] = len(orbits)
        orbits.append(orbit)

    point_stabs = []
    set_stabs = []
    for s in strata:
        ps = point_stabilizer(weyl, s.rep)
        ss = set_stabilizer(weyl, (s.zero_v, s.zero_g))
        if not set(ps.members) <= set(ss.members):
            raise InternalCheckError("pointwise stabilizer is not inside the setwise stabilizer")
        point_stabs.append(ps)
        set_stabs.append(ss)

    return Stratification(
        group=group,
        rep=rep,
        weyl=weyl,
        hyperplanes=hyperplanes,
        strata=tuple(strata),
        order=order,
        orbits=tuple(orbits),
        orbit_of=tuple(orbit_of),
        point_stabilizers=tuple(point_stabs),
        set_stabilizers=tuple(set_stabs),
        u_bases=tuple(u_bases),
        top_index=top_index,
    )


def _canonical_normal(u: Weight) -> Weight:
    ray = primitive_ray(u)
    lead = next(c for c in ray if c != 0)
    return ray if lead > 0 else tuple(-c for c in ray)
