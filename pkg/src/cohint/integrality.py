"""Induction kernels and operators, the kernel-twist character, the graded
induced submodules, BPS spaces with their refined DT tables, and the
degree-by-degree verification of the integrality decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import (
    Stratification,
    Stratum,
    align_representative,
    generic_points,
    with_representative,
)
from .errors import InputError, InternalCheckError
from .lattice import Weight, pairing
from .matrices import mat_vec, restrict_action, det_one_minus_q, series_inverse
from .polyalg import (
    GradedBasis,
    KernelForm,
    Poly,
    invariant_basis,
    kernel_sum,
    monomials_of_degree,
    orthogonal_complement,
    rref_span,
    substitute,
)
from .weyl import (
    Subgroup,
    averaged_form,
    coset_representatives,
    molien_coefficients,
    point_stabilizer,
)


@dataclass(frozen=True)
class InductionKernel:
    source: Stratum
    target: Stratum
    form: KernelForm

    @property
    def degree(self) -> int:
        return self.form.degree


@dataclass(frozen=True)
class EpsilonCharacter:
    """The +/-1 character of a stratum stabilizer measuring how the induction
    kernel transforms."""

    subgroup: Subgroup
    values: dict[int, Fraction]

    def value(self, member_index: int) -> Fraction:
        return self.values[member_index]


@dataclass(frozen=True)
class BpsSpace:
    stratum: Stratum
    pieces: dict[int, GradedBasis]
    ambient_dims: dict[int, int]
    induced_dims: dict[int, int]
    w_matrices: dict[int, dict[int, tuple[tuple[Fraction, ...], ...]]]
    dt_table: dict[int, int]
    euler: int

    @property
    def total_dim(self) -> int:
        return sum(self.dt_table.values())

    def piece_dims(self) -> dict[int, int]:
        return {p: basis.dim for p, basis in self.pieces.items() if basis.dim}


def _zero_slice_forms(strat: Stratification, target: Stratum, mu_rep) -> tuple:
    """Linear forms of the kernel: negative-slice weights of the target's
    fixed data, with multiplicity, sliced by the source representative."""
    num: list[Weight] = []
    den: list[Weight] = []
    pos_v = pos_g = 0
    zero_v = set(target.zero_v)
    zero_g = set(target.zero_g)
    for w, m in strat.rep.v_weights:
        if w in zero_v:
            p = pairing(mu_rep, w)
            if p < 0:
                num.extend([w] * m)
            elif p > 0:
                pos_v += m
    for w, m in strat.group.g_weights:
        if w in zero_g:
            p = pairing(mu_rep, w)
            if p < 0:
                den.extend([w] * m)
            elif p > 0:
                pos_g += m
    if len(num) != pos_v or len(den) != pos_g:
        raise InternalCheckError(
            "negative and positive slices differ in size; data is not weakly symmetric"
        )
    return tuple(num), tuple(den)


def kernel(strat: Stratification, mu: Stratum, target: Stratum) -> InductionKernel:
    """Induction kernel from the class of mu into the target stratum."""
    num, den = _zero_slice_forms(strat, target, mu.rep)
    return InductionKernel(mu, target, KernelForm(num, den, Fraction(1)))


def induct(strat: Stratification, f: Poly, mu: Stratum, target: Stratum) -> Poly:
    """Coset-sum induction of f from the class of mu into the target."""
    w_target = strat.point_stabilizers[target.index]
    stab = point_stabilizer(strat.weyl, mu.rep)
    h = strat.weyl.subgroup(set(stab.members) & set(w_target.members))
    for w in h.elements():
        if substitute(w, f) != f:
            raise InputError(
                "induction input must be invariant under the source stabilizer"
            )
    cosets = coset_representatives(h, w_target)
    return kernel_sum(f, kernel(strat, mu, target).form, cosets)


def epsilon(
    strat: Stratification, stratum: Stratum, subgroup: Subgroup | None = None
) -> EpsilonCharacter:
    """Character by which the stratum stabilizer rescales the kernel,
    computed by exact evaluation at two generic points."""
    wl = subgroup if subgroup is not None else strat.set_stabilizers[stratum.index]
    form = kernel(strat, stratum, strat.top).form
    points = generic_points(strat.all_supports(), strat.group.rank, 2)
    values: dict[int, Fraction] = {}
    for idx in wl.members:
        w = strat.weyl.elements[idx]
        moved = form.transformed(w)
        ratios = [form.evaluate(pt) / moved.evaluate(pt) for pt in points]
        if ratios[0] != ratios[1]:
            raise InternalCheckError(
                f"kernel ratio is not constant for element {idx}: {ratios}"
            )
        if ratios[0] not in (Fraction(1), Fraction(-1)):
            raise InternalCheckError(
                f"kernel character takes a value outside +/-1: {ratios[0]} at element {idx}"
            )
        values[idx] = ratios[0]
    if values[strat.weyl.identity_index] != 1:
        raise InternalCheckError("kernel character is not 1 on the identity")
    for a in wl.members:
        for b in wl.members:
            if values[strat.weyl.mul[a][b]] != values[a] * values[b]:
                raise InternalCheckError("kernel character is not multiplicative")
    return EpsilonCharacter(wl, values)


def j_graded(strat: Stratification, stratum: Stratum, p: int) -> GradedBasis:
    """Degree-p slice of the induced submodule: symmetrized kernel multiples
    coming from every strictly smaller stratum."""
    if p < 0:
        raise InputError("degree must be nonnegative")
    n = strat.group.rank
    u_basis = strat.u_bases[stratum.index]
    levi = strat.point_stabilizers[stratum.index].elements()
    base_polys = [Poly.linear(b) for b in u_basis]
    generators = []
    for j in strat.strictly_below(stratum.index):
        mu = strat.strata[j]
        form = kernel(strat, mu, stratum).form
        d = p - form.degree
        if d < 0:
            continue
        for exps in monomials_of_degree(len(u_basis), d):
            mono = Poly.constant(n, 1)
            for i, k in enumerate(exps):
                if k:
                    mono = mono * base_polys[i] ** k
            generators.append(kernel_sum(mono, form, levi))
    return rref_span(generators, p, n)


def bps_space(strat: Stratification, stratum: Stratum) -> BpsSpace:
    """Graded BPS space of a stratum: the orthogonal complement of the induced
    submodule inside the reduced invariant ring, with its stabilizer action,
    DT table and Euler number."""
    b = averaged_form(strat.weyl)
    u_basis = strat.u_bases[stratum.index]
    levi = strat.point_stabilizers[stratum.index]
    wl = strat.set_stabilizers[stratum.index]
    v_dim = stratum.dims.dim_v_fixed
    g_dim = stratum.dims.dim_g_fixed
    p_max = v_dim // 2

    pieces: dict[int, GradedBasis] = {}
    ambient_dims: dict[int, int] = {}
    induced_dims: dict[int, int] = {}
    for p in range(p_max + 1):
        ambient = invariant_basis(levi, p, u_basis)
        sub = j_graded(strat, stratum, p)
        pieces[p] = orthogonal_complement(sub, ambient, b)
        ambient_dims[p] = ambient.dim
        induced_dims[p] = sub.dim
    for p in (p_max + 1, p_max + 2):
        ambient = invariant_basis(levi, p, u_basis)
        sub = j_graded(strat, stratum, p)
        if sub.dim != ambient.dim:
            raise InternalCheckError(
                f"induced submodule fails to fill degree {p} past the vanishing bound "
                f"at stratum {stratum.index} ({sub.dim} < {ambient.dim})"
            )

    w_matrices: dict[int, dict[int, tuple]] = {}
    for idx in wl.members:
        w = strat.weyl.elements[idx]
        mats: dict[int, tuple] = {}
        for p, basis in pieces.items():
            if basis.dim == 0:
                continue
            rows = []
            for f in basis.polys():
                coords = basis.coordinates(substitute(w, f))
                if coords is None:
                    raise InternalCheckError(
                        "BPS piece is not stable under the stratum stabilizer"
                    )
                rows.append(coords)
            mats[p] = tuple(rows)
        w_matrices[idx] = mats

    d_lambda = stratum.dims.d_lambda
    dt_table: dict[int, int] = {}
    for p in sorted(pieces):
        dim = pieces[p].dim
        if dim:
            i = 2 * p - d_lambda
            if not (g_dim - v_dim <= i <= g_dim):
                raise InternalCheckError(
                    f"nonzero BPS piece at shifted degree {i} outside "
                    f"[{g_dim - v_dim}, {g_dim}]"
                )
            dt_table[i] = dim
    euler = sum(dim if i % 2 == 0 else -dim for i, dim in dt_table.items())
    return BpsSpace(stratum, pieces, ambient_dims, induced_dims, w_matrices, dt_table, euler)


def isotypic_series(
    strat: Stratification, bps: BpsSpace, eps: EpsilonCharacter, cutoff: int
) -> tuple[Fraction, ...]:
    """Graded dimensions of the kernel-character isotypic part of the BPS
    space tensored with the polynomial ring of the stratum's flat."""
    if cutoff < 0:
        raise InputError("cutoff must be nonnegative")
    wl = eps.subgroup
    flat_basis = strat.strata[bps.stratum.index].flat.basis
    coeffs = [Fraction(0)] * (cutoff + 1)
    for idx in wl.members:
        w = strat.weyl.elements[idx]
        restricted = restrict_action(w.cochar_matrix, flat_basis) if flat_basis else ()
        inv = series_inverse(det_one_minus_q(restricted), cutoff)
        eps_inv = Fraction(1) / eps.value(idx)
        for a, basis in bps.pieces.items():
            if basis.dim == 0 or a > cutoff:
                continue
            trace = sum(
                bps.w_matrices[idx][a][i][i] for i in range(basis.dim)
            )
            if trace == 0:
                continue
            for m in range(a, cutoff + 1):
                coeffs[m] += eps_inv * trace * inv[m - a]
    scale = Fraction(1, wl.order)
    return tuple(c * scale for c in coeffs)


@dataclass(frozen=True)
class HilbertRow:
    degree: int
    target: Fraction
    total: Fraction
    match: bool


@dataclass(frozen=True)
class HilbertResult:
    rows: tuple[HilbertRow, ...]
    passed: bool


@dataclass(frozen=True)
class IsomorphismRow:
    degree: int
    target_dim: int
    domain_dim: int
    image_rank: int
    bijective: bool


@dataclass(frozen=True)
class IsomorphismResult:
    rows: tuple[IsomorphismRow, ...]
    passed: bool


@dataclass(frozen=True)
class AssociativityRow:
    chain: tuple[int, int, int]
    functions: int
    ok: bool


@dataclass(frozen=True)
class AssociativityResult:
    rows: tuple[AssociativityRow, ...]
    passed: bool


def bps_by_orbit(strat: Stratification) -> dict[int, BpsSpace]:
    """BPS spaces of the orbit representatives, keyed by stratum index."""
    return {s.index: bps_space(strat, s) for s in strat.orbit_representatives()}


def target_series(strat: Stratification, cutoff: int) -> tuple[Fraction, ...]:
    """Graded dimensions of the full invariant ring of the Weyl group."""
    elements = [(w.matrix, Fraction(1)) for w in strat.weyl.elements]
    return molien_coefficients(elements, cutoff)


def verify_hilbert(
    strat: Stratification, cutoff: int, bps_cache: dict[int, BpsSpace] | None = None
) -> HilbertResult:
    """Degree-by-degree equality of the invariant-ring dimensions with the
    shifted isotypic series summed over the orbit representatives."""
    target = target_series(strat, cutoff)
    cache = bps_cache if bps_cache is not None else bps_by_orbit(strat)
    totals = [Fraction(0)] * (cutoff + 1)
    for s in strat.orbit_representatives():
        r = s.dims.r_lambda
        if r > cutoff:
            continue
        eps = epsilon(strat, s)
        series = isotypic_series(strat, cache[s.index], eps, cutoff - r)
        for p in range(cutoff + 1):
            if p - r >= 0:
                totals[p] += series[p - r]
    rows = tuple(
        HilbertRow(p, target[p], totals[p], target[p] == totals[p])
        for p in range(cutoff + 1)
    )
    return HilbertResult(rows, all(r.match for r in rows))


def _isotypic_projection(
    strat: Stratification, eps: EpsilonCharacter, f: Poly
) -> Poly:
    wl = eps.subgroup
    total = Poly.zero(f.nvars)
    for idx in wl.members:
        w = strat.weyl.elements[idx]
        total = total + substitute(w, f).scaled(Fraction(1) / eps.value(idx))
    return total.scaled(Fraction(1, wl.order))


def _flat_complement_forms(strat: Stratification, stratum: Stratum):
    """Forms spanning the invariant complement of the stratum's reduced
    variables; they realize the polynomial ring of the flat inside the
    ambient ring."""
    from .matrices import nullspace

    b = averaged_form(strat.weyl)
    u_basis = strat.u_bases[stratum.index]
    n = strat.group.rank
    if not u_basis:
        return tuple(tuple(row) for row in _identity_rows(n))
    constraints = [mat_vec(b, u) for u in u_basis]
    return nullspace(constraints, n)


def _identity_rows(n: int):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def verify_isomorphism(
    strat: Stratification, cutoff: int, bps_cache: dict[int, BpsSpace] | None = None
) -> IsomorphismResult:
    """Push an isotypic basis of every orbit's BPS-times-flat summand through
    induction and test that the images form a basis of the invariant ring in
    each degree."""
    n = strat.group.rank
    target = target_series(strat, cutoff)
    cache = bps_cache if bps_cache is not None else bps_by_orbit(strat)
    reps = strat.orbit_representatives()
    eps_by_index = {s.index: epsilon(strat, s) for s in reps}
    flat_forms = {s.index: _flat_complement_forms(strat, s) for s in reps}

    rows = []
    for p in range(cutoff + 1):
        images = []
        domain_dim = 0
        for s in reps:
            m = p - s.dims.r_lambda
            if m < 0:
                continue
            bps = cache[s.index]
            eps = eps_by_index[s.index]
            forms = flat_forms[s.index]
            form_polys = [Poly.linear(u) for u in forms]
            for a, basis in bps.pieces.items():
                if basis.dim == 0 or a > m:
                    continue
                b_deg = m - a
                projections = []
                for f in basis.polys():
                    for exps in monomials_of_degree(len(form_polys), b_deg):
                        g = f
                        for i, k in enumerate(exps):
                            if k:
                                g = g * form_polys[i] ** k
                        proj = _isotypic_projection(strat, eps, g)
                        if not proj.is_zero():
                            projections.append(proj)
                iso_basis = rref_span(projections, m, n)
                domain_dim += iso_basis.dim
                for vec in iso_basis.polys():
                    images.append(induct(strat, vec, s, strat.top))
        rank = rref_span(images, p, n).dim
        t = target[p]
        if t.denominator != 1:
            raise InternalCheckError("invariant-ring series has a non-integer coefficient")
        t_int = int(t)
        rows.append(IsomorphismRow(p, t_int, domain_dim, rank, t_int == domain_dim == rank))
    return IsomorphismResult(tuple(rows), all(r.bijective for r in rows))


def _invariant_test_functions(strat, h: Subgroup, max_degree: int, limit: int = 3):
    """Deterministic list of subgroup-invariant polynomials of small degree."""
    from .polyalg import average_over

    n = strat.group.rank
    out = [Poly.constant(n, 1)]
    for d in range(1, max_degree + 1):
        for exps in monomials_of_degree(n, d):
            if len(out) >= limit:
                return out
            f = average_over(h, Poly.monomial(n, exps))
            if not f.is_zero() and f not in out:
                out.append(f)
    return out


def verify_associativity(
    strat: Stratification, samples: int = 20, max_f_degree: int = 3
) -> AssociativityResult:
    """Composition law on aligned chains: inducting in two stages agrees with
    inducting directly once the smallest representative is sign-aligned."""
    count = len(strat.strata)
    strict = [
        (i, j, k)
        for i in range(count)
        for j in range(count)
        for k in range(count)
        if i != j and j != k and strat.order[i][j] and strat.order[j][k]
    ]
    degenerate = [
        (i, j, k)
        for i in range(count)
        for j in range(count)
        for k in range(count)
        if (i == j or j == k) and strat.order[i][j] and strat.order[j][k]
    ]
    chains = strict + degenerate
    supports = strat.all_supports()
    rows = []
    for chain in chains[:samples]:
        i, j, k = chain
        s1, s2, s3 = strat.strata[i], strat.strata[j], strat.strata[k]
        nu = align_representative(s1, s2.rep, supports)
        s1_aligned = with_representative(strat, s1, nu)
        h = point_stabilizer(strat.weyl, nu)
        ok = True
        funcs = _invariant_test_functions(strat, h, max_f_degree)
        for f in funcs:
            direct = induct(strat, f, s1_aligned, s3)
            staged = induct(strat, induct(strat, f, s1_aligned, s2), s2, s3)
            if direct != staged:
                ok = False
                break
        rows.append(AssociativityRow(chain, len(funcs), ok))
    return AssociativityResult(tuple(rows), all(r.ok for r in rows))
