import itertools

import pytest

from cohint import (
    Flat,
    InputError,
    align_representative,
    enumerate_strata,
    leq,
    numeric_invariants,
    representative_cocharacter,
    with_representative,
)
from cohint.matrices import dot, hnf, int_kernel
from cohint.weyl import char_action

from conftest import build

RANK_LE_3 = ("torus2-cotangent", "gl2-cotangent", "sl2-irrep:4", "trivial:sl3", "adjoint:gl3")


class TestStratumCounts:
    def test_torus(self, torus_strat):
        assert len(torus_strat.strata) == 4
        assert len(torus_strat.orbits) == 4

    def test_gl2(self, gl2_strat):
        assert len(gl2_strat.strata) == 5
        assert len(gl2_strat.orbits) == 4
        sizes = sorted(len(o) for o in gl2_strat.orbits)
        assert sizes == [1, 1, 1, 2]

    @pytest.mark.parametrize("d", [2, 3, 5, 8])
    def test_sl2_irreps(self, d):
        _, strat = build(f"sl2-irrep:{d}")
        assert len(strat.strata) == 2
        assert len(strat.orbits) == 2

    def test_not_weakly_symmetric_rejected(self):
        doc, _ = build("gl2-cotangent")
        from cohint import RepresentationData, WeightMultiset

        bad = RepresentationData(
            WeightMultiset.from_pairs([((1, 0), 1), ((0, 1), 1)])
        )
        with pytest.raises(InputError):
            enumerate_strata(doc.group_data(), bad)

    def test_full_space_and_total_intersection_present(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            n = strat.group.rank
            dims = [s.flat.dim for s in strat.strata]
            assert n in dims
            assert strat.top.flat.basis == int_kernel(list(strat.hyperplanes), n)

    def test_brute_force_flat_count(self):
        # oracle: distinct subspaces arising as intersections of hyperplane subsets
        for key in RANK_LE_3:
            _, strat = build(key)
            n = strat.group.rank
            hyps = strat.hyperplanes
            kernels = set()
            for size in range(len(hyps) + 1):
                for subset in itertools.combinations(hyps, size):
                    kernels.add(int_kernel(list(subset), n))
            assert len(kernels) == len(strat.strata), key


class TestRepresentatives:
    def test_axis_flat(self, gl2_strat):
        axis = gl2_strat.strata[2]
        assert axis.rep == (1, 0)
        assert set(axis.zero_v) == {(0, 1), (0, -1)}

    def test_zero_flat(self, gl2_strat):
        assert gl2_strat.top.rep == (0, 0)
        assert representative_cocharacter(Flat(()), (), (), rank=2) == (0, 0)

    def test_full_space_skips_non_generic_point(self, gl2_strat):
        # (1,1) lies on the root hyperplane, so the search must move on
        assert gl2_strat.strata[0].rep == (1, 2)

    def test_genericity(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            for s in strat.strata:
                in_zero = set(s.zero_v) | set(s.zero_g)
                for u in strat.all_supports():
                    assert (dot(s.rep, u) == 0) == (u in in_zero)

    def test_flat_dim_plus_zero_span_is_rank(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            n = strat.group.rank
            for s in strat.strata:
                assert s.flat.dim + len(strat.u_bases[s.index]) == n


class TestOrder:
    def test_gl2_relations(self, gl2_strat):
        generic, axis1, axis2, diag, top = gl2_strat.strata
        assert leq(generic, axis1) and leq(generic, diag) and leq(generic, top)
        assert leq(axis1, top) and leq(diag, top)
        assert not leq(axis1, axis2) and not leq(axis2, axis1)
        assert not leq(axis1, diag)

    def test_everything_below_top(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            for s in strat.strata:
                assert strat.leq(s.index, strat.top_index)

    def test_partial_order_axioms(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            count = len(strat.strata)
            for i in range(count):
                assert strat.order[i][i]
                for j in range(count):
                    if i != j:
                        assert not (strat.order[i][j] and strat.order[j][i])
                    for k in range(count):
                        if strat.order[i][j] and strat.order[j][k]:
                            assert strat.order[i][k]

    def test_order_mirrors_flat_inclusion(self, gl2_strat):
        # flat(b) inside flat(a) iff a <= b
        for a in gl2_strat.strata:
            for b in gl2_strat.strata:
                inside = all(
                    dot(row, u) == 0
                    for row in b.flat.basis
                    for u in list(a.zero_v) + list(a.zero_g)
                )
                assert inside == leq(a, b)


class TestGroupActionOnStrata:
    def test_orbits_partition(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            seen = [i for orbit in strat.orbits for i in orbit]
            assert sorted(seen) == list(range(len(strat.strata)))

    def test_zero_sets_map_to_zero_sets(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            zero_sets = {(frozenset(s.zero_v), frozenset(s.zero_g)) for s in strat.strata}
            for w in strat.weyl.elements:
                for s in strat.strata:
                    image = (
                        frozenset(char_action(w, a) for a in s.zero_v),
                        frozenset(char_action(w, a) for a in s.zero_g),
                    )
                    assert image in zero_sets

    def test_orbit_representative_is_least(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            for orbit in strat.orbits:
                assert orbit[0] == min(orbit)


class TestStabilizers:
    def test_point_inside_set_stabilizer(self):
        for key in RANK_LE_3:
            _, strat = build(key)
            for s in strat.strata:
                point = set(strat.point_stabilizers[s.index].members)
                setwise = set(strat.set_stabilizers[s.index].members)
                assert point <= setwise

    def test_gl2_orders(self, gl2_strat):
        orders = [
            (strat_order.order, point_order.order)
            for strat_order, point_order in zip(
                gl2_strat.set_stabilizers, gl2_strat.point_stabilizers
            )
        ]
        assert orders == [(2, 1), (1, 1), (1, 1), (2, 2), (2, 2)]


class TestRepresentativeIndependence:
    def test_dimension_counts_agree_at_second_representative(self):
        for key in ("gl2-cotangent", "trivial:sl3"):
            doc, strat = build(key)
            group, rep = doc.group_data(), doc.rep_data()
            for s in strat.strata:
                if not any(s.rep):
                    continue
                other = tuple(-c for c in s.rep)
                dims = numeric_invariants(group, rep, other)
                assert dims == s.dims

    def test_with_representative_validates(self, gl2_strat):
        generic = gl2_strat.strata[0]
        replaced = with_representative(gl2_strat, generic, (-1, -2))
        assert replaced.rep == (-1, -2)
        assert replaced.dims == generic.dims
        with pytest.raises(InputError):
            with_representative(gl2_strat, generic, (1, 1))


class TestAlignRepresentative:
    def test_parent_signs_are_preserved(self):
        for key in ("torus2-cotangent", "gl2-cotangent", "trivial:sl3"):
            _, strat = build(key)
            supports = strat.all_supports()
            for child in strat.strata:
                for parent in strat.strata:
                    if child.index == parent.index or not strat.leq(child.index, parent.index):
                        continue
                    nu = align_representative(child, parent.rep, supports)
                    for u in supports:
                        pp = dot(parent.rep, u)
                        if pp != 0:
                            assert (dot(nu, u) > 0) == (pp > 0)
                        else:
                            assert (dot(nu, u) == 0) == (dot(child.rep, u) == 0)

    def test_gl2_child_full_space(self, gl2_strat):
        supports = gl2_strat.all_supports()
        nu = align_representative(gl2_strat.strata[0], (-1, 0), supports)
        assert dot(nu, (1, 0)) < 0
        assert dot(nu, (1, -1)) < 0
        assert dot(nu, (0, 1)) != 0

    def test_child_equal_parent_keeps_class(self, gl2_strat):
        axis = gl2_strat.strata[2]
        nu = align_representative(axis, axis.rep, gl2_strat.all_supports())
        assert with_representative(gl2_strat, axis, nu).rep == nu


class TestFlatCanonicalization:
    def test_hnf_identity(self):
        assert hnf([[2, 0], [0, 2], [1, 1]]) == ((1, 1), (0, 2))

    def test_kernel_is_saturated(self):
        # kernel of (2, 4) must contain the primitive (2, -1), not just (4, -2)
        assert int_kernel([(2, 4)], 2) == ((2, -1),)
