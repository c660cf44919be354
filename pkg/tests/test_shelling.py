import random
from itertools import combinations, permutations

import pytest

from clutters import (
    OrderedIdeal,
    ShellingPrefix,
    SimplicialComplex,
    complete_clutter,
    delete,
    find_shelling,
    has_linear_quotients_in_order,
    is_extendably_shellable,
    is_shelling_order,
    simon_equivalence_check,
    simplicial_elements,
    skeleton,
)


def random_pure_antichain(rng, n, k, count):
    pool = list(combinations(range(1, n + 1), k))
    rng.shuffle(pool)
    return SimplicialComplex.of(n, pool[:count])


class TestIsShellingOrder:
    def test_path(self):
        dd = SimplicialComplex.of(3, [(1, 2), (2, 3)])
        assert is_shelling_order(dd, [(1, 2), (2, 3)]).ok

    def test_disjoint_edges_fail(self):
        dd = SimplicialComplex.of(4, [(1, 2), (3, 4)])
        for order in permutations([(1, 2), (3, 4)]):
            check = is_shelling_order(dd, list(order))
            assert not check.ok and check.fail_index == 1

    def test_not_a_permutation(self):
        dd = SimplicialComplex.of(3, [(1, 2), (2, 3)])
        with pytest.raises(ValueError, match="permutation"):
            is_shelling_order(dd, [(1, 2), (1, 2)])

    def test_points_shell_in_any_order(self):
        dd = SimplicialComplex.of(3, [(1,), (2,), (3,)])
        assert is_shelling_order(dd, [(2,), (3,), (1,)]).ok

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_linear_quotients_of_the_dual(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 7)
        k = rng.randint(1, n - 1)
        dd = random_pure_antichain(rng, n, k, rng.randint(1, 8))
        facets = [f.members for f in dd.facet_sets]
        for _ in range(6):
            order = facets[:]
            rng.shuffle(order)
            gens = [
                tuple(sorted(set(range(1, n + 1)) - set(f))) for f in order
            ]
            ideal = OrderedIdeal.from_supports(n, gens)
            assert (
                is_shelling_order(dd, order).ok
                == has_linear_quotients_in_order(ideal).ok
            )


class TestFindShelling:
    @pytest.mark.parametrize("i", [0, 1, 2, 3])
    def test_skeletons_of_a_simplex(self, i):
        dd = skeleton(SimplicialComplex.simplex(5), i)
        res = find_shelling(dd)
        assert res.order is not None
        assert is_shelling_order(dd, [f.members for f in res.order]).ok

    def test_two_disjoint_edges_have_none(self):
        res = find_shelling(SimplicialComplex.of(4, [(1, 2), (3, 4)]))
        assert res.order is None and not res.exhausted

    def test_void_complex(self):
        assert find_shelling(SimplicialComplex(3, ())).order == ()


class TestShellingPrefix:
    def test_appendability_depends_only_on_the_set(self):
        dd = skeleton(SimplicialComplex.simplex(5), 2)
        res = find_shelling(dd)
        order = [f.members for f in res.order]
        for cut in range(2, 6):
            chosen = order[:cut]
            base = ShellingPrefix(dd, tuple(f.mask for f in res.order[:cut]))
            expected = base.appendable_facets()
            sub = SimplicialComplex.of(dd.n, chosen)
            for perm in permutations(chosen):
                if is_shelling_order(sub, list(perm)).ok:
                    alt = ShellingPrefix(
                        dd, tuple(sum(1 << (v - 1) for v in f) for f in perm)
                    )
                    assert alt.appendable_facets() == expected

    def test_extend_validates(self):
        dd = SimplicialComplex.of(4, [(1, 2), (3, 4)])
        prefix = ShellingPrefix(dd).extend((1, 2))
        with pytest.raises(ValueError, match="appendable"):
            prefix.extend((3, 4))


class TestExtendability:
    def test_single_simplex(self):
        assert is_extendably_shellable(SimplicialComplex.simplex(4)).status == "extendable"

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_all_skeletons_small(self, n):
        for i in range(n):
            dd = skeleton(SimplicialComplex.simplex(n), i)
            assert is_extendably_shellable(dd).status == "extendable"

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_codimension_one_skeletons(self, n):
        dd = skeleton(SimplicialComplex.simplex(n), n - 2)
        assert is_extendably_shellable(dd).status == "extendable"

    def test_disconnected_graph_is_obstructed_with_witness(self):
        dd = SimplicialComplex.of(6, [(1, 2), (2, 3), (4, 5), (5, 6)])
        res = is_extendably_shellable(dd)
        assert res.status == "obstructed"
        stuck = [f.members for f in res.stuck_order]
        sub = SimplicialComplex.of(6, stuck)
        assert is_shelling_order(sub, stuck).ok
        # and indeed no remaining facet can extend the stuck shelling
        prefix = ShellingPrefix(dd, tuple(f.mask for f in res.stuck_order))
        assert prefix.appendable_facets() == ()

    def test_facet_bound_enforced(self):
        dd = skeleton(SimplicialComplex.simplex(6), 2)
        with pytest.raises(ValueError, match="bound"):
            is_extendably_shellable(dd, facet_bound=5)


class TestSequencePrefixesShell:
    @pytest.mark.parametrize("seed", range(15))
    def test_deletion_orders_shell_the_complement_complex(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 6)
        d = rng.randint(2, min(4, n))
        base = complete_clutter(n, d)
        elements = []
        current = base
        for _ in range(rng.randint(1, 6)):
            cands = simplicial_elements(current)
            if not cands:
                break
            e = rng.choice(cands)
            elements.append(e)
            current = delete(current, e)
        if not elements:
            return
        facets = [tuple(sorted(set(range(1, n + 1)) - set(e.members))) for e in elements]
        dd = SimplicialComplex.of(n, facets)
        assert is_shelling_order(dd, facets).ok


class TestSimonEquivalence:
    def test_smallest_case(self):
        rep = simon_equivalence_check(4, 3)
        assert rep.equivalence_holds
        assert rep.skeleton_extendably_shellable
        assert rep.all_residuals_chordal
        assert rep.num_residual_states == 12

    def test_graph_case_residuals_are_complete(self):
        rep = simon_equivalence_check(5, 2)
        assert rep.all_residuals_chordal and rep.equivalence_holds

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            simon_equivalence_check(3, 1)
