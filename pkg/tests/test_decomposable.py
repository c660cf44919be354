import random
import warnings
from itertools import combinations

import pytest

from clutters import (
    CertificateError,
    CompleteLeaf,
    GluedUnion,
    SubclutterStep,
    SubclutterSteps,
    UniformClutter,
    certificate_clutter,
    check_certificate,
    complement_clutter,
    complement_ideal,
    complete_clutter,
    complete_clutter_on,
    find_linear_quotients_order,
    glue,
    is_chordal,
    is_decomposable,
    random_decomposable,
    verify_certificate,
)
from clutters.gallery import (
    glued_pair_certificate,
    umbrella_certificate,
)


class TestGlue:
    def test_seven_vertex_union(self, glued_pair):
        c1 = UniformClutter.of(7, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
        c2 = complete_clutter_on(7, 3, (4, 5, 6, 7))
        assert glue(c1, c2) == glued_pair

    def test_umbrella_parent(self, umbrella):
        c1 = complete_clutter_on(5, 3, (1, 2, 3, 4))
        c2 = complete_clutter_on(5, 3, (1, 2, 4, 5))
        got = glue(c1, c2)
        assert len(got) == 7
        assert set(umbrella.circuits) <= set(got.circuits)

    def test_disjoint_union_allowed(self):
        c1 = complete_clutter_on(6, 3, (1, 2, 3))
        c2 = complete_clutter_on(6, 3, (4, 5, 6))
        assert len(glue(c1, c2)) == 2

    def test_comparable_vertex_sets_rejected(self):
        c1 = complete_clutter_on(5, 3, (1, 2, 3, 4))
        c2 = complete_clutter_on(5, 3, (1, 2, 3))
        with pytest.raises(ValueError, match="comparable"):
            glue(c1, c2)

    def test_non_clique_overlap_rejected(self):
        c1 = UniformClutter.of(6, 3, [(1, 2, 3), (1, 2, 4)])  # {2,3,4} missing
        c2 = complete_clutter_on(6, 3, (2, 3, 4, 5, 6))
        with pytest.raises(ValueError, match="clique in left"):
            glue(c1, c2, v1=(1, 2, 3, 4), v2=(2, 3, 4, 5, 6))


class TestVerifyCertificate:
    def test_printed_construction(self, glued_pair):
        assert verify_certificate(glued_pair, glued_pair_certificate())

    def test_umbrella_construction(self, umbrella):
        assert verify_certificate(umbrella, umbrella_certificate())

    def test_complete_leaf(self):
        c = complete_clutter(5, 3)
        assert verify_certificate(c, CompleteLeaf.on(5, (1, 2, 3, 4, 5)))

    def test_wrong_clutter_rejected(self, fig_d):
        cert = glued_pair_certificate()
        with pytest.raises(CertificateError):
            check_certificate(fig_d, cert)
        assert not verify_certificate(fig_d, cert)

    def test_structured_rejection_names_rule_and_node(self):
        bad = GluedUnion(CompleteLeaf.on(5, (1, 2, 3)), CompleteLeaf.on(5, (1, 2)))
        with pytest.raises(CertificateError) as err:
            certificate_clutter(bad, 5, 3)
        assert err.value.rule == "union"

    def test_invalid_thinning_step_rejected(self):
        # the second step names a circuit already removed by the first
        cert = SubclutterStep(
            CompleteLeaf.on(5, (1, 2, 3)),
            SubclutterSteps.of(5, [((1, 2), [(1, 2, 3)]), ((1, 2), [(1, 2, 3)])]),
        )
        with pytest.raises(CertificateError) as err:
            certificate_clutter(cert, 5, 3)
        assert err.value.rule == "subclutter"


class TestIsDecomposable:
    def test_complete_is_a_leaf(self):
        res = is_decomposable(complete_clutter(5, 3))
        assert res.status == "decomposable"
        assert isinstance(res.certificate, CompleteLeaf)

    def test_empty_clutter(self):
        res = is_decomposable(UniformClutter.of(5, 3, ()))
        assert res.status == "decomposable"
        assert verify_certificate(UniformClutter.of(5, 3, ()), res.certificate)

    def test_glued_pair_found_with_the_printed_shape(self, glued_pair):
        res = is_decomposable(glued_pair)
        assert res.status == "decomposable"
        assert verify_certificate(glued_pair, res.certificate)
        cert = res.certificate
        assert isinstance(cert, GluedUnion)
        sides = {type(cert.left), type(cert.right)}
        assert sides == {CompleteLeaf, SubclutterStep}

    def test_umbrella_found(self, umbrella):
        res = is_decomposable(umbrella)
        assert res.status == "decomposable"
        assert verify_certificate(umbrella, res.certificate)

    def test_twelve_circuit_instance_thins_from_complete(self, square_nonlinear):
        res = is_decomposable(square_nonlinear)
        assert res.status == "decomposable"
        assert verify_certificate(square_nonlinear, res.certificate)
        assert isinstance(res.certificate, SubclutterStep)
        assert isinstance(res.certificate.parent, CompleteLeaf)
        assert res.certificate.parent.vertices == (1 << 6) - 1

    def test_refutation(self, stubborn):
        res = is_decomposable(stubborn)
        assert res.status == "refuted"
        assert "universe" in res.note

    def test_refutation_pattern_pieces(self, stubborn):
        # every pair of vertices lies in a circuit, so no union split exists
        for pair in combinations(range(1, 6), 2):
            assert any(
                set(pair) <= set(v.members) for v in stubborn.circuit_sets
            )
        # and no re-added circuit carries a simplicial element inside it
        from clutters import is_simplicial

        for f in complement_clutter(stubborn).circuit_sets:
            parent = UniformClutter.of(
                5, 3, list(stubborn.circuit_sets) + [f]
            )
            assert not any(
                is_simplicial(parent, e)
                for e in combinations(f.members, 2)
            )

    def test_budget_exhaustion_is_flagged(self, square_nonlinear):
        res = is_decomposable(square_nonlinear, budget=3)
        assert res.status == "exhausted"


class TestRandomDecomposable:
    @pytest.mark.parametrize("seed", range(15))
    def test_certificates_verify(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 7)
        d = rng.randint(2, min(3, n))
        clutter, cert = random_decomposable(n, d, seed=seed)
        assert verify_certificate(clutter, cert)

    def test_deterministic(self):
        a = random_decomposable(6, 3, seed=11)
        b = random_decomposable(6, 3, seed=11)
        assert a == b

    @pytest.mark.parametrize("seed", range(8))
    def test_complement_ideal_has_linear_quotients(self, seed):
        clutter, _ = random_decomposable(6, 3, seed=seed)
        ideal = complement_ideal(clutter)
        if ideal.is_zero():
            return
        assert find_linear_quotients_order(ideal.generators).order is not None

    @pytest.mark.parametrize("seed", range(10))
    def test_glue_of_verified_certificates_verifies(self, seed):
        rng = random.Random(seed)
        n = rng.randint(4, 8)
        d = rng.randint(2, 3)
        verts = list(range(1, n + 1))
        rng.shuffle(verts)
        w = verts[: rng.randint(0, d - 1)]
        rest = verts[len(w):]
        cut = rng.randint(1, len(rest) - 1)
        v1, v2 = sorted(w + rest[:cut]), sorted(w + rest[cut:])
        c1 = complete_clutter_on(n, d, v1)
        c2 = complete_clutter_on(n, d, v2)
        cert = GluedUnion(CompleteLeaf.on(n, v1), CompleteLeaf.on(n, v2))
        assert verify_certificate(c1, CompleteLeaf.on(n, v1))
        assert verify_certificate(c2, CompleteLeaf.on(n, v2))
        merged = UniformClutter.of(n, d, set(c1.circuit_sets) | set(c2.circuit_sets))
        assert verify_certificate(merged, cert)

    def test_dual_of_clique_complex_of_decomposable_is_shellable(self, umbrella):
        from clutters import alexander_dual, clique_complex, find_shelling

        dual = alexander_dual(clique_complex(umbrella))
        assert sorted(f.members for f in dual.facet_sets) == sorted(
            tuple(sorted(set(range(1, 6)) - set(v.members)))
            for v in complement_clutter(umbrella).circuit_sets
        )
        assert find_shelling(dual).order is not None

    def test_conjecture_probe_decomposables_look_chordal(self):
        # open question: decomposable should imply chordal; log, never fail
        suspects = []
        for seed in range(40):
            clutter, _ = random_decomposable(6, 3, seed=seed)
            if is_chordal(clutter).status != "chordal":
                suspects.append((seed, clutter))
        if suspects:
            warnings.warn(
                f"decomposable-but-not-chordal candidates found: {suspects!r}; "
                "these deserve a careful look",
                stacklevel=1,
            )
