import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupmatch import (
    EmptyInput,
    GroupSubset,
    HallViolator,
    IdentityInB,
    LatticeGroup,
    Matching,
    SizeLimit,
    SizeMismatch,
    brute_force_matching,
    build_graph,
    candidate_set,
    find_matching,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    verify_matching,
)

SMALL_GROUPS = [make_cyclic(4), make_cyclic(5), make_cyclic(6), make_dihedral(3), make_quaternion()]


def admissible_pairs(group, max_size):
    """All (A, B) with |A| = |B| <= max_size and the identity outside B."""
    n = group.n
    for k in range(1, min(max_size, n - 1) + 1):
        for a_els in itertools.combinations(range(n), k):
            for b_els in itertools.combinations(range(1, n), k):
                yield GroupSubset(group, a_els), GroupSubset(group, b_els)


class TestBuildGraph:
    def test_c4_rows(self):
        c4 = make_cyclic(4)
        g = build_graph(GroupSubset(c4, [0, 2]), GroupSubset(c4, [1, 2]))
        assert g.left == (0, 2)
        assert g.right == (1, 2)
        assert g.adjacency == ((0,), (0,))

    def test_singleton_edge(self):
        q8 = make_quaternion()
        g = build_graph(GroupSubset(q8, [1]), GroupSubset(q8, [2]))
        assert g.adjacency == ((0,),)

    def test_c5_rows_match_oracle(self):
        c5 = make_cyclic(5)
        A = GroupSubset(c5, [1, 2, 3, 4])
        g = build_graph(A, A)
        # oracle: row a keeps x with a+x not in A
        expected = tuple(
            tuple(j for j, x in enumerate(A.elements) if c5.mul(a, x) not in A)
            for a in A.elements
        )
        assert g.adjacency == expected
        assert [g.right[j] for j in g.adjacency[0]] == [4]

    def test_rows_are_candidate_sets(self):
        d3 = make_dihedral(3)
        A = GroupSubset(d3, [1, 3, 4])
        B = GroupSubset(d3, [2, 3, 5])
        g = build_graph(A, B)
        for i, a in enumerate(g.left):
            row = tuple(g.right[j] for j in g.adjacency[i])
            assert row == candidate_set(A, B, a).elements

    def test_empty_rejected(self):
        c4 = make_cyclic(4)
        with pytest.raises(EmptyInput):
            build_graph(GroupSubset(c4), GroupSubset(c4, [1]))


class TestFindMatching:
    def test_c4_violator(self):
        c4 = make_cyclic(4)
        r = find_matching(GroupSubset(c4, [0, 2]), GroupSubset(c4, [1, 2]))
        assert isinstance(r, HallViolator)
        assert r.subset.elements == (0, 2)
        assert r.neighborhood.elements == (1,)
        assert r.deficiency == 1

    def test_c5_inverse_matching(self):
        c5 = make_cyclic(5)
        A = GroupSubset(c5, [1, 2, 3, 4])
        r = find_matching(A, A)
        assert isinstance(r, Matching)
        assert r.pairs == ((1, 4), (2, 3), (3, 2), (4, 1))

    def test_singleton_self_pair(self):
        c4 = make_cyclic(4)
        A = GroupSubset(c4, [3])
        r = find_matching(A, A)
        assert r.pairs == ((3, 3),)

    def test_structured_errors(self):
        c4 = make_cyclic(4)
        with pytest.raises(SizeMismatch):
            find_matching(GroupSubset(c4, [1, 2]), GroupSubset(c4, [1]))
        with pytest.raises(IdentityInB):
            find_matching(GroupSubset(c4, [0, 2]), GroupSubset(c4, [0, 2]))
        with pytest.raises(EmptyInput):
            find_matching(GroupSubset(c4), GroupSubset(c4))

    def test_every_matching_verifies(self):
        for g in SMALL_GROUPS:
            for A, B in admissible_pairs(g, 3):
                r = find_matching(A, B)
                if isinstance(r, Matching):
                    assert verify_matching(A, B, r)

    def test_violator_certificate_is_sound(self):
        for g in SMALL_GROUPS:
            for A, B in admissible_pairs(g, 3):
                r = find_matching(A, B)
                if isinstance(r, HallViolator):
                    union = set()
                    for s in r.subset:
                        union |= candidate_set(A, B, s).members
                    assert union == r.neighborhood.members
                    assert r.subset.issubset(A)
                    assert len(union) < len(r.subset)
                    assert r.deficiency == len(r.subset) - len(union) >= 1

    def test_deterministic(self):
        d3 = make_dihedral(3)
        A = GroupSubset(d3, [1, 2, 4])
        B = GroupSubset(d3, [2, 3, 5])
        assert find_matching(A, B) == find_matching(A, B)

    def test_lattice_matching(self):
        z2 = LatticeGroup(2)
        A = GroupSubset(z2, [(0, 0), (1, 1)])
        B = GroupSubset(z2, [(1, 0), (0, 1)])
        r = find_matching(A, B)
        assert isinstance(r, Matching)
        assert verify_matching(A, B, r)


class TestVerifyMatching:
    def test_accepts_valid(self):
        c5 = make_cyclic(5)
        A = GroupSubset(c5, [1, 2, 3, 4])
        m = Matching(pairs=((1, 4), (2, 3), (3, 2), (4, 1)))
        assert verify_matching(A, A, m).ok

    def test_rejects_product_in_a(self):
        c4 = make_cyclic(4)
        v = verify_matching(GroupSubset(c4, [0, 2]), GroupSubset(c4, [1, 2]),
                            Matching(pairs=((0, 2), (2, 1))))
        assert not v
        assert "lies in A" in v.reason

    def test_rejects_repeated_right_element(self):
        c5 = make_cyclic(5)
        A = GroupSubset(c5, [1, 2])
        B = GroupSubset(c5, [2, 3])
        v = verify_matching(A, B, Matching(pairs=((1, 2), (2, 2))))
        assert not v
        assert "bijective" in v.reason

    def test_rejects_wrong_cover(self):
        c5 = make_cyclic(5)
        A = GroupSubset(c5, [1, 2])
        B = GroupSubset(c5, [2, 3])
        v = verify_matching(A, B, Matching(pairs=((1, 2), (3, 3))))
        assert not v


class TestBruteForce:
    def test_c4_has_none(self):
        c4 = make_cyclic(4)
        assert brute_force_matching(GroupSubset(c4, [0, 2]), GroupSubset(c4, [1, 2])) is None

    def test_singleton(self):
        c4 = make_cyclic(4)
        A = GroupSubset(c4, [3])
        assert brute_force_matching(A, A).pairs == ((3, 3),)

    def test_c6_construction_has_none(self):
        c6 = make_cyclic(6)
        assert brute_force_matching(GroupSubset(c6, [0, 2, 4]), GroupSubset(c6, [1, 2, 4])) is None

    def test_size_cap(self):
        c10 = make_cyclic(10)
        A = GroupSubset(c10, range(1, 9))
        with pytest.raises(SizeLimit):
            brute_force_matching(A, A)

    def test_exhaustive_agreement_with_engine(self):
        for g in (make_cyclic(4), make_cyclic(5), make_dihedral(3)):
            for A, B in admissible_pairs(g, 4):
                engine = isinstance(find_matching(A, B), Matching)
                brute = brute_force_matching(A, B) is not None
                assert engine == brute

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_random_agreement_with_engine(self, data):
        g = data.draw(st.sampled_from(SMALL_GROUPS))
        k = data.draw(st.integers(1, min(5, g.n - 1)))
        a_els = data.draw(st.sets(st.integers(0, g.n - 1), min_size=k, max_size=k))
        b_els = data.draw(st.sets(st.integers(1, g.n - 1), min_size=k, max_size=k))
        A, B = GroupSubset(g, a_els), GroupSubset(g, b_els)
        engine = isinstance(find_matching(A, B), Matching)
        assert engine == (brute_force_matching(A, B) is not None)
