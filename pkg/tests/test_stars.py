import pytest

import starsemi as ss
from starsemi.ideals import ideal_from_added


def S(*gens):
    return ss.from_generators(gens)


class TestStarClose:
    def test_collision_example_single_i(self):
        s = S(5, 6, 7, 8, 9)
        i = ideal_from_added(s, [3, 4])
        l = ideal_from_added(s, [4])
        assert ss.star_close([i], l).added_gaps == (3, 4)

    def test_collision_example_single_j(self):
        s = S(5, 6, 7, 8, 9)
        j = ideal_from_added(s, [1, 3])
        l = ideal_from_added(s, [4])
        assert ss.star_close([j], l).added_gaps == (2, 4)

    def test_collision_example_pair(self):
        s = S(5, 6, 7, 8, 9)
        i = ideal_from_added(s, [3, 4])
        j = ideal_from_added(s, [1, 3])
        l = ideal_from_added(s, [4])
        assert ss.star_close([i, j], l).mask == l.mask

    def test_empty_delta_is_divisorial_closure(self):
        for gens in [(4, 5, 6, 7), (4, 7, 9), (5, 6, 7, 8, 9)]:
            s = S(*gens)
            for i in ss.enumerate_F0(s):
                assert ss.star_close([], i).mask == ss.v_closure(i).mask

    def test_overring_intersection_rule(self):
        # when the generator is itself a semigroup containing the target,
        # the closure is just the divisorial closure cut with the overring
        s = S(4, 6, 7, 9)
        i = ideal_from_added(s, [5])          # a semigroup overring of S
        j1 = ideal_from_added(s, [2, 5])      # also semigroups
        j2 = ideal_from_added(s, [3, 5])
        for u in (j1, j2):
            got = ss.star_close([u], i)
            want = ss.v_closure(i).mask & u.mask
            assert got.mask == want

    def test_sandwich_between_target_and_v(self):
        for s in ss.enumerate_semigroups(6):
            f0 = ss.enumerate_F0(s)
            for j in f0[:6]:
                got = ss.star_close(f0[:3], j)
                assert j.issubset(got)
                assert got.issubset(ss.v_closure(j))


class TestStarLeq:
    def test_4567_examples(self):
        s = S(4, 5, 6, 7)
        i3 = ideal_from_added(s, [3])
        i1 = ideal_from_added(s, [1])
        i2 = ideal_from_added(s, [2])
        assert ss.star_leq(i3, i1)
        assert not ss.star_leq(i1, i2)
        assert not ss.star_leq(i2, i1)

    def test_inclusion_does_not_imply_order(self):
        s = S(5, 6, 7, 8, 9)
        i = ideal_from_added(s, [1])
        j = ideal_from_added(s, [1, 3])
        assert i.issubset(j)
        assert not ss.star_leq(i, j)
        assert ss.star_close([j], i).mask == j.mask

    def test_reflexive(self):
        s = S(4, 7, 9)
        for i in ss.enumerate_F0(s):
            assert ss.star_leq(i, i)

    def test_translation_invariance_of_principal_ops(self):
        # star_I and star_(a+I) agree because ideals are normalized
        s = S(4, 5, 6, 7)
        i = ideal_from_added(s, [1, 3])
        shifted = ss.normalize(s, [4 + x for x in i.members_upto(10)])
        assert shifted.mask == i.mask


class TestBuildStar:
    def test_empty_gives_v(self):
        s = S(4, 5, 6, 7)
        op = ss.build_star(s, [], check_axioms=True)
        assert op.antichain == ()
        assert {i.added_gaps for i in op.closed_family} == {(), (1, 2, 3)}

    def test_mg_gives_identity(self):
        s = S(4, 5, 6, 7)
        op = ss.build_star(s, [ss.ideal_M(s, s.frobenius)], check_axioms=True)
        assert len(op.closed_family) == len(ss.enumerate_F0(s))

    def test_mg_closes_everything_more_semigroups(self):
        for gens in [(4, 7, 9), (3, 7, 8), (5, 6, 7, 8, 9), (4, 6, 7, 9)]:
            s = S(*gens)
            op = ss.build_star(s, [ss.ideal_M(s, s.frobenius)])
            assert len(op.closed_family) == len(ss.enumerate_F0(s))

    def test_singleton_antichain(self):
        s = S(4, 7, 9)
        for i in ss.enumerate_nondivisorial(s):
            op = ss.build_star(s, [i])
            assert op.antichain == (i,)

    def test_equality_is_extensional(self):
        s = S(5, 6, 7, 8, 9)
        i = ideal_from_added(s, [3, 4])
        j = ideal_from_added(s, [1, 3])
        # the closure of L under the pair is L itself, so adding L changes nothing
        l = ideal_from_added(s, [4])
        assert ss.build_star(s, [i, j]) == ss.build_star(s, [i, j, l])

    def test_axiom_checker_accepts_random_builds(self):
        s = S(4, 6, 7, 9)
        f0 = ss.enumerate_F0(s)
        ss.build_star(s, [f0[1], f0[3]], check_axioms=True)
        ss.build_star(s, list(f0[:4]), check_axioms=True)


class TestStarPoset:
    def test_figure_poset_4567(self):
        s = S(4, 5, 6, 7)
        p = ss.build_star_poset(s)
        covers = {
            (p.elements[u].added_gaps, p.elements[l].added_gaps)
            for u, l in p.covers()
        }
        assert covers == {
            ((1, 2), (2,)), ((1, 2), (1, 3)), ((1, 2), (1,)),
            ((1, 3), (2, 3)), ((1, 3), (3,)),
            ((1,), (3,)), ((2,), (2, 3)),
        }
        assert p.maximum().added_gaps == (1, 2)

    def test_symmetric_empty(self):
        s = S(2, 3)
        assert ss.build_star_poset(s).size == 0

    def test_pseudosymmetric_unique_minimal(self):
        for gens in [(4, 7, 9), (4, 5, 7), (3, 5, 7)]:
            s = S(*gens)
            assert s.is_pseudosymmetric()
            p = ss.build_star_poset(s)
            minimal = [
                j for j in range(p.size)
                if not any(p.leq(i, j) for i in range(p.size) if i != j)
            ]
            assert len(minimal) == 1
            assert p.elements[minimal[0]].added_gaps == (s.frobenius,)

    def test_maximum_is_mg_everywhere(self):
        for s in ss.enumerate_semigroups(6):
            if s.genus == 0 or s.is_symmetric():
                continue
            p = ss.build_star_poset(s)
            assert p.maximum().mask == ss.ideal_M(s, s.frobenius).mask

    def test_transitive(self):
        s = S(4, 6, 7, 9)
        p = ss.build_star_poset(s)
        n = p.size
        for a in range(n):
            for b in range(n):
                if not p.leq(a, b):
                    continue
                for c in range(n):
                    if p.leq(b, c):
                        assert p.leq(a, c)

    def test_dot_output(self):
        s = S(4, 5, 6, 7)
        dot = ss.build_star_poset(s).to_dot()
        assert dot.startswith("digraph")
        assert '"S+{1,2}" -> "S+{2}";' in dot


class TestAtoms:
    def test_4679_witness_not_atom(self):
        s = S(4, 6, 7, 9)
        i = ideal_from_added(s, [5])
        assert not ss.is_atom(i)
        # reproduce the witness: both J1 and J2 close i to themselves
        j1 = ideal_from_added(s, [2, 5])
        j2 = ideal_from_added(s, [3, 5])
        assert (j1 & j2).mask == i.mask
        assert ss.star_close([j1], i).mask == j1.mask
        assert ss.star_close([j2], i).mask == j2.mask

    def test_thin_gap_ideals_are_atoms(self):
        # one missing member below the divisorial closure forces an atom
        for gens in [(4, 5, 6, 7), (4, 7, 9), (4, 6, 7, 9)]:
            s = S(*gens)
            for i in ss.enumerate_nondivisorial(s):
                v = ss.v_closure(i)
                if bin(v.mask & ~i.mask).count("1") == 1:
                    assert ss.is_atom(i)

    def test_4567_frobenius_adjunction_is_atom(self):
        s = S(4, 5, 6, 7)
        assert ss.is_atom(ideal_from_added(s, [3]))

    def test_divisorial_reported_atom(self):
        s = S(4, 5, 6, 7)
        i = ideal_from_added(s)
        assert i.is_divisorial and ss.is_atom(i)

    def test_q_members_near_max_are_atoms(self):
        for gens in [(4, 5, 6, 7), (4, 7, 9), (5, 6, 7, 8, 9)]:
            s = S(*gens)
            for a in s.gaps:
                ma = ss.ideal_M(s, a)
                for i in ss.q_set(s, a):
                    if bin(ma.mask & ~i.mask).count("1") <= 1:
                        assert ss.is_atom(i)


class TestQSets:
    def test_4567_decomposition(self):
        s = S(4, 5, 6, 7)
        assert {i.added_gaps for i in ss.q_set(s, 3)} == {(1, 2), (1,), (2,)}
        assert {i.added_gaps for i in ss.q_set(s, 2)} == {(1, 3), (3,)}
        assert {i.added_gaps for i in ss.q_set(s, 1)} == {(2, 3)}

    def test_symmetric_all_empty(self):
        s = S(2, 3)
        for a in s.gaps:
            assert ss.q_set(s, a) == ()

    def test_479_q5_q6(self):
        s = S(4, 7, 9)
        assert {i.added_gaps for i in ss.q_set(s, 5)} == {
            (6, 10), (2, 6, 10), (3, 6, 10), (2, 3, 6, 10),
        }
        assert {i.added_gaps for i in ss.q_set(s, 6)} == {
            (1, 5, 10), (1, 3, 5, 10),
        }

    def test_empty_iff_m_divisorial(self):
        for s in ss.enumerate_semigroups(6):
            for a in s.gaps:
                ma = ss.ideal_M(s, a)
                assert (len(ss.q_set(s, a)) == 0) == ma.is_divisorial

    def test_star_order_refines_inclusion_on_q(self):
        for gens in [(4, 5, 6, 7), (4, 7, 9), (5, 6, 7, 8, 9), (4, 6, 7, 9)]:
            s = S(*gens)
            for a in s.gaps:
                q = ss.q_set(s, a)
                for i in q:
                    for j in q:
                        if ss.star_leq(i, j):
                            assert i.issubset(j)

    def test_members_are_nondivisorial(self):
        s = S(5, 6, 7, 8, 9)
        g0 = {i.mask for i in ss.enumerate_nondivisorial(s)}
        for a in s.gaps:
            for i in ss.q_set(s, a):
                assert i.mask in g0


class TestPseudosymmetric:
    def test_v_adds_half_frobenius(self):
        for gens in [(4, 7, 9), (4, 5, 7), (3, 5, 7)]:
            s = S(*gens)
            tau = s.frobenius // 2
            for i in ss.enumerate_F0(s):
                if i.added_gaps and tau not in i:
                    v = ss.v_closure(i)
                    assert v.mask == i.mask | (1 << tau)

    def test_star_order_equals_inclusion_on_q_tau(self):
        for gens in [(4, 7, 9), (4, 5, 7)]:
            s = S(*gens)
            tau = s.frobenius // 2
            q = ss.q_set(s, tau)
            for i in q:
                for j in q:
                    assert ss.star_leq(j, i) == j.issubset(i)


class TestQmInvariant:
    def test_v_is_zero(self):
        for gens in [(4, 5, 6, 7), (4, 7, 9), (3, 7, 8)]:
            s = S(*gens)
            assert ss.qm_invariant(ss.build_star(s, [])) == 0

    def test_identity_on_4567_is_3(self):
        s = S(4, 5, 6, 7)
        d = ss.build_star(s, [ss.ideal_M(s, s.frobenius)])
        assert ss.qm_invariant(d) == 3

    def test_generated_inside_one_q_set(self):
        for gens in [(4, 5, 6, 7), (4, 7, 9)]:
            s = S(*gens)
            for a in s.gaps:
                q = ss.q_set(s, a)
                if not q:
                    continue
                op = ss.build_star(s, q[:1])
                assert ss.qm_invariant(op) == a
                op = ss.build_star(s, q)
                assert ss.qm_invariant(op) == a

    def test_max_rule_for_mixed_delta(self):
        s = S(4, 5, 6, 7)
        q3 = ss.q_set(s, 3)
        q1 = ss.q_set(s, 1)
        op = ss.build_star(s, [q3[1], q1[0]])
        assert ss.qm_invariant(op) == 3


class TestOrderSandwich:
    def test_every_op_between_identity_and_v(self):
        s = S(4, 6, 7, 9)
        f0 = ss.enumerate_F0(s)
        v_family = {i.mask for i in ss.build_star(s, []).closed_family}
        for gen in ss.enumerate_nondivisorial(s):
            fam = {i.mask for i in ss.build_star(s, [gen]).closed_family}
            assert v_family <= fam <= {i.mask for i in f0}
