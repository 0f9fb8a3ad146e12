import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import starsemi as ss
from oracles import gap_subset_semigroups, reachable_upto


class TestFromGenerators:
    def test_345(self):
        s = ss.from_generators({3, 4, 5})
        assert s.gaps == (1, 2)
        assert s.frobenius == 2
        assert s.multiplicity == 3
        assert s.genus == 2

    def test_single_one_gives_naturals(self):
        s = ss.from_generators({1})
        assert s.gaps == ()
        assert s.frobenius == -1
        assert s.genus == 0
        assert s is ss.NATURALS or s == ss.NATURALS

    def test_4679(self):
        s = ss.from_generators({4, 6, 7, 9})
        assert s.gaps == (1, 2, 3, 5)
        assert s.elements_upto(8) == [0, 4, 6, 7, 8]

    def test_gcd_two_rejected(self):
        with pytest.raises(ss.NotNumerical):
            ss.from_generators({2, 4})

    def test_empty_rejected(self):
        with pytest.raises(ss.EmptyInput):
            ss.from_generators(set())

    def test_redundant_generators_dropped(self):
        s = ss.from_generators({4, 5, 6, 7, 9, 11, 13})
        assert s.min_generators == (4, 5, 6, 7)

    def test_large_pairwise_noncoprime(self):
        # gcd of the whole set is 1 even though no pair is coprime
        s = ss.from_generators({6, 10, 15})
        assert s.frobenius == 29
        reach = reachable_upto((6, 10, 15), 70)
        assert s.gaps == tuple(x for x in range(1, 30) if x not in reach)


class TestFromGaps:
    def test_inverse_of_345(self):
        assert ss.from_gaps({1, 2}) == ss.from_generators({3, 4, 5})

    def test_empty_gaps(self):
        assert ss.from_gaps(set()) == ss.NATURALS

    def test_gaps_1_3_is_2_5(self):
        # {0,2,4,5,...} is closed, so this is fine and equals <2,5>
        s = ss.from_gaps({1, 3})
        assert s == ss.from_generators({2, 5})

    def test_not_closed_witness(self):
        with pytest.raises(ss.NotClosed) as exc:
            ss.from_gaps({1, 3, 4})
        a, b = exc.value.witness
        assert a + b in {1, 3, 4}
        assert a not in {1, 3, 4} and b not in {1, 3, 4}

    def test_roundtrips_genus_6(self):
        for s in ss.enumerate_semigroups(6):
            assert ss.from_gaps(s.gaps) == s
            assert ss.from_generators(s.min_generators) == s


class TestTypeSet:
    def test_345(self):
        assert ss.from_generators({3, 4, 5}).type_set == (1, 2)

    def test_479(self):
        s = ss.from_generators({4, 7, 9})
        assert set(s.type_set) == {5, 10}
        assert max(s.type_set) == 10

    def test_23_symmetric(self):
        assert ss.from_generators({2, 3}).type_set == (1,)

    def test_frobenius_always_pseudo_frobenius(self):
        for s in ss.enumerate_semigroups(7):
            if s.genus:
                assert s.frobenius == max(s.pseudo_frobenius)

    def test_oracle_s_minus_m(self):
        # (S - M) \ S computed from explicit element sets
        for s in ss.enumerate_semigroups(6):
            if s.genus == 0:
                continue
            w = 2 * s.frobenius + 2
            elems = set(s.elements_upto(3 * w))
            msel = [x for x in elems if 0 < x <= 3 * w]
            tset = {
                x for x in range(0, w)
                if x not in elems and all((x + m) in elems for m in msel if x + m <= 3 * w)
            }
            assert tset == set(s.pseudo_frobenius)


class TestSymmetry:
    def test_23_symmetric(self):
        assert ss.from_generators({2, 3}).is_symmetric()

    def test_479_pseudosymmetric(self):
        s = ss.from_generators({4, 7, 9})
        assert not s.is_symmetric()
        assert s.is_pseudosymmetric()

    def test_345_is_pseudosymmetric(self):
        # frobenius 2 is even and the type set is {1, 2} = {g/2, g}
        s = ss.from_generators({3, 4, 5})
        assert not s.is_symmetric()
        assert s.is_pseudosymmetric()

    def test_three_characterizations_agree(self):
        for s in ss.enumerate_semigroups(7):
            if s.genus == 0:
                continue
            g = s.frobenius
            sym1 = s.is_symmetric()
            sym2 = all((g - a) in s for a in s.gaps)
            sym3 = s.type_size == 1
            assert sym1 == sym2 == sym3


class TestApery:
    def test_345(self):
        assert ss.from_generators({3, 4, 5}).apery_sequence() == (1, 1)

    def test_23(self):
        assert ss.from_generators({2, 3}).apery_sequence() == (1,)

    def test_479_sums_to_genus(self):
        s = ss.from_generators({4, 7, 9})
        assert sum(s.apery_sequence()) == 6 == s.genus

    def test_entries_positive_and_residues(self):
        for s in ss.enumerate_semigroups(8):
            if s.multiplicity < 2:
                continue
            ks = s.apery_sequence()
            assert all(k >= 1 for k in ks)
            assert sum(ks) == s.genus
            for i, k in enumerate(ks, start=1):
                x = k * s.multiplicity + i
                assert x in s and (x - s.multiplicity) not in s


class TestEnumeration:
    def test_genus_zero(self):
        assert list(ss.enumerate_semigroups(0)) == [ss.NATURALS]

    def test_genus_two(self):
        got = [s for s in ss.enumerate_semigroups(2)]
        assert len(got) == 4
        assert {s.min_generators for s in got} == {
            (1,), (2, 3), (2, 5), (3, 4, 5),
        }

    def test_counts_up_to_genus_7(self):
        by_genus = [0] * 8
        for s in ss.enumerate_semigroups(7):
            by_genus[s.genus] += 1
        assert by_genus == [1, 1, 2, 4, 7, 12, 23, 39]

    def test_matches_gap_subset_oracle(self):
        tree = sorted(s.gaps for s in ss.enumerate_semigroups(6))
        brute = sorted(gap_subset_semigroups(6))
        assert tree == brute

    def test_no_duplicates_and_valid(self):
        seen = set()
        for s in ss.enumerate_semigroups(7):
            assert s.gaps not in seen
            seen.add(s.gaps)
            assert 0 in s
            if s.genus:
                assert s.frobenius == s.gaps[-1]
                assert s.frobenius not in s

    def test_type_below_multiplicity(self):
        for s in ss.enumerate_semigroups(8):
            if s.genus:
                assert s.type_size < s.multiplicity


class TestParsingAndJson:
    def test_parse_generators(self):
        assert ss.parse_semigroup("<4,5,6,7>") == ss.from_generators({4, 5, 6, 7})

    def test_parse_gaps(self):
        assert ss.parse_semigroup("gaps:[1,2,5]") == ss.from_gaps({1, 2, 5})

    def test_parse_garbage(self):
        with pytest.raises(ValueError):
            ss.parse_semigroup("<4,5,>")

    def test_json_shape(self):
        j = ss.from_generators({4, 7, 9}).to_json()
        assert j == {
            "generators": [4, 7, 9],
            "gaps": [1, 2, 3, 5, 6, 10],
            "frobenius": 10,
            "genus": 6,
            "multiplicity": 4,
            "type": [5, 10],
        }

    def test_str(self):
        assert str(ss.from_generators({4, 7, 9})) == "<4,7,9>"


@settings(max_examples=200, deadline=None)
@given(st.sets(st.integers(min_value=1, max_value=14), min_size=1, max_size=6))
def test_from_gaps_accepts_exactly_closed_complements(gaps):
    gapset = set(gaps)
    closed = all(
        a in gapset or (x - a) in gapset
        for x in gapset
        for a in range(1, x)
    )
    if closed:
        s = ss.from_gaps(gaps)
        assert set(s.gaps) == gapset
    else:
        with pytest.raises(ss.NotClosed):
            ss.from_gaps(gaps)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(min_value=2, max_value=30), min_size=1, max_size=5))
def test_from_generators_matches_reachability(gens):
    import math

    if math.gcd(*gens) != 1:
        return
    s = ss.from_generators(gens)
    bound = s.frobenius + max(gens) + 1
    reach = reachable_upto(tuple(gens), bound)
    for x in range(bound):
        assert (x in s) == (x in reach)
