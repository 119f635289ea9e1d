import itertools

import pytest

import permpat as pp
from permpat import Perm, PermSet


def words(*texts):
    return {pp.parse_perm(t).word for t in texts}


def test_pat_set():
    assert pp.pat_set(PermSet.from_perms([pp.descending(7)]), 4).word_set == words("4321")
    assert pp.pat_set(PermSet.from_perms([pp.natural_cycle(6)]), 3).word_set == words(
        "123", "231"
    )
    d7 = PermSet.from_group(pp.natural_dihedral_group(7))
    d6 = pp.natural_dihedral_group(6)
    assert pp.pat_set(d7, 6).word_set == d6.word_set
    with pytest.raises(ValueError):
        pp.pat_set(d7, 8)


def test_comp_set_examples():
    table_row = pp.parse_group("gens:6:(1 2 3 4);(3 4 5 6)")
    assert pp.comp_set(PermSet.from_group(table_row), 7).word_set == words(
        "1234567", "2154376", "6734512", "7654321"
    )
    s5 = PermSet.from_group(pp.symmetric_group(5))
    assert pp.comp_set(s5, 6).word_set == pp.symmetric_group(6).word_set
    a3 = PermSet.from_group(pp.alternating_group(3))
    assert pp.comp_set(a3, 4).word_set == pp.natural_cyclic_group(4).word_set


def test_comp_set_caps_and_validation():
    s5 = PermSet.from_group(pp.symmetric_group(5))
    with pytest.raises(pp.CapExceeded):
        pp.comp_set(s5, 20)
    with pytest.raises(ValueError):
        pp.comp_set(s5, 5)


def test_comp_set_agrees_with_direct_definition():
    # candidate generation by last-point extension must equal the literal
    # definition based on all patterns
    sets = [
        words("12", "21"),
        words("231", "213"),
        words("321"),
        words("123", "231", "312"),
    ]
    for base in sets:
        degree = len(next(iter(base)))
        s = PermSet(degree, base)
        for m in range(degree + 1, 7):
            direct = {
                w
                for w in itertools.permutations(range(1, m + 1))
                if all(
                    p.word in base for p in pp.all_patterns(Perm(w), degree)
                )
            }
            assert pp.comp_set(s, m).word_set == direct, (base, m)


def test_gpat():
    assert pp.gpat(pp.alternating_group(4), 3) == pp.symmetric_group(3)
    assert pp.gpat(pp.descending_group(7), 4) == pp.descending_group(4)
    assert pp.gpat(pp.natural_cyclic_group(6), 5) == pp.natural_cyclic_group(5)


def test_gcomp_is_group():
    assert pp.gcomp(pp.natural_cyclic_group(5), 6) == pp.natural_cyclic_group(6)
    g = pp.gcomp(pp.alternating_group(5), 6)
    assert g.order == 36
    # the compatibility set of a group is closed: membership survives products
    for a in g.words[:6]:
        for b in g.words[:6]:
            assert tuple(a[x - 1] for x in b) in g.word_set


def test_comp_level_sequence():
    levels = pp.comp_level_sequence(pp.natural_cyclic_group(5), 3)
    assert [g.order for g in levels] == [6, 7, 8]
    assert levels == [pp.natural_cyclic_group(k) for k in (6, 7, 8)]

    levels = pp.comp_level_sequence(pp.alternating_group(5), 2)
    assert [g.order for g in levels] == [36, 14]
    assert levels[1] == pp.natural_dihedral_group(7)

    levels = pp.comp_level_sequence(pp.symmetric_group(4), 2)
    assert levels == [pp.symmetric_group(5), pp.symmetric_group(6)]

    with pytest.raises(pp.CapExceeded):
        pp.comp_level_sequence(pp.natural_cyclic_group(5), 10)


def test_galois_adjunction_on_groups():
    g = pp.natural_dihedral_group(5)
    s = PermSet.from_group(g)
    comp = pp.comp_set(s, 6)
    assert pp.pat_set(comp, 5).word_set <= s.word_set
    assert s.word_set <= pp.comp_set(pp.pat_set(s, 4), 5).word_set
