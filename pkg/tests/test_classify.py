import pytest

import permpat as pp
from permpat import ClassKind
from permpat.classify import _alternating_next_group


def kinds(text):
    return pp.classify_kind(pp.parse_group(text))


def test_classify_kind_dispatch():
    assert kinds("S:5") is ClassKind.SYMMETRIC
    assert kinds("A:5") is ClassKind.ALTERNATING
    assert kinds("T:4") is ClassKind.TRIVIAL
    assert kinds("Desc:4") is ClassKind.DESC_ONLY
    assert kinds("D:6") is ClassKind.CONTAINS_NATURAL_CYCLE
    assert kinds("C:6") is ClassKind.CONTAINS_NATURAL_CYCLE
    assert kinds("SPi:1,2|3,4") is ClassKind.INTRANSITIVE
    assert kinds("AutPi:1,2|3,4") is ClassKind.IMPRIMITIVE
    assert kinds("gens:6:(1 2 3 4);(3 4 5 6)") is ClassKind.PRIMITIVE
    # the earlier tag wins: these contain the natural cycle but are S/A first
    assert kinds("S:3") is ClassKind.SYMMETRIC
    assert kinds("A:3") is ClassKind.ALTERNATING
    with pytest.raises(ValueError):
        pp.classify_kind(pp.trivial_group(1))


def test_dispatch_total_on_degree4_catalog():
    for g in pp.enumerate_subgroups(4):
        assert pp.classify_kind(g) in ClassKind


def test_predict_symmetric_trivial_desc():
    assert pp.predict_next(pp.symmetric_group(4)).exact == pp.symmetric_group(5)
    assert pp.predict_next(pp.trivial_group(3)).exact == pp.trivial_group(4)
    assert pp.predict_next(pp.descending_group(4)).exact == pp.descending_group(5)
    assert pp.predict_level(pp.descending_group(4), 3).exact == pp.descending_group(7)


def test_predict_natural_cycle():
    assert pp.predict_next(pp.natural_dihedral_group(8)).exact == pp.natural_dihedral_group(9)
    assert pp.predict_next(pp.natural_cyclic_group(6)).exact == pp.natural_cyclic_group(7)
    f20 = pp.parse_group("gens:5:(1 2 3 4 5);(2 3 5 4)")
    assert pp.classify_kind(f20) is ClassKind.CONTAINS_NATURAL_CYCLE
    assert pp.predict_next(f20).exact == pp.natural_dihedral_group(6)


def test_predict_alternating_next_level():
    pred = pp.predict_next(pp.alternating_group(5))
    assert pred.exact is not None and pred.exact.order == 36
    assert pred.exact == pp.gcomp(pp.alternating_group(5), 6)
    # the predicted group's shorter patterns generate within the alternating group
    assert pp.gpat(pred.exact, 5).is_subgroup_of(pp.alternating_group(5))


def test_predict_alternating_second_level():
    assert pp.predict_level(pp.alternating_group(6), 2).exact == pp.trivial_group(8)
    assert pp.predict_level(pp.alternating_group(7), 2).exact == pp.natural_cyclic_group(9)
    assert pp.predict_level(pp.alternating_group(5), 2).exact == pp.natural_dihedral_group(7)
    assert pp.predict_level(pp.alternating_group(4), 2).exact == pp.descending_group(6)
    assert pp.predict_level(pp.alternating_group(5), 4).exact == pp.natural_dihedral_group(9)


def test_predict_young_subgroup():
    # same interleaved-blocks structure as the 14-point worked example, scaled
    # to fit the element cap
    pi = pp.parse_partition("1,2,5|3,4,7|6")
    g = pp.young_subgroup(pi)
    pred = pp.predict_next(g)
    assert pred.exact == pp.young_subgroup(pp.derive(pi))
    assert pred.exact == pp.gcomp(g, 8)
    two = pp.predict_level(g, 2)
    assert two.exact == pp.young_subgroup(pp.derive_iter(pi, 2))


def test_predict_worked_partition_shape():
    # the 14-point worked example: its group exceeds the element cap, but the
    # predicted level is determined by the partition derivative alone
    pi = pp.parse_partition("1,2,3,7,8,9,10|4,5,6,12,13,14|11")
    assert pp.derive(pi) == pp.parse_partition("1,2,3|4|5,6|7|8,9,10|11|12|13,14,15")
    with pytest.raises(pp.CapExceeded):
        pp.young_subgroup(pi)


def test_predict_young_with_reversal():
    # a reversal-symmetric interval partition whose middle blocks are split
    g = pp.parse_group("SPiDesc:1,2|3|4|5,6")
    assert pp.classify_kind(g) is pp.ClassKind.INTRANSITIVE
    pred = pp.predict_next(g)
    assert pred.exact == pp.gcomp(g, 7)
    assert pred.exact == pp.young_with_reversal(pp.parse_partition("1,2|3|4|5|6,7"))


def test_predict_reversal_coset_of_young_subgroup():
    # adding the reversal to a block-fixing group can collapse to another
    # block-fixing group; the classifier must still match the oracle
    g = pp.parse_group("SPiDesc:1|2,3|4")
    pred = pp.predict_next(g)
    assert pred.exact == pp.gcomp(g, 5)
    assert pred.exact == pp.descending_group(5)


def test_predict_intransitive_bounds():
    g = pp.parse_group("gens:5:(1 2 3)")  # intransitive, not block-fixing-shaped
    pred = pp.predict_next(g)
    assert pred.exact is None
    oracle = pp.gcomp(g, 6)
    assert pred.lower.is_subgroup_of(oracle)
    assert oracle.is_subgroup_of(pred.upper)


def test_predict_imprimitive_exact():
    g = pp.parse_group("AutPi:1,2|3,4|5,6")
    pred = pp.predict_next(g)
    assert pred.exact == pp.gcomp(g, 7)
    two = pp.predict_level(g, 2)
    assert two.exact == pp.gcomp(g, 8)


def test_predict_imprimitive_bounds():
    klein = pp.parse_group("gens:4:(1 2)(3 4);(1 3)(2 4)")
    pred = pp.predict_next(klein)
    oracle = pp.gcomp(klein, 5)
    if pred.exact is not None:
        assert pred.exact == oracle
    else:
        assert pred.lower.is_subgroup_of(oracle)
        assert oracle.is_subgroup_of(pred.upper)


def test_predict_primitive_degree6():
    g = pp.parse_group("gens:6:(1 2 3 4 5);(1 3 4)(2 5 6)")
    pred = pp.predict_next(g)
    assert pred.exact is not None
    assert sorted(str(p) for p in pred.exact) == ["1234567", "5432167"]
    assert str(pp.dja(7, 5)) == "5432167"
    two = pp.predict_level(g, 2)
    assert two.exact == pp.gcomp(g, 8)


def test_predict_primitive_fallthrough():
    # conjugates of the affine degree-5 group that avoid the natural cycle
    for gtext in ("gens:5:(1 3 2 4 5);(1 2 4 3)", "gens:5:(2 1 3 4 5);(1 2 4 3)"):
        g = pp.parse_group(gtext)
        if pp.classify_kind(g) is not ClassKind.PRIMITIVE:
            continue
        pred = pp.predict_next(g)
        assert pred.exact == pp.gcomp(g, 6)


def test_predict_eventual():
    fam, bound = pp.predict_eventual(pp.natural_cyclic_group(7))
    assert (fam.kind, fam.with_descending, bound) == ("cyclic", False, 0)

    fam, bound = pp.predict_eventual(pp.parse_group("SPi:1,2|3,4,5"))
    assert (fam.kind, fam.a, fam.b) == ("sab", 2, 3)
    assert bound == pp.mu_ab(pp.parse_partition("1,2|3,4,5"), 2, 3)

    g = pp.parse_group("gens:6:(1 2 3 4);(3 4 5 6)")
    fam, bound = pp.predict_eventual(g)
    assert (fam.kind, fam.with_descending, fam.a, fam.b) == ("sab", True, 1, 1)
    assert bound == 2

    fam, bound = pp.predict_eventual(pp.alternating_group(5))
    assert (fam.kind, fam.with_descending, bound) == ("cyclic", True, 2)

    fam, bound = pp.predict_eventual(pp.symmetric_group(6))
    assert (fam.kind, bound) == ("symmetric", 0)


def test_alternating_formula_is_group():
    for n in range(2, 9):
        g = _alternating_next_group(n)  # from_words validates closure
        assert g.degree == n + 1
