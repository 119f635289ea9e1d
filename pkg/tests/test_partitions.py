import pytest

import permpat as pp
from permpat import partitions as parts

WORKED = pp.parse_partition("1,2,3,7,8,9,10|4,5,6,12,13,14|11")


def test_parse_and_canonical_form():
    p = pp.parse_partition("1,2|3")
    assert p.blocks == ((1, 2), (3,))
    assert pp.parse_partition("2,1|3") == p
    assert pp.format_partition(p) == "1,2|3"
    assert pp.parse_partition(pp.format_partition(WORKED)) == WORKED


def test_parse_errors():
    with pytest.raises(ValueError):
        pp.parse_partition("1|1,2")
    with pytest.raises(ValueError):
        pp.parse_partition("1,3")
    with pytest.raises(ValueError):
        pp.parse_partition("1,2||3")
    with pytest.raises(ValueError):
        pp.parse_partition("1,x|2")


def test_lattice_operations():
    whole = pp.parse_partition("1,2,3")
    split = pp.parse_partition("1,2|3")
    assert pp.meet(whole, split) == split
    assert pp.join(pp.parse_partition("1,2|3"), pp.parse_partition("1|2,3")) == whole
    d4 = pp.delta_pairs(4)
    assert d4 == pp.parse_partition("1,4|2,3")
    assert pp.refines(d4, d4)
    assert pp.refines(split, whole)
    assert not pp.refines(whole, split)
    with pytest.raises(ValueError):
        pp.meet(whole, d4)


def test_named_partitions():
    assert pp.delta_pairs(5) == pp.parse_partition("1,5|2,4|3")
    assert pp.odd_even(4) == pp.parse_partition("1,3|2,4")
    assert pp.end_blocks(7, 2, 3) == pp.parse_partition("1,2|5,6,7|3|4")
    with pytest.raises(ValueError):
        pp.end_blocks(4, 3, 2)


def test_max_intervals():
    assert pp.max_intervals(WORKED) == pp.parse_partition(
        "1,2,3|4,5,6|7,8,9,10|11|12,13,14"
    )
    interval = pp.parse_partition("1,2|3,4,5")
    assert pp.max_intervals(interval) == interval
    assert pp.max_intervals(pp.odd_even(4)) == pp.parse_partition("1|2|3|4")


def test_derive_worked_example():
    assert pp.derive(WORKED) == pp.parse_partition(
        "1,2,3|4|5,6|7|8,9,10|11|12|13,14,15"
    )


def test_derive_small_cases():
    n = 5
    whole = parts.Partition.from_blocks([range(1, n + 1)])
    assert pp.derive(whole) == parts.Partition.from_blocks([range(1, n + 2)])
    assert pp.derive(pp.parse_partition("1,2|3,4")) == pp.parse_partition("1,2|3|4,5")


def test_derive_iter():
    assert pp.derive_iter(WORKED, 1) == pp.derive(WORKED)
    assert pp.derive_iter(pp.parse_partition("1,2,3|4,5,6"), 2) == pp.parse_partition(
        "1,2,3|4|5|6,7,8"
    )
    whole = parts.Partition.from_blocks([range(1, 5)])
    assert pp.derive_iter(whole, 3) == parts.Partition.from_blocks([range(1, 8)])
    with pytest.raises(ValueError):
        pp.derive_iter(whole, 0)


def test_reverse_partition():
    assert pp.reverse_partition(pp.parse_partition("1,2|3")) == pp.parse_partition("2,3|1")
    assert pp.reverse_partition(pp.delta_pairs(6)) == pp.delta_pairs(6)
    assert pp.reverse_partition(pp.end_blocks(7, 2, 3)) == pp.parse_partition(
        "6,7|1,2,3|4|5"
    )


def test_interwoven():
    assert pp.interwoven(pp.parse_partition("1,3,5|2,4,6"), 1, 6)
    p = pp.parse_partition("1,3|2,4|5,6")
    assert pp.interwoven(p, 1, 4)
    assert not pp.interwoven(p, 1, 6)
    # a stretch of singleton blocks is interwoven with blocks of size one
    q = pp.parse_partition("1|2|3,4,5")
    assert pp.interwoven(q, 1, 2)
    with pytest.raises(ValueError):
        pp.interwoven(p, 4, 2)


def test_interwoven_ends():
    ends = pp.interwoven_ends(pp.parse_partition("1,3|2,4|5,6"))
    assert ends.prefix == 4 and ends.suffix is None and not ends.full
    full = pp.interwoven_ends(pp.parse_partition("1,3,5|2,4,6"))
    assert full.full and full.prefix is None and full.suffix is None
    with pytest.raises(ValueError):
        pp.interwoven_ends(pp.parse_partition("1|2,3"))


def test_mu():
    assert pp.mu(WORKED) == 4
    singles = parts.Partition.from_blocks([(i,) for i in range(1, 6)])
    assert pp.mu(singles) == 1
    assert pp.mu_ab(WORKED, 1, 1) == 4
    assert pp.mu_ab(WORKED, 3, 3) == 4
    assert pp.mu_ab(pp.parse_partition("1,2,3|4"), 1, 1) == 3


def test_interwoven_generators():
    gens = pp.interwoven_generators(pp.parse_partition("1,3|2,4|5,6"))
    assert [str(g) for g in gens] == ["4321567"]
    gens = pp.interwoven_generators(pp.parse_partition("1,3,5|2,4,6"))
    assert [str(g) for g in gens] == [str(pp.natural_cycle(7))]
    assert pp.interwoven_generators(pp.parse_partition("1,2|3,4")) == ()
    suffix = pp.interwoven_generators(pp.parse_partition("1,2|3,5|4,6"))
    assert [str(g) for g in suffix] == ["1237654"]
    with pytest.raises(ValueError):
        pp.interwoven_generators(pp.parse_partition("1|2,3"))
