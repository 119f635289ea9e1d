"""Closed-form prediction of compatibility levels above a permutation group.

Given a group of degree n, the classifier decides its structural class and
produces the next level(s) of the compatibility sequence without brute force:
exactly where a closed form exists, and as a (lower, upper) sandwich
otherwise.  It also names the eventual family the sequence settles into and a
bound on how many levels that takes.  Everything here is verified against the
brute-force engine by the verifier module.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import partitions as parts
from .groups import (
    PermGroup,
    descending_group,
    dihedral_interval_group,
    natural_cyclic_group,
    natural_dihedral_group,
    partition_automorphisms,
    sab_group,
    symmetric_group,
    trivial_group,
    young_subgroup,
    young_with_reversal,
)
from .perms import Perm, _compose_words, _is_even_word, ajd, descending, dja, natural_cycle

Word = tuple[int, ...]


class ClassKind(enum.Enum):
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    TRIVIAL = "trivial"
    DESC_ONLY = "descending-only"
    CONTAINS_NATURAL_CYCLE = "contains-natural-cycle"
    INTRANSITIVE = "intransitive"
    IMPRIMITIVE = "imprimitive"
    PRIMITIVE = "primitive"


@dataclass(frozen=True)
class EventualFamily:
    """One of the families a compatibility sequence eventually follows."""

    kind: str  # "symmetric" | "cyclic" | "sab"
    with_descending: bool = False
    a: int | None = None
    b: int | None = None

    def order_at(self, degree: int) -> int | None:
        if self.kind == "symmetric":
            return math.factorial(degree)
        if self.kind == "cyclic":
            if self.with_descending:
                return 2 * degree if degree >= 3 else min(degree, 2)
            return degree
        assert self.a is not None and self.b is not None
        if self.a + self.b > degree:
            return None
        base = math.factorial(self.a) * math.factorial(self.b)
        return 2 * base if self.with_descending else base

    def group_at(self, degree: int) -> PermGroup | None:
        """The family member at the given degree; None when not defined there.

        The full symmetric family is intentionally not materialised (callers
        compare by order, which determines it among subsets).
        """
        if self.kind == "symmetric":
            return None
        if self.kind == "cyclic":
            return _cyclic_family_group(degree, self.with_descending)
        if self.a + self.b > degree:  # type: ignore[operator]
            return None
        return _sab_family_group(degree, self.a, self.b, self.with_descending)

    def matches(self, g: PermGroup) -> bool:
        """True iff ``g`` equals the family member at its own degree."""
        if g.order != self.order_at(g.degree):
            return False
        if self.kind == "symmetric":
            return True  # a subset of S_n with full order is S_n
        member = self.group_at(g.degree)
        return member is not None and member == g

    def to_json(self) -> dict:
        return {
            "family": self.kind,
            "with_descending": self.with_descending,
            "a": self.a,
            "b": self.b,
        }


@lru_cache(maxsize=None)
def _cyclic_family_group(degree: int, with_descending: bool) -> PermGroup:
    return natural_dihedral_group(degree) if with_descending else natural_cyclic_group(degree)


@lru_cache(maxsize=None)
def _sab_family_group(degree: int, a: int, b: int, with_descending: bool) -> PermGroup:
    pi = parts.end_blocks(degree, a, b)
    return young_with_reversal(pi) if with_descending else young_subgroup(pi)


@dataclass(frozen=True)
class Prediction:
    """Classifier output for one level above the input group."""

    base_degree: int
    level: int
    degree: int
    kind: ClassKind
    exact: PermGroup | None
    lower: PermGroup | None
    upper: PermGroup | None
    eventual: EventualFamily
    onset_bound: int
    citations: tuple[str, ...]

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


# ---------------------------------------------------------------------------
# classification

def classify_kind(g: PermGroup) -> ClassKind:
    """Dispatch tag; the first matching class in priority order wins."""
    n = g.degree
    if n < 2:
        raise ValueError("classification needs degree >= 2")
    if g.order == math.factorial(n):
        return ClassKind.SYMMETRIC
    if g.order == math.factorial(n) // 2 and all(_is_even_word(w) for w in g.words):
        return ClassKind.ALTERNATING
    if g.order == 1:
        return ClassKind.TRIVIAL
    if g.order == 2 and descending(n).word in g.word_set:
        return ClassKind.DESC_ONLY
    if natural_cycle(n).word in g.word_set:
        return ClassKind.CONTAINS_NATURAL_CYCLE
    if not g.is_transitive():
        return ClassKind.INTRANSITIVE
    if not g.is_primitive():
        return ClassKind.IMPRIMITIVE
    return ClassKind.PRIMITIVE


# ---------------------------------------------------------------------------
# alternating groups

def _alternating_next_group(n: int) -> PermGroup:
    """The level right above the degree-n alternating group.

    Its members alternate between odd and even values along the word: either
    value parity equals position parity everywhere and the permutation is
    even, or the two parities are interchanged everywhere and the permutation
    is odd.  The interchanged half exists only at even target degree.
    """
    m = n + 1
    odds = list(range(1, m + 1, 2))
    evens = list(range(2, m + 1, 2))
    words: list[Word] = []

    def interleave(first: tuple[int, ...], second: tuple[int, ...]) -> Word:
        w = [0] * m
        w[0::2] = first
        w[1::2] = second
        return tuple(w)

    for po in itertools.permutations(odds):
        for pe in itertools.permutations(evens):
            w = interleave(po, pe)
            if _is_even_word(w):
                words.append(w)
    if m % 2 == 0:
        for pe in itertools.permutations(evens):
            for po in itertools.permutations(odds):
                w = interleave(pe, po)
                if not _is_even_word(w):
                    words.append(w)
    return PermGroup.from_words(words, m)


def _alternating_tail_group(n: int, degree: int) -> PermGroup:
    """Levels two and more above the degree-n alternating group.

    The second level collapses to the reversal group, the natural dihedral
    group, the trivial group, or the natural cyclic group according to
    n mod 4 = 0, 1, 2, 3, and stays in that family afterwards.  The split is
    decided by whether the descending permutation is even (n mod 4 in {0, 1})
    together with whether the natural cycle is even (n odd).
    """
    r = n % 4
    if r == 0:
        return descending_group(degree)
    if r == 1:
        return natural_dihedral_group(degree)
    if r == 2:
        return trivial_group(degree)
    return natural_cyclic_group(degree)


# ---------------------------------------------------------------------------
# primitive groups: lookup tables

def _table_degree6() -> tuple[tuple[PermGroup, tuple[Word, ...]], ...]:
    return _cached_table_degree6()


@lru_cache(maxsize=1)
def _cached_table_degree6() -> tuple[tuple[PermGroup, tuple[Word, ...]], ...]:
    from .perms import parse_perm

    def grp(*cycles: str) -> PermGroup:
        return PermGroup.closure([parse_perm(c, 6) for c in cycles], 6)

    def words(*texts: str) -> tuple[Word, ...]:
        return tuple(parse_perm(t).word for t in texts)

    return (
        (grp("(1 2 3 4)", "(3 4 5 6)"),
         words("1234567", "2154376", "6734512", "7654321")),
        (grp("(1 2 3 4)", "(2 3 4 5 6)"),
         words("1234567", "1276543", "1543276", "1567234")),
        (grp("(1 2 3 4 5)", "(3 4 5 6)"),
         words("1234567", "2165437", "4561237", "5432167")),
        (grp("(1 2 3 4 5)", "(1 3 4)(2 5 6)"), words("1234567", "5432167")),
        (grp("(2 3 4 5 6)", "(1 2 5)(3 4 6)"), words("1234567", "1276543")),
    )


def _interval_dihedral_rows(n: int) -> list[tuple[PermGroup, Perm]]:
    """Interval-dihedral subgroups whose presence pins the next level exactly,
    paired with the single generator of that next level."""
    rows = []
    if n >= 3:
        rows.append((dihedral_interval_group(n, 1, n - 1), dja(n + 1, n - 1)))
        rows.append((dihedral_interval_group(n, 2, n), ajd(n + 1, n - 1)))
    if n >= 4:
        rows.append((dihedral_interval_group(n, 1, n - 2), dja(n + 1, n - 2)))
        rows.append((dihedral_interval_group(n, 3, n), ajd(n + 1, n - 2)))
    return rows


# ---------------------------------------------------------------------------
# per-class level values

def _young_level(pi: parts.Partition, i: int, with_reversal: bool) -> PermGroup:
    pi_i = parts.derive_iter(pi, i)
    return young_with_reversal(pi_i) if with_reversal else young_subgroup(pi_i)


def _autpi_level(pi: parts.Partition, i: int) -> PermGroup:
    """Value of the compatibility level i above the full block-automorphism
    group of ``pi`` (a partition with no trivial blocks)."""
    n = pi.size
    symmetric_under_reversal = parts.reverse_partition(pi) == pi
    if i == 1:
        base = young_subgroup(parts.derive(pi))
        gens = [Perm(w) for w in base.generator_words]
        gens += list(parts.interwoven_generators(pi))
        if symmetric_under_reversal:
            gens.append(descending(n + 1))
        return PermGroup.closure(gens, n + 1)
    if len(pi.blocks) > 1 and parts.interwoven(pi, 1, n):
        return natural_dihedral_group(n + i)
    return _young_level(pi, i, symmetric_under_reversal)


def _reversal_young_shape(g: PermGroup) -> parts.Partition | None:
    """A partition whose Young subgroup together with the reversal equals
    ``g`` and satisfies the shape needed for an exact level formula:
    an interval partition, symmetric under reversal, with no two consecutive
    nontrivial blocks.  None when ``g`` is not of that shape."""
    n = g.degree
    gamma = parts.max_intervals(g.orbits())
    candidates = [gamma]
    if n % 2 == 0:
        mid = gamma.block_of(n // 2)
        if mid == (n // 2, n // 2 + 1):
            split = [b for b in gamma.blocks if b != mid]
            split += [(n // 2,), (n // 2 + 1,)]
            candidates.append(parts.Partition.from_blocks(split))
    d = descending(n).word
    for pi in candidates:
        if parts.reverse_partition(pi) != pi:
            continue
        if parts.has_consecutive_nontrivial_blocks(pi):
            continue
        sy = young_subgroup(pi)
        if g.order != 2 * sy.order:
            continue
        coset = {_compose_words(d, w) for w in sy.word_set}
        if g.word_set == sy.word_set | coset:
            return pi
    return None


def _value_symmetric(g, i):
    return symmetric_group(g.degree + i), None, None, ("comp-symmetric-step",)


def _value_alternating(g, i):
    n = g.degree
    if i == 1:
        return _alternating_next_group(n), None, None, ("comp-alternating-parity-sieve",)
    return _alternating_tail_group(n, n + i), None, None, ("comp-alternating-collapse",)


def _value_trivial(g, i):
    return trivial_group(g.degree + i), None, None, ("comp-trivial-step",)


def _value_desc_only(g, i):
    return descending_group(g.degree + i), None, None, ("comp-reversal-step",)


def _value_natural_cycle(g, i):
    if descending(g.degree).word in g.word_set:
        return natural_dihedral_group(g.degree + i), None, None, ("comp-natural-cycle-dihedral",)
    return natural_cyclic_group(g.degree + i), None, None, ("comp-natural-cycle-cyclic",)


def _value_intransitive(g, i):
    n = g.degree
    theta = g.orbits()
    has_desc = descending(n).word in g.word_set
    if g.word_set == young_subgroup(theta).word_set:
        cites = ("comp-young-derivative",)
        return _young_level(theta, i, has_desc), None, None, cites
    if has_desc:
        pi = _reversal_young_shape(g)
        if pi is not None:
            return (
                _young_level(pi, i, True),
                None,
                None,
                ("comp-young-reversal-derivative",),
            )
    a, b = g.largest_ab()
    lower = sab_group(n + i, a, b)
    delta_fixes_orbits = all(
        tuple(sorted(n + 1 - x for x in blk)) == blk for blk in theta.blocks
    )
    upper = _young_level(theta, i, delta_fixes_orbits)
    return None, lower, upper, ("comp-orbit-sandwich",)


def _value_imprimitive(g, i):
    n = g.degree
    systems = g.block_systems()
    for pi in systems:
        if partition_automorphisms(pi) == g:
            cite = (
                "comp-block-automorphism-step" if i == 1 else "comp-block-automorphism-tail"
            )
            return _autpi_level(pi, i), None, None, (cite,)
    a, b = g.largest_ab()
    lower = sab_group(n + i, a, b)
    upper_words = None
    for pi in systems:
        value = _autpi_level(pi, i)
        upper_words = (
            value.word_set if upper_words is None else upper_words & value.word_set
        )
    upper = PermGroup.from_words(upper_words, n + i)
    return None, lower, upper, ("comp-imprimitive-sandwich",)


def _value_primitive(g, i):
    n = g.degree
    if n == 6:
        for table_group, result_words in _table_degree6():
            if table_group == g:
                if i == 1:
                    return (
                        PermGroup.from_words(result_words, 7),
                        None,
                        None,
                        ("comp-primitive-degree6-table",),
                    )
                return _primitive_tail(g, i), None, None, ("comp-primitive-reversal-cap",)
    else:
        matches = [
            gen for (sub, gen) in _interval_dihedral_rows(n) if sub.is_subgroup_of(g)
        ]
        if len(matches) > 1:
            raise AssertionError(
                f"multiple interval-dihedral rows match a primitive group of degree {n}"
            )
        if matches:
            if i == 1:
                return (
                    PermGroup.closure([matches[0]], n + 1),
                    None,
                    None,
                    ("comp-primitive-interval-dihedral",),
                )
            return _primitive_tail(g, i), None, None, ("comp-primitive-reversal-cap",)
    return _primitive_tail(g, i), None, None, ("comp-primitive-reversal-cap",)


def _primitive_tail(g, i):
    if descending(g.degree).word in g.word_set:
        return descending_group(g.degree + i)
    return trivial_group(g.degree + i)


_VALUE_DISPATCH = {
    ClassKind.SYMMETRIC: _value_symmetric,
    ClassKind.ALTERNATING: _value_alternating,
    ClassKind.TRIVIAL: _value_trivial,
    ClassKind.DESC_ONLY: _value_desc_only,
    ClassKind.CONTAINS_NATURAL_CYCLE: _value_natural_cycle,
    ClassKind.INTRANSITIVE: _value_intransitive,
    ClassKind.IMPRIMITIVE: _value_imprimitive,
    ClassKind.PRIMITIVE: _value_primitive,
}


# ---------------------------------------------------------------------------
# eventual families

def predict_eventual(g: PermGroup) -> tuple[EventualFamily, int]:
    """The family the level sequence settles into, and a bound on the number
    of levels before it does."""
    kind = classify_kind(g)
    n = g.degree
    has_desc = descending(n).word in g.word_set

    if kind is ClassKind.SYMMETRIC:
        return EventualFamily("symmetric"), 0
    if kind is ClassKind.ALTERNATING:
        r = n % 4
        fam = {
            0: EventualFamily("sab", True, 1, 1),
            1: EventualFamily("cyclic", True),
            2: EventualFamily("sab", False, 1, 1),
            3: EventualFamily("cyclic", False),
        }[r]
        return fam, 2
    if kind is ClassKind.TRIVIAL:
        return EventualFamily("sab", False, 1, 1), 0
    if kind is ClassKind.DESC_ONLY:
        return EventualFamily("sab", True, 1, 1), 0
    if kind is ClassKind.CONTAINS_NATURAL_CYCLE:
        fam = EventualFamily("cyclic", has_desc)
        return fam, 0 if fam.matches(g) else 1
    a, b = g.largest_ab()
    if kind is ClassKind.INTRANSITIVE:
        bound = parts.mu_ab(g.orbits(), a, b)
        return EventualFamily("sab", has_desc, a, b), bound
    if kind is ClassKind.IMPRIMITIVE:
        bound = min(
            max(parts.mu_ab(pi, a, b), 2) for pi in g.block_systems()
        )
        return EventualFamily("sab", has_desc, a, b), bound
    # primitive: settles by level 2 at the latest, by level 1 without a table hit
    table_hit = False
    if n == 6:
        table_hit = any(tg == g for tg, _ in _table_degree6())
    else:
        table_hit = any(sub.is_subgroup_of(g) for sub, _ in _interval_dihedral_rows(n))
    return EventualFamily("sab", has_desc, 1, 1), 2 if table_hit else 1


# ---------------------------------------------------------------------------
# public prediction entry points

def predict_level(g: PermGroup, i: int) -> Prediction:
    """Predict the compatibility level ``i`` steps above ``g``."""
    if i < 1:
        raise ValueError("level must be >= 1")
    kind = classify_kind(g)
    exact, lower, upper, cites = _VALUE_DISPATCH[kind](g, i)
    eventual, bound = predict_eventual(g)
    return Prediction(
        base_degree=g.degree,
        level=i,
        degree=g.degree + i,
        kind=kind,
        exact=exact,
        lower=lower,
        upper=upper,
        eventual=eventual,
        onset_bound=bound,
        citations=cites,
    )


def predict_next(g: PermGroup) -> Prediction:
    """Predict the level directly above ``g``."""
    return predict_level(g, 1)
