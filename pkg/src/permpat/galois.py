"""The pattern / compatibility operators between symmetric-group levels.

``pat_set`` collects all shorter patterns of a set; ``comp_set`` collects all
longer permutations whose patterns stay inside a set.  ``comp_set`` is the
brute-force oracle the closed-form classifier is verified against.

Levels are computed one degree at a time (the operators compose transitively
across intermediate degrees).  For a single step from degree k to k+1, a
candidate is kept iff its k+1 single-point deletions all lie in the previous
level; candidates are generated by appending a new last point to each member
of the previous level, which enumerates every permutation whose last-point
deletion lies there.  Peak work and memory are proportional to the level
sizes, never to (k+1)!.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .groups import PermGroup
from .perms import CapExceeded, Perm, _delete_word

DEFAULT_MAX_ENUM_DEGREE = 11

Word = tuple[int, ...]


class PermSet:
    """A canonically sorted set of same-degree permutations."""

    __slots__ = ("degree", "words", "word_set")

    def __init__(self, degree: int, words: Iterable[Word]):
        self.degree = degree
        self.words = tuple(sorted(set(words)))
        for w in self.words:
            if len(w) != degree:
                raise ValueError(f"member degree {len(w)} != {degree}")
        self.word_set = frozenset(self.words)

    @classmethod
    def from_perms(cls, perms: Iterable[Perm]) -> "PermSet":
        ps = list(perms)
        if not ps:
            raise ValueError("cannot infer degree from an empty collection")
        return cls(ps[0].degree, (p.word for p in ps))

    @classmethod
    def from_group(cls, g: PermGroup) -> "PermSet":
        return cls(g.degree, g.words)

    @property
    def members(self) -> tuple[Perm, ...]:
        return tuple(Perm(w) for w in self.words)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.words)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermSet)
            and self.degree == other.degree
            and self.word_set == other.word_set
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.words))

    def __repr__(self) -> str:
        return f"<PermSet degree={self.degree} size={len(self.words)}>"


def _pat_words(words: Iterable[Word], length: int) -> set[Word]:
    import itertools

    from .perms import _reduce_word

    out: set[Word] = set()
    for w in words:
        n = len(w)
        if length == n - 1:
            for i in range(n):
                out.add(_delete_word(w, i))
        else:
            for combo in itertools.combinations(range(n), length):
                out.add(_reduce_word([w[i] for i in combo]))
    return out


def pat_set(t: PermSet, length: int) -> PermSet:
    """Union of all length-``length`` patterns of the members of ``t``."""
    if not 1 <= length <= t.degree:
        raise ValueError(f"pattern length {length} out of range 1..{t.degree}")
    if length == t.degree:
        return t
    return PermSet(length, _pat_words(t.words, length))


def _comp_step(words: frozenset[Word] | set[Word], k: int) -> set[Word]:
    """One level up: all (k+1)-words whose k single-point deletions lie in ``words``."""
    out: set[Word] = set()
    delete = _delete_word
    for w in words:
        for v in range(1, k + 2):
            cand = tuple(x if x < v else x + 1 for x in w) + (v,)
            for i in range(k):
                if delete(cand, i) not in words:
                    break
            else:
                out.add(cand)
    return out


def comp_set(s: PermSet, m: int, max_degree: int = DEFAULT_MAX_ENUM_DEGREE) -> PermSet:
    """All degree-``m`` permutations whose patterns at degree(s) lie in ``s``."""
    if m <= s.degree:
        raise ValueError(f"target degree {m} must exceed {s.degree}")
    if m > max_degree:
        raise CapExceeded(
            f"target degree {m} exceeds the enumeration cap of {max_degree}"
        )
    words: set[Word] | frozenset[Word] = s.word_set
    for k in range(s.degree, m):
        words = _comp_step(words, k)
    return PermSet(m, words)


def gpat(g: PermGroup, length: int, element_cap: int | None = None) -> PermGroup:
    """The group generated by the length-``length`` patterns of ``g``."""
    from .groups import DEFAULT_ELEMENT_CAP

    cap = DEFAULT_ELEMENT_CAP if element_cap is None else element_cap
    pats = pat_set(PermSet.from_group(g), length)
    return PermGroup.closure([Perm(w) for w in pats.words], length, cap)


def gcomp(g: PermGroup, m: int, max_degree: int = DEFAULT_MAX_ENUM_DEGREE) -> PermGroup:
    """Compatibility set of a group, verified to be a group itself."""
    result = comp_set(PermSet.from_group(g), m, max_degree)
    return PermGroup.from_words(result.words, m)


def comp_level_sequence(
    g: PermGroup, depth: int, max_degree: int = DEFAULT_MAX_ENUM_DEGREE
) -> list[PermGroup]:
    """The next ``depth`` levels above ``g``, each one computed from the last."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if g.degree + depth > max_degree:
        raise CapExceeded(
            f"degree {g.degree + depth} exceeds the enumeration cap of {max_degree}"
        )
    levels = []
    words: frozenset[Word] | set[Word] = g.word_set
    for k in range(g.degree, g.degree + depth):
        words = _comp_step(words, k)
        levels.append(PermGroup.from_words(words, k + 1))
    return levels
