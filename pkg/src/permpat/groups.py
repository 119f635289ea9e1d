"""Finite permutation groups as fully enumerated element sets.

No stabilizer chains: every group constructed here is small enough that the
explicit sorted element list is the cheapest representation, and exact set
comparison is the dominant query.  Closures are breadth-first and guarded by
an element cap; exceeding the cap is a hard error, never silent truncation.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, parse_partition
from .perms import (
    CapExceeded,
    Perm,
    _compose_words,
    _is_even_word,
    _jumps_word,
    JumpPair,
    descending,
    natural_cycle,
)

DEFAULT_ELEMENT_CAP = 500_000

Word = tuple[int, ...]


def _identity_word(n: int) -> Word:
    return tuple(range(1, n + 1))


def _close_words(gens: Sequence[Word], n: int, element_cap: int) -> frozenset[Word]:
    """Breadth-first closure of <gens> under composition.

    Skips generators already produced by the ones before them, so a large,
    redundant generating set costs little more than a minimal one.
    """
    elems: set[Word] = {_identity_word(n)}
    kept: list[Word] = []
    for g in gens:
        if g in elems:
            continue
        kept.append(g)
        frontier = [g]
        elems.add(g)
        while frontier:
            if len(elems) > element_cap:
                raise CapExceeded(
                    f"closure exceeded the element cap of {element_cap} "
                    f"(degree {n}, {len(elems)} elements reached)"
                )
            nxt = []
            for w in frontier:
                for h in kept:
                    prod = _compose_words(w, h)
                    if prod not in elems:
                        elems.add(prod)
                        nxt.append(prod)
            frontier = nxt
    return frozenset(elems)


class PermGroup:
    """Degree, generator list, and the full canonically sorted element set."""

    __slots__ = ("degree", "generator_words", "words", "word_set")

    def __init__(self, degree: int, generator_words: Sequence[Word], words: Iterable[Word]):
        self.degree = degree
        self.generator_words = tuple(generator_words)
        self.words = tuple(sorted(words))
        self.word_set = frozenset(self.words)

    # -- construction ------------------------------------------------------

    @classmethod
    def closure(
        cls,
        generators: Sequence[Perm],
        degree: int,
        element_cap: int = DEFAULT_ELEMENT_CAP,
    ) -> "PermGroup":
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        gens = tuple(g.word for g in generators)
        return cls(degree, gens, _close_words(gens, degree, element_cap))

    @classmethod
    def from_words(
        cls,
        words: Iterable[Word],
        degree: int,
        element_cap: int = DEFAULT_ELEMENT_CAP,
    ) -> "PermGroup":
        """Wrap an element set, verifying it really is a group.

        Generators are recovered greedily; the closure of the recovered
        generators must reproduce the set exactly.
        """
        wset = frozenset(words)
        gens: list[Word] = []
        closed: frozenset[Word] = frozenset({_identity_word(degree)})
        for w in sorted(wset):
            if w not in closed:
                gens.append(w)
                closed = _close_words(gens, degree, element_cap)
        if closed != wset:
            raise ValueError(
                f"element set of size {len(wset)} is not closed "
                f"(closure has {len(closed)} elements)"
            )
        return cls(degree, tuple(gens), wset)

    # -- basic protocol ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.words)

    @property
    def generators(self) -> tuple[Perm, ...]:
        return tuple(Perm(w) for w in self.generator_words)

    @property
    def elements(self) -> tuple[Perm, ...]:
        return tuple(Perm(w) for w in self.words)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.words)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.word_set == other.word_set
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.words))

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order}>"

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        return p.word in self.word_set

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return self.word_set <= other.word_set

    # -- structure -----------------------------------------------------------

    def orbits(self) -> Partition:
        """The partition of {1..n} into orbits."""
        n = self.degree
        seen = [False] * (n + 1)
        blocks = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            orbit = {start}
            queue = [start]
            seen[start] = True
            while queue:
                x = queue.pop()
                for g in self.generator_words:
                    y = g[x - 1]
                    if not seen[y]:
                        seen[y] = True
                        orbit.add(y)
                        queue.append(y)
            blocks.append(sorted(orbit))
        return Partition.from_blocks(blocks)

    def is_transitive(self) -> bool:
        return len(self.orbits().blocks) == 1

    def _seeded_congruence(self, j: int) -> Partition:
        # minimal G-invariant partition identifying 1 and j
        n = self.degree
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> bool:
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            parent[ry] = rx
            return True

        queue = [(1, j)]
        union(1, j)
        while queue:
            x, y = queue.pop()
            for g in self.generator_words:
                u, v = g[x - 1], g[y - 1]
                if union(u, v):
                    queue.append((u, v))
        groups: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            groups.setdefault(find(x), []).append(x)
        return Partition.from_blocks(groups.values())

    def block_systems(self) -> list[Partition]:
        """All minimal nontrivial invariant partitions of a transitive group."""
        if not self.is_transitive():
            raise ValueError("block systems are defined for transitive groups only")
        n = self.degree
        candidates = set()
        for j in range(2, n + 1):
            part = self._seeded_congruence(j)
            if 1 < len(part.blocks) < n:
                candidates.add(part)
        minimal = [
            p
            for p in candidates
            if not any(q != p and _refines(q, p) for q in candidates)
        ]
        return sorted(minimal, key=lambda p: p.blocks)

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial invariant partition."""
        if not self.is_transitive():
            raise ValueError("primitivity is defined for transitive groups only")
        return not self.block_systems()

    def largest_ab(self) -> tuple[int, int]:
        """Maximal a, b such that the prefix/suffix block group lies inside.

        Grown one adjacent transposition at a time: [1,a] needs (i i+1) for
        every i < a, and symmetrically for the suffix.
        """
        n = self.degree
        a = 1
        while a < n and self._has_adjacent_transposition(a):
            a += 1
        b = 1
        while b < n and self._has_adjacent_transposition(n - b):
            b += 1
        return a, b

    def _has_adjacent_transposition(self, i: int) -> bool:
        w = list(range(1, self.degree + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return tuple(w) in self.word_set

    def is_anomalous(self) -> bool:
        """Contains the natural cycle while the one-shorter patterns generate
        a proper subgroup of the full symmetric group."""
        n = self.degree
        if n < 2:
            raise ValueError("anomaly is defined for degree >= 2")
        if natural_cycle(n).word not in self.word_set:
            return False
        from .galois import gpat  # local import; galois depends on groups

        return gpat(self, n - 1).order != math.factorial(n - 1)

    def jump_set(self) -> tuple[JumpPair, ...]:
        """Union of the jump pairs over all elements."""
        pairs = set()
        for w in self.words:
            pairs.update(_jumps_word(w))
        return tuple(JumpPair(a, b) for a, b in sorted(pairs))


def _refines(p: Partition, q: Partition) -> bool:
    qi = q.block_index
    return all(len({qi[x] for x in b}) == 1 for b in p.blocks)


# ---------------------------------------------------------------------------
# named constructions

def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, (), {_identity_word(n)})


def symmetric_group(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    if math.factorial(n) > element_cap:
        raise CapExceeded(f"|S_{n}| = {math.factorial(n)} exceeds the cap {element_cap}")
    words = itertools.permutations(range(1, n + 1))
    gens: tuple[Word, ...]
    if n == 1:
        gens = ()
    elif n == 2:
        gens = ((2, 1),)
    else:
        gens = ((2, 1) + tuple(range(3, n + 1)), natural_cycle(n).word)
    return PermGroup(n, gens, words)


def alternating_group(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    if n >= 2 and math.factorial(n) // 2 > element_cap:
        raise CapExceeded(f"|A_{n}| exceeds the cap {element_cap}")
    words = [w for w in itertools.permutations(range(1, n + 1)) if _is_even_word(w)]
    if n <= 2:
        gens: tuple[Word, ...] = ()
    else:
        three = (2, 3, 1) + tuple(range(4, n + 1))
        if n == 3:
            gens = (three,)
        elif n % 2 == 1:
            gens = (three, natural_cycle(n).word)
        else:
            gens = (three, (1,) + tuple(range(3, n + 1)) + (2,))
    return PermGroup(n, gens, words)


def descending_group(n: int) -> PermGroup:
    d = descending(n).word
    return PermGroup(n, (d,), {_identity_word(n), d})


def natural_cyclic_group(n: int) -> PermGroup:
    z = natural_cycle(n).word
    words = []
    w = _identity_word(n)
    for _ in range(n):
        words.append(w)
        w = _compose_words(z, w)
    return PermGroup(n, (z,), words)


def natural_dihedral_group(n: int) -> PermGroup:
    z, d = natural_cycle(n).word, descending(n).word
    return PermGroup.closure([Perm(z), Perm(d)], n)


def dihedral_interval_group(n: int, a: int, b: int) -> PermGroup:
    """All permutations acting as the natural dihedral group on [a,b] and
    fixing everything else pointwise."""
    if not 1 <= a < b <= n:
        raise ValueError(f"need 1 <= a < b <= n, got a={a}, b={b}, n={n}")
    k = b - a + 1
    inner = natural_dihedral_group(k)
    words = []
    for w in inner.words:
        full = list(range(1, n + 1))
        for i, v in enumerate(w):
            full[a - 1 + i] = v + a - 1
        words.append(tuple(full))
    return PermGroup.from_words(words, n)


def young_subgroup(p: Partition, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """All permutations mapping every block of ``p`` onto itself."""
    order = math.prod(math.factorial(len(b)) for b in p.blocks)
    if order > element_cap:
        raise CapExceeded(f"Young subgroup order {order} exceeds the cap {element_cap}")
    n = p.size
    words = []
    per_block = [list(itertools.permutations(b)) for b in p.blocks]
    for choice in itertools.product(*per_block):
        w = [0] * n
        for block, images in zip(p.blocks, choice):
            for x, y in zip(block, images):
                w[x - 1] = y
        words.append(tuple(w))
    gens = [
        _transposition_word(n, b[i], b[i + 1])
        for b in p.blocks
        for i in range(len(b) - 1)
    ]
    return PermGroup(n, tuple(gens), words)


def young_with_reversal(p: Partition, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The group generated by the Young subgroup of ``p`` and the reversal."""
    base = young_subgroup(p, element_cap)
    d = descending(p.size).word
    return PermGroup.closure(
        [Perm(w) for w in base.generator_words] + [Perm(d)], p.size, element_cap
    )


def sab_group(n: int, a: int, b: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Permutations preserving [1,a] and the length-b suffix, fixing the middle."""
    from .partitions import end_blocks

    return young_subgroup(end_blocks(n, a, b), element_cap)


def partition_automorphisms(p: Partition, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """All permutations mapping blocks of ``p`` onto blocks of ``p``."""
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for b in p.blocks:
        by_size.setdefault(len(b), []).append(b)
    order = math.prod(
        math.factorial(len(cls)) * math.factorial(s) ** len(cls)
        for s, cls in by_size.items()
    )
    if order > element_cap:
        raise CapExceeded(f"automorphism group order {order} exceeds the cap {element_cap}")
    n = p.size
    words = []
    size_classes = sorted(by_size.items())
    class_targets = [
        list(itertools.permutations(cls)) for _, cls in size_classes
    ]
    for assignment in itertools.product(*class_targets):
        # assignment fixes, per size class, which block goes where
        sources = [b for _, cls in size_classes for b in cls]
        targets = [b for cls_t in assignment for b in cls_t]
        image_choices = [itertools.permutations(t) for t in targets]
        for images in itertools.product(*image_choices):
            w = [0] * n
            for src, img in zip(sources, images):
                for x, y in zip(src, img):
                    w[x - 1] = y
            words.append(tuple(w))
    return PermGroup.from_words(words, n, element_cap)


def _transposition_word(n: int, x: int, y: int) -> Word:
    w = list(range(1, n + 1))
    w[x - 1], w[y - 1] = y, x
    return tuple(w)


# ---------------------------------------------------------------------------
# descriptor grammar

def parse_group(text: str, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Build a group from its textual descriptor.

    Grammar: ``S:5`` ``A:5`` ``T:5`` ``Desc:5`` ``C:5`` ``D:5`` ``Dint:5:1:4``
    ``Sab:7:2:3`` ``SPi:1,2|3|4,5`` ``SPiDesc:1,2|3|4,5`` ``AutPi:1,3,5|2,4,6``
    ``gens:6:(1 2 3 4);(3 4 5 6)``.
    """
    head, _, rest = text.strip().partition(":")
    if not rest:
        raise ValueError(f"malformed group descriptor: {text!r}")
    try:
        if head == "S":
            return symmetric_group(int(rest), element_cap)
        if head == "A":
            return alternating_group(int(rest), element_cap)
        if head == "T":
            return trivial_group(int(rest))
        if head == "Desc":
            return descending_group(int(rest))
        if head == "C":
            return natural_cyclic_group(int(rest))
        if head == "D":
            return natural_dihedral_group(int(rest))
        if head == "Dint":
            n, a, b = (int(t) for t in rest.split(":"))
            return dihedral_interval_group(n, a, b)
        if head == "Sab":
            n, a, b = (int(t) for t in rest.split(":"))
            return sab_group(n, a, b, element_cap)
        if head == "SPi":
            return young_subgroup(parse_partition(rest), element_cap)
        if head == "SPiDesc":
            return young_with_reversal(parse_partition(rest), element_cap)
        if head == "AutPi":
            return partition_automorphisms(parse_partition(rest), element_cap)
        if head == "gens":
            deg_text, _, gtext = rest.partition(":")
            n = int(deg_text)
            from .perms import parse_perm

            gens = [parse_perm(t, n) for t in gtext.split(";") if t.strip()]
            return PermGroup.closure(gens, n, element_cap)
    except CapExceeded:
        raise
    except ValueError as exc:
        raise ValueError(f"bad group descriptor {text!r}: {exc}") from None
    raise ValueError(f"unknown group descriptor kind: {head!r}")


def describe_group(g: PermGroup) -> str:
    """A descriptor string that parses back to the same group."""
    from .perms import format_perm

    gens = ";".join(format_perm(Perm(w), "cycles") for w in g.generator_words)
    return f"gens:{g.degree}:{gens}"


# ---------------------------------------------------------------------------
# exhaustive subgroup enumeration

MAX_SUBGROUP_DEGREE = 6

#: Largest order of a proper subgroup other than the alternating group; any
#: closure that grows past this is the alternating or the full symmetric
#: group (for degree <= 6 no other subgroup of larger order exists, since the
#: symmetric group has no subgroup of index between 2 and its degree).
_LARGEST_SPORADIC_ORDER = {1: 1, 2: 2, 3: 3, 4: 8, 5: 24, 6: 120}


def _prime_power_order_words(n: int) -> list[Word]:
    """Canonical prime-power-order extension candidates.

    One representative per cyclic subgroup: the lexicographically least of
    its generators.  Extending by a representative reaches the same closures
    as extending by any generator of the same cyclic group.
    """
    out = []
    seen_cyclic: set[frozenset[Word]] = set()
    for w in sorted(itertools.permutations(range(1, n + 1))):
        lens = _cycle_lengths(w)
        order = math.lcm(*lens)
        if order <= 1 or not _is_prime_power(order):
            continue
        cyc = _close_words([w], n, math.factorial(n))
        if cyc not in seen_cyclic:
            seen_cyclic.add(cyc)
            out.append(w)
    return out


def _cycle_lengths(w: Word) -> list[int]:
    seen = [False] * len(w)
    lens = []
    for i in range(len(w)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
                length += 1
            lens.append(length)
    return lens


def _is_prime_power(k: int) -> bool:
    for p in (2, 3, 5, 7, 11, 13):
        if k % p == 0:
            while k % p == 0:
                k //= p
            return k == 1
    return False


def _close_or_identify(
    gens: Sequence[Word], n: int, full: frozenset[Word], even_half: frozenset[Word]
) -> frozenset[Word]:
    """Close a generating set, short-circuiting to A_n or S_n once the size
    passes every other subgroup's order."""
    cutoff = _LARGEST_SPORADIC_ORDER[n]
    elems: set[Word] = {_identity_word(n)}
    kept: list[Word] = []
    for g in gens:
        if g in elems:
            continue
        kept.append(g)
        frontier = [g]
        elems.add(g)
        while frontier:
            if len(elems) > cutoff:
                return even_half if all(_is_even_word(w) for w in gens) else full
            nxt = []
            for w in frontier:
                for h in kept:
                    prod = _compose_words(w, h)
                    if prod not in elems:
                        elems.add(prod)
                        nxt.append(prod)
            frontier = nxt
    return frozenset(elems)


def enumerate_subgroups(n: int) -> list[PermGroup]:
    """Every subgroup of the degree-n symmetric group, degree capped at 6.

    Seeds with the cyclic subgroups generated by prime-power-order elements
    and repeatedly extends by one such element, closing and deduplicating by
    exact element set.  Every subgroup is generated by its prime-power-order
    elements, so the fixpoint is complete.  Deterministic output order:
    ascending by (order, element list).
    """
    if not 1 <= n <= MAX_SUBGROUP_DEGREE:
        raise ValueError(f"subgroup enumeration is capped at degree {MAX_SUBGROUP_DEGREE}")
    full = frozenset(itertools.permutations(range(1, n + 1)))
    even_half = frozenset(w for w in full if _is_even_word(w))
    extenders = _prime_power_order_words(n)
    seen: dict[frozenset[Word], tuple[Word, ...]] = {}
    queue: list[tuple[frozenset[Word], tuple[Word, ...]]] = []

    def push(elems: frozenset[Word], gens: tuple[Word, ...]) -> None:
        if elems not in seen:
            seen[elems] = gens
            queue.append((elems, gens))

    push(frozenset({_identity_word(n)}), ())
    for g in extenders:
        push(_close_or_identify([g], n, full, even_half), (g,))
    while queue:
        elems, gens = queue.pop()
        if len(elems) == len(full) or elems == even_half:
            continue  # nothing above the top groups
        for g in extenders:
            if g in elems:
                continue
            new_gens = gens + (g,)
            push(_close_or_identify(new_gens, n, full, even_half), new_gens)
    groups = [PermGroup(n, gens, elems) for elems, gens in seen.items()]
    groups.sort(key=lambda h: (h.order, h.words))
    return groups
