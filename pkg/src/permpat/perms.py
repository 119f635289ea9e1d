"""Permutations of {1..n} in one-line form, with pattern and jump calculus.

Conventions used throughout the package:

- Positions and values are 1-based everywhere; a permutation pi is stored as
  the word (pi(1), ..., pi(n)).
- Composition is right to left: ``compose(f, g)(x) == f(g(x))``.
- The canonical order on permutations is lexicographic on the one-line word;
  every function returning a collection of permutations returns it sorted in
  this order.

All values are immutable; all operations are pure.
"""
from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

#: Hard cap on the degree of a single permutation.  One-line words above this
#: size are outside the scope of every exhaustive routine in this package.
MAX_DEGREE = 16


class CapExceeded(RuntimeError):
    """An enumeration or closure grew past its configured cap."""


class Perm:
    """An immutable permutation of {1..n} in one-line form."""

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        n = len(w)
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the cap of {MAX_DEGREE}")
        if sorted(w) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {w!r}")
        object.__setattr__(self, "word", w)

    @property
    def degree(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of the point ``i`` (1-based)."""
        return self.word[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.word == other.word

    def __lt__(self, other: "Perm") -> bool:
        return self.word < other.word

    def __le__(self, other: "Perm") -> bool:
        return self.word <= other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Perm({format_perm(self)!r})"

    def __str__(self) -> str:
        return format_perm(self)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")


class JumpPair(NamedTuple):
    """A value pair (a, b) with a <= b - 2 realised at adjacent positions."""

    a: int
    b: int


# ---------------------------------------------------------------------------
# raw-word helpers (hot paths work on plain tuples)

def _delete_word(word: tuple[int, ...], i0: int) -> tuple[int, ...]:
    # pattern obtained by deleting 0-based position i0
    v = word[i0]
    return tuple(x - 1 if x > v else x for x in word[:i0] + word[i0 + 1:])


def _reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


def _compose_words(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(f[x - 1] for x in g)


def _inverse_word(word: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(word)
    for i, v in enumerate(word):
        inv[v - 1] = i + 1
    return tuple(inv)


def _is_even_word(word: tuple[int, ...]) -> bool:
    # parity of the inversion count, via cycle structure: even iff
    # n - (#cycles) is even
    n = len(word)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = word[j] - 1
    return (n - cycles) % 2 == 0


def _jumps_word(word: tuple[int, ...]) -> list[tuple[int, int]]:
    out = []
    for t in range(len(word) - 1):
        x, y = word[t], word[t + 1]
        a, b = (x, y) if x < y else (y, x)
        if a <= b - 2:
            out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# constructors

def ascending(n: int) -> Perm:
    """The identity word 1 2 ... n."""
    _check_degree(n)
    return Perm(range(1, n + 1))


def descending(n: int) -> Perm:
    """The reversal word n (n-1) ... 1."""
    _check_degree(n)
    return Perm(range(n, 0, -1))


def natural_cycle(n: int) -> Perm:
    """The word 2 3 ... n 1, i.e. the cycle (1 2 ... n)."""
    _check_degree(n)
    return Perm(tuple(range(2, n + 1)) + (1,))


def dja(n: int, length: int) -> Perm:
    """Descending block followed by ascending: descending(length) (+) ascending(n-length)."""
    _check_block(n, length)
    return Perm(tuple(range(length, 0, -1)) + tuple(range(length + 1, n + 1)))


def ajd(n: int, length: int) -> Perm:
    """Ascending block followed by descending: ascending(n-length) (+) descending(length)."""
    _check_block(n, length)
    return Perm(tuple(range(1, n - length + 1)) + tuple(range(n, n - length, -1)))


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")


def _check_block(n: int, length: int) -> None:
    _check_degree(n)
    if not 1 <= length <= n:
        raise ValueError(f"block length must be in 1..{n}, got {length}")


# ---------------------------------------------------------------------------
# group algebra

def compose(f: Perm, g: Perm) -> Perm:
    """Right-to-left composition: the permutation x -> f(g(x))."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    return Perm(_compose_words(f.word, g.word))


def inverse(p: Perm) -> Perm:
    return Perm(_inverse_word(p.word))


def power(p: Perm, k: int) -> Perm:
    """k-th compositional power; k may be negative or zero."""
    word = p.word if k >= 0 else _inverse_word(p.word)
    k = abs(k)
    acc = tuple(range(1, p.degree + 1))
    while k:
        if k & 1:
            acc = _compose_words(word, acc)
        word = _compose_words(word, word)
        k >>= 1
    return Perm(acc)


# ---------------------------------------------------------------------------
# text formats

def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse one-line ("2,3,1", "2 3 1", or "231" for n <= 9) or cycle notation.

    Cycle notation looks like "(1 2 3)(4 5)" with fixed points omitted; it
    requires an explicit ``degree``.  "()" denotes the identity.
    """
    text = text.strip()
    if text.startswith("("):
        if degree is None:
            raise ValueError("cycle notation needs an explicit degree")
        return _parse_cycles(text, degree)
    if "," in text or " " in text:
        parts = [t for t in text.replace(",", " ").split() if t]
        values = [_parse_int(t) for t in parts]
    else:
        if not text:
            raise ValueError("empty permutation")
        if not text.isdigit():
            raise ValueError(f"malformed one-line word: {text!r}")
        values = [int(c) for c in text]
    p = _perm_from_values(values)
    if degree is not None and p.degree != degree:
        raise ValueError(f"word has degree {p.degree}, expected {degree}")
    return p


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"malformed token: {token!r}") from None


def _perm_from_values(values: list[int]) -> Perm:
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        seen = set()
        for v in values:
            if v in seen:
                raise ValueError(f"repeated value {v}")
            seen.add(v)
        raise ValueError(f"values must be exactly 1..{n}: {values}")
    return Perm(values)


def _parse_cycles(text: str, degree: int) -> Perm:
    _check_degree(degree)
    word = list(range(1, degree + 1))
    seen: set[int] = set()
    body = text
    while body:
        if not body.startswith("("):
            raise ValueError(f"malformed cycle notation: {text!r}")
        close = body.find(")")
        if close < 0:
            raise ValueError(f"unbalanced parenthesis in {text!r}")
        inner = body[1:close].replace(",", " ").split()
        body = body[close + 1:].strip()
        if not inner:
            continue
        pts = [_parse_int(t) for t in inner]
        for x in pts:
            if not 1 <= x <= degree:
                raise ValueError(f"cycle point {x} out of 1..{degree}")
            if x in seen:
                raise ValueError(f"repeated value {x}")
            seen.add(x)
        for i, x in enumerate(pts):
            word[x - 1] = pts[(i + 1) % len(pts)]
    return Perm(word)


def format_perm(p: Perm, notation: str = "one_line") -> str:
    """Render as a one-line word, or as a product of cycles."""
    if notation == "one_line":
        if p.degree <= 9:
            return "".join(str(v) for v in p.word)
        return ",".join(str(v) for v in p.word)
    if notation == "cycles":
        cycles = []
        seen: set[int] = set()
        for start in range(1, p.degree + 1):
            if start in seen or p.word[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = p.word[start - 1]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = p.word[x - 1]
            cycles.append("(" + " ".join(str(v) for v in cyc) + ")")
        return "".join(cycles) if cycles else "()"
    raise ValueError(f"unknown notation: {notation!r}")


# ---------------------------------------------------------------------------
# patterns

def reduce_word(word: Sequence[int]) -> Perm:
    """Order-isomorphic permutation of a word of pairwise distinct integers."""
    if len(set(word)) != len(word):
        raise ValueError(f"entries must be pairwise distinct: {tuple(word)}")
    if not word:
        raise ValueError("empty word")
    return Perm(_reduce_word(word))


def pattern(p: Perm, index_set: Iterable[int]) -> Perm:
    """The pattern of ``p`` at the given set of 1-based positions."""
    idx = sorted(set(index_set))
    if not idx:
        raise ValueError("index set must be nonempty")
    if idx[0] < 1 or idx[-1] > p.degree:
        raise ValueError(f"index out of range 1..{p.degree}: {idx}")
    return Perm(_reduce_word([p.word[i - 1] for i in idx]))


def delete_point(p: Perm, i: int) -> Perm:
    """The (n-1)-pattern obtained by deleting position ``i``."""
    if p.degree < 2:
        raise ValueError("cannot delete from a degree-1 permutation")
    if not 1 <= i <= p.degree:
        raise ValueError(f"position {i} out of range 1..{p.degree}")
    return Perm(_delete_word(p.word, i - 1))


def all_patterns(p: Perm, length: int) -> tuple[Perm, ...]:
    """All distinct patterns of the given length, canonically sorted."""
    n = p.degree
    if not 1 <= length <= n:
        raise ValueError(f"pattern length {length} out of range 1..{n}")
    word = p.word
    found = {
        _reduce_word([word[i] for i in combo])
        for combo in itertools.combinations(range(n), length)
    }
    return tuple(Perm(w) for w in sorted(found))


def involves(tau: Perm, pi: Perm) -> bool:
    """True iff some subsequence of ``pi`` reduces to ``tau``."""
    k, n = tau.degree, pi.degree
    if k > n:
        return False
    if k == n:
        return tau == pi
    target = tau.word
    word = pi.word
    for combo in itertools.combinations(range(n), k):
        if _reduce_word([word[i] for i in combo]) == target:
            return True
    return False


# ---------------------------------------------------------------------------
# sums, symmetries, parity, jumps

def direct_sum(s: Perm, t: Perm) -> Perm:
    m = s.degree
    return Perm(s.word + tuple(v + m for v in t.word))


def skew_sum(s: Perm, t: Perm) -> Perm:
    n = t.degree
    return Perm(tuple(v + n for v in s.word) + t.word)


def reverse(p: Perm) -> Perm:
    """p composed with the reversal on positions: word read right to left."""
    return Perm(p.word[::-1])


def complement(p: Perm) -> Perm:
    """Reversal composed with p: each value v replaced by n + 1 - v."""
    n = p.degree
    return Perm(tuple(n + 1 - v for v in p.word))


def rc_conjugate(p: Perm) -> Perm:
    """Conjugate by the descending permutation (reverse of the complement)."""
    n = p.degree
    return Perm(tuple(n + 1 - v for v in p.word[::-1]))


def is_even(p: Perm) -> bool:
    return _is_even_word(p.word)


def parity(p: Perm) -> str:
    """'even' or 'odd', the parity of the inversion count."""
    return "even" if _is_even_word(p.word) else "odd"


def jumps(p: Perm) -> tuple[JumpPair, ...]:
    """All value pairs (a, b) with a <= b - 2 taken at adjacent positions.

    A pair qualifies when {p(t), p(t+1)} = {a, b} for some position t; the
    result is sorted and duplicate-free.
    """
    return tuple(JumpPair(a, b) for a, b in sorted(set(_jumps_word(p.word))))


def adjacent_pattern_quotient(p: Perm, i: int) -> Perm:
    """delete_point(p, i+1) composed with the inverse of delete_point(p, i).

    For any permutation this quotient is a single cycle on a value interval
    bounded by p(i) and p(i+1); tests assert that shape exhaustively.
    """
    if not 1 <= i <= p.degree - 1:
        raise ValueError(f"position {i} out of range 1..{p.degree - 1}")
    left = _delete_word(p.word, i)      # delete position i+1 (0-based i)
    right = _delete_word(p.word, i - 1)  # delete position i
    return Perm(_compose_words(left, _inverse_word(right)))
