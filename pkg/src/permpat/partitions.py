"""Set partitions of {1..n} and the interval/derivative calculus on them.

Partitions are value types: blocks are stored sorted, ordered by their minimum
element, so structural equality and hashing are canonical.  The text format is
"1,2,3|4,5|6" (order-insensitive; canonicalised on parse).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .perms import Perm, ajd, dja, natural_cycle


@dataclass(frozen=True)
class Partition:
    size: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        norm = tuple(sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[0]))
        if not norm or any(not b for b in norm):
            raise ValueError("blocks must be nonempty")
        flat = [x for b in norm for x in b]
        n = len(flat)
        if sorted(flat) != list(range(1, n + 1)):
            raise ValueError(f"blocks must partition 1..n exactly once: {norm}")
        return cls(n, norm)

    @cached_property
    def block_index(self) -> dict[int, int]:
        """Map element -> index of its block in ``blocks``."""
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self.block_index[x]]

    def same_block(self, x: int, y: int) -> bool:
        return self.block_index[x] == self.block_index[y]

    @property
    def is_trivial(self) -> bool:
        """One single block, or all blocks singletons."""
        return len(self.blocks) == 1 or all(len(b) == 1 for b in self.blocks)

    def has_trivial_block(self) -> bool:
        return any(len(b) == 1 for b in self.blocks)

    def __str__(self) -> str:
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse "1,2,3|4,5|6"; every element of 1..n must occur exactly once."""
    blocks = []
    for chunk in text.strip().split("|"):
        items = [t for t in chunk.replace(",", " ").split() if t]
        if not items:
            raise ValueError(f"empty block in {text!r}")
        try:
            blocks.append([int(t) for t in items])
        except ValueError:
            raise ValueError(f"malformed block {chunk!r}") from None
    return Partition.from_blocks(blocks)


def format_partition(p: Partition) -> str:
    return "|".join(",".join(str(x) for x in b) for b in p.blocks)


# ---------------------------------------------------------------------------
# lattice operations

def refines(p: Partition, q: Partition) -> bool:
    """True iff every block of ``p`` lies inside a block of ``q``."""
    _check_sizes(p, q)
    qi = q.block_index
    return all(len({qi[x] for x in b}) == 1 for b in p.blocks)


def meet(p: Partition, q: Partition) -> Partition:
    """Coarsest common refinement: intersect blocks pairwise."""
    _check_sizes(p, q)
    pi, qi = p.block_index, q.block_index
    cells: dict[tuple[int, int], list[int]] = {}
    for x in range(1, p.size + 1):
        cells.setdefault((pi[x], qi[x]), []).append(x)
    return Partition.from_blocks(cells.values())


def join(p: Partition, q: Partition) -> Partition:
    """Finest common coarsening, by union-find over both block relations."""
    _check_sizes(p, q)
    parent = list(range(p.size + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for b in part.blocks:
            root = find(b[0])
            for x in b[1:]:
                parent[find(x)] = root
    groups: dict[int, list[int]] = {}
    for x in range(1, p.size + 1):
        groups.setdefault(find(x), []).append(x)
    return Partition.from_blocks(groups.values())


def _check_sizes(p: Partition, q: Partition) -> None:
    if p.size != q.size:
        raise ValueError(f"ground-set size mismatch: {p.size} vs {q.size}")


# ---------------------------------------------------------------------------
# named partitions

def delta_pairs(n: int) -> Partition:
    """Pairs {i, n+1-i} (the orbits of the descending permutation)."""
    if n < 1:
        raise ValueError("n must be positive")
    return Partition.from_blocks({tuple(sorted({i, n + 1 - i})) for i in range(1, n + 1)})


def odd_even(n: int) -> Partition:
    """Two blocks: odd numbers and even numbers."""
    if n < 2:
        raise ValueError("odd/even split needs n >= 2")
    return Partition.from_blocks([range(1, n + 1, 2), range(2, n + 1, 2)])


def end_blocks(n: int, a: int, b: int) -> Partition:
    """Blocks [1,a] and [n-b+1,n] with everything between left as singletons."""
    if not (1 <= a and 1 <= b and a + b <= n):
        raise ValueError(f"need 1 <= a, 1 <= b, a + b <= n; got n={n}, a={a}, b={b}")
    blocks = [tuple(range(1, a + 1)), tuple(range(n - b + 1, n + 1))]
    blocks += [(i,) for i in range(a + 1, n - b + 1)]
    return Partition.from_blocks(blocks)


# ---------------------------------------------------------------------------
# interval structure and the derivative

def max_intervals(p: Partition) -> Partition:
    """Coarsest interval partition refining ``p``: maximal runs of consecutive
    integers that lie in one block."""
    runs = []
    start = 1
    for x in range(2, p.size + 1):
        if not p.same_block(x - 1, x):
            runs.append(tuple(range(start, x)))
            start = x
    runs.append(tuple(range(start, p.size + 1)))
    return Partition(p.size, tuple(runs))


def _middle_interval_blocks(p: Partition) -> list[tuple[int, ...]]:
    m = max_intervals(p)
    first, last = m.block_of(1), m.block_of(p.size)
    return [b for b in m.blocks if b is not first and b is not last]


def derive(p: Partition) -> Partition:
    """The derived partition on {1..n+1}.

    Each maximal interval block [a,b] of ``p`` contributes:
      - [a,b] itself when a = 1 and b < n;
      - {a} (and [a+1,b] when a < b) when a > 1 and b < n;
      - {a} and [a+1,n+1] when a > 1 and b = n;
      - [1,n+1] when a = 1 and b = n.
    """
    n = p.size
    blocks: list[tuple[int, ...]] = []
    for run in max_intervals(p).blocks:
        a, b = run[0], run[-1]
        if a == 1 and b == n:
            blocks.append(tuple(range(1, n + 2)))
        elif a == 1:
            blocks.append(run)
        elif b == n:
            blocks.append((a,))
            blocks.append(tuple(range(a + 1, n + 2)))
        else:
            blocks.append((a,))
            if a < b:
                blocks.append(tuple(range(a + 1, b + 1)))
    return Partition.from_blocks(blocks)


def derive_iter(p: Partition, i: int) -> Partition:
    """i-fold derivative, a partition of {1..n+i}."""
    if i < 1:
        raise ValueError("iteration count must be >= 1")
    for _ in range(i):
        p = derive(p)
    return p


def reverse_partition(p: Partition) -> Partition:
    """Each block mapped through x -> n + 1 - x."""
    n = p.size
    return Partition.from_blocks(tuple(n + 1 - x for x in b) for b in p.blocks)


def is_interval_partition(p: Partition) -> bool:
    return all(b[-1] - b[0] + 1 == len(b) for b in p.blocks)


def has_consecutive_nontrivial_blocks(p: Partition) -> bool:
    """True iff some t has t-1 and t in distinct blocks that both have size >= 2."""
    for t in range(2, p.size + 1):
        bi, bj = p.block_index[t - 1], p.block_index[t]
        if bi != bj and len(p.blocks[bi]) > 1 and len(p.blocks[bj]) > 1:
            return True
    return False


# ---------------------------------------------------------------------------
# interwoven intervals

def interwoven(p: Partition, a: int, b: int) -> bool:
    """True iff [a,b] splits into k > 1 arithmetic progressions of step k that
    are all blocks of ``p``."""
    if not 1 <= a < b <= p.size:
        raise ValueError(f"need 1 <= a < b <= {p.size}, got [{a},{b}]")
    span = b - a + 1
    block_set = set(p.blocks)
    for k in range(2, span + 1):
        if span % k:
            continue
        if all(tuple(range(a + i, b + 1, k)) in block_set for i in range(k)):
            return True
    return False


class InterwovenEnds(NamedTuple):
    prefix: int | None   # l with 1 < l < n and [1,l] interwoven
    suffix: int | None   # m with 1 < m < n and [m,n] interwoven
    full: bool           # [1,n] interwoven


def interwoven_ends(p: Partition) -> InterwovenEnds:
    """Scan for interwoven prefix/suffix/full intervals.

    Requires a partition with no trivial blocks; that makes each of the three
    answers unique, because distinct interwoven intervals cannot overlap.
    """
    if p.has_trivial_block():
        raise ValueError("interwoven-end scan requires a partition with no trivial blocks")
    n = p.size
    prefix = [l for l in range(2, n) if interwoven(p, 1, l)]
    suffix = [m for m in range(2, n) if interwoven(p, m, n)]
    if len(prefix) > 1 or len(suffix) > 1:
        raise AssertionError(f"overlapping interwoven intervals in {p}")
    return InterwovenEnds(
        prefix[0] if prefix else None,
        suffix[0] if suffix else None,
        n >= 2 and interwoven(p, 1, n),
    )


def interwoven_generators(p: Partition) -> tuple[Perm, ...]:
    """The degree-(n+1) permutations contributed by interwoven end intervals.

    For a partition with no trivial blocks: a one-jump block-reversal for an
    interwoven prefix [1,l], its mirror for an interwoven suffix [m,n], and
    the natural cycle when the whole line is interwoven.
    """
    ends = interwoven_ends(p)
    n = p.size
    out: list[Perm] = []
    if ends.prefix is not None:
        out.append(dja(n + 1, ends.prefix))
    if ends.suffix is not None:
        out.append(ajd(n + 1, n - ends.suffix + 1))
    if ends.full:
        out.append(natural_cycle(n + 1))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# block-size measures

def mu(p: Partition) -> int:
    """Largest size of a middle maximal-interval block (1 when there is none)."""
    mids = _middle_interval_blocks(p)
    return max([len(b) for b in mids] + [1])


def mu_ab(p: Partition, a: int, b: int) -> int:
    """``mu`` corrected by how far the end interval blocks exceed [1,a] and
    the length-b suffix."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    m = max_intervals(p)
    return max(mu(p), len(m.block_of(1)) - a + 1, len(m.block_of(p.size)) - b + 1)
