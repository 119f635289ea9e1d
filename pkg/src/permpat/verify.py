"""Reconcile classifier predictions and structural laws against brute force.

Every check produces a machine-readable Report.  A failing report always
carries a counterexample payload; a cap-induced skip is reported as skipped,
never silently passed.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from . import perms as perms_mod
from . import partitions as parts
from .classify import (
    EventualFamily,
    Prediction,
    predict_eventual,
    predict_level,
)
from .galois import DEFAULT_MAX_ENUM_DEGREE, PermSet, _comp_step, comp_set, pat_set
from .groups import (
    PermGroup,
    describe_group,
    enumerate_subgroups,
    natural_cyclic_group,
    natural_dihedral_group,
    parse_group,
    partition_automorphisms,
    symmetric_group,
    young_subgroup,
)
from .perms import CapExceeded, Perm, ascending, descending, natural_cycle

Word = tuple[int, ...]


@dataclass
class Report:
    check_id: str
    scope: str
    status: str  # "pass" | "fail" | "skipped"
    counterexample: dict | None = None
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        out = {"check_id": self.check_id, "scope": self.scope, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["elapsed_ms"] = self.elapsed_ms
        return out


def _run_check(check_id: str, scope: str, fn: Callable[[], dict | None]) -> Report:
    start = time.perf_counter()
    try:
        cx = fn()
    except CapExceeded as exc:
        elapsed = int((time.perf_counter() - start) * 1000)
        return Report(check_id, scope, "skipped", {"reason": str(exc)}, elapsed)
    elapsed = int((time.perf_counter() - start) * 1000)
    if cx is None:
        return Report(check_id, scope, "pass", None, elapsed)
    return Report(check_id, scope, "fail", cx, elapsed)


def _words_payload(words: Iterable[Word], limit: int = 24) -> dict:
    ws = sorted(words)
    shown = [perms_mod.format_perm(Perm(w)) for w in ws[:limit]]
    out = {"size": len(ws), "members": shown}
    if len(ws) > limit:
        out["truncated"] = True
    return out


# ---------------------------------------------------------------------------
# prediction vs oracle

def verify_prediction(
    g: PermGroup, depth: int, max_degree: int = DEFAULT_MAX_ENUM_DEGREE
) -> Report:
    """Compare predicted levels 1..depth against the brute-force engine."""
    scope = f"{describe_group(g)} depth={depth}"

    def run() -> dict | None:
        words: frozenset[Word] | set[Word] = g.word_set
        for i in range(1, depth + 1):
            k = g.degree + i
            if k > max_degree:
                raise CapExceeded(f"level degree {k} exceeds the cap {max_degree}")
            words = _comp_step(words, k - 1)
            pred = predict_level(g, i)
            cx = _compare_level(pred, frozenset(words), i)
            if cx is not None:
                return cx
        return None

    return _run_check("prediction", scope, run)


def _compare_level(pred: Prediction, oracle: frozenset[Word], level: int) -> dict | None:
    if pred.exact is not None:
        if pred.exact.word_set != oracle:
            return {
                "level": level,
                "mode": "exact",
                "expected": _words_payload(pred.exact.word_set),
                "actual": _words_payload(oracle),
            }
        return None
    assert pred.lower is not None and pred.upper is not None
    if not pred.lower.word_set <= oracle:
        return {
            "level": level,
            "mode": "lower-bound",
            "expected": _words_payload(pred.lower.word_set),
            "actual": _words_payload(oracle),
        }
    if not oracle <= pred.upper.word_set:
        return {
            "level": level,
            "mode": "upper-bound",
            "expected": _words_payload(pred.upper.word_set),
            "actual": _words_payload(oracle),
        }
    return None


# ---------------------------------------------------------------------------
# eventual families observed by brute force

def _family_candidates(g: PermGroup) -> list[EventualFamily]:
    """Families whose member at this degree equals ``g``, in priority order."""
    out = []
    if g.order == math.factorial(g.degree):
        out.append(EventualFamily("symmetric"))
    for desc in (True, False):
        fam = EventualFamily("cyclic", desc)
        if fam.matches(g):
            out.append(fam)
    a, b = g.largest_ab()
    for desc in (False, True):
        if desc and a != b:
            continue
        fam = EventualFamily("sab", desc, a, b)
        if fam.matches(g):
            out.append(fam)
    return out


def eventual_onset(
    g: PermGroup, max_depth: int, max_degree: int = DEFAULT_MAX_ENUM_DEGREE
) -> tuple[list[EventualFamily], int | None]:
    """Walk the level sequence and find where it enters an eventual family.

    Returns (surviving family candidates, observed level); candidates survive
    only if they match at the observed level and at every further computed
    level, and at least one further level was computed (a single coincidental
    match never declares onset).  Returns ([], None) when nothing is found
    within ``max_depth`` levels; the degree cap truncates the walk silently,
    while a level outgrowing the element cap raises.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    levels: list[PermGroup] = [g]
    words: frozenset[Word] | set[Word] = g.word_set
    for i in range(1, max_depth + 1):
        k = g.degree + i
        if k > max_degree:
            break
        words = _comp_step(words, k - 1)
        levels.append(PermGroup.from_words(words, k))
    if len(levels) < 2:
        return [], None
    for m in range(len(levels) - 1):
        survivors = [
            fam
            for fam in _family_candidates(levels[m])
            if all(fam.matches(lv) for lv in levels[m + 1 :])
        ]
        if survivors:
            return survivors, m
    return [], None


def _onset_report(g: PermGroup, max_degree: int) -> Report:
    scope = describe_group(g)

    def run() -> dict | None:
        fam, bound = predict_eventual(g)
        depth = bound + 1
        if g.degree + depth > max_degree:
            raise CapExceeded(
                f"onset check needs degree {g.degree + depth} > cap {max_degree}"
            )
        survivors, observed = eventual_onset(g, depth, max_degree)
        if observed is None:
            return {
                "predicted_family": fam.to_json(),
                "onset_bound": bound,
                "observed": None,
                "reason": "no family detected within the bound",
            }
        if observed > bound:
            return {
                "predicted_family": fam.to_json(),
                "onset_bound": bound,
                "observed": observed,
                "reason": "observed onset exceeds the bound",
            }
        if fam not in survivors:
            return {
                "predicted_family": fam.to_json(),
                "observed_families": [f.to_json() for f in survivors],
                "observed": observed,
                "reason": "family mismatch",
            }
        return None

    return _run_check("onset", scope, run)


# ---------------------------------------------------------------------------
# catalogs

def verify_group(
    g: PermGroup, depth: int, max_degree: int = DEFAULT_MAX_ENUM_DEGREE
) -> list[Report]:
    return [verify_prediction(g, depth, max_degree), _onset_report(g, max_degree)]


def _catalog_worker(args: tuple[str, int, int]) -> list[dict]:
    descriptor, depth, max_degree = args
    g = parse_group(descriptor)
    return [r.to_json() for r in verify_group(g, depth, max_degree)]


def verify_catalog(
    n: int,
    depth: int = 2,
    max_degree: int = DEFAULT_MAX_ENUM_DEGREE,
    threads: int = 1,
) -> list[Report]:
    """Run prediction and onset checks over every subgroup of degree ``n``."""
    groups = enumerate_subgroups(n)
    if threads > 1:
        jobs = [(describe_group(g), depth, max_degree) for g in groups]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_catalog_worker, jobs))
        reports = [
            Report(
                d["check_id"],
                d["scope"],
                d["status"],
                d.get("counterexample"),
                d["elapsed_ms"],
            )
            for chunk in chunks
            for d in chunk
        ]
    else:
        reports = [r for g in groups for r in verify_group(g, depth, max_degree)]
    reports.sort(key=lambda r: (r.check_id, r.scope))
    return reports


# ---------------------------------------------------------------------------
# structural law suites

def _random_perm(rng: random.Random, n: int) -> Perm:
    word = list(range(1, n + 1))
    rng.shuffle(word)
    return Perm(word)


def _random_word_set(rng: random.Random, n: int, max_size: int) -> PermSet:
    size = rng.randint(1, max_size)
    return PermSet(n, {_random_perm(rng, n).word for _ in range(size)})


def _law_product_containment(rng: random.Random) -> dict | None:
    for _ in range(60):
        n = rng.randint(2, 7)
        length = rng.randint(1, n)
        pi, tau = _random_perm(rng, n), _random_perm(rng, n)
        prod = perms_mod.compose(pi, tau)
        left = set(perms_mod.all_patterns(prod, length))
        pairs = {
            perms_mod.compose(s, t)
            for s in perms_mod.all_patterns(pi, length)
            for t in perms_mod.all_patterns(tau, length)
        }
        if not left <= pairs:
            return {"pi": str(pi), "tau": str(tau), "length": length}
    return None


def _law_partial_order(rng: random.Random) -> dict | None:
    for _ in range(40):
        n = rng.randint(1, 7)
        pi = _random_perm(rng, n)
        if not perms_mod.involves(pi, pi):
            return {"reflexivity": str(pi)}
        tau = _random_perm(rng, n)
        if perms_mod.involves(tau, pi) != (tau == pi):
            return {"antisymmetry": [str(tau), str(pi)]}
        m = rng.randint(1, n)
        idx_m = sorted(rng.sample(range(1, n + 1), m))
        mid = perms_mod.pattern(pi, idx_m)
        l = rng.randint(1, m)
        idx_l = sorted(rng.sample(range(1, m + 1), l))
        low = perms_mod.pattern(mid, idx_l)
        if not perms_mod.involves(low, pi):
            return {"transitivity": [str(low), str(mid), str(pi)]}
    return None


def _law_interpolation(rng: random.Random) -> dict | None:
    for _ in range(25):
        n = rng.randint(2, 7)
        tau = _random_perm(rng, n)
        l = rng.randint(1, n - 1)
        sigma = rng.choice(perms_mod.all_patterns(tau, l))
        for m in range(l, n + 1):
            if not any(
                perms_mod.involves(sigma, piv)
                for piv in perms_mod.all_patterns(tau, m)
            ):
                return {"sigma": str(sigma), "tau": str(tau), "m": m}
    return None


def _one_jump_family(n: int) -> set[Word]:
    out: set[Perm] = set()
    d = descending(n)
    for length in range(2, n - 1):
        for base in (perms_mod.dja(n, length), perms_mod.ajd(n, length)):
            out.add(base)
            out.add(perms_mod.compose(d, base))
    z = natural_cycle(n)
    for j in range(1, n):
        zj = perms_mod.power(z, j)
        out.add(zj)
        out.add(perms_mod.compose(d, zj))
    # at degree 2 the cycle powers collapse into the jump-free words
    return {p.word for p in out} - {ascending(n).word, descending(n).word}


def _law_jump_characterization(_: random.Random) -> dict | None:
    for n in range(2, 8):
        none_expected = {ascending(n).word, descending(n).word}
        one_expected = _one_jump_family(n)
        for word in itertools.permutations(range(1, n + 1)):
            p = Perm(word)
            k = len(perms_mod.jumps(p))
            if (k == 0) != (word in none_expected):
                return {"perm": str(p), "jumps": k, "expected_zero": word in none_expected}
            if (k == 1) != (word in one_expected):
                return {"perm": str(p), "jumps": k, "expected_one": word in one_expected}
    return None


def _law_dihedral_criterion(_: random.Random) -> dict | None:
    for n in range(3, 8):
        dn = natural_dihedral_group(n)
        for word in itertools.permutations(range(1, n + 1)):
            consecutive = all(
                (word[t] - word[t + 1]) % n in (1, n - 1) for t in range(n - 1)
            )
            if consecutive != (word in dn.word_set):
                return {"perm": str(Perm(word)), "n": n}
    return None


def _law_parity_deletion(_: random.Random) -> dict | None:
    for n in range(2, 8):
        for word in itertools.permutations(range(1, n + 1)):
            p = Perm(word)
            same = perms_mod.parity(p) == perms_mod.parity(perms_mod.delete_point(p, 1))
            if same != (word[0] % 2 == 1):
                return {"perm": str(p)}
    return None


def _law_symmetry_involvement(rng: random.Random) -> dict | None:
    for _ in range(40):
        n = rng.randint(2, 7)
        k = rng.randint(1, n)
        pi = _random_perm(rng, n)
        tau = _random_perm(rng, k)
        base = perms_mod.involves(tau, pi)
        for op in (perms_mod.reverse, perms_mod.complement, perms_mod.inverse):
            if perms_mod.involves(op(tau), op(pi)) != base:
                return {"tau": str(tau), "pi": str(pi), "op": op.__name__}
    return None


def _law_adjacent_quotient(_: random.Random) -> dict | None:
    # the quotient is a single cycle on the value interval between p(i) and
    # p(i+1): shift-up when ascending across the gap, shift-down otherwise
    for n in range(2, 7):
        for word in itertools.permutations(range(1, n + 1)):
            p = Perm(word)
            for i in range(1, n):
                gamma = perms_mod.adjacent_pattern_quotient(p, i)
                j, k = word[i - 1], word[i]
                cyc = list(range(1, n))
                if j < k:
                    for x in range(j, k - 1):
                        cyc[x - 1] = x + 1
                    cyc[k - 2] = j
                elif j > k:
                    for x in range(k + 1, j):
                        cyc[x - 1] = x - 1
                    cyc[k - 1] = j - 1
                if gamma.word != tuple(cyc):
                    return {"perm": str(p), "i": i, "gamma": str(gamma)}
    return None


def _law_cycle_prefix_generation(_: random.Random) -> dict | None:
    for n in range(3, 8):
        for m in range(2, n):
            prefix = perms_mod.parse_perm(
                "(" + " ".join(str(x) for x in range(1, m + 1)) + ")", n
            )
            g = PermGroup.closure([natural_cycle(n), prefix], n)
            both_odd = (m % 2 == 1) and (n % 2 == 1)
            expected = math.factorial(n) // 2 if both_odd else math.factorial(n)
            if g.order != expected:
                return {"n": n, "m": m, "order": g.order}
    return None


def _all_partitions(n: int) -> list[parts.Partition]:
    out: list[list[list[int]]] = [[[1]]]
    for x in range(2, n + 1):
        nxt = []
        for p in out:
            for i in range(len(p)):
                nxt.append([b + [x] if j == i else list(b) for j, b in enumerate(p)])
            nxt.append([list(b) for b in p] + [[x]])
        out = nxt
    return [parts.Partition.from_blocks(p) for p in out] if n else []


def _law_young_join(_: random.Random) -> dict | None:
    for n in range(2, 6):
        all_parts = _all_partitions(n)
        for p in all_parts:
            yp = young_subgroup(p)
            for q in all_parts:
                yq = young_subgroup(q)
                gens = [Perm(w) for w in yp.generator_words + yq.generator_words]
                joined = PermGroup.closure(gens, n)
                if joined != young_subgroup(parts.join(p, q)):
                    return {"p": str(p), "q": str(q)}
    return None


def _law_orbit_minimality(_: random.Random) -> dict | None:
    for n in (3, 4, 5):
        partitions = _all_partitions(n)
        for g in enumerate_subgroups(n):
            theta = g.orbits()
            if not g.is_subgroup_of(young_subgroup(theta)):
                return {"group": describe_group(g), "orbits": str(theta)}
            for p in partitions:
                if p != theta and parts.refines(p, theta):
                    if g.is_subgroup_of(young_subgroup(p)):
                        return {"group": describe_group(g), "finer": str(p)}
    return None


def _law_lagrange(_: random.Random) -> dict | None:
    for n in (3, 4):
        for g in enumerate_subgroups(n):
            if math.factorial(n) % g.order:
                return {"group": describe_group(g), "order": g.order}
    return None


def _degree6_sample() -> list[PermGroup]:
    sample = [
        natural_cyclic_group(6),
        natural_dihedral_group(6),
        partition_automorphisms(parts.parse_partition("1,2|3,4|5,6")),
        partition_automorphisms(parts.parse_partition("1,3,5|2,4,6")),
        parse_group("gens:6:(1 2 3 4);(3 4 5 6)"),
        parse_group("gens:6:(1 2 3 4 5);(1 3 4)(2 5 6)"),
        symmetric_group(6),
    ]
    return sample


def _law_block_system_soundness(_: random.Random) -> dict | None:
    groups = [g for n in (4, 5) for g in enumerate_subgroups(n) if g.is_transitive()]
    groups += _degree6_sample()
    for g in groups:
        n = g.degree
        systems = g.block_systems()
        for pi in systems:
            sizes = {len(b) for b in pi.blocks}
            if len(sizes) != 1:
                return {"group": describe_group(g), "system": str(pi)}
            for w in g.words:
                mapped = parts.Partition.from_blocks(
                    [sorted(w[x - 1] for x in b) for b in pi.blocks]
                )
                if mapped != pi:
                    return {"group": describe_group(g), "system": str(pi), "by": str(Perm(w))}
        brute_imprimitive = any(
            1 < len(p.blocks) < n
            and len({len(b) for b in p.blocks}) == 1
            and all(
                parts.Partition.from_blocks(
                    [sorted(w[x - 1] for x in b) for b in p.blocks]
                )
                == p
                for w in g.words
            )
            for p in _all_partitions(n)
        )
        if g.is_primitive() != (not brute_imprimitive):
            return {"group": describe_group(g), "primitive": g.is_primitive()}
    return None


def _shift_up(p: parts.Partition) -> parts.Partition:
    # blocks shifted by +1 with the new element 1 joined to the shifted block of 1
    blocks = []
    for b in p.blocks:
        nb = [x + 1 for x in b]
        if 1 in b:
            nb = [1] + nb
        blocks.append(nb)
    return parts.Partition.from_blocks(blocks)


def _extend_last(p: parts.Partition) -> parts.Partition:
    blocks = [list(b) + ([p.size + 1] if p.size in b else []) for b in p.blocks]
    return parts.Partition.from_blocks(blocks)


def _law_derive_meet_form(_: random.Random) -> dict | None:
    for n in range(1, 9):
        for p in _all_partitions(n):
            m = parts.max_intervals(p)
            expected = parts.meet(_shift_up(m), _extend_last(m))
            if parts.derive(p) != expected:
                return {"partition": str(p)}
    return None


def _law_derive_shape(_: random.Random) -> dict | None:
    for n in range(1, 9):
        for p in _all_partitions(n):
            d = parts.derive(p)
            if not parts.is_interval_partition(d):
                return {"partition": str(p), "derived": str(d)}
            if parts.has_consecutive_nontrivial_blocks(d):
                return {"partition": str(p), "derived": str(d)}
    return None


def _law_derive_reversal(_: random.Random) -> dict | None:
    for n in range(1, 9):
        for p in _all_partitions(n):
            if parts.reverse_partition(p) == p:
                d = parts.derive(p)
                if parts.reverse_partition(d) != d:
                    return {"partition": str(p), "derived": str(d)}
    return None


def _law_measure_decrement(_: random.Random) -> dict | None:
    for n in range(1, 9):
        for p in _all_partitions(n):
            before, after = parts.mu(p), parts.mu(parts.derive(p))
            if not (after == before == 1 or after == before - 1):
                return {"partition": str(p), "mu": [before, after]}
    return None


def _law_interwoven_disjoint(_: random.Random) -> dict | None:
    for n in range(2, 9):
        for p in _all_partitions(n):
            if p.has_trivial_block():
                continue
            intervals = [
                (a, b)
                for a in range(1, n + 1)
                for b in range(a + 1, n + 1)
                if parts.interwoven(p, a, b)
            ]
            for (a, b), (c, d) in itertools.combinations(intervals, 2):
                if not (b < c or d < a):
                    return {"partition": str(p), "intervals": [[a, b], [c, d]]}
    return None


def _law_galois_adjunction(rng: random.Random) -> dict | None:
    for _ in range(12):
        l = rng.randint(2, 5)
        n = rng.randint(l + 1, 7)
        s = _random_word_set(rng, l, 6)
        t = _random_word_set(rng, n, 6)
        comp_s = comp_set(s, n)
        if not pat_set(comp_s, l).word_set <= s.word_set:
            return {"kind": "kernel", "l": l, "n": n}
        if not t.word_set <= comp_set(pat_set(t, l), n).word_set:
            return {"kind": "closure", "l": l, "n": n}
        if comp_set(pat_set(comp_s, l), n) != comp_s:
            return {"kind": "comp-idempotent", "l": l, "n": n}
        pt = pat_set(t, l)
        if pat_set(comp_set(pt, n), l) != pt:
            return {"kind": "pat-idempotent", "l": l, "n": n}
    return None


def _law_galois_monotone(rng: random.Random) -> dict | None:
    for _ in range(12):
        l = rng.randint(2, 5)
        n = rng.randint(l + 1, 7)
        s_small = _random_word_set(rng, l, 4)
        extra = _random_word_set(rng, l, 3)
        s_big = PermSet(l, s_small.word_set | extra.word_set)
        if not comp_set(s_small, n).word_set <= comp_set(s_big, n).word_set:
            return {"kind": "comp", "l": l, "n": n}
        t_small = _random_word_set(rng, n, 4)
        t_big = PermSet(n, t_small.word_set | _random_word_set(rng, n, 3).word_set)
        if not pat_set(t_small, l).word_set <= pat_set(t_big, l).word_set:
            return {"kind": "pat", "l": l, "n": n}
    return None


def _law_galois_transitive(rng: random.Random) -> dict | None:
    for _ in range(12):
        l = rng.randint(2, 4)
        m = rng.randint(l + 1, 6)
        n = rng.randint(m + 1, 7)
        s = _random_word_set(rng, l, 6)
        if comp_set(comp_set(s, m), n) != comp_set(s, n):
            return {"l": l, "m": m, "n": n}
    return None


def _law_descending_lift(_: random.Random) -> dict | None:
    for g in enumerate_subgroups(5):
        has = descending(5).word in g.word_set
        s = PermSet.from_group(g)
        for m in (6, 7):
            if (descending(m).word in comp_set(s, m).word_set) != has:
                return {"group": describe_group(g), "m": m}
    return None


def _law_cycle_lift(_: random.Random) -> dict | None:
    c5, d5 = natural_cyclic_group(5), natural_dihedral_group(5)
    c6, d6 = natural_cyclic_group(6), natural_dihedral_group(6)
    for g in enumerate_subgroups(5):
        comp6 = comp_set(PermSet.from_group(g), 6).word_set
        if (c5.word_set <= g.word_set) != (c6.word_set <= comp6):
            return {"group": describe_group(g), "family": "cyclic"}
        if (d5.word_set <= g.word_set) != (d6.word_set <= comp6):
            return {"group": describe_group(g), "family": "dihedral"}
    return None


def _law_comp_direct_agreement(rng: random.Random) -> dict | None:
    for _ in range(8):
        l = rng.randint(2, 3)
        m = rng.randint(l + 1, 6)
        s = _random_word_set(rng, l, 5)
        direct = {
            w
            for w in itertools.permutations(range(1, m + 1))
            if all(p.word in s.word_set for p in perms_mod.all_patterns(Perm(w), l))
        }
        if comp_set(s, m).word_set != direct:
            return {"l": l, "m": m, "set": [str(Perm(w)) for w in s.words]}
    return None


_LAW_SUITES: tuple[tuple[str, str, Callable[[random.Random], dict | None]], ...] = (
    ("law-product-containment", "random deg<=7", _law_product_containment),
    ("law-involvement-partial-order", "random deg<=7", _law_partial_order),
    ("law-pattern-interpolation", "random deg<=7", _law_interpolation),
    ("law-jump-characterization", "exhaustive deg<=7", _law_jump_characterization),
    ("law-dihedral-consecutive", "exhaustive deg<=7", _law_dihedral_criterion),
    ("law-parity-deletion", "exhaustive deg<=7", _law_parity_deletion),
    ("law-symmetry-involvement", "random deg<=7", _law_symmetry_involvement),
    ("law-adjacent-quotient-cycle", "exhaustive deg<=6", _law_adjacent_quotient),
    ("law-cycle-prefix-generation", "exhaustive 1<m<n<=7", _law_cycle_prefix_generation),
    ("law-young-join-generation", "exhaustive deg<=5", _law_young_join),
    ("law-orbit-minimality", "exhaustive subgroups deg<=5", _law_orbit_minimality),
    ("law-lagrange", "exhaustive subgroups deg<=4", _law_lagrange),
    ("law-block-system-soundness", "subgroups deg<=5 + named deg 6", _law_block_system_soundness),
    ("law-derived-meet-form", "exhaustive partitions n<=8", _law_derive_meet_form),
    ("law-derived-shape", "exhaustive partitions n<=8", _law_derive_shape),
    ("law-derived-reversal-symmetry", "exhaustive partitions n<=8", _law_derive_reversal),
    ("law-measure-decrement", "exhaustive partitions n<=8", _law_measure_decrement),
    ("law-interwoven-disjoint", "exhaustive partitions n<=8", _law_interwoven_disjoint),
    ("law-galois-adjunction", "random l<=5 n<=7", _law_galois_adjunction),
    ("law-galois-monotonicity", "random l<=5 n<=7", _law_galois_monotone),
    ("law-galois-transitivity", "random l<m<n<=7", _law_galois_transitive),
    ("law-descending-lift", "exhaustive subgroups deg 5", _law_descending_lift),
    ("law-cyclic-dihedral-lift", "exhaustive subgroups deg 5", _law_cycle_lift),
    ("law-comp-direct-agreement", "random l<=3 m<=6", _law_comp_direct_agreement),
)


def verify_laws(seed: int = 0) -> list[Report]:
    """Run every structural law suite with a deterministic seed."""
    reports = []
    for check_id, scope, fn in _LAW_SUITES:
        rng = random.Random(f"{seed}:{check_id}")
        reports.append(_run_check(check_id, f"{scope} seed={seed}", lambda f=fn, r=rng: f(r)))
    reports.sort(key=lambda r: (r.check_id, r.scope))
    return reports
