"""
Exhaustive experiments over ``S_n``: the two counting identities, the
profile/triangle equivalence, and a sweep harness that runs named invariant
checks over every permutation and reports the first counterexample of each.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from collections.abc import Callable, Iterable, Sequence
from functools import cached_property
from itertools import product
from math import factorial
from multiprocessing import get_context
from typing import NamedTuple

from . import __version__, _guard
from .growth import audit_local_rule, build_growth, evacuate, factor_shape, stat_triangle
from .oracle import (
    boundary_words, brute_greene, brute_lds, brute_len_w, brute_lis, brute_profile,
    reconstruct_triangle_from_profile, subsequence_words,
)
from .perm import Permutation, asc, des, descent_set, permutations_lex, reverse_complement
from .rsk import greene_sums, rsk, rsk_shape
from .stats import (
    alternating_length, composition_to_descents, descents_to_composition, len_w, lis, ls1_via_first_rows,
    ls_D, ls_D_existence, ls_D_peel, ls_d, ls_d_via_growth, ls_singleton_formula,
    ls_singleton_threshold, ls_singleton_via_good_pairs,
)
from .tableau import chain_decode, chain_encode, partitions, ssyt_count, syt_count, tableau_descents

__all__ = [
    "count_asc_eq_is_minus_1", "count_ls1_deficient", "equivalence_classes",
    "q_refines_profile", "sweep_verify", "CHECKS", "EquivalenceResult",
]

CENSUS_MAX_N = 9
CLASSES_MAX_N = 7
SWEEP_MAX_N = 8


def count_asc_eq_is_minus_1(n: int) -> tuple[int, int]:
    """``#{p : asc(p) = is(p) - 1}`` by enumeration, and ``Σ f^λ s_λ'(1^λ_1)``."""
    _guard.check(n, CENSUS_MAX_N, "count_asc_eq_is_minus_1")
    direct = sum(1 for p in permutations_lex(n) if asc(p) == lis(p) - 1)
    formula = sum(syt_count(lam) * ssyt_count(lam.conjugate(), lam[0]) for lam in partitions(n))
    return direct, formula


def _ls1_deficient(p: Permutation) -> bool:
    return ls_D(p, {1}) < lis(p) + 1


def _evac_row_ends_at_n(p: Permutation) -> bool:
    return evacuate(rsk(p).recording).first_row[-1] == len(p)


def count_ls1_deficient(n: int) -> tuple[int, int]:
    """``#{p : ls_{1}(p) < is(p) + 1}`` by enumeration, and ``Σ_{λ ⊢ n-1} f^{λ+1} f^λ``."""
    _guard.check(n, CENSUS_MAX_N, "count_ls1_deficient")
    direct = sum(1 for p in permutations_lex(n) if _ls1_deficient(p))
    formula = sum(syt_count(lam.plus_one()) * syt_count(lam) for lam in partitions(n - 1))
    return direct, formula


class EquivalenceResult(NamedTuple):
    by_profile: int
    by_triangle: int
    classes: list[list[Permutation]]  # profile classes, each sorted, in order of first member
    same_partition: bool


def _group(perms: Iterable[Permutation], key: Callable) -> dict:
    groups: dict = defaultdict(list)
    for p in perms:
        groups[key(p)].append(p)
    return groups


def _blocks(groups: dict) -> set[frozenset]:
    return {frozenset(members) for members in groups.values()}


def equivalence_classes(n: int) -> EquivalenceResult:
    """Split ``S_n`` by full ``ls_D`` profile (brute force) and by ``(is, ds)`` triangle."""
    _guard.check(n, CLASSES_MAX_N, "equivalence_classes")
    perms = list(permutations_lex(n))
    by_profile = _group(perms, lambda p: brute_profile(p).key())
    by_triangle = _group(perms, lambda p: stat_triangle(p).key())
    classes = sorted((sorted(m) for m in by_profile.values()), key=lambda c: c[0])
    return EquivalenceResult(
        len(by_profile), len(by_triangle), classes, _blocks(by_profile) == _blocks(by_triangle),
    )


def q_refines_profile(n: int) -> tuple[bool, bool]:
    """
    ``(refines, strictly)``: every recording-tableau class sits inside one
    profile class, and at least one profile class holds several tableaux.
    """
    _guard.check(n, CLASSES_MAX_N, "q_refines_profile")
    perms = list(permutations_lex(n))
    profile_of = {p: brute_profile(p).key() for p in perms}
    by_q = _group(perms, lambda p: rsk(p).recording)
    refines = all(len({profile_of[p] for p in members}) == 1 for members in by_q.values())
    return refines, len(by_q) > len(set(profile_of.values()))


# ---------------------------------------------------------------- sweep harness

class PermData:
    """Lazily computed views of one permutation shared by all checks."""

    def __init__(self, p: Permutation):
        self.p = p
        self.n = len(p)

    @cached_property
    def pair(self):
        return rsk(self.p)

    @cached_property
    def growth(self):
        return build_growth(self.pair.recording)

    @cached_property
    def triangle(self):
        return stat_triangle(self.growth)

    @cached_property
    def profile(self):
        return brute_profile(self.p)

    @cached_property
    def words(self):
        return subsequence_words(self.p)

    @cached_property
    def rc(self):
        return reverse_complement(self.p)

    def subsets(self):
        for mask in range(1 << (self.n - 1)):
            yield mask, frozenset(i + 1 for i in range(self.n - 1) if mask >> i & 1)


Failure = str | None


def _check_rc_involution(x: PermData) -> Failure:
    if reverse_complement(x.rc) != x.p:
        return "rc(rc(p)) != p"


def _check_rc_descents(x: PermData) -> Failure:
    if descent_set(x.rc) != {x.n - i for i in descent_set(x.p)}:
        return f"Des(rc) = {sorted(descent_set(x.rc))}"


def _check_des_q(x: PermData) -> Failure:
    if descent_set(x.p) != tableau_descents(x.pair.recording):
        return f"Des(Q) = {sorted(tableau_descents(x.pair.recording))}"


def _check_chain_roundtrip(x: PermData) -> Failure:
    for t in (x.pair.insertion, x.pair.recording):
        if chain_decode(chain_encode(t)) != t:
            return f"chain round trip failed on {t}"


def _check_rsk_prefix(x: PermData) -> Failure:
    chain = chain_encode(x.pair.recording)
    for m in range(1, x.n + 1):
        if rsk_shape(x.p[:m]) != chain[m]:
            return f"prefix {m}: shape {rsk_shape(x.p[:m])} vs chain {chain[m]}"


def _check_milestones(x: PermData) -> Failure:
    for i, u in enumerate(x.pair.recording.first_row, 1):
        first = next(m for m in range(1, x.n + 1) if brute_lis(x.p[:m]) == i)
        if first != u:
            return f"u_{i} = {u}, smallest prefix with is = {i} is {first}"


def _check_evac_involution(x: PermData) -> Failure:
    q = x.pair.recording
    if evacuate(evacuate(q)) != q:
        return "evac(evac(Q)) != Q"


def _check_evac_rc(x: PermData) -> Failure:
    other = rsk(x.rc)
    if evacuate(x.pair.recording) != other.recording:
        return "evac(Q(p)) != Q(rc(p))"
    if evacuate(x.pair.insertion) != other.insertion:
        return "evac(P(p)) != P(rc(p))"


def _check_evac_first_row(x: PermData) -> Failure:
    v = evacuate(x.pair.recording).first_row
    for i, vi in enumerate(v, 1):
        last = max(s for s in range(1, x.n + 1) if brute_lis(x.p[s - 1:]) >= i)
        if x.n - vi + 1 != last:
            return f"v_{i} = {vi}: rightmost start of a length-{i} run is {last}"


def _check_local_rule(x: PermData) -> Failure:
    bad = audit_local_rule(x.growth)
    if bad:
        return f"local rule broken at {bad[:3]}"
    if tuple(x.growth.top_chain()) != chain_encode(x.pair.recording):
        return "top chain differs from Q"


def _check_factor_shape(x: PermData) -> Failure:
    for i in range(1, x.n + 1):
        for j in range(i, x.n + 1):
            expect = rsk(x.p[i - 1:j]).shape
            if factor_shape(x.growth, i, j) != expect:
                return f"window [{i},{j}]: {factor_shape(x.growth, i, j)} vs {expect}"


def _check_triangle(x: PermData) -> Failure:
    for i in range(1, x.n + 1):
        for j in range(i, x.n + 1):
            w = x.p[i - 1:j]
            if x.triangle[i, j] != (brute_lis(w), brute_lds(w)):
                return f"a[{i},{j}] = {x.triangle[i, j]}"


def _check_greene(x: PermData) -> Failure:
    for k in range(1, 4):
        if greene_sums(x.p, k) != brute_greene(x.p, k):
            return f"is_{k}: {greene_sums(x.p, k)} vs {brute_greene(x.p, k)}"


def _check_lsD_oracle(x: PermData) -> Failure:
    for mask, D in x.subsets():
        got = ls_D(x.p, D, x.triangle)
        if got != x.profile[mask]:
            return f"D={sorted(D)}: {got} vs brute {x.profile[mask]}"


def _check_lsd_oracle(x: PermData) -> Failure:
    for d in range(x.n):
        got = ls_d(x.p, d, x.triangle)
        if got != x.profile.ls_d(d):
            return f"d={d}: {got} vs brute {x.profile.ls_d(d)}"


def _check_lsd_growth(x: PermData) -> Failure:
    for d in range(x.n):
        got = ls_d_via_growth(x.p, d)
        if got != x.profile.ls_d(d):
            return f"d={d}: growth break-ups give {got}, brute {x.profile.ls_d(d)}"


def _check_lsd_max_lsD(x: PermData) -> Failure:
    best = [0] * x.n
    for _, D in x.subsets():
        best[len(D)] = max(best[len(D)], ls_D(x.p, D, x.triangle))
    for d in range(x.n):
        if best[d] != ls_d(x.p, d, x.triangle):
            return f"d={d}: max ls_D {best[d]} vs ls_d {ls_d(x.p, d, x.triangle)}"


def _check_lsD_peel(x: PermData) -> Failure:
    for mask, D in x.subsets():
        if x.profile[mask] and ls_D_peel(x.p, D) != x.profile[mask]:
            return f"D={sorted(D)}: peel {ls_D_peel(x.p, D)} vs brute {x.profile[mask]}"


def _check_existence(x: PermData) -> Failure:
    if des(x.p) == 0:
        return None
    for mask, D in x.subsets():
        if D and ls_D_existence(x.p, D) != bool(x.profile[mask]):
            return f"D={sorted(D)}: existence {ls_D_existence(x.p, D)}, brute {x.profile[mask]}"


def _check_singleton(x: PermData) -> Failure:
    for i in range(1, x.n):
        want = x.profile[{i}]
        if ls_singleton_via_good_pairs(x.p, i) != want:
            return f"i={i}: good pairs {ls_singleton_via_good_pairs(x.p, i)} vs {want}"
        if want and ls_singleton_formula(x.p, i) != want:
            return f"i={i}: formula {ls_singleton_formula(x.p, i)} vs {want}"
        if des(x.p):
            exists, bound = ls_singleton_threshold(x.p, i)
            if exists != bool(want) or want < bound:
                return f"i={i}: threshold ({exists}, {bound}) vs {want}"


def _check_ls1_first_rows(x: PermData) -> Failure:
    if des(x.p) and ls1_via_first_rows(x.p) != x.profile.ls_d(1):
        return f"first rows {ls1_via_first_rows(x.p)} vs {x.profile.ls_d(1)}"


def _check_ls1_deficient(x: PermData) -> Failure:
    if _ls1_deficient(x.p) != _evac_row_ends_at_n(x.p):
        return f"ls_(1) < is + 1 is {_ls1_deficient(x.p)}, evac row ends at n is {_evac_row_ends_at_n(x.p)}"


LENW_WORDS = tuple("".join(w) for k in range(1, 5) for w in product("UD", repeat=k))


def _check_lenw(x: PermData) -> Failure:
    for w in LENW_WORDS:
        want = brute_len_w(x.p, w, x.words)
        if len_w(x.p, w) != want:
            return f"w={w}: {len_w(x.p, w)} vs brute {want}"


def _check_alt(x: PermData) -> Failure:
    want = brute_len_w(x.p, "DU", x.words)
    if alternating_length(x.p) != want:
        return f"as = {alternating_length(x.p)} vs brute {want}"


def _check_bounds(x: PermData) -> Failure:
    p, n, D = x.p, x.n, des(x.p)
    values = [ls_d(p, d, x.triangle) for d in range(n + 1)]
    is_ = lis(p)
    shape = x.pair.shape
    for d in range(n + 1):
        if d > D:
            if values[d] != 0:
                return f"ls_{d} = {values[d]} although des = {D}"
            continue
        upper = min(sum(shape[: d + 1]), asc(p) + d + 1)
        if not (max(is_ + d, d + 1) <= values[d] <= upper):
            return f"ls_{d} = {values[d]} outside [{is_ + d}, {upper}]"
        if d and values[d - 1] >= values[d]:
            return f"ls_{d - 1} >= ls_{d}"


def _check_characterization(x: PermData) -> Failure:
    p = x.p
    is_, a = lis(p), asc(p)
    for d in range(1, des(p) + 1):
        v = ls_d(p, d, x.triangle)
        if (v == is_ + d) != (a == is_ - 1):
            return f"d={d}: ls_d={v}, is={is_}, asc={a}"
        if a == is_ and v != is_ + d + 1:
            return f"d={d}: asc = is but ls_d = {v}"


def _check_reconstruct(x: PermData) -> Failure:
    tri = reconstruct_triangle_from_profile(x.n, lambda D: x.profile[D], boundary_words(x.p))
    if tri.key() != x.triangle.key():
        return "triangle rebuilt from ls_D values differs"


def _check_composition(x: PermData) -> Failure:
    for _, D in x.subsets():
        if D and composition_to_descents(descents_to_composition(D)) != D:
            return f"composition round trip fails on {sorted(D)}"


CHECKS: dict[str, Callable[[PermData], Failure]] = {
    "rc-involution": _check_rc_involution,
    "rc-descents": _check_rc_descents,
    "des-q": _check_des_q,
    "chain-roundtrip": _check_chain_roundtrip,
    "rsk-prefix": _check_rsk_prefix,
    "milestones": _check_milestones,
    "evac-involution": _check_evac_involution,
    "evac-rc": _check_evac_rc,
    "evac-first-row": _check_evac_first_row,
    "local-rule": _check_local_rule,
    "factor-shape": _check_factor_shape,
    "triangle": _check_triangle,
    "greene": _check_greene,
    "composition": _check_composition,
    "lsD-oracle": _check_lsD_oracle,
    "lsd-oracle": _check_lsd_oracle,
    "lsd-growth": _check_lsd_growth,
    "lsd-max-lsD": _check_lsd_max_lsD,
    "lsD-peel": _check_lsD_peel,
    "existence": _check_existence,
    "singleton": _check_singleton,
    "ls1-first-rows": _check_ls1_first_rows,
    "ls1-deficient": _check_ls1_deficient,
    "lenw": _check_lenw,
    "alternating": _check_alt,
    "bounds": _check_bounds,
    "characterization": _check_characterization,
    "reconstruct": _check_reconstruct,
}


def _run_shard(args: tuple[int, int, int, tuple[str, ...]]) -> dict[str, dict]:
    n, start, stop, names = args
    out = {name: {"population": 0, "failure_count": 0, "failures": []} for name in names}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for p in permutations_lex(n, start, stop):
            x = PermData(p)
            for name in names:
                entry = out[name]
                entry["population"] += 1
                detail = CHECKS[name](x)
                if detail is not None:
                    entry["failure_count"] += 1
                    if not entry["failures"]:
                        entry["failures"].append({"perm": list(p), "detail": detail})
    return out


def _shards(n: int, jobs: int) -> list[tuple[int, int]]:
    total = factorial(n)
    count = max(1, min(total, jobs * 4))
    edges = [total * k // count for k in range(count + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:]) if a < b]


def resolve_checks(checks: str | Sequence[str]) -> tuple[str, ...]:
    names = checks.split(",") if isinstance(checks, str) else list(checks)
    names = [c.strip() for c in names if c.strip()]
    if "all" in names:
        return tuple(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    return tuple(names)


def sweep_verify(n_max: int, checks: str | Sequence[str] = "all", jobs: int = 1,
                 n_min: int = 1) -> dict:
    """
    Run the selected checks on every permutation of size ``n_min..n_max``.

    The returned report is deterministic: shard results merge in rank order,
    and only the first counterexample (smallest ``n``, then lexicographic) is kept.
    """
    _guard.check(n_max, SWEEP_MAX_N, "sweep_verify")
    names = resolve_checks(checks)
    tasks = [(n, a, b, names) for n in range(n_min, n_max + 1) for a, b in _shards(n, jobs)]
    if jobs > 1:
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_run_shard, tasks)
    else:
        parts = [_run_shard(t) for t in tasks]
    results = []
    for name in names:
        population = failure_count = 0
        failures: list[dict] = []
        for (n, _, _, _), part in zip(tasks, parts):
            entry = part[name]
            population += entry["population"]
            failure_count += entry["failure_count"]
            if entry["failures"] and not failures:
                failures = [{"n": n, **entry["failures"][0]}]
        results.append({
            "check": name, "n": n_max, "population": population,
            "failure_count": failure_count, "failures": failures,
        })
    return {
        "meta": {"version": __version__, "params": {"n_min": n_min, "n_max": n_max,
                                                    "checks": list(names), "jobs": jobs}},
        "results": results,
        "passed": all(r["failure_count"] == 0 for r in results),
    }
