"""Census of small semigroups and the theorem fuzzer that runs over it."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .characterizations import TheoremId, VerificationReport, verify_all
from .constructors import parse_construct
from .core import Semigroup
from .errors import OrderTooLarge

MAX_CENSUS_ORDER = 5


def _consistent(t: list[int], n: int, x: int, y: int) -> bool:
    """Check every associativity triple that reads the freshly set cell ``(x, y)``.

    ``t`` is the flat row-major table with -1 for unassigned cells.  A triple
    ``(a, b, c)`` is checked once all four products it needs are assigned.
    """
    v = t[x * n + y]
    rng = range(n)
    # cell is a*b
    for c in rng:
        vc = t[v * n + c]
        w = t[y * n + c]
        if vc >= 0 and w >= 0:
            xw = t[x * n + w]
            if xw >= 0 and xw != vc:
                return False
    # cell is b*c
    for a in rng:
        u = t[a * n + x]
        av = t[a * n + v]
        if u >= 0 and av >= 0:
            uy = t[u * n + y]
            if uy >= 0 and uy != av:
                return False
    for a in rng:
        for b in rng:
            ab = t[a * n + b]
            # cell is (a*b)*c with a*b = x, c = y
            if ab == x:
                w = t[b * n + y]
                if w >= 0:
                    aw = t[a * n + w]
                    if aw >= 0 and aw != v:
                        return False
            # cell is a*(b*c) with a = x, b*c = y
            if ab == y:
                u = t[x * n + a]
                if u >= 0:
                    ub = t[u * n + b]
                    if ub >= 0 and ub != v:
                        return False
    return True


def _is_canonical(t: tuple[int, ...], n: int, perms: list[tuple[int, ...]]) -> bool:
    """True when no relabeling gives a lexicographically smaller flat table."""
    for sigma in perms:
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        # relabeled[i][j] = sigma(t[inv i][inv j]); compare in row-major order
        for k in range(n * n):
            i, j = divmod(k, n)
            r = sigma[t[inv[i] * n + inv[j]]]
            if r != t[k]:
                if r < t[k]:
                    return False
                break
    return True


def _search(n: int, prefix: tuple[int, ...], up_to_iso: bool) -> list[tuple[int, ...]]:
    cells = n * n
    t = [-1] * cells
    for k, v in enumerate(prefix):
        t[k] = v
        if not _consistent(t, n, *divmod(k, n)):
            return []
    perms = list(itertools.permutations(range(n)))[1:] if up_to_iso else []
    out = []

    def extend(k):
        if k == cells:
            flat = tuple(t)
            if not up_to_iso or _is_canonical(flat, n, perms):
                out.append(flat)
            return
        x, y = divmod(k, n)
        for v in range(n):
            t[k] = v
            if _consistent(t, n, x, y):
                extend(k + 1)
        t[k] = -1

    extend(len(prefix))
    return out


def _search_job(args):
    return _search(*args)


def enumerate_tables(n: int, up_to_iso: bool = True, workers: int = 1) -> Iterator[tuple[int, ...]]:
    """Flat associative tables of order ``n`` in lexicographic order."""
    if not 1 <= n <= MAX_CENSUS_ORDER:
        raise OrderTooLarge(f"census supports orders 1..{MAX_CENSUS_ORDER}, got {n}")
    if workers <= 1:
        yield from _search(n, (), up_to_iso)
        return
    # partition by the first row; map() keeps lexicographic order
    jobs = [(n, row, up_to_iso) for row in itertools.product(range(n), repeat=n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_search_job, jobs):
            yield from chunk


def enumerate_semigroups(n: int, up_to_iso: bool = True, workers: int = 1) -> Iterator[Semigroup]:
    for flat in enumerate_tables(n, up_to_iso, workers):
        yield Semigroup([flat[i * n:(i + 1) * n] for i in range(n)])


def family_corpus() -> list[str]:
    """Construct strings for the built-in family corpus."""
    out = [f"M({m},{r})" for m in range(1, 7) for r in range(1, 13)]
    out += [f"C({n})" for n in range(1, 61)]
    out += [f"B({n})" for n in range(1, 4)]
    out += [f"Zmult({n})" for n in range(1, 31)]
    out += [f"C({a})xC({b})" for a in range(1, 7) for b in range(1, 7)]
    out.append("Signs")
    return out


@dataclass(frozen=True)
class CensusConfig:
    max_order: int = 4
    up_to_iso: bool = True
    worker_count: int = 1
    census: bool = True
    families: bool = True

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")
        if self.max_order > MAX_CENSUS_ORDER:
            raise OrderTooLarge(f"census supports orders up to {MAX_CENSUS_ORDER}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")


def census_label(n: int, k: int) -> str:
    return f"census[{n}]#{k}"


def corpus(config: CensusConfig) -> Iterator[tuple[str, Semigroup]]:
    if config.census:
        for n in range(1, config.max_order + 1):
            for k, S in enumerate(enumerate_semigroups(n, config.up_to_iso, config.worker_count)):
                yield census_label(n, k), S
    if config.families:
        for text in family_corpus():
            yield text, parse_construct(text).build()


def _verify_job(item):
    label, S = item
    return verify_all(S, label)


def verify_corpus(config: CensusConfig, predicates=None) -> list[VerificationReport]:
    """Every report for every corpus member, sorted by (construct, theorem)."""
    items = corpus(config)
    if config.worker_count > 1 and predicates is None:
        with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
            reports = [r for rs in pool.map(_verify_job, items, chunksize=8) for r in rs]
    else:
        reports = [r for label, S in items for r in verify_all(S, label, predicates)]
    order = {t: i for i, t in enumerate(TheoremId)}
    reports.sort(key=lambda r: (r.construct, order[r.theorem]))
    return reports


def fuzz_theorems(config: CensusConfig, predicates=None) -> list[VerificationReport]:
    """Reports whose predicate and graph verdicts disagree; empty means verified."""
    return [r for r in verify_corpus(config, predicates) if not r.agrees]
