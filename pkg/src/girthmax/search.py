"""Enumeration search for a girth-maximum (m, 3) BTU with m = b*k².

Candidate family: q1 ranges over the single (b*k)-cycles of S_{b*k},
and the three constituents are

    p1 = scale_up(q1, k),   p2 = identity(m),   p3 = circulant(m, j)

with j coprime to m and, by default, b*k < j < m - b*k. The search
evaluates the girth of every (q1, j) candidate and reports the maximum,
tie-broken by smallest j, then lexicographically smallest q1 image, so
the result is reproducible for any worker count.

Candidates are scanned j-major (ascending j, then lex-ascending q1),
which is exactly the tie-break order. Pruning uses a shared advisory
incumbent: a candidate is discarded only when a cycle of length
<= incumbent - 2 is found, i.e. only when it is provably *strictly*
below the final maximum, so pruning and parallel scheduling can never
change the winner. Since scale_up of a (b*k)-cycle splits into k cycles
of length b*k against the identity constituent, every candidate's girth
is at most 2*b*k.

`fix_first` restricts q1 to image[0] = 1. That prunes the space to
(b*k-2)! candidates but is lossy: the family has no relabeling symmetry
acting on q1 (conjugating q1 does not fix the circulant constituent),
and for several k every maximum-girth q1 has image[0] != 1. It is off
by default; the published k=5..8 girths (8, 8, 10, 10) are attained
with the full enumeration under interleaved scaling.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Callable, Iterator, Sequence

from .btu import Btu, IncompatiblePermutations
from .girth import girth_bfs
from .perm import (
    Permutation,
    ScalingStrategy,
    circulant,
    enumerate_k_cycles,
    identity,
    one_based,
    scale_up,
)

__all__ = [
    "SearchConfig",
    "SearchResult",
    "NoValidShift",
    "NoSquareFactor",
    "valid_shifts",
    "construct_candidate",
    "search_r3",
    "factor_for_search",
    "format_report",
    "report_dict",
]

_CHUNK = 512  # q1 candidates per worker task


class NoValidShift(ValueError):
    """No circulant shift satisfies the coprimality/range constraints."""


class NoSquareFactor(ValueError):
    """m has no factorization b*k² with integer k >= 2."""


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run; m = b*k² is always derived."""

    k: int
    b: int = 1
    strategy: ScalingStrategy = ScalingStrategy.BLOCK
    fix_first: bool = False
    j_range_filter: bool = True
    worker_count: int = 1
    cutoff_pruning: bool = True

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if self.b < 1:
            raise ValueError("b must be >= 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        object.__setattr__(self, "strategy", ScalingStrategy(self.strategy))

    @property
    def m(self) -> int:
        return self.b * self.k * self.k


@dataclass(frozen=True)
class SearchResult:
    best_girth: int
    witness_q1: Permutation
    witness_j: int
    candidates_evaluated: int
    skipped_incompatible: int
    elapsed: float


def valid_shifts(m: int, lower: int) -> list[int]:
    """Shifts j with gcd(j, m) = 1 and lower < j < m - lower, ascending.

    gcd(j, m - j) = gcd(j, m), so coprimality of the triple
    (j, m, m - j) reduces to gcd(j, m) = 1. Pass lower=0 for the
    unrestricted range 0 < j < m.
    """
    if lower < 0:
        raise ValueError("lower bound must be >= 0")
    if m <= 2 * lower:
        raise ValueError(f"m={m} leaves no room for shifts above {lower}")
    return [j for j in range(lower + 1, m - lower) if gcd(j, m) == 1]


def construct_candidate(q1: Permutation, j: int, cfg: SearchConfig) -> Btu:
    """Assemble the (m, 3) candidate for (q1, j); may raise IncompatiblePermutations."""
    m = cfg.m
    if q1.size != cfg.b * cfg.k:
        raise ValueError(f"q1 acts on {q1.size} elements, expected {cfg.b * cfg.k}")
    return Btu((scale_up(q1, cfg.k, cfg.strategy), identity(m), circulant(m, j)))


def factor_for_search(m: int) -> tuple[int, int]:
    """Factor m = b*k² with k >= 2 maximal (b minimal); (b, k)."""
    if m < 4:
        raise ValueError("m must be >= 4")
    for k in range(isqrt(m), 1, -1):
        if m % (k * k) == 0:
            return m // (k * k), k
    raise NoSquareFactor(f"m={m} is squarefree; pass b and k explicitly")


def _shift_list(cfg: SearchConfig) -> list[int]:
    m = cfg.m
    lower = cfg.b * cfg.k if cfg.j_range_filter else 0
    if m <= 2 * lower:
        return []
    return valid_shifts(m, lower)


def _evaluate(q1: Permutation, j: int, cfg: SearchConfig, cutoff: int | None) -> int | None:
    """Exact girth of the candidate, or None when pruned (girth <= cutoff).

    Raises IncompatiblePermutations when p1 collides with a constituent.
    """
    graph = construct_candidate(q1, j, cfg).to_bipartite()
    result = girth_bfs(graph, cutoff=cutoff)
    if result.at_or_below_cutoff:
        return None
    return int(result.value)


# (girth, shift_index, q1_index); higher girth wins, then earlier candidate
_Key = tuple[int, int, int]


def _better(a: _Key | None, b: _Key | None) -> _Key | None:
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a if (a[1], a[2]) <= (b[1], b[2]) else b


def _scan_range(
    cfg: SearchConfig,
    shifts: Sequence[int],
    q1_images: Sequence[tuple[int, ...]],
    j_idx: int,
    lo: int,
    hi: int,
    incumbent_girth: Callable[[], int],
    improve: Callable[[int], None],
) -> tuple[_Key | None, int, int]:
    """Evaluate candidates (q1_images[lo:hi], shifts[j_idx]); (best, evaluated, skipped)."""
    j = shifts[j_idx]
    best: _Key | None = None
    evaluated = 0
    skipped = 0
    local_incumbent = 0
    for q_idx in range(lo, hi):
        q1 = Permutation(q1_images[q_idx])
        if cfg.cutoff_pruning:
            known = incumbent_girth()
            if known > local_incumbent:
                local_incumbent = known
            cutoff = local_incumbent - 2 if local_incumbent >= 6 else None
        else:
            cutoff = None
        try:
            g = _evaluate(q1, j, cfg, cutoff)
        except IncompatiblePermutations:
            skipped += 1
            continue
        evaluated += 1
        if g is None:
            continue
        if g > local_incumbent:
            local_incumbent = g
            improve(g)
        best = _better(best, (g, j_idx, q_idx))
    return best, evaluated, skipped


# Worker-side state, installed once per process by the pool initializer.
_WORKER: tuple | None = None


def _init_worker(cfg, shifts, q1_images, shared_incumbent):
    global _WORKER
    _WORKER = (cfg, shifts, q1_images, shared_incumbent)


def _run_task(task: tuple[int, int, int]):
    cfg, shifts, q1_images, shared = _WORKER
    j_idx, lo, hi = task

    def read() -> int:
        return shared.value

    def improve(g: int) -> None:
        with shared.get_lock():
            if g > shared.value:
                shared.value = g

    return _scan_range(cfg, shifts, q1_images, j_idx, lo, hi, read, improve)


def search_r3(
    cfg: SearchConfig,
    progress: Callable[[int, int, int], None] | None = None,
) -> SearchResult:
    """Exhaustive scan of the (q1, j) candidate space for r = 3.

    `progress`, when given, is called periodically with
    (candidates processed, total candidates, best girth so far).
    Deterministic for a fixed cfg regardless of worker_count.
    """
    started = time.perf_counter()
    shifts = _shift_list(cfg)
    if not shifts:
        raise NoValidShift(
            f"no shift j with gcd(j, {cfg.m}) = 1 in the required range"
            + (" (try j_range_filter=False)" if cfg.j_range_filter else "")
        )
    q1_images = [p.image for p in enumerate_k_cycles(cfg.b * cfg.k, cfg.fix_first)]
    total = len(shifts) * len(q1_images)
    tasks = [
        (j_idx, lo, min(lo + _CHUNK, len(q1_images)))
        for j_idx in range(len(shifts))
        for lo in range(0, len(q1_images), _CHUNK)
    ]

    best: _Key | None = None
    evaluated = 0
    skipped = 0
    if cfg.worker_count == 1:
        incumbent = 0

        def read() -> int:
            return incumbent

        def improve(g: int) -> None:
            nonlocal incumbent
            incumbent = max(incumbent, g)

        for j_idx, lo, hi in tasks:
            part, n_eval, n_skip = _scan_range(
                cfg, shifts, q1_images, j_idx, lo, hi, read, improve
            )
            best = _better(best, part)
            evaluated += n_eval
            skipped += n_skip
            if progress is not None:
                progress(evaluated + skipped, total, best[0] if best else 0)
    else:
        ctx = multiprocessing.get_context("fork")
        shared = ctx.Value("q", 0)
        with ctx.Pool(
            processes=cfg.worker_count,
            initializer=_init_worker,
            initargs=(cfg, shifts, q1_images, shared),
        ) as pool:
            for part, n_eval, n_skip in pool.imap_unordered(_run_task, tasks):
                best = _better(best, part)
                evaluated += n_eval
                skipped += n_skip
                if progress is not None:
                    progress(evaluated + skipped, total, best[0] if best else 0)
    if best is None:
        raise NoValidShift("every candidate pair was incompatible")
    girth, j_idx, q_idx = best
    return SearchResult(
        best_girth=girth,
        witness_q1=Permutation(q1_images[q_idx]),
        witness_j=shifts[j_idx],
        candidates_evaluated=evaluated,
        skipped_incompatible=skipped,
        elapsed=time.perf_counter() - started,
    )


def candidate_space(cfg: SearchConfig) -> Iterator[tuple[Permutation, int]]:
    """All (q1, j) pairs of a run, in evaluation (= tie-break) order."""
    shifts = _shift_list(cfg)
    q1s = list(enumerate_k_cycles(cfg.b * cfg.k, cfg.fix_first))
    for j in shifts:
        for q1 in q1s:
            yield q1, j


def report_dict(cfg: SearchConfig, result: SearchResult) -> dict:
    """Search report as a plain dict (JSON-ready)."""
    return {
        "k": cfg.k,
        "b": cfg.b,
        "m": cfg.m,
        "strategy": cfg.strategy.value,
        "best_girth": result.best_girth,
        "witness_q1": one_based(result.witness_q1),
        "witness_j": result.witness_j,
        "candidates_evaluated": result.candidates_evaluated,
        "skipped_incompatible": result.skipped_incompatible,
        "elapsed_ms": round(result.elapsed * 1000),
    }


def format_report(cfg: SearchConfig, result: SearchResult) -> str:
    """Search report as a line-oriented key: value block."""
    return "".join(f"{key}: {value}\n" for key, value in report_dict(cfg, result).items())
