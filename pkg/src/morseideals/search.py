"""Exhaustive searches over the n! total orders of the generators.

A permutation ``perm`` places generator ``perm[p]`` at position ``p``
(smallest first), so it describes the reordered ideal directly.  Lcm labels
and bridge sets do not depend on the order, so one precomputed bridge table
serves every permutation; only the choice of smallest bridge changes.

Work is split into contiguous chunks of the lexicographic permutation stream
and may run on several processes.  Results are merged in chunk order, which
makes every output independent of the worker count and of the chunk size.
Progress (orders tried / total) goes to standard error when requested.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import sys
from dataclasses import dataclass
from typing import Iterator

from .algebra import MonomialIdeal
from .homology import betti_numbers
from .matching import Matching, bm_matching
from .taylor import build_taylor

ORDER_SEARCH_GUARD = 10

# per-process payload installed by the pool initializer
_WORK = None


def enumerate_orders(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations of 0..n-1 in lexicographic order."""
    return itertools.permutations(range(n))


def _check_guard(n: int, force: bool) -> None:
    if n > ORDER_SEARCH_GUARD and not force:
        raise ValueError(
            f"searching {n}! orders exceeds the guard (n <= {ORDER_SEARCH_GUARD}); "
            f"pass force=True (CLI: --force) to run anyway"
        )


def _chunk_bounds(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(s, min(total, s + chunk)) for s in range(0, total, chunk)]


def _chunk_size(total: int, workers: int) -> int:
    if total <= 1:
        return 1
    return max(256, min(20000, total // (max(workers, 1) * 16) or total))


def _payload(tc, target_ranks):
    n = tc.n
    bridge_bits = tuple(tc.bridge_table())
    cells = sorted((c for c in range(1 << n) if c.bit_count() >= 3), key=lambda c: -c.bit_count())
    cards = tuple(c.bit_count() for c in range(1 << n))
    counts = tuple(math.comb(n, k) for k in range(n + 1))
    return (n, tuple(cells), bridge_bits, cards, counts, target_ranks)


def _init_worker(payload) -> None:
    global _WORK
    _WORK = payload


def _smallest_bridge_at(bits, pos):
    sb = bits[0]
    if len(bits) > 1:
        best = pos[sb]
        for b in bits[1:]:
            p = pos[b]
            if p < best:
                best = p
                sb = b
    return sb


def _scan_friendly_chunk(bounds: tuple[int, int]) -> list[tuple[int, ...]]:
    """Permutations in the chunk whose bridge pairing loses no edge."""
    start, stop = bounds
    n, cells, bridge_bits, _, _, _ = _WORK
    hits = []
    pos = [0] * n
    for perm in itertools.islice(itertools.permutations(range(n)), start, stop):
        for position, gen in enumerate(perm):
            pos[gen] = position
        removed = set()
        targets = set()
        friendly = True
        for s in cells:
            if s in removed:
                continue
            bits = bridge_bits[s]
            if not bits:
                continue
            t = s ^ (1 << _smallest_bridge_at(bits, pos))
            if t in targets:
                friendly = False  # a duplicate target forces a step-3 removal
                break
            targets.add(t)
            removed.add(t)
        if friendly:
            hits.append(perm)
    return hits


def _scan_minimal_chunk(bounds: tuple[int, int]):
    """First permutation in the chunk whose pairing ranks hit the target."""
    start, stop = bounds
    n, cells, bridge_bits, cards, counts, target = _WORK
    pos = [0] * n
    for index, perm in enumerate(
        itertools.islice(itertools.permutations(range(n)), start, stop), start
    ):
        for position, gen in enumerate(perm):
            pos[gen] = position
        removed = set()
        best: dict[int, tuple[int, int]] = {}
        for s in cells:
            if s in removed:
                continue
            bits = bridge_bits[s]
            if not bits:
                continue
            sb = _smallest_bridge_at(bits, pos)
            p = pos[sb]
            t = s ^ (1 << sb)
            removed.add(t)
            cur = best.get(t)
            if cur is None or p < cur[0]:
                best[t] = (p, s)
        ranks = list(counts)
        for t, (_, s) in best.items():
            ranks[cards[s]] -= 1
            ranks[cards[t]] -= 1
        if tuple(ranks) == target:
            return (index, perm, tuple(ranks))
    return None


def _run_chunks(worker, bounds_list, workers, progress, total, stop_early):
    """Drive chunks in order; yield (bounds, result) pairs.

    With ``stop_early`` the iteration ends at the first chunk whose result is
    truthy; later chunks may already be in flight but are discarded, so the
    reported outcome only depends on the lexicographic stream.
    """
    done = 0

    def report():
        if progress:
            print(f"{done}/{total} orders", file=sys.stderr, flush=True)

    if workers <= 1:
        for bounds in bounds_list:
            result = worker(bounds)
            done = bounds[1]
            report()
            yield bounds, result
            if stop_early and result:
                return
        return
    with multiprocessing.Pool(workers, initializer=_init_worker, initargs=(_WORK,)) as pool:
        for bounds, result in zip(bounds_list, pool.imap(worker, bounds_list)):
            done = bounds[1]
            report()
            yield bounds, result
            if stop_early and result:
                pool.terminate()
                return


def bridge_friendly_list(
    ideal: MonomialIdeal,
    workers: int = 1,
    force: bool = False,
    progress: bool = False,
) -> list[tuple[tuple[int, ...], Matching]]:
    """All total orders under which no possible edge is discarded.

    Returns (permutation, matching) pairs in lexicographic permutation order;
    each matching is the bridge pairing of the reordered ideal, expressed in
    the reordered indexing.
    """
    n = ideal.n
    _check_guard(n, force)
    total = math.factorial(n)
    tc = build_taylor(ideal)
    _init_worker(_payload(tc, None))
    bounds_list = _chunk_bounds(total, _chunk_size(total, workers))
    hits: list[tuple[int, ...]] = []
    for _, found in _run_chunks(_scan_friendly_chunk, bounds_list, workers, progress, total, False):
        hits.extend(found)
    out = []
    for perm in hits:
        out.append((perm, bm_matching(build_taylor(ideal.reordered(perm)))))
    return out


@dataclass(frozen=True)
class MinimalSearchResult:
    order: tuple[int, ...] | None
    ranks: tuple[int, ...] | None
    orders_tried: int
    orders_total: int
    mode: str


def bridge_minimal_search(
    ideal: MonomialIdeal,
    mode: str = "first-hit",
    workers: int = 1,
    force: bool = False,
    limit: int | None = None,
    progress: bool = False,
) -> MinimalSearchResult:
    """Look for a total order whose pairing ranks equal the Betti totals.

    ``first-hit`` stops at the lexicographically least witness; ``exhaustive``
    scans every order (still reporting the least witness, if any).  ``limit``
    caps the number of orders examined.
    """
    if mode not in ("first-hit", "exhaustive"):
        raise ValueError(f"unknown search mode {mode!r}")
    n = ideal.n
    _check_guard(n, force)
    total = math.factorial(n)
    cap = total if limit is None else max(0, min(total, limit))
    tc = build_taylor(ideal)
    target = tuple(betti_numbers(tc).totals)
    _init_worker(_payload(tc, target))
    bounds_list = _chunk_bounds(cap, _chunk_size(cap, workers)) if cap else []
    stop_early = mode == "first-hit"
    hit = None
    scanned = 0
    for bounds, result in _run_chunks(
        _scan_minimal_chunk, bounds_list, workers, progress, cap, stop_early
    ):
        scanned = bounds[1]
        if result is not None and hit is None:
            hit = result
    if hit is None:
        return MinimalSearchResult(None, None, scanned, total, mode)
    index, perm, ranks = hit
    tried = index + 1 if mode == "first-hit" else scanned
    return MinimalSearchResult(perm, ranks, tried, total, mode)
