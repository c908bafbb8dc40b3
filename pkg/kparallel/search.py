# MIT License
#
# Copyright 2018-2019 IBM
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Exhaustive search for the largest family of pairwise disjoint spreads.

Spreads are found by exact cover, branching on the least uncovered vector.
The packing search is a branch and bound over spreads held as bitsets of
subspace indices: it branches on the least subspace still usable, either
covering it with one of the spreads that contain it or leaving it unused.
"""

from kparallel import constants
from kparallel import env
from kparallel import gf
from kparallel import linalg
from kparallel import oracle

import concurrent.futures
import logging
from collections import namedtuple

logger = logging.getLogger(constants.LOGGER_NAME)


class SearchError(Exception):
    """Base class for exceptions."""
    pass


class SearchBoundError(SearchError):
    """The instance is too large to enumerate."""
    pass


SearchResult = namedtuple("SearchResult", ["best", "witness", "exact", "nodes", "upper_bound", "report"])


class _BudgetExhausted(Exception):
    pass


def _lowest_bit(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _grassmannian(field: gf.FieldSpec, n: int, k: int) -> list:
    try:
        return list(linalg.enumerate_grassmannian(n, k, field))
    except linalg.EnumerationBoundError as err:
        raise SearchBoundError(str(err)) from err


def _exact_covers(field: gf.FieldSpec, n: int, subspaces: list, budget: int) -> tuple:
    """Spreads found within `budget` nodes, the nodes used, and whether the enumeration finished."""
    full = (1 << field.order ** n) - 1
    holders = {}
    for i, y in enumerate(subspaces):
        for code in y.codes().tolist():
            if code:
                holders.setdefault(code, []).append(i)
    spreads = []
    nodes = 0
    # stack of (covered vectors, chosen subspaces); the zero vector starts covered
    stack = [(1, ())]
    while stack:
        if nodes >= budget:
            return sorted(spreads), nodes, False
        covered, chosen = stack.pop()
        nodes += 1
        if covered == full:
            spreads.append(tuple(sorted(chosen)))
            continue
        code = _lowest_bit(~covered & full)
        for i in reversed(holders.get(code, [])):
            if subspaces[i].mask & covered == 1:
                stack.append((covered | subspaces[i].mask, chosen + (i,)))
    return sorted(spreads), nodes, True


def enumerate_spreads(q, n: int, k: int, subspaces: list = None, budget: int = constants.DEFAULT_SEARCH_BUDGET) -> list:
    """Every spread of G_q(n, k) as a sorted tuple of indices into `subspaces`."""
    field = gf.as_field(q)
    subspaces = subspaces if subspaces is not None else _grassmannian(field, n, k)
    if n % k:
        return []
    spreads, nodes, complete = _exact_covers(field, n, subspaces, budget)
    if not complete:
        raise SearchBoundError("spread enumeration of G_{}({},{}) exceeded {} nodes".format(field.order, n, k, budget))
    logger.info("G_%s(%s,%s) has %s spreads (%s nodes)", field.order, n, k, len(spreads), nodes)
    return spreads


class _Packer:

    def __init__(self, spread_size: int, upper_bound: int, budget: int):
        self.spread_size = spread_size
        self.upper_bound = upper_bound
        self.budget = budget
        self.nodes = 0
        self.best = []

    def search(self, chosen: list, candidates: list, free: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted()
        if len(chosen) > len(self.best):
            self.best = list(chosen)
            logger.log(constants.FINEST, "Found %s disjoint spreads after %s nodes", len(chosen), self.nodes)
        if not candidates or len(self.best) >= self.upper_bound:
            return
        if len(chosen) + min(len(candidates), linalg.popcount(free) // self.spread_size) <= len(self.best):
            return
        union = 0
        for c in candidates:
            union |= c
        s = _lowest_bit(union)
        for c in candidates:
            if (c >> s) & 1:
                chosen.append(c)
                self.search(chosen, [d for d in candidates if d & c == 0], free & ~c)
                chosen.pop()
                if len(self.best) >= self.upper_bound:
                    return
        self.search(chosen, [d for d in candidates if not (d >> s) & 1], free & ~(1 << s))


def _bits(spread: tuple) -> int:
    bits = 0
    for i in spread:
        bits |= 1 << i
    return bits


def _solve(task: tuple) -> tuple:
    """Run one branch; returns (best bitsets, exact, nodes)."""
    chosen, candidates, free, spread_size, upper_bound, budget = task
    packer = _Packer(spread_size, upper_bound, budget)
    exact = True
    try:
        packer.search(list(chosen), candidates, free)
    except _BudgetExhausted:
        exact = False
    best = packer.best if len(packer.best) >= len(chosen) else list(chosen)
    return best, exact, packer.nodes


def _top_level_tasks(candidates: list, free: int, spread_size: int, upper_bound: int, budget: int) -> list:
    """The children of the root: each spread through the least subspace, then the branch leaving it unused."""
    union = 0
    for c in candidates:
        union |= c
    s = _lowest_bit(union)
    tasks = []
    for c in candidates:
        if (c >> s) & 1:
            tasks.append(([c], [d for d in candidates if d & c == 0], free & ~c, spread_size, upper_bound, budget))
    tasks.append(([], [d for d in candidates if not (d >> s) & 1], free & ~(1 << s), spread_size, upper_bound, budget))
    return tasks


def witness_report(witness: list, n: int, q: int, k: int) -> oracle.VerificationReport:
    report = oracle.VerificationReport("{} disjoint spreads of G_{}({},{})".format(len(witness), q, n, k))
    for i, spread in enumerate(witness):
        report.extend(oracle.is_spread(spread, n, q, k), prefix="spread {}".format(i))
    report.extend(oracle.pairwise_disjoint(witness))
    return report


def exhaustive_max_family(q, n: int, k: int, budget: int = constants.DEFAULT_SEARCH_BUDGET, workers: int = 1) -> SearchResult:
    """Maximum number of pairwise disjoint spreads of G_q(n, k).

    Enumerating the spreads and packing them share the node budget. When it
    runs out the result is the best family found so far with `exact` set to
    False. The witness is verified before it is returned.
    """
    field = gf.as_field(q)
    subspaces = _grassmannian(field, n, k)
    if n % k:
        return SearchResult(0, [], True, 0, 0, witness_report([], n, field.order, k))
    spreads, spent, complete = _exact_covers(field, n, subspaces, budget)
    if not complete:
        logger.warning("Spread enumeration of G_%s(%s,%s) stopped after %s nodes with %s spreads", field.order, n, k, spent, len(spreads))
    spread_size = (field.order ** n - 1) // (field.order ** k - 1)
    upper_bound = len(subspaces) // spread_size
    if complete:
        upper_bound = min(len(spreads), upper_bound)
    if not spreads:
        return SearchResult(0, [], complete, spent, upper_bound, witness_report([], n, field.order, k))
    candidates = [_bits(spread) for spread in spreads]
    free = (1 << len(subspaces)) - 1
    remaining = budget - spent
    logger.info("Packing %s spreads of size %s over %s subspaces, upper bound %s", len(spreads), spread_size, len(subspaces), upper_bound)

    if workers > 1:
        tasks = _top_level_tasks(candidates, free, spread_size, upper_bound, remaining)
        results = []
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_solve, task) for task in tasks]
            for future in env.progress_bar(concurrent.futures.as_completed(futures), desc="Branches", position=0,
                                           unit=" branch", total=len(futures)):
                results.append(future.result())
        best = max((r[0] for r in results), key=len)
        exact = all(r[1] for r in results)
        nodes = sum(r[2] for r in results) + 1
    else:
        best, exact, nodes = _solve(([], candidates, free, spread_size, upper_bound, remaining))

    exact = exact and complete
    witness = [[subspaces[i] for i in range(len(subspaces)) if (bits >> i) & 1] for bits in best]
    result = SearchResult(len(best), witness, exact, spent + nodes, upper_bound, witness_report(witness, n, field.order, k))
    logger.info("Search of G_%s(%s,%s) found %s disjoint spreads (%s, %s nodes, witness %s)", field.order, n, k,
                result.best, "exact" if exact else "lower bound", result.nodes, "PASS" if result.report.passed else "FAIL")
    return result
