"""Node budgets and the deterministic ordered fan-out used by the searches.

Every exhaustive search here is split into an ordered list of independent
subtrees.  The answer is the first subtree (in list order) that produces a
hit, and node consumption is charged as if the subtrees ran one after another.
That makes verdicts, witnesses and node statistics identical for any worker
count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Callable, Sequence, TypeVar

from .errors import BudgetExceeded

T = TypeVar("T")
R = TypeVar("R")


class NodeCounter:
    """Counts search nodes against an optional limit and soft deadline."""

    __slots__ = ("limit", "nodes", "deadline", "leaves")

    def __init__(
        self,
        limit: int | None = None,
        time_limit: float | None = None,
        deadline: float | None = None,
    ):
        self.limit = limit
        self.nodes = 0
        self.leaves = 0  # auxiliary statistic, never budgeted
        if time_limit is not None:
            deadline = time.monotonic() + time_limit
        self.deadline = deadline

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.limit is not None and self.nodes > self.limit:
            self.nodes = self.limit
            raise BudgetExceeded(f"node budget {self.limit} exhausted", nodes=self.nodes)
        if self.deadline is not None and (n > 1 or (self.nodes & 0x3FF) == 0):
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time limit reached", nodes=self.nodes)

    def remaining(self) -> int | None:
        return None if self.limit is None else max(self.limit - self.nodes, 0)


# A subtree worker is called as worker(task, node_limit, deadline) and returns
# (hit or None, nodes used, exceeded flag, leaves).
SubtreeResult = tuple


def run_subtree(search: Callable[[T, NodeCounter], R], task: T, limit, deadline):
    """Adapter turning ``search(task, counter)`` into a subtree worker result."""
    counter = NodeCounter(limit, deadline=deadline)
    try:
        hit = search(task, counter)
    except BudgetExceeded:
        return None, counter.nodes, True, counter.leaves
    return hit, counter.nodes, False, counter.leaves


def ordered_first(
    worker: Callable[[T, int | None, float | None], SubtreeResult],
    tasks: Sequence[T],
    counter: NodeCounter,
    jobs: int = 1,
):
    """Return the hit of the first successful task, charging ``counter``.

    Raises BudgetExceeded exactly when a sequential left-to-right run under
    ``counter``'s remaining budget would.
    """
    limit = counter.remaining()
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            hit, used, exceeded, leaves = worker(task, counter.remaining(), counter.deadline)
            if exceeded:
                _charge_exceeded(counter)
            counter.tick(used)
            counter.leaves += leaves
            if hit is not None:
                return hit
        return None

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(worker, tasks, repeat(limit), repeat(counter.deadline)))
    for hit, used, exceeded, leaves in results:
        if exceeded or (limit is not None and used > counter.remaining()):
            _charge_exceeded(counter)
        counter.tick(used)
        counter.leaves += leaves
        if hit is not None:
            return hit
    return None


def _charge_exceeded(counter: NodeCounter) -> None:
    counter.nodes = counter.limit if counter.limit is not None else counter.nodes
    raise BudgetExceeded(f"node budget {counter.limit} exhausted", nodes=counter.nodes)
