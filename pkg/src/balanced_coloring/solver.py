"""Exact decision, enumeration, and census for balanced colorings.

The search keeps, for every vertex, the signed red-minus-blue count of its
relevant neighborhood (closed for cnb, open for nb) restricted to assigned
vertices, plus the number of unassigned slots. A vertex with current count c
and f free slots can still reach residual zero only if |c| <= f and c + f is
even; when c equals +-f the free slots are all forced to one color. Decisions
pick the most constrained vertex; forced twin classes (equal neighborhoods,
leaf-opposite rules) are merged up front through a parity union-find, so one
assignment colors a whole class at once.

Unsat answers in decision mode are exhaustive: fixing vertex 0 red is sound
because swapping the two colors preserves validity. Enumeration never breaks
symmetry and emits colorings in lexicographic order of their R/B text.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .coloring import Coloring, Mode, check_mode, first_unbalanced, leaf_force
from .graphs import Graph, bits

DEFAULT_MAX_NODES = 100_000_000
DEFAULT_MAX_MILLIS = 60_000.0


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_millis: float = DEFAULT_MAX_MILLIS


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    propagations: int
    millis: float


@dataclass(frozen=True)
class SolveOutcome:
    status: Literal["sat", "unsat", "timeout"]
    witness: Coloring | None
    stats: SolveStats

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_text() if self.witness else None,
            "nodes": self.stats.nodes,
            "propagations": self.stats.propagations,
            "millis": round(self.stats.millis, 3),
        }


@dataclass(frozen=True)
class EnumerationOutcome:
    colorings: tuple[Coloring, ...]
    capped: bool
    stats: SolveStats


class _LimitExceeded(Exception):
    pass


def prefilter_reason(g: Graph, mode: Mode) -> str | None:
    """Cheap certificates that no balanced coloring exists, or None.

    cnb needs every degree odd (hence an even order) and ties the edge-count
    parity to the order mod 4; nb needs every degree even.
    """
    degs = g.degrees()
    if mode == "cnb":
        if g.n % 2 == 1:
            return "odd vertex count"
        for v, d in enumerate(degs):
            if d % 2 == 0:
                return f"vertex {v} has even degree {d}"
        m = g.edge_count
        if m % 2 == 0 and g.n % 4 != 0:
            return f"{m} edges (even) with order {g.n} not divisible by 4"
        if m % 2 == 1 and g.n % 4 != 2:
            return f"{m} edges (odd) with order {g.n} not 2 mod 4"
    else:
        for v, d in enumerate(degs):
            if d % 2 == 1:
                return f"vertex {v} has odd degree {d}"
    return None


class _Search:
    """One search instance over a fixed graph and mode."""

    __slots__ = (
        "n",
        "rows",
        "row_members",
        "closed",
        "cur",
        "free",
        "assigned",
        "red",
        "trail",
        "decisions",
        "assignments",
        "contradiction",
        "parent",
        "parity",
        "root_of",
        "par_of",
        "class_members",
    )

    def __init__(self, g: Graph, mode: Mode):
        n = g.n
        self.n = n
        if mode == "cnb":
            rows = [g.adj[v] | (1 << v) for v in range(n)]
        else:
            rows = list(g.adj)
        self.rows = rows
        self.row_members = [tuple(bits(r)) for r in rows]
        self.closed = [g.adj[v] | (1 << v) for v in range(n)]
        self.cur = [0] * n
        self.free = [r.bit_count() for r in rows]
        self.assigned = 0
        self.red = 0
        self.trail: list[int] = []
        self.decisions = 0
        self.assignments = 0
        self.contradiction = False
        self.parent = list(range(n))
        self.parity = [0] * n
        seeds = leaf_force(g, mode)
        if seeds.infeasible is not None:
            self.contradiction = True
        else:
            for a, b in seeds.same:
                if not self._union(a, b, 0):
                    self.contradiction = True
                    break
            if not self.contradiction:
                for a, b in seeds.opposite:
                    if not self._union(a, b, 1):
                        self.contradiction = True
                        break
        members: dict[int, list[tuple[int, int]]] = {}
        root_of = [0] * n
        par_of = [0] * n
        if not self.contradiction:
            for v in range(n):
                r, p = self._find(v)
                members.setdefault(r, []).append((v, p))
                root_of[v] = r
                par_of[v] = p
        self.root_of = root_of
        self.par_of = par_of
        self.class_members = members

    # -- parity union-find -------------------------------------------------

    def _find(self, v: int) -> tuple[int, int]:
        parent = self.parent
        parity = self.parity
        chain = []
        while parent[v] != v:
            chain.append(v)
            v = parent[v]
        acc = 0
        for node in reversed(chain):
            acc ^= parity[node]
            parent[node] = v
            parity[node] = acc
        return v, acc

    def _union(self, a: int, b: int, rel: int) -> bool:
        ra, pa = self._find(a)
        rb, pb = self._find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        return True

    # -- propagation -------------------------------------------------------

    def _request(self, queue: list[tuple[int, int]]) -> bool:
        """Apply assignment requests plus everything they force; False on
        conflict. Assignments land on the trail for later unwinding."""
        cur = self.cur
        free = self.free
        rows = self.rows
        row_members = self.row_members
        qi = 0
        while qi < len(queue):
            v, col = queue[qi]
            qi += 1
            root = self.root_of[v]
            base = col ^ self.par_of[v]
            for w, pw in self.class_members[root]:
                want = base ^ pw
                wb = 1 << w
                if self.assigned & wb:
                    if ((self.red >> w) & 1) != want:
                        return False
                    continue
                self.assigned |= wb
                if want:
                    self.red |= wb
                self.trail.append(w)
                self.assignments += 1
                delta = 1 if want else -1
                for u in row_members[w]:
                    cur[u] += delta
                    free[u] -= 1
                for u in row_members[w]:
                    f = free[u]
                    cv = cur[u]
                    if cv > f or cv < -f or (cv + f) & 1:
                        return False
                    if f and (cv == f or cv == -f):
                        fcol = 0 if cv == f else 1
                        rest = rows[u] & ~self.assigned
                        while rest:
                            low = rest & -rest
                            rest ^= low
                            queue.append((low.bit_length() - 1, fcol))
        return True

    def _unwind(self, mark: int) -> None:
        cur = self.cur
        free = self.free
        while len(self.trail) > mark:
            w = self.trail.pop()
            delta = -1 if (self.red >> w) & 1 else 1
            for u in self.row_members[w]:
                cur[u] += delta
                free[u] += 1
            self.assigned &= ~(1 << w)
            self.red &= ~(1 << w)

    def _row_parity_ok(self) -> bool:
        return all(f % 2 == 0 for f in self.free)

    # -- decision search ---------------------------------------------------

    def solve_decision(self, deadline: float, max_nodes: int) -> bool:
        if not self._row_parity_ok():
            return False
        if self.n and not self._request([(0, 1)]):  # color swap makes this sound
            return False
        return self._dfs(deadline, max_nodes)

    def _pick(self) -> int:
        best = -1
        bkey: tuple[int, int] | None = None
        assigned = self.assigned
        for v in range(self.n):
            if (assigned >> v) & 1:
                continue
            key = (self.free[v], -(self.closed[v] & assigned).bit_count())
            if bkey is None or key < bkey:
                bkey = key
                best = v
        return best

    def _dfs(self, deadline: float, max_nodes: int) -> bool:
        v = self._pick()
        if v < 0:
            return True
        self.decisions += 1
        if self.decisions > max_nodes:
            raise _LimitExceeded
        if not self.decisions & 1023 and time.monotonic() > deadline:
            raise _LimitExceeded
        mark = len(self.trail)
        for col in (1, 0):  # red first
            if self._request([(v, col)]):
                if self._dfs(deadline, max_nodes):
                    return True
            self._unwind(mark)
        return False

    # -- enumeration (no symmetry breaking, lexicographic order) ------------

    def enumerate_all(self, cap: int | None) -> tuple[list[int], bool]:
        if not self._row_parity_ok():
            return [], False
        found: list[int] = []
        self._enum_dfs(found, cap)
        return found, cap is not None and len(found) >= cap

    def _enum_dfs(self, found: list[int], cap: int | None) -> bool:
        un = ((1 << self.n) - 1) & ~self.assigned
        if not un:
            found.append(self.red)
            return cap is not None and len(found) >= cap
        v = (un & -un).bit_length() - 1
        mark = len(self.trail)
        for col in (0, 1):  # blue first: lexicographic by R/B text
            if self._request([(v, col)]):
                if self._enum_dfs(found, cap):
                    self._unwind(mark)
                    return True
            self._unwind(mark)
        return False


def _stats(search: _Search | None, t0: float) -> SolveStats:
    millis = (time.perf_counter() - t0) * 1000.0
    if search is None:
        return SolveStats(nodes=0, propagations=0, millis=millis)
    return SolveStats(
        nodes=search.decisions,
        propagations=search.assignments - search.decisions,
        millis=millis,
    )


def solve(g: Graph, mode: Mode = "cnb", budget: Budget | None = None) -> SolveOutcome:
    """Decide whether g has a balanced coloring in the given mode.

    sat outcomes carry a witness that has already been re-verified; unsat is
    exhaustive; exceeding the node or wall-clock budget yields status timeout
    and never a partial witness. Deterministic for fixed inputs.
    """
    mode = check_mode(mode)
    if budget is None:
        budget = Budget()
    t0 = time.perf_counter()
    if prefilter_reason(g, mode) is not None:
        return SolveOutcome("unsat", None, _stats(None, t0))
    search = _Search(g, mode)
    if search.contradiction:
        return SolveOutcome("unsat", None, _stats(search, t0))
    deadline = time.monotonic() + budget.max_millis / 1000.0
    try:
        sat = search.solve_decision(deadline, budget.max_nodes)
    except _LimitExceeded:
        return SolveOutcome("timeout", None, _stats(search, t0))
    if not sat:
        return SolveOutcome("unsat", None, _stats(search, t0))
    witness = Coloring(g.n, search.red)
    if first_unbalanced(g, witness, mode) is not None:  # pragma: no cover
        raise RuntimeError("internal error: search produced an invalid witness")
    return SolveOutcome("sat", witness, _stats(search, t0))


def enumerate_colorings(
    g: Graph, mode: Mode = "cnb", cap: int | None = None
) -> EnumerationOutcome:
    """All balanced colorings of g in lexicographic R/B-text order.

    Both members of every color-swap pair are present (no symmetry breaking,
    so counts are raw). With a cap the result is the lexicographic prefix and
    ``capped`` reports the cut; every returned coloring is re-verified.
    """
    mode = check_mode(mode)
    if cap is not None and cap < 1:
        raise ValueError("cap must be positive (or None for no cap)")
    t0 = time.perf_counter()
    if prefilter_reason(g, mode) is not None:
        return EnumerationOutcome((), False, _stats(None, t0))
    search = _Search(g, mode)
    if search.contradiction:
        return EnumerationOutcome((), False, _stats(search, t0))
    masks, capped = search.enumerate_all(cap)
    colorings = tuple(Coloring(g.n, m) for m in masks)
    for c in colorings:
        if first_unbalanced(g, c, mode) is not None:  # pragma: no cover
            raise RuntimeError("internal error: enumeration produced an invalid coloring")
    return EnumerationOutcome(colorings, capped, _stats(search, t0))


def _solve_task(g: Graph, mode: Mode, budget: Budget | None) -> SolveOutcome:
    return solve(g, mode, budget)


def census(
    graphs: Iterable[Graph],
    mode: Mode = "cnb",
    budget: Budget | None = None,
    workers: int = 1,
) -> Iterator[SolveOutcome]:
    """Order-preserving map of solve over a graph stream.

    Per-item timeouts are recorded in their outcome and the stream continues.
    With workers > 1 the instances run in a process pool; output order still
    matches input order, and results are identical to a serial run because
    solve itself is deterministic.
    """
    mode = check_mode(mode)
    if workers <= 1:
        for g in graphs:
            yield solve(g, mode, budget)
        return
    import functools
    from concurrent.futures import ProcessPoolExecutor

    task = functools.partial(_solve_task, mode=mode, budget=budget)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(task, graphs, chunksize=16)
