"""Exact f-choosability: reductions, the exhaustive decision procedure and
the color-forcing search.

A size function assigns each vertex a positive list size; the graph is
f-choosable when every assignment of concrete color lists of those sizes
admits a proper coloring from the lists.  The decision procedure enumerates
one representative per color-renaming class of assignments (sum(f) colors
always suffice, since an assignment can mention at most that many distinct
colors and verdicts are renaming-invariant) and checks each for
colorability, so a Choosable answer is a finite exhaustive proof and a
NotChoosable answer carries a concrete witness assignment.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from . import _kernels
from .errors import SearchBudgetExceeded
from .graphs import Graph, induced_subgraph, iter_bits

SizeFunction = tuple[int, ...]
Coloring = tuple[int, ...]
# per-vertex color lists, each sorted ascending
ListAssignment = tuple[tuple[int, ...], ...]

CHUNK_NODES = 1 << 16


@dataclass
class Budget:
    """Wall-clock and node limits shared across one computation.

    Enforced between search chunks (tens of milliseconds of kernel work), so
    a run may overshoot slightly before reporting unknown; a search that
    completes within its final chunk keeps its exact answer.
    """

    deadline: float | None = None
    node_limit: int | None = None
    nodes: int = 0

    @classmethod
    def of(cls, seconds: float | None = None, node_limit: int | None = None) -> "Budget":
        deadline = time.monotonic() + seconds if seconds is not None else None
        return cls(deadline=deadline, node_limit=node_limit)

    def add_nodes(self, delta: int) -> None:
        self.nodes += delta

    def check(self, context: str = "") -> None:
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchBudgetExceeded(
                f"node limit {self.node_limit} exceeded{' in ' + context if context else ''}",
                nodes=self.nodes, detail=context)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded(
                f"deadline exceeded{' in ' + context if context else ''}",
                nodes=self.nodes, detail=context)


@dataclass(frozen=True)
class Choosable:
    """Every list assignment admits a proper coloring."""

    assignments_examined: int
    nodes: int = 0


@dataclass(frozen=True)
class NotChoosable:
    """Carries a concrete uncolorable assignment of the right list sizes."""

    witness: ListAssignment
    nodes: int = 0


@dataclass(frozen=True)
class UnknownVerdict:
    """Budget ran out; progress is reported, nothing is guessed."""

    nodes: int
    progress: str


ChoosabilityVerdict = Union[Choosable, NotChoosable, UnknownVerdict]


# ---------------------------------------------------------------------------
# List colorability
# ---------------------------------------------------------------------------

def is_list_colorable(g: Graph, lists: Sequence[Sequence[int]]) -> Coloring | None:
    """A proper coloring drawn from the lists, or None.

    Deterministic: fewest-remaining-colors vertex selection with ties to the
    lowest vertex index, candidate colors in ascending value.
    """
    if len(lists) != g.n:
        raise ValueError(f"{len(lists)} lists for {g.n} vertices")
    if g.n == 0:
        return ()
    values = sorted({c for row in lists for c in row})
    index = {c: i for i, c in enumerate(values)}
    W = _kernels.words_for_colors(max(len(values), 1))
    masks = _kernels.masks_from_lists(
        [tuple(index[c] for c in row) for row in lists], W)
    arr = _kernels.solve_lists_once(list(g.adj), masks, W)
    if arr is None:
        return None
    return tuple(values[int(c)] for c in arr)


def all_proper_colorings(g: Graph, lists: Sequence[Sequence[int]]) -> Iterator[Coloring]:
    """Brute-force stream of every proper coloring from the lists (oracle
    scale; exponential)."""
    for combo in itertools.product(*[tuple(row) for row in lists]):
        if all(combo[u] != combo[v] for u, v in g.edges()):
            yield combo


# ---------------------------------------------------------------------------
# Size-function reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "unit" (size-1 vertex) or "surplus" (size > degree)
    vertex: int  # original label
    neighbors: tuple[int, ...] = ()  # original labels, unit steps only
    size: int = 0  # deleted size, surplus steps only


@dataclass
class Reduction:
    graph: Graph
    sizes: SizeFunction
    steps: list[ReductionStep]
    vertex_map: tuple[int, ...]  # reduced index -> original label
    dead: bool = False  # some size hit zero: immediately not choosable


def reduce_size_function(g: Graph, f: Sequence[int]) -> Reduction:
    """Strip vertices with f(v) = 1 (decrementing neighbor sizes) or
    f(v) > deg(v) (sizes unchanged) until 2 <= f(v) <= deg(v) everywhere or
    nothing is left.  Choosability is preserved in both directions; if a
    size reaches zero the instance is immediately not choosable.

    Reducible vertices are processed in ascending original label, so the
    step log is deterministic.
    """
    if len(f) != g.n:
        raise ValueError(f"size function has {len(f)} entries for order {g.n}")
    alive = list(range(g.n))
    sizes = {v: int(f[v]) for v in alive}
    steps: list[ReductionStep] = []

    def alive_neighbors(v: int) -> list[int]:
        return [u for u in iter_bits(g.adj[v]) if u in sizes]

    dead = any(s <= 0 for s in sizes.values())
    while not dead:
        pick = None
        for v in alive:
            if v not in sizes:
                continue
            if sizes[v] == 1 or sizes[v] > len(alive_neighbors(v)):
                pick = v
                break
        if pick is None:
            break
        nbrs = alive_neighbors(pick)
        if sizes[pick] == 1:
            steps.append(ReductionStep("unit", pick, tuple(nbrs)))
            del sizes[pick]
            for u in nbrs:
                sizes[u] -= 1
                if sizes[u] <= 0:
                    dead = True
        else:
            steps.append(ReductionStep("surplus", pick, size=sizes[pick]))
            del sizes[pick]

    remaining = sorted(sizes)
    return Reduction(
        graph=induced_subgraph(g, remaining),
        sizes=tuple(sizes[v] for v in remaining),
        steps=steps,
        vertex_map=tuple(remaining),
        dead=dead,
    )


def _fresh_base(witness: dict[int, tuple[int, ...]]) -> int:
    top = -1
    for row in witness.values():
        for c in row:
            if c > top:
                top = c
    return top + 1


def _lift_witness(steps: Sequence[ReductionStep],
                  witness: dict[int, tuple[int, ...]]) -> None:
    """Undo reduction steps on a witness (uncolorable) assignment, keeping it
    uncolorable with the original list sizes.

    A unit vertex returns with a fresh color that is also appended to each
    neighbor's list: any proper coloring must spend the fresh color on the
    unit vertex, leaving the neighbors with their old effective lists.  A
    surplus vertex returns with any list at all, since no proper coloring of
    the rest exists to extend.
    """
    for step in reversed(steps):
        base = _fresh_base(witness)
        if step.kind == "unit":
            witness[step.vertex] = (base,)
            for u in step.neighbors:
                witness[u] = tuple(sorted(witness[u] + (base,)))
        else:
            witness[step.vertex] = tuple(range(base, base + step.size))


# ---------------------------------------------------------------------------
# Canonical assignment stream (reference implementation)
# ---------------------------------------------------------------------------

def canonical_assignments(g: Graph, f: Sequence[int],
                          order: Sequence[int] | None = None) -> Iterator[ListAssignment]:
    """Restricted-growth stream of f-assignments: one representative per
    color-renaming class, occasionally more.

    Vertices are scanned in ``order`` (default 0..n-1) and a brand-new color
    may enter a list only as the smallest unused integer.  Renaming any
    assignment by first occurrence maps it to exactly one member of the
    stream, so every f-assignment is an injective recoloring of a yielded
    one and exhausting the stream is a sound choosability proof.  (A class
    can appear twice when a vertex introduces several fresh colors whose
    later uses are asymmetric; the swap relating them fixes that list, so
    coverage is what matters and it always holds.)

    Options per vertex go by number of fresh colors ascending, then
    lexicographically; this matches the search kernels' ordering.
    """
    n = g.n
    order = tuple(order) if order is not None else tuple(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order is not a permutation of the vertex set")
    if len(f) != n:
        raise ValueError(f"size function has {len(f)} entries for order {n}")
    assign: list[tuple[int, ...]] = [()] * n

    def rec(i: int, used: int) -> Iterator[ListAssignment]:
        if i == n:
            yield tuple(assign)
            return
        v = order[i]
        fv = f[v]
        for fresh in range(fv + 1):
            new_block = tuple(range(used, used + fresh))
            for old in itertools.combinations(range(used), fv - fresh):
                assign[v] = old + new_block
                yield from rec(i + 1, used + fresh)

    return rec(0, 0)


# ---------------------------------------------------------------------------
# The decision procedure
# ---------------------------------------------------------------------------

def _bfs_order(g: Graph, comp_mask: int) -> list[int]:
    start = (comp_mask & -comp_mask).bit_length() - 1
    order = [start]
    seen = 1 << start
    queue = [start]
    while queue:
        v = queue.pop(0)
        for u in iter_bits(g.adj[v] & comp_mask):
            if not seen >> u & 1:
                seen |= 1 << u
                order.append(u)
                queue.append(u)
    return order


def _arbitrary_lists(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    return [tuple(range(s)) for s in sizes]


@dataclass
class _SweepOutcome:
    witness: tuple[tuple[int, ...], ...] | None
    assignments: int
    nodes: int


def _run_sweep(adj: list[int], sizes: list[int], u_cap: int, conn_prune: bool,
               budget: Budget | None, context: str) -> _SweepOutcome:
    state = _kernels.SweepState(adj, sizes, u_cap, conn_prune)
    while True:
        before = state.nodes
        status = state.run(CHUNK_NODES)
        if budget is not None:
            budget.add_nodes(state.nodes - before)
        if status == _kernels.SWEEP_PAUSED:
            if budget is not None:
                budget.check(context)
            continue
        if status == _kernels.SWEEP_WITNESS:
            return _SweepOutcome(state.witness_lists(), state.assignments_examined,
                                 state.nodes)
        return _SweepOutcome(None, state.assignments_examined, state.nodes)


def is_choosable(g: Graph, f: Sequence[int], budget: Budget | None = None, *,
                 reduce_first: bool = True, heuristic: bool = True,
                 conn_prune: bool = True) -> ChoosabilityVerdict:
    """Decide whether every f-assignment of color lists is colorable.

    The exhaustive sweep runs over canonical assignments with sum(f) colors
    available, which is always enough.  A preliminary witness-hunting pass
    over a small universe (max list size + 2, an empirically good cap) may
    settle NotChoosable early but is never used to conclude Choosable.
    """
    f = tuple(int(x) for x in f)
    if len(f) != g.n:
        raise ValueError(f"size function has {len(f)} entries for order {g.n}")
    if g.n == 0:
        return Choosable(assignments_examined=0)
    if any(x <= 0 for x in f):
        v0 = next(v for v in range(g.n) if f[v] <= 0)
        lists = _arbitrary_lists(f)
        lists[v0] = ()
        return NotChoosable(witness=tuple(lists))

    steps: list[ReductionStep] = []
    if reduce_first:
        red = reduce_size_function(g, f)
        if red.dead:
            witness = {red.vertex_map[i]: tuple(range(s)) if s > 0 else ()
                       for i, s in enumerate(red.sizes)}
            _lift_witness(red.steps, witness)
            wit = tuple(witness[v] for v in range(g.n))
            _assert_witness(g, f, wit)
            return NotChoosable(witness=wit)
        work, sizes, vmap, steps = red.graph, red.sizes, red.vertex_map, red.steps
    else:
        work, sizes, vmap = g, f, tuple(range(g.n))

    if work.n == 0:
        return Choosable(assignments_examined=0)

    total_assignments = 0
    total_nodes = 0
    budget_nodes_start = budget.nodes if budget is not None else 0
    try:
        for comp_mask in work.component_masks():
            order = _bfs_order(work, comp_mask)
            pos = {v: i for i, v in enumerate(order)}
            adj = [0] * len(order)
            for v in order:
                for u in iter_bits(work.adj[v] & comp_mask):
                    adj[pos[v]] |= 1 << pos[u]
            comp_sizes = [sizes[v] for v in order]
            total = sum(comp_sizes)
            caps = []
            if heuristic and max(comp_sizes) + 2 < total:
                caps.append(max(comp_sizes) + 2)
            caps.append(total)
            for cap in caps:
                out = _run_sweep(adj, comp_sizes, cap, conn_prune, budget,
                                 f"choosability sweep (cap {cap})")
                total_nodes += out.nodes
                if out.witness is not None:
                    lists = _arbitrary_lists(sizes)
                    for i, row in enumerate(out.witness):
                        lists[order[i]] = row
                    witness = {vmap[v]: tuple(sorted(lists[v]))
                               for v in range(work.n)}
                    _lift_witness(steps, witness)
                    wit = tuple(witness[v] for v in range(g.n))
                    _assert_witness(g, f, wit)
                    return NotChoosable(witness=wit, nodes=total_nodes)
                if cap == total:
                    total_assignments += out.assignments
    except SearchBudgetExceeded as exc:
        used = budget.nodes - budget_nodes_start if budget is not None else 0
        return UnknownVerdict(nodes=used, progress=str(exc))
    return Choosable(assignments_examined=total_assignments, nodes=total_nodes)


def _assert_witness(g: Graph, f: SizeFunction, witness: ListAssignment) -> None:
    # internal soundness check: right sizes, genuinely uncolorable
    bad_size = [v for v in range(g.n) if len(witness[v]) != f[v]]
    if bad_size:
        raise AssertionError(f"witness sizes wrong at {bad_size}")
    if is_list_colorable(g, witness) is not None:
        raise AssertionError("witness assignment is colorable")


# ---------------------------------------------------------------------------
# Forcing assignments
# ---------------------------------------------------------------------------

def find_forcing_assignment(g: Graph, f: Sequence[int], vertex: int,
                            colors: Sequence[int],
                            budget: Budget | None = None) -> ListAssignment | None:
    """An f-assignment L that admits a proper coloring and under which every
    proper coloring uses one of ``colors`` on ``vertex``; None if no such
    assignment exists in the canonical search space.

    The target colors are pinned as distinguished (never renamed); all other
    colors are enumerated in restricted-growth order.  Such an assignment
    exists whenever f is a choice function with size(f) <= chi_sc + |colors| - 1.
    """
    f = tuple(int(x) for x in f)
    if len(f) != g.n:
        raise ValueError(f"size function has {len(f)} entries for order {g.n}")
    if not colors:
        raise ValueError("need at least one target color")
    target = sorted(set(colors))
    s = len(target)
    free_values: list[int] = []
    c = 0
    while len(free_values) < sum(f):
        if c not in set(target):
            free_values.append(c)
        c += 1

    assign: list[tuple[int, ...]] = [()] * g.n
    counter = [0]

    def materialize() -> ListAssignment:
        out = []
        for row in assign:
            out.append(tuple(sorted(
                target[c] if c < s else free_values[c - s] for c in row)))
        return tuple(out)

    def forcing(cand: ListAssignment) -> bool:
        if is_list_colorable(g, cand) is None:
            return False
        stripped = [list(row) for row in cand]
        stripped[vertex] = [c for c in stripped[vertex] if c not in target]
        return is_list_colorable(g, stripped) is None

    def rec(i: int, used_free: int) -> ListAssignment | None:
        if i == g.n:
            cand = materialize()
            return cand if forcing(cand) else None
        fv = f[i]
        base = s + used_free
        for fresh in range(fv + 1):
            new_block = tuple(range(base, base + fresh))
            for old in itertools.combinations(range(base), fv - fresh):
                if i == vertex and not any(c < s for c in old):
                    continue  # colorings would never touch the target set
                counter[0] += 1
                if budget is not None and counter[0] % 4096 == 0:
                    budget.add_nodes(4096)
                    budget.check("forcing-assignment search")
                assign[i] = old + new_block
                hit = rec(i + 1, used_free + fresh)
                if hit is not None:
                    return hit
        return None

    return rec(0, 0)
