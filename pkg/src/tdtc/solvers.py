"""Exact, provably optimal solvers for the invariants used in this package.

All searches are deterministic: vertices are processed in fixed orders and
ties break toward the lowest index, so identical inputs always produce
identical certificates.  Each solver returns an InvariantResult whose
certificate re-verifies under the ``verify`` module.

Search strategies
-----------------
* independence_number: branch and bound with dominance reductions
  (degree 0/1 vertices and degree-2 vertices inside a triangle are taken
  greedily) and a greedy clique-cover upper bound.
* chromatic_number: per-component iterative deepening on the class count,
  between a greedy clique lower bound and a smallest-last greedy upper
  bound; within a level, backtracking in degeneracy order with first-use
  symmetry breaking.
* total_domination_number: branch on an uncovered vertex with the fewest
  remaining dominators, with candidate-exclusion so no subset is visited
  twice; a greedy cover seeds the incumbent and search below it proves
  optimality.
* total_dominator_chromatic_number: iterative deepening on the class
  count starting at max(2, chi); within a level, backtracking in
  degeneracy order with first-use symmetry breaking plus domination-aware
  pruning: for every class we maintain the set of vertices whose open
  neighborhood still contains the class, and a branch dies as soon as
  some vertex can witness neither an opened class nor any class that
  could still be opened among the unassigned objects ahead of it.  The
  neighborhood-containment bookkeeping subsumes the generic size bounds
  (a witnessed class fits inside an open neighborhood, hence has at most
  max-degree members and is independent).

The mixed invariants reduce to the total graph; the one deliberate
exception is total_mixed_domination_number_direct, which searches over
the mixed objects with the adjacent-or-incident relation built straight
from the base graph and exists as an independent oracle for the
reduction.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import (
    DomainError,
    Graph,
    ObjectId,
    induced_subgraph,
    mixed_neighbors,
    mixed_objects,
    total_graph,
)
from .verify import Coloring


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a solver run; absent fields mean unbounded."""

    max_nodes: int | None = None
    max_time: float | None = None  # seconds


@dataclass(frozen=True)
class InvariantResult:
    """Exact invariant value plus its machine-checkable certificate.

    When a budget ran out, ``proven_optimal`` is False and ``value`` is only
    the best bound witnessed by the certificate (an upper bound for
    minimization problems, a lower bound for independence numbers).
    """

    value: int
    certificate: object
    nodes_explored: int
    elapsed: float
    proven_optimal: bool


class _OutOfBudget(Exception):
    pass


class _Search:
    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: SearchBudget | None):
        self.nodes = 0
        self.max_nodes = budget.max_nodes if budget else None
        self.deadline = None
        if budget and budget.max_time is not None:
            self.deadline = time.perf_counter() + budget.max_time

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and (self.nodes & 0xFF) == 0:
            if time.perf_counter() > self.deadline:
                raise _OutOfBudget


def _require_min_degree_one(g: Graph, what: str) -> None:
    if g.n == 0 or g.min_degree < 1:
        raise DomainError(f"{what} requires positive minimum degree")


def _adj_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _degeneracy_order(adj: list[int]) -> list[int]:
    """Smallest-last order: color/assign positions so that each vertex sees
    at most degeneracy-many already-processed neighbors."""
    n = len(adj)
    alive = (1 << n) - 1
    deg = [adj[v].bit_count() for v in range(n)]
    removal = []
    for _ in range(n):
        best = min((deg[v], v) for v in _bits(alive))
        v = best[1]
        removal.append(v)
        alive &= ~(1 << v)
        for u in _bits(adj[v] & alive):
            deg[u] -= 1
    removal.reverse()
    return removal


def _greedy_clique(adj: list[int]) -> list[int]:
    best: list[int] = []
    n = len(adj)
    for seed in range(n):
        clique = [seed]
        cand = adj[seed]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique.append(u)
            cand &= adj[u]
        if len(clique) > len(best):
            best = clique
    return best


def _greedy_color_classes(adj: list[int], order: list[int]) -> list[int]:
    """First-fit along ``order``; returns class bitmasks."""
    classes: list[int] = []
    for v in order:
        for k, mask in enumerate(classes):
            if not (mask & adj[v]):
                classes[k] |= 1 << v
                break
        else:
            classes.append(1 << v)
    return classes


def _kcolor_feasible(adj: list[int], order: list[int], k: int, search: _Search) -> list[int] | None:
    """Backtracking k-coloring feasibility; returns class bitmasks or None.

    Classes are opened in first-use order, which removes color-permutation
    symmetry, so an exhausted run is a proof that no k-coloring exists.
    """
    n = len(order)
    if n == 0:
        return []
    class_masks = [0] * k
    chosen = [-1] * n
    used_before = [0] * n
    cand = [0] * n
    used = 0
    pos = 0
    cand[0] = 1
    while True:
        if cand[pos] == 0:
            pos -= 1
            if pos < 0:
                return None
            c = chosen[pos]
            class_masks[c] &= ~(1 << order[pos])
            used = used_before[pos]
            continue
        search.tick()
        low = cand[pos] & -cand[pos]
        cand[pos] ^= low
        c = low.bit_length() - 1
        v = order[pos]
        if class_masks[c] & adj[v]:
            continue
        chosen[pos] = c
        used_before[pos] = used
        class_masks[c] |= 1 << v
        if c == used:
            used += 1
        if pos == n - 1:
            return [m for m in class_masks if m]
        pos += 1
        cand[pos] = (1 << min(used + 1, k)) - 1


def _chromatic_masks(adj: list[int], search: _Search) -> tuple[int, list[int]]:
    """Exact chromatic number of a connected (or any) component, as bitmask classes."""
    n = len(adj)
    if n == 0:
        return 0, []
    if not any(adj):
        return 1, [(1 << n) - 1]
    order = _degeneracy_order(adj)
    greedy = _greedy_color_classes(adj, order)
    lower = max(2, len(_greedy_clique(adj)))
    for k in range(lower, len(greedy)):
        found = _kcolor_feasible(adj, order, k, search)
        if found is not None:
            return len(found), found
    return len(greedy), greedy


def _components(adj: list[int]) -> list[int]:
    n = len(adj)
    seen = 0
    comps = []
    for v in range(n):
        if seen >> v & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def _chromatic(g: Graph, search: _Search) -> tuple[int, Coloring]:
    """Exact chromatic number with certificate, solved per component."""
    adj = _adj_masks(g)
    global_classes: list[set[int]] = []
    value = 0
    for comp in _components(adj):
        ids = [v + 1 for v in _bits(comp)]
        sub, old = induced_subgraph(g, set(ids))
        sub_adj = _adj_masks(sub)
        k, masks = _chromatic_masks(sub_adj, search)
        value = max(value, k)
        for idx, mask in enumerate(masks):
            if idx == len(global_classes):
                global_classes.append(set())
            global_classes[idx].update(old[v] for v in _bits(mask))
    return value, Coloring(tuple(frozenset(c) for c in global_classes))


# ---------------------------------------------------------------------------
# Independence number
# ---------------------------------------------------------------------------


def _greedy_independent(adj: list[int]) -> list[int]:
    n = len(adj)
    free = (1 << n) - 1
    out = []
    while free:
        v = min(_bits(free), key=lambda u: ((adj[u] & free).bit_count(), u))
        out.append(v)
        free &= ~(adj[v] | (1 << v))
    return out


def _clique_cover_count(adj: list[int], free: int) -> int:
    count = 0
    rem = free
    while rem:
        v = (rem & -rem).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & rem
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= adj[u]
        rem &= ~clique
        count += 1
    return count


def _mis_search(adj: list[int], search: _Search) -> list[int]:
    n = len(adj)
    best = _greedy_independent(adj)

    def rec(free: int, cur: list[int]) -> None:
        nonlocal best
        search.tick()
        # dominance reductions
        while free:
            picked = False
            for v in _bits(free):
                nb = adj[v] & free
                d = nb.bit_count()
                if d == 0:
                    cur.append(v)
                    free &= ~(1 << v)
                    picked = True
                    break
                if d == 1:
                    cur.append(v)
                    free &= ~(adj[v] | (1 << v))
                    picked = True
                    break
                if d == 2:
                    a = (nb & -nb).bit_length() - 1
                    b = (nb & (nb - 1)).bit_length() - 1
                    if adj[a] >> b & 1:
                        cur.append(v)
                        free &= ~(adj[v] | (1 << v))
                        picked = True
                        break
            if not picked:
                break
        if not free:
            if len(cur) > len(best):
                best = list(cur)
            return
        if len(cur) + free.bit_count() <= len(best):
            return
        if len(cur) + _clique_cover_count(adj, free) <= len(best):
            return
        v = max(_bits(free), key=lambda u: ((adj[u] & free).bit_count(), -u))
        rec(free & ~(adj[v] | (1 << v)), cur + [v])
        rec(free & ~(1 << v), list(cur))

    rec((1 << n) - 1, [])
    return best


def independence_number(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Maximum independent set, exact."""
    start = time.perf_counter()
    search = _Search(budget)
    adj = _adj_masks(g)
    proven = True
    best = _greedy_independent(adj)
    try:
        best = _mis_search(adj, search)
    except _OutOfBudget:
        proven = False
    cert = frozenset(v + 1 for v in best)
    return InvariantResult(len(cert), cert, search.nodes, time.perf_counter() - start, proven)


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------


def chromatic_number(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Chromatic number with a proper-coloring certificate, exact.

    The class count below the reported value is exhausted by search (or
    excluded outright by a clique of the same size), so the value is proven.
    """
    start = time.perf_counter()
    search = _Search(budget)
    proven = True
    try:
        value, cert = _chromatic(g, search)
    except _OutOfBudget:
        proven = False
        adj = _adj_masks(g)
        masks = _greedy_color_classes(adj, _degeneracy_order(adj))
        cert = Coloring(tuple(frozenset(v + 1 for v in _bits(m)) for m in masks))
        value = cert.num_classes
    return InvariantResult(value, cert, search.nodes, time.perf_counter() - start, proven)


# ---------------------------------------------------------------------------
# Total domination number
# ---------------------------------------------------------------------------


def _greedy_tds(adj: list[int]) -> list[int]:
    n = len(adj)
    full = (1 << n) - 1
    covered = 0
    out: list[int] = []
    while covered != full:
        v = max(range(n), key=lambda u: ((adj[u] & ~covered).bit_count(), -u))
        out.append(v)
        covered |= adj[v]
    return out


def _tds_search(adj: list[int], seed: list[int], search: _Search) -> list[int]:
    n = len(adj)
    full = (1 << n) - 1
    maxdeg = max(a.bit_count() for a in adj)
    best = list(seed)

    def rec(cur: list[int], covered: int, excluded: int) -> None:
        nonlocal best
        search.tick()
        if covered == full:
            if len(cur) < len(best):
                best = list(cur)
            return
        uncovered = full & ~covered
        need = (uncovered.bit_count() + maxdeg - 1) // maxdeg
        if len(cur) + need >= len(best):
            return
        pick = -1
        options = 0
        options_count = n + 1
        for v in _bits(uncovered):
            opts = adj[v] & ~excluded
            cnt = opts.bit_count()
            if cnt == 0:
                return
            if cnt < options_count:
                pick, options, options_count = v, opts, cnt
        ex = excluded
        for u in _bits(options):
            rec(cur + [u], covered | adj[u], ex)
            ex |= 1 << u

    rec([], 0, 0)
    return best


def total_domination_number(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Minimum total dominating set, exact; requires positive minimum degree."""
    _require_min_degree_one(g, "total domination")
    start = time.perf_counter()
    search = _Search(budget)
    adj = _adj_masks(g)
    best = _greedy_tds(adj)
    proven = True
    try:
        best = _tds_search(adj, best, search)
    except _OutOfBudget:
        proven = False
    cert = frozenset(v + 1 for v in best)
    return InvariantResult(len(cert), cert, search.nodes, time.perf_counter() - start, proven)


# ---------------------------------------------------------------------------
# Total dominator chromatic number
# ---------------------------------------------------------------------------


def _ktdc_feasible(
    adj: list[int],
    order: list[int],
    k: int,
    search: _Search,
    prune: bool = True,
) -> list[int] | None:
    """Feasibility of a total dominator coloring with exactly k classes.

    compat[c] tracks the vertices whose open neighborhood still contains
    class c; rescue_mask[p] tracks the vertices with at least one neighbor
    among the objects not yet assigned at position p, i.e. the vertices a
    newly opened class could still come to serve.  With ``prune`` off only
    completed assignments are checked, which is slower but must find the
    same optimum (used by the pruning-soundness tests).
    """
    n = len(order)
    nv = len(adj)
    full = (1 << nv) - 1

    suffix = 0
    rescue = [0] * (n + 1)
    for pos in range(n - 1, -1, -1):
        suffix |= 1 << order[pos]
        mask = 0
        for v in range(nv):
            if adj[v] & suffix:
                mask |= 1 << v
        rescue[pos] = mask

    class_masks = [0] * k
    compat = [full] * k
    chosen = [-1] * n
    used_before = [0] * n
    compat_before = [0] * n
    cand = [0] * n
    used = 0
    pos = 0
    cand[0] = 1
    while True:
        if cand[pos] == 0:
            pos -= 1
            if pos < 0:
                return None
            c = chosen[pos]
            class_masks[c] &= ~(1 << order[pos])
            compat[c] = compat_before[pos]
            used = used_before[pos]
            continue
        search.tick()
        low = cand[pos] & -cand[pos]
        cand[pos] ^= low
        c = low.bit_length() - 1
        v = order[pos]
        if class_masks[c] & adj[v]:
            continue
        new_used = used + 1 if c == used else used
        if k - new_used > n - pos - 1:
            continue
        new_compat = compat[c] & adj[v]
        last = pos == n - 1
        if prune or last:
            union = 0
            for cc in range(new_used):
                union |= new_compat if cc == c else compat[cc]
            if new_used < k:
                union |= rescue[pos + 1]
            if union != full:
                continue
        chosen[pos] = c
        used_before[pos] = used
        compat_before[pos] = compat[c]
        class_masks[c] |= 1 << v
        compat[c] = new_compat
        used = new_used
        if last:
            return list(class_masks)
        pos += 1
        cand[pos] = (1 << min(used + 1, k)) - 1


def total_dominator_chromatic_number(
    g: Graph,
    budget: SearchBudget | None = None,
    prune: bool = True,
) -> InvariantResult:
    """Minimum total dominator coloring, exact; requires positive minimum degree.

    Iterative deepening over the class count proves every level below the
    answer infeasible by exhaustion.  The initial incumbent (greedy total
    dominating set as singletons plus a greedy coloring of the rest) is
    returned when a budget runs out, and short-circuits the final level when
    every smaller count has already been refuted.
    """
    _require_min_degree_one(g, "total dominator coloring")
    start = time.perf_counter()
    search = _Search(budget)
    adj = _adj_masks(g)
    n = g.n
    order = _degeneracy_order(adj)

    tds = sorted(_greedy_tds(adj))
    tds_mask = 0
    for v in tds:
        tds_mask |= 1 << v
    rest_order = [v for v in order if not (tds_mask >> v & 1)]
    rest_classes = _greedy_color_classes(adj, rest_order)
    incumbent = [1 << v for v in tds] + rest_classes

    proven = True
    answer = incumbent
    try:
        chi_value, _ = _chromatic(g, search)
        lower = max(2, chi_value)
        for k in range(lower, len(incumbent)):
            found = _ktdc_feasible(adj, order, k, search, prune=prune)
            if found is not None:
                answer = found
                break
    except _OutOfBudget:
        proven = False
    cert = Coloring(tuple(frozenset(v + 1 for v in _bits(m)) for m in answer))
    return InvariantResult(cert.num_classes, cert, search.nodes, time.perf_counter() - start, proven)


# ---------------------------------------------------------------------------
# Mixed invariants via the total graph
# ---------------------------------------------------------------------------


def mixed_independence_number(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Mixed independence number: maximum independent set of the total graph,
    reported over the base graph's objects."""
    start = time.perf_counter()
    tg = total_graph(g)
    inner = independence_number(tg.graph, budget)
    cert = tg.to_objects(inner.certificate)
    return InvariantResult(inner.value, cert, inner.nodes_explored,
                           time.perf_counter() - start, inner.proven_optimal)


def total_mixed_domination_number(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Total mixed domination number via the reduction to the total graph."""
    _require_min_degree_one(g, "total mixed domination")
    start = time.perf_counter()
    tg = total_graph(g)
    inner = total_domination_number(tg.graph, budget)
    cert = tg.to_objects(inner.certificate)
    return InvariantResult(inner.value, cert, inner.nodes_explored,
                           time.perf_counter() - start, inner.proven_optimal)


def total_chromatic_number(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Total chromatic number: chromatic number of the total graph, with a
    proper total coloring over the base graph's objects as certificate."""
    start = time.perf_counter()
    tg = total_graph(g)
    inner = chromatic_number(tg.graph, budget)
    classes = tuple(frozenset(tg.labels[v - 1] for v in cls) for cls in inner.certificate.classes)
    return InvariantResult(inner.value, Coloring(classes), inner.nodes_explored,
                           time.perf_counter() - start, inner.proven_optimal)


def tdtc_number(g: Graph, budget: SearchBudget | None = None, prune: bool = True) -> InvariantResult:
    """Total dominator total chromatic number, via the total-graph reduction,
    with a mixed-object coloring as certificate."""
    _require_min_degree_one(g, "total dominator total coloring")
    start = time.perf_counter()
    tg = total_graph(g)
    inner = total_dominator_chromatic_number(tg.graph, budget, prune=prune)
    classes = tuple(frozenset(tg.labels[v - 1] for v in cls) for cls in inner.certificate.classes)
    return InvariantResult(inner.value, Coloring(classes), inner.nodes_explored,
                           time.perf_counter() - start, inner.proven_optimal)


# ---------------------------------------------------------------------------
# Direct search over mixed objects (independent oracle for the reduction)
# ---------------------------------------------------------------------------


def total_mixed_domination_number_direct(g: Graph, budget: SearchBudget | None = None) -> InvariantResult:
    """Total mixed domination number by direct search over V union E.

    Deliberately independent of the total-graph reduction: the universe and
    the adjacent-or-incident relation come straight from the base graph,
    and the search is a plain iterative-deepening cover search rather than
    the incumbent-driven branch and bound used on total graphs.
    """
    _require_min_degree_one(g, "total mixed domination")
    start = time.perf_counter()
    search = _Search(budget)
    objs = mixed_objects(g)
    nbr_map = mixed_neighbors(g)
    idx = {o: i for i, o in enumerate(objs)}
    n = len(objs)
    nbr = [0] * n
    for o, nset in nbr_map.items():
        mask = 0
        for u in nset:
            mask |= 1 << idx[u]
        nbr[idx[o]] = mask
    full = (1 << n) - 1

    def dfs(cur: list[int], covered: int, excluded: int, limit: int) -> list[int] | None:
        search.tick()
        if covered == full:
            return cur
        if len(cur) == limit:
            return None
        v = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        options = nbr[v] & ~excluded
        ex = excluded
        for u in _bits(options):
            hit = dfs(cur + [u], covered | nbr[u], ex, limit)
            if hit is not None:
                return hit
            ex |= 1 << u
        return None

    proven = True
    found: list[int] | None = None
    try:
        for limit in range(1, n + 1):
            found = dfs([], 0, 0, limit)
            if found is not None:
                break
    except _OutOfBudget:
        proven = False
    if found is None:
        # budget ran out before any cover was proven minimal; fall back to all objects
        found = list(range(n))
        proven = False
    cert = frozenset(objs[i] for i in found)
    return InvariantResult(len(cert), cert, search.nodes, time.perf_counter() - start, proven)
