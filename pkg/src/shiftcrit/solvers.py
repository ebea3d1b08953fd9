"""Exact k-colorability of shift-graph views, by two independent routes.

The first engine decides whether a good sequence exists: a proper
k-coloring of the constrained pairs is the same thing as a length-N
sequence over subsets of [1, k] avoiding forward containment on those
pairs, so backtracking over sequence entries decides colorability.  When
the constraint set is the critical core W(n) and k = n, the search space
shrinks to saturated sequences (saturation maps any good sequence to a
saturated one without breaking goodness), and a counting prune applies:
everything pending for the suffix, closed downward under subsets, must
still fit into the remaining positions.  That closure bound subsumes the
position bound "an entry of size c cannot sit later than position
L - 2^c + 1".

The second engine is a classical branch-and-bound vertex coloring with
saturation-degree ordering, a greedy clique precoloring, and the
first-use color symmetry cap.  The two engines share no code paths, so
their agreement is a meaningful check; chromatic_number runs every query
through both and insists they agree.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import (
    ConstructionError,
    InvalidParameterError,
    InvalidVertexError,
    SequenceLengthError,
)
from .graphs import CriticalCore, InducedSubgraph, ShiftGraph, Vertex
from .sequences import (
    SubsetSequence,
    VertexColoring,
    _cached_core,
    _proper_submasks,
    coloring_from_sequence,
    constraint_pairs,
    is_good,
    proper_coloring_violation,
)

_SATURATED_GROUND_CAP = 14  # closure bitsets take 4^k bits total


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits for a single solver query."""

    max_nodes: int = 100_000_000
    max_seconds: float = 600.0

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_seconds <= 0:
            raise InvalidParameterError("budget limits must be positive")


@dataclass(frozen=True)
class ColorabilityResult:
    """Outcome of one k-colorability query."""

    decision: str  # "yes" | "no" | "inconclusive"
    k: int
    engine: str
    nodes: int
    prunes: int
    certificate_sequence: SubsetSequence | None = None
    certificate_coloring: VertexColoring | None = None

    @property
    def conclusive(self) -> bool:
        return self.decision != "inconclusive"

    def refutation_record(self) -> dict:
        if self.decision != "no":
            raise InvalidParameterError(f"no refutation to record for decision {self.decision!r}")
        return {"k": self.k, "nodes": self.nodes, "prunes": self.prunes, "conclusive": True}

    def query_record(self) -> dict:
        return {"k": self.k, "engine": self.engine, "decision": self.decision,
                "nodes": self.nodes, "prunes": self.prunes}


@dataclass
class ChromaticResult:
    """Exact chromatic number with certificates, or an inconclusive marker."""

    chi: int | None
    conclusive: bool
    coloring: VertexColoring | None
    refutation: dict | None
    queries: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        from .sequences import coloring_to_dict
        return {
            "chi": self.chi,
            "conclusive": self.conclusive,
            "coloring": coloring_to_dict(self.coloring) if self.coloring else None,
            "refutation": self.refutation,
            "queries": list(self.queries),
        }


def as_view(x):
    """Coerce a graph argument to a ShiftGraph or InducedSubgraph view."""
    if isinstance(x, (ShiftGraph, InducedSubgraph)):
        return x
    if isinstance(x, CriticalCore):
        return x.induced()
    raise InvalidParameterError(f"not a graph view: {x!r}")


class _Clock:
    """Budget bookkeeping shared by both engines."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.start = time.monotonic()
        self.nodes = 0
        self.prunes = 0

    def tick(self) -> bool:
        """Count one node; True while within budget."""
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            return False
        if self.nodes % 2048 == 0 and time.monotonic() - self.start > self.budget.max_seconds:
            return False
        return True


def _closure_bitsets(k: int) -> list[int]:
    """For each mask m over [1, k], the set {b : b subset of m} as a bitset of masks."""
    out = [1]  # closure of the empty set is itself
    for m in range(1, 1 << k):
        low = m & -m
        rest = out[m ^ low]
        out.append(rest | (rest << low))
    return out


def k_colorable_via_sequences(n_points: int, k: int, X,
                              budget: SearchBudget | None = None,
                              saturated_only: bool | None = None) -> ColorabilityResult:
    """Decide k-colorability of the pairs X over [1, n_points] via good sequences.

    Searches for a length-n_points sequence over subsets of [1, k] with
    no forward containment on X, position by position in descending
    mask-size order.  Color labels are canonicalized by first use (any
    witness relabels to one introducing colors in order), which is sound
    for the yes/no decision.  saturated_only=None auto-restricts to
    saturated sequences when X is the critical core W(k) on [1, 2^k + 1];
    the restriction is sound because saturation preserves goodness, and
    it enables counting prunes on the downward closure of the submasks
    still owed to the suffix.  A "yes" re-verifies its certificate;
    "no" is exhaustive.
    """
    if not isinstance(n_points, int) or n_points < 2:
        raise InvalidParameterError(f"ground interval needs N >= 2, got {n_points!r}")
    if not isinstance(k, int) or k < 0:
        raise InvalidParameterError(f"color count must be nonnegative, got {k!r}")
    if k > 62:
        raise InvalidParameterError(f"color count {k} exceeds the supported maximum 62")
    if budget is None:
        budget = SearchBudget()
    try:
        pairs = constraint_pairs(X, n_points)
    except SequenceLengthError as e:
        raise InvalidVertexError(str(e)) from None
    if saturated_only is None:
        saturated_only = (2 <= k <= _SATURATED_GROUND_CAP and n_points == 2 ** k + 1
                          and set(pairs) == {tuple(v) for v in _cached_core(k).members})
    if saturated_only and k > _SATURATED_GROUND_CAP:
        raise InvalidParameterError(f"saturated search supports k <= {_SATURATED_GROUND_CAP}")

    left_partners: list[tuple[int, ...]] = [()] * (n_points + 1)
    right_partners: list[tuple[int, ...]] = [()] * (n_points + 1)
    by_right: dict[int, list[int]] = {}
    by_left: dict[int, list[int]] = {}
    for i, j in pairs:
        by_right.setdefault(j, []).append(i)
        by_left.setdefault(i, []).append(j)
    for j, ii in by_right.items():
        left_partners[j] = tuple(sorted(ii))
    for i, jj in by_left.items():
        right_partners[i] = tuple(sorted(jj))

    if saturated_only:
        branch_positions = list(range(1, n_points + 1))
        closure_bits = _closure_bitsets(k)
        size_ge_bits = [0] * (k + 1)
        for b in range(1 << k):
            for c in range(1, b.bit_count() + 1):
                size_ge_bits[c] |= 1 << b
        window_end = [n_points - (1 << c) + 1 for c in range(k + 1)]
    else:
        branch_positions = sorted({p for ij in pairs for p in ij})
        closure_bits = None

    # forward checking: feasible[p] is the bitset of masks still placeable at p;
    # placing m at i removes every superset of m from each right partner of i
    use_fc = k <= 12
    avail = None
    if use_fc:
        n_masks = 1 << k
        up_bits = [1 << m for m in range(n_masks)]
        for t in range(k):
            tb = 1 << t
            for m in range(n_masks):
                if not m & tb:
                    up_bits[m] |= up_bits[m | tb]
        all_bits = (1 << n_masks) - 1
        not_up = [all_bits ^ u for u in up_bits]
        feasible = [all_bits] * (n_points + 1)
        if saturated_only:
            mask_size = [m.bit_count() for m in range(n_masks)]
            pos_all = 0
            for p in branch_positions:
                pos_all |= 1 << p
            # avail[b]: positions where b is still placeable, for deadline checks
            avail = [pos_all] * n_masks
            high_mask = [pos_all & ~((1 << (p + 1)) - 1) for p in range(n_points + 2)]
            window_pos = [pos_all & ((1 << (we + 1)) - 1) if we >= 0 else 0
                          for we in window_end]

    masks_desc = sorted(range(1 << k), key=lambda b: (-b.bit_count(), -b))
    clock = _Clock(budget)
    entries = [0] * (n_points + 1)
    pending: set[int] = set()

    def undo_fc(trail):
        for j, old, removed in reversed(trail):
            feasible[j] = old
            if avail is not None:
                jbit = 1 << j
                rm = removed
                while rm:
                    lowb = rm & -rm
                    avail[lowb.bit_length() - 1] |= jbit
                    rm ^= lowb

    def place(bi: int, used: int):
        """True = found, False = subtree exhausted, None = budget hit.

        `used` is the set of colors already introduced; by the
        relabeling canonicalization it is always a prefix [1, t], and a
        candidate may only bring in the next colors in order.
        """
        if bi == len(branch_positions):
            return True
        p = branch_positions[bi]
        for m in masks_desc:
            if not clock.tick():
                return None
            fresh = m & ~used
            if fresh and fresh != ((1 << fresh.bit_count()) - 1) << used.bit_length():
                clock.prunes += 1
                continue
            if use_fc:
                if not (feasible[p] >> m) & 1:
                    clock.prunes += 1
                    continue
            elif any(entries[i] & ~m == 0 for i in left_partners[p]):
                clock.prunes += 1
                continue
            trail = ()
            dead = False
            if use_fc and right_partners[p]:
                trail = []
                nu = not_up[m]
                for j in right_partners[p]:
                    old = feasible[j]
                    new = old & nu
                    if new != old:
                        feasible[j] = new
                        removed = old ^ new
                        trail.append((j, old, removed))
                        if avail is not None:
                            keep = ~(1 << j)
                            rm = removed
                            while rm:
                                lowb = rm & -rm
                                avail[lowb.bit_length() - 1] &= keep
                                rm ^= lowb
                        if new == 0:
                            dead = True
                            break
            if dead:
                clock.prunes += 1
                undo_fc(trail)
                continue
            if saturated_only:
                was_pending = m in pending
                pending.discard(m)
                added = [b for b in _proper_submasks(m) if b not in pending]
                pending.update(added)
                need = 0
                for b in pending:
                    need |= closure_bits[b]
                bad = need.bit_count() > n_points - p
                if not bad:
                    # everything pending of size >= c is confined to positions <= N - 2^c + 1
                    for c in range(1, k + 1):
                        room = window_end[c] - p
                        if (need & size_ge_bits[c]).bit_count() > (room if room > 0 else 0):
                            bad = True
                            break
                if not bad and avail is not None:
                    hp = high_mask[p]
                    for b in pending:
                        if not avail[b] & window_pos[mask_size[b]] & hp:
                            bad = True
                            break
                if bad:
                    clock.prunes += 1
                    pending.difference_update(added)
                    if was_pending:
                        pending.add(m)
                    undo_fc(trail)
                    continue
                entries[p] = m
                sub = place(bi + 1, used | m)
                pending.difference_update(added)
                if was_pending:
                    pending.add(m)
            else:
                entries[p] = m
                sub = place(bi + 1, used | m)
            undo_fc(trail)
            if sub:
                return True
            if sub is None:
                return None
        return False

    import sys
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n_points + 200))
    try:
        outcome = place(0, 0)
    finally:
        sys.setrecursionlimit(old_limit)

    if outcome is None:
        return ColorabilityResult("inconclusive", k, "sequence", clock.nodes, clock.prunes)
    if not outcome:
        return ColorabilityResult("no", k, "sequence", clock.nodes, clock.prunes)
    seq = SubsetSequence(tuple(entries[1:]), k)
    if not is_good(seq, pairs):
        raise ConstructionError("sequence search returned a bad certificate")
    coloring = coloring_from_sequence(seq, pairs) if pairs else VertexColoring({}, k)
    return ColorabilityResult("yes", k, "sequence", clock.nodes, clock.prunes,
                              certificate_sequence=seq, certificate_coloring=coloring)


def _adjacency(view):
    verts = view.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    by_first: dict[int, list[int]] = {}
    by_second: dict[int, list[int]] = {}
    for t, v in enumerate(verts):
        by_first.setdefault(v.x, []).append(t)
        by_second.setdefault(v.y, []).append(t)
    adj = []
    for v in verts:
        adj.append(tuple(by_first.get(v.y, []) + by_second.get(v.x, [])))
    return verts, index, adj


def _greedy_clique(adj) -> list[int]:
    order = sorted(range(len(adj)), key=lambda t: (-len(adj[t]), t))
    clique: list[int] = []
    sets = [set(a) for a in adj]
    for t in order:
        if all(t in sets[q] for q in clique):
            clique.append(t)
    return clique


def k_colorable_bb(view, k: int, budget: SearchBudget | None = None) -> ColorabilityResult:
    """Branch-and-bound proper coloring of a graph view with at most k colors.

    Saturation-degree vertex selection, greedy-clique precoloring, and
    new colors admitted only one past the maximum color in use.  Shares
    no machinery with the sequence engine.
    """
    view = as_view(view)
    if not isinstance(k, int) or k < 0:
        raise InvalidParameterError(f"color count must be nonnegative, got {k!r}")
    if budget is None:
        budget = SearchBudget()
    verts, _, adj = _adjacency(view)
    m = len(verts)
    clock = _Clock(budget)
    if m == 0:
        return ColorabilityResult("yes", k, "bb", 0, 0,
                                  certificate_coloring=VertexColoring({}, k))
    if k == 0:
        return ColorabilityResult("no", k, "bb", 0, 0)

    clique = _greedy_clique(adj)
    if len(clique) > k:
        return ColorabilityResult("no", k, "bb", 0, 0)

    colors = [0] * m
    nbr_colors: list[dict[int, int]] = [dict() for _ in range(m)]
    degree = [len(a) for a in adj]

    def assign(t: int, c: int):
        colors[t] = c
        for u in adj[t]:
            d = nbr_colors[u]
            d[c] = d.get(c, 0) + 1

    def unassign(t: int, c: int):
        colors[t] = 0
        for u in adj[t]:
            d = nbr_colors[u]
            if d[c] == 1:
                del d[c]
            else:
                d[c] -= 1

    max_used = 0
    for rank, t in enumerate(clique):
        assign(t, rank + 1)
    max_used = len(clique)
    uncolored = m - len(clique)

    def select() -> int:
        best, best_key = -1, None
        for t in range(m):
            if colors[t]:
                continue
            key = (len(nbr_colors[t]), degree[t], -t)
            if best_key is None or key > best_key:
                best, best_key = t, key
        return best

    def next_color(t: int, after: int, cap: int) -> int:
        for c in range(after + 1, min(k, cap) + 1):
            if c not in nbr_colors[t]:
                return c
        return 0

    found = uncolored == 0
    exhausted = False
    out_of_budget = False
    if not found:
        frames: list[list[int]] = [[select(), 0, max_used]]
        while frames:
            frame = frames[-1]
            t, cur, prev_max = frame
            if cur:
                unassign(t, cur)
                max_used = prev_max
                uncolored += 1
            c = next_color(t, cur, max_used + 1)
            if c == 0:
                clock.prunes += 1
                frames.pop()
                continue
            if not clock.tick():
                out_of_budget = True
                break
            frame[1] = c
            frame[2] = max_used
            assign(t, c)
            max_used = max(max_used, c)
            uncolored -= 1
            if uncolored == 0:
                found = True
                break
            frames.append([select(), 0, max_used])
        else:
            exhausted = True

    if out_of_budget:
        return ColorabilityResult("inconclusive", k, "bb", clock.nodes, clock.prunes)
    if exhausted:
        return ColorabilityResult("no", k, "bb", clock.nodes, clock.prunes)
    coloring = VertexColoring({verts[t]: colors[t] for t in range(m)}, k)
    if proper_coloring_violation(coloring, verts) is not None:
        raise ConstructionError("branch-and-bound returned an improper coloring")
    return ColorabilityResult("yes", k, "bb", clock.nodes, clock.prunes,
                              certificate_coloring=coloring)


def greedy_coloring(view, budget: SearchBudget | None = None) -> VertexColoring | None:
    """Saturation-degree greedy coloring; None if the time budget runs out."""
    view = as_view(view)
    verts, _, adj = _adjacency(view)
    m = len(verts)
    if m == 0:
        return VertexColoring({}, 0)
    start = time.monotonic()
    limit = budget.max_seconds if budget else None
    colors = [0] * m
    nbr_colors: list[set[int]] = [set() for _ in range(m)]
    degree = [len(a) for a in adj]
    done = 0
    while done < m:
        if limit is not None and done % 4096 == 0 and time.monotonic() - start > limit:
            return None
        best, best_key = -1, None
        for t in range(m):
            if colors[t]:
                continue
            key = (len(nbr_colors[t]), degree[t], -t)
            if best_key is None or key > best_key:
                best, best_key = t, key
        c = 1
        while c in nbr_colors[best]:
            c += 1
        colors[best] = c
        for u in adj[best]:
            nbr_colors[u].add(c)
        done += 1
    k = max(colors)
    return VertexColoring({verts[t]: colors[t] for t in range(m)}, k)


def _has_odd_cycle(view) -> bool:
    """BFS two-layering; True when some component is not bipartite."""
    verts = view.vertex_list()
    side: dict[Vertex, int] = {}
    from collections import deque
    for s in verts:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in view.neighbors(u):
                if w not in side:
                    side[w] = side[u] ^ 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return True
    return False


def chromatic_number(view, budget: SearchBudget | None = None) -> ChromaticResult:
    """Exact chromatic number of a view, each query decided by both engines.

    Binary search between a greedy upper bound and a cheap lower bound
    (2 with any edge, 3 with an odd cycle).  Every k queried runs both
    the sequence engine and branch-and-bound; disagreement between two
    conclusive answers raises, mixed conclusiveness uses the conclusive
    one.  The result carries a coloring at chi, the refutation record
    for chi - 1, and the full query log.
    """
    view = as_view(view)
    if budget is None:
        budget = SearchBudget()
    m = view.vertex_count()
    if m == 0:
        return ChromaticResult(0, True, VertexColoring({}, 0), None, [])

    greedy = greedy_coloring(view, budget)
    if greedy is None:
        return ChromaticResult(None, False, None, None,
                               [{"stage": "greedy", "decision": "inconclusive"}])
    ub = greedy.k if m else 0
    lb = 1
    if view.edge_count() > 0:
        lb = 2
        if m <= 20000 and _has_odd_cycle(view):
            lb = 3
    queries: list[dict] = []
    refutations: dict[int, dict] = {}
    yes_results: dict[int, ColorabilityResult] = {}

    def query(k: int) -> str:
        r1 = k_colorable_via_sequences(view.n_points, k, view, budget)
        r2 = k_colorable_bb(view, k, budget)
        queries.append(r1.query_record())
        queries.append(r2.query_record())
        if r1.conclusive and r2.conclusive and r1.decision != r2.decision:
            raise ConstructionError(f"engines disagree at k={k}: {r1.decision} vs {r2.decision}")
        winner = r1 if r1.conclusive else r2
        if not winner.conclusive:
            return "inconclusive"
        if winner.decision == "no":
            refutations[k] = winner.refutation_record()
        else:
            yes_results[k] = r1 if r1.decision == "yes" else r2
        return winner.decision

    while lb < ub:
        mid = (lb + ub) // 2
        d = query(mid)
        if d == "inconclusive":
            return ChromaticResult(None, False, None, None, queries)
        if d == "yes":
            ub = mid
        else:
            lb = mid + 1
    chi = lb

    if chi not in yes_results and chi > 0:
        d = query(chi)
        if d == "inconclusive":
            return ChromaticResult(None, False, None, None, queries)
        if d == "no":
            raise ConstructionError(f"{chi}-coloring exists greedily but search refutes it")
    if chi - 1 >= 0 and (chi - 1) not in refutations:
        d = query(chi - 1)
        if d == "inconclusive":
            return ChromaticResult(None, False, None, None, queries)
        if d == "yes":
            raise ConstructionError(f"binary search settled chi={chi} but {chi - 1} colors suffice")

    if chi in yes_results:
        res = yes_results[chi]
        coloring = res.certificate_coloring
    else:  # chi == 0, empty edge case handled above; keep greedy as a fallback
        coloring = greedy
    coloring = VertexColoring(dict(coloring.colors), chi)
    if proper_coloring_violation(coloring, view.vertex_list()) is not None:
        raise ConstructionError("final coloring certificate is improper")
    refutation = refutations.get(chi - 1)
    return ChromaticResult(chi, True, coloring, refutation, queries)
