"""Exact solvers: gamma_tR (branch-and-bound and brute force), gamma_t, the
packing numbers, the max-2s tie-broken variant, and weight/2-count frontiers.

Budgets are wall-clock seconds; running out raises SolverTimeout with the
best certified bounds rather than returning an approximation. The environment
variable TRD_BUDGET_SECS sets the default budget.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import ConsistencyError, SizeLimitError, SolverTimeout
from .graph import (Graph, connected_components, induced_subgraph, mask_of,
                    require_no_isolated)
from .labeling import LabelFunction, VertexSet, is_total_roman_dominating

ORACLE_LIMIT = 12     # brute force scans 3^n labelings
SUBSET_LIMIT = 20     # subset enumeration for gamma_t / rho / rho_o
KERNEL_LIMIT = 64     # one uint64 adjacency word per vertex
BUDGET_ENV = "TRD_BUDGET_SECS"

_CHUNK = 1 << 20


def default_budget() -> float:
    return float(os.environ.get(BUDGET_ENV, "60"))


@dataclass(frozen=True)
class SolveResult:
    """Optimal invariant value plus a verified witness.

    method is one of brute_force, branch_and_bound, certificate. max_v2 is
    filled by the tie-broken solver variant that maximizes the 2-count.
    """

    invariant: str
    value: int
    witness: LabelFunction | VertexSet | None
    method: str
    tie_break_note: str = ""
    max_v2: int | None = None

    def to_json_dict(self) -> dict:
        out = {"invariant": self.invariant, "value": self.value, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        if self.tie_break_note:
            out["tie_break_note"] = self.tie_break_note
        if self.max_v2 is not None:
            out["max_v2"] = self.max_v2
        return out


@dataclass(frozen=True)
class ParetoPoint:
    """For one labeling weight, the largest 2-count any valid labeling of that weight reaches."""

    weight: int
    max_v2: int


class _SearchArrays:
    """numpy views of one graph plus mutable search state for the kernels."""

    def __init__(self, g: Graph, fixed: dict[int, int]):
        n = g.n
        deg = [g.degree(v) for v in range(n)]
        ptr = np.zeros(n + 1, dtype=np.int64)
        for v in range(n):
            ptr[v + 1] = ptr[v] + deg[v]
        idx = np.zeros(int(ptr[n]), dtype=np.int64)
        pos = 0
        for v in range(n):
            for u in g.neighbors(v):
                idx[pos] = u
                pos += 1
        self.nbr_ptr = ptr
        self.nbr_idx = idx
        self.adj_mask = np.array([np.uint64(m) for m in g.adj], dtype=np.uint64)
        self.bit = np.array([np.uint64(1 << v) for v in range(n)], dtype=np.uint64)
        self.labels = np.full(n, -1, dtype=np.int8)
        for v, lab in fixed.items():
            self.labels[v] = lab
        self.cnt2 = np.zeros(n, dtype=np.int32)
        self.cntpos = np.zeros(n, dtype=np.int32)
        self.cntun = np.zeros(n, dtype=np.int32)
        for v in range(n):
            for u in g.neighbors(v):
                lu = self.labels[u]
                if lu < 0:
                    self.cntun[v] += 1
                else:
                    if lu == 2:
                        self.cnt2[v] += 1
                    if lu >= 1:
                        self.cntpos[v] += 1
        free = [v for v in range(n) if v not in fixed]
        free.sort(key=lambda v: (-deg[v], v))
        self.order = np.array(free, dtype=np.int64)
        self.trial = np.zeros(len(free) + 1, dtype=np.int8)
        self.best_labels = np.full(n, -1, dtype=np.int8)
        self.init_weight = sum(fixed.values())
        self.init_v2 = sum(1 for lab in fixed.values() if lab == 2)
        self.init_dead = False
        for v, lab in fixed.items():
            if self.cntun[v] == 0:
                if lab == 0 and self.cnt2[v] == 0:
                    self.init_dead = True
                if lab >= 1 and self.cntpos[v] == 0:
                    self.init_dead = True

    def state(self, best: int, cap: int = 0, early: bool = False) -> np.ndarray:
        st = np.zeros(12, dtype=np.int64)
        st[0] = 0
        st[1] = self.init_weight
        st[2] = self.init_v2
        st[3] = best
        st[6] = len(self.order)
        st[8] = cap
        st[9] = 1 if early else 0
        return st

    def run(self, kernel, st: np.ndarray, deadline: float | None) -> int:
        while True:
            status = int(kernel(self.nbr_ptr, self.nbr_idx, self.adj_mask, self.bit,
                                self.labels, self.order, self.trial, self.cnt2,
                                self.cntpos, self.cntun, self.best_labels, st, _CHUNK))
            if status != _kernels.RUNNING:
                return status
            if deadline is not None and time.monotonic() >= deadline:
                raise SolverTimeout(
                    f"search budget exhausted after {int(st[4])} nodes",
                    nodes=int(st[4]))


def _deadline(budget: float | None) -> float | None:
    if budget is None:
        budget = default_budget()
    if budget <= 0:
        return None
    return time.monotonic() + budget


def _check_kernel_size(g: Graph, what: str) -> None:
    if g.n > KERNEL_LIMIT:
        raise SizeLimitError(f"{what} limited to {KERNEL_LIMIT} vertices, got {g.n}")


def trivial_lower_bound(g: Graph) -> int:
    """Cheap certified floor: gamma_tR >= gamma_t >= ceil(n/Delta), and >= 3 once n >= 3."""
    lb = -(-g.n // max(1, g.max_degree()))
    return max(lb, 3 if g.n >= 3 else 2)


def greedy_total_dominating_set(g: Graph) -> VertexSet:
    """Deterministic max-coverage greedy; used only to seed upper bounds."""
    require_no_isolated(g, "total domination")
    undominated = (1 << g.n) - 1
    members = 0
    while undominated:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            if members >> v & 1:
                continue
            gain = (g.adj[v] & undominated).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        members |= 1 << best_v
        undominated &= ~g.adj[best_v]
    return VertexSet(g, members, "total_dominating")


def _min_weight_search(g: Graph, fixed: dict[int, int], init_best: int,
                       early: bool, deadline: float | None):
    """Returns (found, best, labels_or_None, nodes); found means strictly below init_best."""
    arrs = _SearchArrays(g, fixed)
    if arrs.init_dead:
        return False, init_best, None, 0
    st = arrs.state(best=init_best, early=early)
    arrs.run(_kernels.bnb_min_weight, st, deadline)
    found = bool(st[7])
    labels = tuple(int(x) for x in arrs.best_labels) if found else None
    return found, int(st[3]), labels, int(st[4])


def _max_twos_search(g: Graph, fixed: dict[int, int], cap: int, init_best: int,
                     early: bool, deadline: float | None):
    """Max 2-count among valid labelings of weight exactly cap, over completions of fixed."""
    arrs = _SearchArrays(g, fixed)
    if arrs.init_dead:
        return False, init_best, None
    st = arrs.state(best=init_best, cap=cap, early=early)
    arrs.run(_kernels.bnb_max_twos, st, deadline)
    found = bool(st[7])
    labels = tuple(int(x) for x in arrs.best_labels) if found else None
    return found, int(st[3]), labels


def _lex_smallest(g: Graph, feasible, seed: tuple[int, ...] | None) -> tuple[int, ...]:
    """Fix labels vertex by vertex, smallest first, keeping a known completion as witness.

    feasible(fixed) must return (ok, completion); completions are reused so a
    vertex whose cheapest label matches the cached witness costs nothing.
    """
    fixed: dict[int, int] = {}
    witness = list(seed) if seed is not None else None
    for v in range(g.n):
        for lab in (0, 1, 2):
            if witness is not None:
                if witness[v] == lab:
                    fixed[v] = lab
                    break
                if witness[v] < lab:
                    raise ConsistencyError("witness cache out of sync")
            ok, completion = feasible({**fixed, v: lab})
            if ok:
                fixed[v] = lab
                witness = list(completion)
                break
        else:
            raise ConsistencyError("no completion under proven-achievable constraints")
    return tuple(fixed[v] for v in range(g.n))


def _brute_scan(g: Graph, limit: int):
    """Full 3^n scan; returns (best weight, lex-first witness, per-weight max-2-count table)."""
    require_no_isolated(g, "gamma_tR")
    if g.n > limit:
        raise SizeLimitError(f"brute force oracle limited to {limit} vertices, got {g.n}")
    arrs = _SearchArrays(g, {})
    digits = np.zeros(g.n, dtype=np.int8)
    table = np.full(2 * g.n + 1, -1, dtype=np.int64)
    st = np.zeros(6, dtype=np.int64)
    st[0] = 2 * g.n + 1
    while True:
        status = int(_kernels.brute_force_scan(arrs.adj_mask, arrs.bit, digits,
                                               arrs.best_labels, table, st, _CHUNK))
        if status == _kernels.DONE:
            break
    best = int(st[0])
    labels = tuple(int(x) for x in arrs.best_labels)
    return best, labels, [int(x) for x in table]


def gamma_tr_bruteforce(g: Graph, limit: int = ORACLE_LIMIT) -> SolveResult:
    """Independent oracle: exhaustive scan of all 3^n labelings."""
    best, labels, _ = _brute_scan(g, limit)
    witness = LabelFunction(g, labels)
    if not is_total_roman_dominating(witness) or witness.weight != best:
        raise ConsistencyError("brute force witness failed validation")
    return SolveResult("gamma_tR", best, witness, "brute_force",
                       tie_break_note="lexicographically smallest optimal labeling")


def _gamma_tr_value(g: Graph, deadline: float | None,
                    upper_bound_hint: int | None):
    """Optimal weight plus, when the search itself improved on the seeds, a witness."""
    greedy = greedy_total_dominating_set(g)
    seed_labels = tuple(2 if greedy.members >> v & 1 else 0 for v in range(g.n))
    ub = 2 * greedy.size
    if upper_bound_hint is not None and upper_bound_hint < ub:
        ub = upper_bound_hint
        seed_labels = None
    try:
        found, value, labels, _ = _min_weight_search(g, {}, ub, False, deadline)
    except SolverTimeout as exc:
        exc.upper_bound = ub
        exc.lower_bound = trivial_lower_bound(g)
        raise
    if found:
        return value, labels
    return ub, seed_labels


def _exact_connected(g: Graph, deadline: float | None,
                     upper_bound_hint: int | None):
    """Optimal weight and lexicographically smallest witness, one component."""
    _check_kernel_size(g, "gamma_tR branch-and-bound")
    value, seed = _gamma_tr_value(g, deadline, upper_bound_hint)

    def feasible(fixed):
        found, _, labels, _ = _min_weight_search(g, fixed, value + 1, True, deadline)
        return found, labels

    try:
        labels = _lex_smallest(g, feasible, seed)
    except SolverTimeout as exc:
        exc.upper_bound = value
        exc.lower_bound = value  # value itself is proven; only the witness was pending
        raise
    return value, labels


def _per_component(g: Graph, solver):
    """Run a per-component solver and stitch; the objective and the
    lexicographic tie-break both decompose over components because label
    choices in different components never interact."""
    total = 0
    twos = 0
    stitched = [0] * g.n
    comps = connected_components(g)
    for idx, comp in enumerate(comps):
        sub = induced_subgraph(g, comp)
        try:
            value, v2, labels = solver(sub)
        except SolverTimeout as exc:
            pending = sum(trivial_lower_bound(induced_subgraph(g, c))
                          for c in comps[idx + 1:])
            exc.lower_bound = total + (exc.lower_bound or 0) + pending
            exc.upper_bound = None
            raise
        total += value
        twos += v2
        for i, orig in enumerate(comp):
            stitched[orig] = labels[i]
    return total, twos, tuple(stitched)


def gamma_tr_exact(g: Graph, budget: float | None = None,
                   upper_bound_hint: int | None = None) -> SolveResult:
    """Provably optimal gamma_tR by branch-and-bound.

    Disconnected graphs are solved component by component (the invariant is
    additive). upper_bound_hint, when given, must be the weight of a labeling
    already verified valid (e.g. a certified construction); it only tightens
    pruning. The returned witness is the lexicographically smallest optimal
    labeling.
    """
    require_no_isolated(g, "gamma_tR")
    deadline = _deadline(budget)
    comps = connected_components(g)
    if len(comps) == 1:
        value, labels = _exact_connected(g, deadline, upper_bound_hint)
    else:
        def solver(sub):
            v, lab = _exact_connected(sub, deadline, None)
            return v, 0, lab
        value, _, labels = _per_component(g, solver)
    witness = LabelFunction(g, labels)
    if not is_total_roman_dominating(witness) or witness.weight != value:
        raise ConsistencyError("branch-and-bound witness failed validation")
    return SolveResult("gamma_tR", value, witness, "branch_and_bound",
                       tie_break_note="lexicographically smallest optimal labeling")


def _max_v2_connected(g: Graph, deadline: float | None,
                      upper_bound_hint: int | None):
    _check_kernel_size(g, "gamma_tR branch-and-bound")
    value, _ = _gamma_tr_value(g, deadline, upper_bound_hint)
    found, v2max, seed = _max_twos_search(g, {}, value, -1, False, deadline)
    if not found:
        raise ConsistencyError("no labeling found at the proven optimal weight")

    def feasible(fixed):
        ok, _, labels = _max_twos_search(g, fixed, value, v2max - 1, True, deadline)
        return ok, labels

    return value, v2max, _lex_smallest(g, feasible, seed)


def gamma_tr_max_v2(g: Graph, budget: float | None = None,
                    upper_bound_hint: int | None = None) -> SolveResult:
    """gamma_tR plus the secondary objective: most 2-labels among optimal labelings."""
    require_no_isolated(g, "gamma_tR")
    deadline = _deadline(budget)
    comps = connected_components(g)
    if len(comps) == 1:
        value, v2max, labels = _max_v2_connected(g, deadline, upper_bound_hint)
    else:
        value, v2max, labels = _per_component(
            g, lambda sub: _max_v2_connected(sub, deadline, None))
    witness = LabelFunction(g, labels)
    twos = sum(1 for l in labels if l == 2)
    if not is_total_roman_dominating(witness) or witness.weight != value or twos != v2max:
        raise ConsistencyError("max-2s witness failed validation")
    return SolveResult("gamma_tR", value, witness, "branch_and_bound",
                       tie_break_note="maximum 2-count, then lexicographically smallest",
                       max_v2=v2max)


def gamma_t_exact(g: Graph) -> SolveResult:
    """Smallest total dominating set by subset enumeration in increasing cardinality."""
    require_no_isolated(g, "total domination")
    if g.n > SUBSET_LIMIT:
        raise SizeLimitError(f"subset enumeration limited to {SUBSET_LIMIT} vertices, got {g.n}")
    for k in range(1, g.n + 1):
        for comb in combinations(range(g.n), k):
            mask = mask_of(comb)
            if all(g.adj[v] & mask for v in range(g.n)):
                return SolveResult("gamma_t", k,
                                   VertexSet(g, mask, "total_dominating"), "brute_force")
    raise ConsistencyError("no total dominating set despite no isolated vertices")


def rho_exact(g: Graph) -> SolveResult:
    """Largest packing (pairwise disjoint closed neighborhoods)."""
    if g.n > SUBSET_LIMIT:
        raise SizeLimitError(f"subset enumeration limited to {SUBSET_LIMIT} vertices, got {g.n}")
    if g.n == 0:
        return SolveResult("rho", 0, VertexSet(g, 0, "packing"), "brute_force")
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    dmin = min(g.degree(v) for v in range(g.n))
    for k in range(g.n // (dmin + 1), 0, -1):
        for comb in combinations(range(g.n), k):
            used = 0
            for v in comb:
                if used & closed[v]:
                    break
                used |= closed[v]
            else:
                return SolveResult("rho", k, VertexSet(g, mask_of(comb), "packing"),
                                   "brute_force")
    raise ConsistencyError("single vertices are always packings")


def _open_packings_of_size(g: Graph, k: int):
    for comb in combinations(range(g.n), k):
        used = 0
        for v in comb:
            if used & g.adj[v]:
                break
            used |= g.adj[v]
        else:
            yield mask_of(comb)


def rho_o_exact(g: Graph) -> SolveResult:
    """Largest open packing (pairwise disjoint open neighborhoods)."""
    if g.n > SUBSET_LIMIT:
        raise SizeLimitError(f"subset enumeration limited to {SUBSET_LIMIT} vertices, got {g.n}")
    if g.n == 0:
        return SolveResult("rho_o", 0, VertexSet(g, 0, "open_packing"), "brute_force")
    dmin = min(g.degree(v) for v in range(g.n))
    kmax = g.n if dmin == 0 else g.n // dmin
    for k in range(min(kmax, g.n), 0, -1):
        for mask in _open_packings_of_size(g, k):
            return SolveResult("rho_o", k, VertexSet(g, mask, "open_packing"),
                               "brute_force")
    raise ConsistencyError("single vertices are always open packings")


def maximum_open_packings(g: Graph) -> list[VertexSet]:
    """Every open packing of maximum size; small graphs only."""
    k = rho_o_exact(g).value
    return [VertexSet(g, mask, "open_packing") for mask in _open_packings_of_size(g, k)]


def rho_o_set_inducing_perfect_matching(g: Graph) -> VertexSet | None:
    """A maximum open packing whose induced subgraph is a disjoint union of single edges.

    The hypothesis is existential over maximum open packings, so all of them
    are searched.
    """
    for s in maximum_open_packings(g):
        if all((g.adj[v] & s.members).bit_count() == 1 for v in s.vertices()):
            return s
    return None


def trdf_with_weight_max_v2(g: Graph, weight: int,
                            budget: float | None = None) -> LabelFunction | None:
    """Some valid labeling of the exact given weight maximizing the 2-count, or None."""
    require_no_isolated(g, "gamma_tR")
    _check_kernel_size(g, "weight-constrained search")
    deadline = _deadline(budget)
    found, _, labels = _max_twos_search(g, {}, weight, -1, False, deadline)
    if not found:
        return None
    return LabelFunction(g, labels)


def trdf_pareto_frontier(g: Graph, weight_cap: int | None = None,
                         budget: float | None = None,
                         oracle_limit: int = ORACLE_LIMIT) -> list[ParetoPoint]:
    """For each achievable weight from gamma_tR up to the cap, the best 2-count.

    The default cap 2*gamma_t is always reachable (all-2 on a minimum total
    dominating set); pass a larger cap to explore further.
    """
    require_no_isolated(g, "gamma_tR")
    deadline = _deadline(budget)
    if weight_cap is None:
        weight_cap = 2 * gamma_t_exact(g).value
    if g.n <= oracle_limit:
        best, _, table = _brute_scan(g, oracle_limit)
        top = min(weight_cap, 2 * g.n)
        return [ParetoPoint(w, table[w]) for w in range(best, top + 1) if table[w] >= 0]
    _check_kernel_size(g, "weight-constrained search")
    value, _ = _gamma_tr_value(g, deadline, None)
    points = []
    for w in range(value, weight_cap + 1):
        found, v2max, _ = _max_twos_search(g, {}, w, -1, False, deadline)
        if found:
            points.append(ParetoPoint(w, v2max))
    return points
