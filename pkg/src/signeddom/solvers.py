"""Exact solvers with certificates for signed domination and related parameters.

Two routes compute the signed domination number: a transparent oracle that
enumerates all 2^n sign vectors, and a pruned branch-and-bound. Both return
the minimum weight together with a witnessing sign assignment, and among all
optimal assignments they return the lexicographically smallest one (comparing
per-vertex values with -1 < +1). The subset solvers (domination, k-tuple
domination, k-limited packing, packing) run iterative deepening over the
cardinality with pruned depth-first enumeration in ascending index order, so
their witnesses are the lexicographically least optimal sets.

A sign assignment f is feasible iff every closed neighborhood sums to at
least 1, i.e. |N[v] ∩ V+| >= deg(v) + 1 - floor(deg(v)/2) for every v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, mask_of

ORACLE_CAP = 20
BNB_CAP = 40
SUBSET_CAP = 40

ROLE_DOMINATING = "dominating"
ROLE_TUPLE_DOMINATING = "tuple_dominating"
ROLE_LIMITED_PACKING = "limited_packing"
ROLE_PACKING = "packing"


class SizeCapError(ValueError):
    """Input exceeds the configured solver size cap."""


@dataclass(frozen=True)
class SignedFunction:
    """A +/-1 vertex labeling; the candidate or optimal signed dominating function."""

    assignment: tuple

    def __post_init__(self):
        if any(a not in (-1, 1) for a in self.assignment):
            raise ValueError("assignment values must be -1 or +1")

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def weight(self) -> int:
        return sum(self.assignment)

    @property
    def plus_mask(self) -> int:
        return mask_of(v for v, a in enumerate(self.assignment) if a == 1)

    @property
    def minus_mask(self) -> int:
        return mask_of(v for v, a in enumerate(self.assignment) if a == -1)

    @property
    def plus_set(self) -> frozenset:
        return frozenset(v for v, a in enumerate(self.assignment) if a == 1)

    @property
    def minus_set(self) -> frozenset:
        return frozenset(v for v, a in enumerate(self.assignment) if a == -1)

    @classmethod
    def from_minus_set(cls, n: int, minus) -> "SignedFunction":
        minus = set(minus)
        return cls(tuple(-1 if v in minus else 1 for v in range(n)))

    def __str__(self):
        return "".join("+" if a == 1 else "-" for a in self.assignment)


@dataclass(frozen=True)
class VertexSet:
    """A vertex subset certificate with the role it claims to play."""

    members: frozenset
    role: str
    k: int = 1

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def sorted_members(self):
        return tuple(sorted(self.members))


def verify_sdf(g: Graph, f: SignedFunction) -> list:
    """Vertices whose closed neighborhood sums below 1; empty iff f is valid."""
    if f.n != g.n:
        raise ValueError(f"assignment length {f.n} != vertex count {g.n}")
    plus = f.plus_mask
    out = []
    for v in range(g.n):
        if 2 * (g.closed[v] & plus).bit_count() - (g.deg[v] + 1) < 1:
            out.append(v)
    return out


def vertex_set_violations(g: Graph, vs: VertexSet) -> list:
    """Vertices violating the role invariant of ``vs``; empty iff valid."""
    mask = vs.mask
    if mask & ~g.full_mask:
        raise ValueError("member index outside graph")
    out = []
    if vs.role == ROLE_DOMINATING:
        for v in range(g.n):
            if not (mask >> v & 1) and not (g.adj[v] & mask):
                out.append(v)
    elif vs.role == ROLE_TUPLE_DOMINATING:
        for v in range(g.n):
            if (g.closed[v] & mask).bit_count() < vs.k:
                out.append(v)
    elif vs.role == ROLE_LIMITED_PACKING:
        for v in range(g.n):
            if (g.closed[v] & mask).bit_count() > vs.k:
                out.append(v)
    elif vs.role == ROLE_PACKING:
        # Pairwise-disjoint closed neighborhoods <=> no vertex sees 2 members.
        for v in range(g.n):
            if (g.closed[v] & mask).bit_count() > 1:
                out.append(v)
    else:
        raise ValueError(f"unknown vertex-set role {vs.role!r}")
    return out


@dataclass(frozen=True)
class PartitionStats:
    """Edge and parity statistics of the sign partition induced by an assignment."""

    e_plus: int
    e_minus: int
    cut: int
    odd_plus: frozenset
    odd_minus: frozenset
    even_plus: frozenset
    even_minus: frozenset
    deg_plus: tuple
    deg_minus: tuple


def partition_stats(g: Graph, f: SignedFunction) -> PartitionStats:
    """Count edges inside each sign class and across the cut, split parities."""
    if f.n != g.n:
        raise ValueError(f"assignment length {f.n} != vertex count {g.n}")
    plus = f.plus_mask
    minus = f.minus_mask
    deg_plus = tuple((g.adj[v] & plus).bit_count() for v in range(g.n))
    deg_minus = tuple((g.adj[v] & minus).bit_count() for v in range(g.n))
    e_plus = sum(deg_plus[v] for v in bits(plus)) // 2
    e_minus = sum(deg_minus[v] for v in bits(minus)) // 2
    cut = sum(deg_minus[v] for v in bits(plus))
    odd = frozenset(v for v in range(g.n) if g.deg[v] % 2 == 1)
    even = frozenset(range(g.n)) - odd
    return PartitionStats(
        e_plus=e_plus,
        e_minus=e_minus,
        cut=cut,
        odd_plus=odd & f.plus_set,
        odd_minus=odd & f.minus_set,
        even_plus=even & f.plus_set,
        even_minus=even & f.minus_set,
        deg_plus=deg_plus,
        deg_minus=deg_minus,
    )


# -- signed domination --------------------------------------------------------


def forced_plus_mask(g: Graph) -> int:
    """Isolated vertices, leaves, and supports: +1 in every valid assignment.

    A degree-0 or degree-1 closed neighborhood sums to at least 1 only when all
    of its (at most two) vertices are +1.
    """
    mask = 0
    leaf_mask = 0
    for v in range(g.n):
        if g.deg[v] <= 1:
            mask |= 1 << v
            if g.deg[v] == 1:
                leaf_mask |= 1 << v
    for v in range(g.n):
        if g.adj[v] & leaf_mask:
            mask |= 1 << v
    return mask


def signed_domination(
    g: Graph,
    mode: str = "branch_and_bound",
    oracle_cap: int = ORACLE_CAP,
    bnb_cap: int = BNB_CAP,
):
    """Minimum-weight valid sign assignment, with its witness.

    Fast path: when every vertex is isolated, a leaf, or a support, those
    vertices are pinned to +1 by validity, so the optimum is n with the all-+1
    witness. Otherwise dispatches on ``mode`` ("oracle" enumerates all 2^n
    assignments; "branch_and_bound" searches with pruning). Both modes return
    the lexicographically smallest optimal assignment (-1 < +1 per index).
    """
    n = g.n
    pinned = forced_plus_mask(g)
    if pinned == g.full_mask:
        return n, SignedFunction(tuple([1] * n))
    if mode == "oracle":
        if n > oracle_cap:
            raise SizeCapError(f"oracle mode capped at n <= {oracle_cap}, got {n}")
        return _sdf_oracle(g)
    if mode in ("branch_and_bound", "bnb"):
        if n > bnb_cap:
            raise SizeCapError(f"branch-and-bound capped at n <= {bnb_cap}, got {n}")
        return _sdf_branch_and_bound(g, pinned)
    raise ValueError(f"unknown mode {mode!r}")


def _plus_need(g: Graph):
    # Minimum |N[v] & V+| for validity at v.
    return [g.deg[v] + 1 - g.deg[v] // 2 for v in range(g.n)]


def _sdf_oracle(g: Graph):
    """Exhaustive sweep of all 2^n sign vectors; transparent reference route."""
    n = g.n
    closed = g.closed
    need = _plus_need(g)
    # Checking high-requirement vertices first makes invalid vectors fail early.
    order = sorted(range(n), key=lambda v: (-need[v], v))
    best_minus = -1
    best_plus_mask = 0
    best_key = None
    for p in range(1 << n):
        ok = True
        for v in order:
            if (closed[v] & p).bit_count() < need[v]:
                ok = False
                break
        if not ok:
            continue
        b = n - p.bit_count()
        if b > best_minus:
            best_minus = b
            best_plus_mask = p
            best_key = None
        elif b == best_minus:
            if best_key is None:
                best_key = _lex_key(best_plus_mask, n)
            key = _lex_key(p, n)
            if key < best_key:
                best_plus_mask = p
                best_key = key
    assignment = tuple(1 if p_bit else -1 for p_bit in _lex_key(best_plus_mask, n))
    return n - 2 * best_minus, SignedFunction(assignment)


def _lex_key(plus_mask: int, n: int):
    # Per-index bits with 0 for -1 and 1 for +1: tuple order == assignment order.
    return tuple(plus_mask >> i & 1 for i in range(n))


def _sdf_branch_and_bound(g: Graph, pinned: int):
    """Two-stage search: find the optimum, then rebuild the lex-least witness.

    Stage 1 branches on free vertices in descending-degree order, -1 before +1.
    slack[v] is the largest value f(N[v]) can still reach (assigned values plus
    one per unassigned vertex); a node dies when some slack drops below 1 or
    when even turning every unforced free vertex to -1 cannot beat the
    incumbent. Stage 2 repeats the search in ascending index order bounded to
    the known optimum and keeps the first completion it reaches.
    """
    n = g.n
    closed = g.closed
    free = [v for v in range(n) if not (pinned >> v & 1)]
    order = sorted(free, key=lambda v: (-g.deg[v], v))
    slack = [g.deg[v] + 1 for v in range(n)]
    best = {"weight": n}

    def search(pos: int, minus_count: int):
        if pos == len(order):
            weight = n - 2 * minus_count
            if weight < best["weight"]:
                best["weight"] = weight
            return
        tight = mask_of(v for v in range(n) if slack[v] <= 2)
        forced = sum(1 for i in range(pos, len(order)) if closed[order[i]] & tight)
        r = len(order) - pos
        partial = (n - r) - 2 * minus_count
        if partial + 2 * forced - r >= best["weight"]:
            return
        v = order[pos]
        if not (closed[v] & tight):
            feasible = True
            for u in bits(closed[v]):
                slack[u] -= 2
                if slack[u] < 1:
                    feasible = False
            if feasible:
                search(pos + 1, minus_count + 1)
            for u in bits(closed[v]):
                slack[u] += 2
        search(pos + 1, minus_count)

    search(0, 0)
    optimum = best["weight"]
    if optimum == n:
        return n, SignedFunction(tuple([1] * n))

    lex_order = sorted(free)
    witness = {}

    def rebuild(pos: int, minus_count: int, minus_mask: int) -> bool:
        r = len(lex_order) - pos
        weight_now = (n - r) - 2 * minus_count
        if weight_now + r < optimum:
            return False
        tight = mask_of(v for v in range(n) if slack[v] <= 2)
        forced = sum(1 for i in range(pos, len(lex_order)) if closed[lex_order[i]] & tight)
        if weight_now + 2 * forced - r > optimum:
            return False
        if pos == len(lex_order):
            witness["minus"] = minus_mask
            return True
        v = lex_order[pos]
        if not (closed[v] & tight):
            feasible = True
            for u in bits(closed[v]):
                slack[u] -= 2
                if slack[u] < 1:
                    feasible = False
            if feasible and rebuild(pos + 1, minus_count + 1, minus_mask | (1 << v)):
                for u in bits(closed[v]):
                    slack[u] += 2
                return True
            for u in bits(closed[v]):
                slack[u] += 2
        return rebuild(pos + 1, minus_count, minus_mask)

    found = rebuild(0, 0, 0)
    assert found, "optimum value has no witness; search inconsistency"
    minus = witness["minus"]
    assignment = tuple(-1 if minus >> v & 1 else 1 for v in range(n))
    return optimum, SignedFunction(assignment)


# -- subset solvers ------------------------------------------------------------


def domination_number(g: Graph, cap: int = SUBSET_CAP):
    """Minimum dominating set; isolated vertices are necessarily members."""
    size, members = _min_tuple_dominating(g, 1, cap)
    return size, VertexSet(frozenset(members), ROLE_DOMINATING)


def tuple_domination_number(g: Graph, k: int, cap: int = SUBSET_CAP):
    """Minimum k-tuple dominating set; requires 1 <= k <= delta + 1."""
    delta = min(g.deg) if g.n else 0
    if not 1 <= k <= delta + 1:
        raise ValueError(f"k must satisfy 1 <= k <= delta+1 = {delta + 1}, got {k}")
    size, members = _min_tuple_dominating(g, k, cap)
    return size, VertexSet(frozenset(members), ROLE_TUPLE_DOMINATING, k)


def limited_packing_number(g: Graph, k: int, cap: int = SUBSET_CAP):
    """Maximum k-limited packing; requires k >= 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    size, members = _max_limited_packing(g, k, cap)
    return size, VertexSet(frozenset(members), ROLE_LIMITED_PACKING, k)


def packing_number(g: Graph, cap: int = SUBSET_CAP):
    """Maximum packing (pairwise-disjoint closed neighborhoods); equals L_1."""
    size, members = _max_limited_packing(g, 1, cap)
    return size, VertexSet(frozenset(members), ROLE_PACKING)


def greedy_limited_packing_mask(g: Graph, k: int) -> int:
    """Ascending-index maximal k-limited packing; cheap lower-bound seed."""
    load = [0] * g.n
    mask = 0
    for v in range(g.n):
        if all(load[u] < k for u in bits(g.closed[v])):
            mask |= 1 << v
            for u in bits(g.closed[v]):
                load[u] += 1
    return mask


def _min_tuple_dominating(g: Graph, k: int, cap: int):
    n = g.n
    if n > cap:
        raise SizeCapError(f"subset solvers capped at n <= {cap}, got {n}")
    if n == 0:
        return 0, ()
    closed = g.closed
    Delta = max(g.deg)

    # Greedy upper seed: repeatedly add the vertex covering the most unmet demand.
    cover = [0] * n
    greedy_mask = 0
    greedy_size = 0
    while any(cover[v] < k for v in range(n)):
        best_v, best_gain = -1, -1
        for v in range(n):
            if greedy_mask >> v & 1:
                continue
            gain = sum(1 for u in bits(closed[v]) if cover[u] < k)
            if gain > best_gain:
                best_v, best_gain = v, gain
        greedy_mask |= 1 << best_v
        greedy_size += 1
        for u in bits(closed[best_v]):
            cover[u] += 1

    lower = max(k, -(-k * n // (Delta + 1)))
    cover = [0] * n
    chosen = []

    def feasible(start: int, slots: int) -> bool:
        rem = g.full_mask >> start << start
        for v in range(n):
            d = k - cover[v]
            if d > 0 and (d > slots or (closed[v] & rem).bit_count() < d):
                return False
        return True

    def dfs(start: int, slots: int) -> bool:
        if slots == 0:
            return all(cover[v] >= k for v in range(n))
        if not feasible(start, slots):
            return False
        for v in range(start, n - slots + 1):
            chosen.append(v)
            for u in bits(closed[v]):
                cover[u] += 1
            if dfs(v + 1, slots - 1):
                return True
            for u in bits(closed[v]):
                cover[u] -= 1
            chosen.pop()
        return False

    for size in range(lower, greedy_size + 1):
        if dfs(0, size):
            return size, tuple(chosen)
    raise AssertionError("greedy seed was feasible; deepening must succeed")


def _max_limited_packing(g: Graph, k: int, cap: int):
    n = g.n
    if n > cap:
        raise SizeCapError(f"subset solvers capped at n <= {cap}, got {n}")
    if n == 0:
        return 0, ()
    delta = min(g.deg)
    Delta = max(g.deg)
    if Delta + 1 <= k:
        return n, tuple(range(n))

    lower = greedy_limited_packing_mask(g, k).bit_count()
    upper = min(n, k * n // (delta + 1))
    load = [0] * n
    chosen = []

    def dfs(start: int, slots: int) -> bool:
        if slots == 0:
            return True
        if n - start < slots:
            return False
        for v in range(start, n - slots + 1):
            if all(load[u] < k for u in bits(g.closed[v])):
                chosen.append(v)
                for u in bits(g.closed[v]):
                    load[u] += 1
                if dfs(v + 1, slots - 1):
                    return True
                for u in bits(g.closed[v]):
                    load[u] -= 1
                chosen.pop()
        return False

    for size in range(upper, lower - 1, -1):
        if dfs(0, size):
            return size, tuple(chosen)
    raise AssertionError("greedy seed exists; descending scan must succeed")
