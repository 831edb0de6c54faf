"""Special sub-hypergraph packings and the deficiency functional.

A copy of a catalog entry inside a host is edge-induced: a set of host edges
together with exactly their union of vertices, isomorphic to the entry.
Host vertices may carry additional external edges; those land in E*(X).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional

from .catalog import DEFIC_WEIGHT, NAMES, TAU_OF_CLASS, order_class, special
from .core import Hypergraph, HypergraphError, component_count, is_linear
from .solver import GuardExceeded


@dataclass(frozen=True)
class Embedding:
    """One catalog copy in a host: catalog vertex i sits at vertex_map[i]."""

    kind: str
    vertex_map: tuple[int, ...]
    edge_indices: tuple[int, ...]  # host edge index realizing each catalog edge

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertex_map)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_indices)


@dataclass(frozen=True)
class SpecialSet:
    """Pairwise vertex-disjoint catalog copies in a common host."""

    embeddings: tuple[Embedding, ...]

    def __post_init__(self):
        taken: set[int] = set()
        for emb in self.embeddings:
            vs = emb.vertex_set()
            if taken & vs:
                raise HypergraphError("embeddings must be pairwise vertex-disjoint")
            taken |= vs

    def __len__(self) -> int:
        return len(self.embeddings)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for e in self.embeddings for v in e.vertex_map)

    def edge_set(self) -> frozenset[int]:
        return frozenset(i for e in self.embeddings for i in e.edge_indices)

    def partition_counts(self) -> dict[int, int]:
        """Weak-partition sizes keyed by order class {4, 10, 11, 14, 21}."""
        counts = {4: 0, 10: 0, 11: 0, 14: 0, 21: 0}
        for emb in self.embeddings:
            counts[order_class(emb.kind)] += 1
        return counts

    def x_transversal_size(self) -> int:
        """Minimum size of a set hitting every edge of every member copy."""
        return sum(
            TAU_OF_CLASS[order_class(emb.kind)] for emb in self.embeddings
        )

    def footprint(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_set()))


EMPTY_SET = SpecialSet(())


def find_embeddings(host: Hypergraph, kind: str) -> list[Embedding]:
    """All edge-induced copies of a catalog entry, one per edge-index set."""
    pattern = special(kind)
    if host.n < pattern.n or host.m < pattern.m:
        return []
    if kind == "H4":
        # every single edge is a copy
        return [
            Embedding("H4", tuple(e), (i,)) for i, e in enumerate(host.edges)
        ]
    host_deg = host.degrees()
    pat_deg = pattern.degrees()
    # order pattern edges so each one touches the previously mapped region
    order = [0]
    seen = set(pattern.edges[0])
    remaining = set(range(1, pattern.m))
    while remaining:
        nxt = min(i for i in remaining if seen & set(pattern.edges[i]))
        order.append(nxt)
        seen |= set(pattern.edges[nxt])
        remaining.discard(nxt)

    found: dict[frozenset[int], Embedding] = {}
    vmap: dict[int, int] = {}
    used_host_vertices: set[int] = set()
    used_edges: list[int] = []

    def extend(step: int) -> None:
        if step == len(order):
            key = frozenset(used_edges)
            if key not in found:
                full_map = tuple(vmap[v] for v in range(pattern.n))
                order_to_cat = {order[i]: used_edges[i] for i in range(len(order))}
                eidx = tuple(order_to_cat[i] for i in range(pattern.m))
                found[key] = Embedding(kind, full_map, eidx)
            return
        pe = pattern.edges[order[step]]
        mapped = [v for v in pe if v in vmap]
        free = [v for v in pe if v not in vmap]
        must_contain = {vmap[v] for v in mapped}
        for hi, he in enumerate(host.edges):
            if hi in used_edges or len(he) != len(pe):
                continue
            hset = set(he)
            if not must_contain <= hset:
                continue
            slots = sorted(hset - must_contain)
            if len(slots) != len(free):
                continue
            if any(s in used_host_vertices for s in slots):
                continue
            for perm in permutations(slots):
                if any(host_deg[w] < pat_deg[v] for v, w in zip(free, perm)):
                    continue
                for v, w in zip(free, perm):
                    vmap[v] = w
                    used_host_vertices.add(w)
                used_edges.append(hi)
                extend(step + 1)
                used_edges.pop()
                for v, w in zip(free, perm):
                    del vmap[v]
                    used_host_vertices.discard(w)

    extend(0)
    return sorted(found.values(), key=lambda e: e.edge_indices)


def estar(host: Hypergraph, x: SpecialSet) -> frozenset[int]:
    """Host edge indices outside the packing that intersect its vertices."""
    vs = x.vertex_set()
    es = x.edge_set()
    return frozenset(
        i for i, e in enumerate(host.edges) if i not in es and vs & set(e)
    )


def defic_of_set(host: Hypergraph, x: SpecialSet) -> int:
    """10|X_10| + 8|X_4| + 5|X_14| + 4|X_11| + |X_21| - 13|E*(X)|."""
    counts = x.partition_counts()
    weight = sum(DEFIC_WEIGHT[cls] * cnt for cls, cnt in counts.items())
    return weight - 13 * len(estar(host, x))


def estar_bipartite_graph(host: Hypergraph, x: SpecialSet):
    """The bipartite graph pairing packed copies with the E*(X) edges.

    Left side: one vertex per member of the packing (in order).  Right side:
    one vertex per E*(X) edge (ascending edge index).  An edge joins them
    when the external edge intersects that copy.  Matchings here decide
    whether every external edge can be charged to a distinct copy.
    """
    from .core import Graph

    ext = sorted(estar(host, x))
    k = len(x.embeddings)
    pairs = []
    for j, ei in enumerate(ext):
        everts = set(host.edges[ei])
        for i, emb in enumerate(x.embeddings):
            if everts & set(emb.vertex_map):
                pairs.append((i, k + j))
    return Graph(k + len(ext), pairs, bipartition=(range(k), range(k, k + len(ext))))


def _candidate_embeddings(host: Hypergraph) -> list[Embedding]:
    # kinds in descending deficiency contribution tighten bounds early
    kind_order = sorted(
        NAMES, key=lambda k: (-DEFIC_WEIGHT[order_class(k)], k)
    )
    out: list[Embedding] = []
    for kind in kind_order:
        out.extend(find_embeddings(host, kind))
    return out


def deficiency(
    host: Hypergraph,
    guard_n: int = 30,
    visitor: Optional[Callable[[SpecialSet], None]] = None,
) -> tuple[int, SpecialSet]:
    """Exact maximum of defic over all special H-sets, with an argmax.

    Branch and bound over disjoint embedding selections.  The bound adds the
    weights of still-compatible candidates and charges 13 for every edge
    already touching the packing that no remaining candidate can absorb.
    Ties on the value break toward the lexicographically least edge-index
    footprint.  The value is never below 0 (the empty set is admissible).
    If given, ``visitor`` is called on every special set the search forms.
    """
    if host.n > guard_n:
        raise GuardExceeded(f"n={host.n} exceeds deficiency guard {guard_n}")
    if not is_linear(host):
        raise HypergraphError("deficiency is defined over linear hosts here")

    cands = _candidate_embeddings(host)
    vmasks = []
    for emb in cands:
        m = 0
        for v in emb.vertex_map:
            m |= 1 << v
        vmasks.append(m)
    weights = [DEFIC_WEIGHT[order_class(emb.kind)] for emb in cands]
    edge_sets = [emb.edge_set() for emb in cands]
    edge_vmask = []
    for e in host.edges:
        m = 0
        for v in e:
            m |= 1 << v
        edge_vmask.append(m)

    best_value = 0
    best_set = EMPTY_SET
    if visitor:
        visitor(EMPTY_SET)

    def dfs(idx: int, chosen: list[int], vmask: int) -> None:
        nonlocal best_value, best_set
        ss = SpecialSet(tuple(cands[i] for i in chosen))
        value = defic_of_set(host, ss)
        if visitor:
            visitor(ss)
        if value > best_value or (
            value == best_value and ss.footprint() < best_set.footprint()
        ):
            best_value, best_set = value, ss
        compatible = [j for j in range(idx, len(cands)) if not vmasks[j] & vmask]
        if not compatible:
            return
        chosen_edges: set[int] = set()
        for i in chosen:
            chosen_edges |= edge_sets[i]
        absorbable: set[int] = set()
        for j in compatible:
            absorbable |= edge_sets[j]
        definite_estar = sum(
            1
            for ei in range(host.m)
            if ei not in chosen_edges
            and ei not in absorbable
            and edge_vmask[ei] & vmask
        )
        w_chosen = sum(weights[i] for i in chosen)
        ub = w_chosen + sum(weights[j] for j in compatible) - 13 * definite_estar
        if ub < best_value:
            return
        for j in compatible:
            dfs(j + 1, chosen + [j], vmask | vmasks[j])

    dfs(0, [], 0)
    return best_value, best_set


def enumerate_special_sets(
    host: Hypergraph, guard_n: int = 30
) -> list[SpecialSet]:
    """Every special set the deficiency search visits (including empty)."""
    seen: list[SpecialSet] = []
    keys: set[tuple] = set()

    def visit(ss: SpecialSet) -> None:
        key = tuple(sorted((e.kind, e.edge_indices) for e in ss.embeddings))
        if key not in keys:
            keys.add(key)
            seen.append(ss)

    deficiency(host, guard_n=guard_n, visitor=visit)
    return seen


def check_key_theorem(host: Hypergraph) -> bool:
    """45 tau(H) <= 6 n(H) + 13 m(H) + defic(H) for 4-uniform linear, max deg 3."""
    from .core import is_k_uniform
    from .solver import tau

    if not is_k_uniform(host, 4):
        raise HypergraphError("key theorem needs a 4-uniform hypergraph")
    if not is_linear(host):
        raise HypergraphError("key theorem needs a linear hypergraph")
    if host.max_degree() > 3:
        raise HypergraphError("key theorem needs maximum degree <= 3")
    t = tau(host).tau
    value, _ = deficiency(host)
    return 45 * t <= 6 * host.n + 13 * host.m + value


def check_lemma_specialset(host: Hypergraph, x: SpecialSet) -> bool:
    """3 |E*(X)| >= |X| - c(H)."""
    return 3 * len(estar(host, x)) >= len(x) - component_count(host)
