"""Special-set machinery: embeddings, E*, deficiency, key inequality."""

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from linhyp.algebra import affine_residual, random_linear
from linhyp.catalog import DEFIC_WEIGHT, NAMES, SHAPES, order_class, special
from linhyp.core import Hypergraph, component_count
from linhyp.deficiency import (
    SpecialSet,
    check_key_theorem,
    check_lemma_specialset,
    defic_of_set,
    deficiency,
    enumerate_special_sets,
    estar,
    find_embeddings,
)
from linhyp.solver import tau


def bridged_host() -> Hypergraph:
    # two disjoint 4-edges joined by one bridging 4-edge
    return Hypergraph(10, [[0, 1, 2, 3], [4, 5, 6, 7], [0, 4, 8, 9]])


def brute_deficiency(host: Hypergraph) -> int:
    """Oracle: exhaustive enumeration over all subsets of candidate copies."""
    cands = []
    for kind in NAMES:
        cands.extend(find_embeddings(host, kind))
    assert len(cands) <= 14, "oracle reserved for small hosts"
    best = 0
    for r in range(len(cands) + 1):
        for sub in combinations(cands, r):
            taken: set[int] = set()
            ok = True
            for empl in sub:
                vs = set(empl.vertex_map)
                if taken & vs:
                    ok = False
                    break
                taken |= vs
            if not ok:
                continue
            best = max(best, defic_of_set(host, SpecialSet(tuple(sub))))
    return best


class TestFindEmbeddings:
    def test_h4_copies_in_h10(self):
        assert len(find_embeddings(special("H10"), "H4")) == 5

    def test_h10_in_itself(self):
        embs = find_embeddings(special("H10"), "H10")
        assert len(embs) == 1
        assert embs[0].edge_indices == (0, 1, 2, 3, 4)

    def test_residual_44_h4_copies(self):
        assert len(find_embeddings(affine_residual(4, 4), "H4")) == 3

    def test_h11_inside_h21(self):
        # the members formed by attaching an H_11 block carry a copy of it;
        # H21_5 is the one member assembled differently
        for i in (1, 2, 3, 4, 6):
            assert find_embeddings(special(f"H21_{i}"), "H11"), f"H21_{i}"
        assert not find_embeddings(special("H21_5"), "H11")

    def test_embedding_realizes_edges(self):
        host = special("H14_5")
        for emb in find_embeddings(host, "H4"):
            assert set(emb.vertex_map) == set(host.edges[emb.edge_indices[0]])

    def test_too_small_host(self):
        assert find_embeddings(special("H4"), "H10") == []


class TestEstar:
    def test_whole_hypergraph(self):
        h = special("H10")
        x = SpecialSet(tuple(find_embeddings(h, "H10")))
        assert estar(h, x) == frozenset()

    def test_bridge(self):
        h = bridged_host()
        embs = find_embeddings(h, "H4")
        disjoint = [e for e in embs if e.edge_indices[0] != 1]
        # edge 1 is the bridge after canonical sorting
        bridge = [e for e in embs if e not in disjoint]
        assert len(disjoint) == 2 and len(bridge) == 1
        x = SpecialSet(tuple(disjoint))
        assert estar(h, x) == frozenset({1})

    def test_incidence_count(self):
        h = special("H21_2")
        one = find_embeddings(h, "H4")[0]
        x = SpecialSet((one,))
        incident = {
            i
            for i, e in enumerate(h.edges)
            if i != one.edge_indices[0] and set(e) & set(one.vertex_map)
        }
        assert estar(h, x) == frozenset(incident)


class TestDeficOfSet:
    def test_empty(self):
        assert defic_of_set(special("H10"), SpecialSet(())) == 0

    def test_isolated_h4(self):
        h = Hypergraph(4, [[0, 1, 2, 3]])
        x = SpecialSet(tuple(find_embeddings(h, "H4")))
        assert defic_of_set(h, x) == 8

    def test_bridged(self):
        h = bridged_host()
        embs = [e for e in find_embeddings(h, "H4") if e.edge_indices[0] != 1]
        assert defic_of_set(h, SpecialSet(tuple(embs))) == 16 - 13


class TestDeficiency:
    @pytest.mark.parametrize("kind", NAMES)
    def test_catalog_values(self, kind):
        value, argmax = deficiency(special(kind))
        assert value == DEFIC_WEIGHT[order_class(kind)]
        assert len(argmax) == 1 and argmax.embeddings[0].kind == kind

    def test_bridged(self):
        value, argmax = deficiency(bridged_host())
        assert value == 3
        assert sorted(e.edge_indices[0] for e in argmax.embeddings) == [0, 2]

    def test_nonnegative_and_empty_admissible(self):
        h = affine_residual(4, 2)
        value, _ = deficiency(h)
        assert value >= 0

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_bruteforce_equivalence(self, seed):
        h = random_linear(14, 4, 3, 7, seed)
        cands = sum(len(find_embeddings(h, k)) for k in NAMES)
        if cands > 14:
            return
        assert deficiency(h)[0] == brute_deficiency(h)

    @pytest.mark.parametrize("kind", ["H4", "H10", "H11", "H14_5", "H21_2"])
    def test_standalone_identity(self, kind):
        h = special(kind)
        n, m, t = SHAPES[kind]
        assert deficiency(h)[0] == 45 * t - 6 * n - 13 * m

    def test_disjoint_union_adds_weights(self):
        # H_10 plus a far-away single edge: both pack with no E* charge
        h10 = special("H10")
        edges = list(h10.edges) + [(10, 11, 12, 13)]
        h = Hypergraph(14, edges)
        value, argmax = deficiency(h)
        assert value == 10 + 8
        assert sorted(e.kind for e in argmax.embeddings) == ["H10", "H4"]


class TestXTransversalSize:
    @pytest.mark.parametrize("kind", ["H4", "H10", "H11", "H14_3", "H21_4"])
    def test_matches_solver_on_member_union(self, kind):
        host = special(kind)
        x = SpecialSet(tuple(find_embeddings(host, kind)))
        # restrict to the packed edges and solve directly
        verts = sorted(x.vertex_set())
        rid = {v: i for i, v in enumerate(verts)}
        sub = Hypergraph(
            len(verts),
            [[rid[v] for v in host.edges[i]] for i in sorted(x.edge_set())],
        )
        assert tau(sub).tau == x.x_transversal_size()

    def test_two_component_union(self):
        h = Hypergraph(14, [[0, 1, 2, 3], [4, 5, 6, 7], [4, 8, 9, 10], [8, 11, 12, 13], [5, 8, 2, 12]])
        embs = find_embeddings(h, "H4")
        pick = [e for e in embs if e.edge_indices[0] in (0, 3)]
        x = SpecialSet(tuple(pick))
        assert x.x_transversal_size() == 2


class TestKeyTheorem:
    def test_h4_arithmetic(self):
        assert check_key_theorem(special("H4"))  # 45 <= 24 + 13 + 8

    def test_h10_equality(self):
        h = special("H10")
        value, _ = deficiency(h)
        assert 45 * 3 == 6 * 10 + 13 * 5 + value

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_random_instances(self, seed):
        h = random_linear(16, 4, 3, 9, seed)
        assert check_key_theorem(h)


class TestLemmaSpecialSet:
    def test_single_component_single_copy(self):
        h = Hypergraph(4, [[0, 1, 2, 3]])
        x = SpecialSet(tuple(find_embeddings(h, "H4")))
        assert check_lemma_specialset(h, x)

    def test_bridged(self):
        h = bridged_host()
        embs = [e for e in find_embeddings(h, "H4") if e.edge_indices[0] != 1]
        assert check_lemma_specialset(h, SpecialSet(tuple(embs)))

    @pytest.mark.parametrize("kind", NAMES)
    def test_all_visited_sets_on_catalog(self, kind):
        h = special(kind)
        for x in enumerate_special_sets(h):
            assert check_lemma_specialset(h, x)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=30, deadline=None)
    def test_visited_sets_on_random_hosts(self, seed):
        h = random_linear(14, 4, 3, 7, seed)
        c = component_count(h)
        for x in enumerate_special_sets(h):
            assert 3 * len(estar(h, x)) >= len(x) - c
