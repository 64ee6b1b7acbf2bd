import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cptdim.drawings import DrawingDescriptor, uniform
from cptdim.errors import InvalidTreeError
from cptdim.instances import random_tree
from cptdim.permutations import Permutation
from cptdim.tree import LEVELWISE, PREORDER, Tree, load_tree, root_at, root_at_center

from conftest import ancestors_brute, bfs_path_vertices, full_tree, incomparable_brute


def path_tree(n):
    return Tree(n, [(i, i + 1) for i in range(1, n)])


def star(leaves):
    return Tree(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def rand_rooted(n, seed):
    return root_at_center(random_tree(n, random.Random(seed)))


class TestLoad:
    def test_two_nodes(self):
        t = load_tree(2, [(1, 2)])
        assert t.n == 2 and t.edges == [(1, 2)]

    def test_small_tree_centers(self):
        t = load_tree(4, [(1, 2), (1, 3), (3, 4)])
        assert t.centers() == [1, 3]
        assert max(t.degree(v) for v in range(1, 5)) == 2
        rt = root_at_center(t)
        assert rt.root == 1 and rt.radius == 2 and rt.maxdeg == 2

    def test_cycle_rejected(self):
        with pytest.raises(InvalidTreeError):
            load_tree(3, [(1, 2), (2, 3), (1, 3)])

    @pytest.mark.parametrize("edges", [[(1, 2), (1, 2)], [(1, 1)], [(1, 5)], [(1, 2), (3, 4), (1, 2)]])
    def test_malformed_rejected(self, edges):
        with pytest.raises(InvalidTreeError):
            load_tree(4, edges)

    def test_disconnected_rejected(self):
        # right edge count, but a cycle leaves node 4 unreachable
        with pytest.raises(InvalidTreeError):
            load_tree(4, [(1, 2), (2, 3), (3, 1)])

    def test_single_node(self):
        rt = root_at_center(load_tree(1, []))
        assert rt.root == 1 and rt.radius == 0 and rt.leafcount == 0


class TestCenter:
    def test_path3(self):
        rt = root_at_center(path_tree(3))
        assert (rt.root, rt.radius) == (2, 1)

    def test_star(self):
        rt = root_at_center(star(5))
        assert (rt.root, rt.radius, rt.maxdeg, rt.leafcount) == (1, 1, 5, 5)

    def test_path4_takes_lower_center(self):
        rt = root_at_center(path_tree(4))
        assert (rt.root, rt.radius) == (2, 2)

    @pytest.mark.parametrize("seed", range(15))
    def test_radius_is_min_eccentricity(self, seed):
        t = random_tree(25, random.Random(seed))
        ecc = {}
        for v in range(1, 26):
            ecc[v] = max(root_at(t, v).level[1:])
        rt = root_at_center(t)
        assert rt.radius == min(ecc.values()) == ecc[rt.root]
        assert rt.root == min(v for v in ecc if ecc[v] == rt.radius)
        diameter = max(ecc.values())
        assert rt.radius == (diameter + 1) // 2


class TestStructure:
    @pytest.mark.parametrize("seed", range(10))
    def test_parent_children_levels_consistent(self, seed):
        rt = rand_rooted(30, seed)
        assert rt.level[rt.root] == 0
        for v in rt.nodes:
            assert list(rt.children[v]) == sorted(rt.children[v])
            for c in rt.children[v]:
                assert rt.parent[c] == v
                assert rt.level[c] == rt.level[v] + 1
                assert 1 <= rt.child_index(c) <= rt.maxdeg
        assert rt.branching <= rt.maxdeg

    def test_full_tree_parameters(self):
        rt = full_tree(3, 2)
        assert (rt.n, rt.root, rt.radius, rt.maxdeg, rt.branching, rt.leafcount) == (13, 1, 2, 4, 3, 9)


class TestLca:
    def test_examples(self):
        rt = full_tree(2, 2)
        assert rt.lca(5, 5) == 5 and not rt.is_incomparable(5, 5)
        assert all(not rt.is_incomparable(rt.root, v) for v in rt.nodes)
        assert rt.is_incomparable(2, 3)

    @pytest.mark.parametrize("seed", range(5))
    def test_against_ancestor_sets(self, seed):
        rt = rand_rooted(25, seed)
        for u, v in itertools.product(rt.nodes, repeat=2):
            common = (ancestors_brute(rt, u) | {u}) & (ancestors_brute(rt, v) | {v})
            assert rt.lca(u, v) == max(common, key=lambda w: rt.level[w])
            assert rt.is_incomparable(u, v) == incomparable_brute(rt, u, v)


class TestPaths:
    def test_single_vertex(self):
        rt = root_at_center(path_tree(4))
        p = rt.path(3, 3)
        assert p.length == 1 and p.top == 3
        assert rt.path_contains(p, p)

    def test_path_tree_containment(self):
        rt = root_at_center(path_tree(4))
        assert rt.path_contains(rt.path(1, 3), rt.path(2, 3))
        assert not rt.path_contains(rt.path(2, 3), rt.path(1, 3))

    def test_star_paths_not_nested(self):
        rt = root_at_center(star(3))
        assert not rt.path_contains(rt.path(2, 3), rt.path(2, 4))

    @pytest.mark.parametrize("seed", range(6))
    def test_against_vertex_sets(self, seed):
        n = 12 + 3 * seed
        rt = rand_rooted(n, seed)
        pairs = list(itertools.combinations_with_replacement(rt.nodes, 2))
        sets = {pq: bfs_path_vertices(rt, *pq) for pq in pairs}
        for (a, b), s in sets.items():
            p = rt.path(a, b)
            assert p.length == len(s)
            assert set(rt.path_vertices(p)) == s
            assert p.top == min(s, key=lambda w: rt.level[w])
            for w in rt.nodes:
                assert rt.on_path(p, w) == (w in s)
                # distance form of the membership test
                assert (rt.dist(a, w) + rt.dist(w, b) == rt.dist(a, b)) == (w in s)
        for pa, pb in itertools.product(pairs[::3], pairs[::2]):
            assert rt.path_contains(rt.path(*pa), rt.path(*pb)) == (sets[pb] <= sets[pa])


class TestTraversals:
    def test_single_node(self):
        rt = root_at_center(load_tree(1, []))
        assert rt.preorder().position[1] == 1
        assert rt.levelwise.order == (1,)

    def test_path3_preorder(self):
        rt = root_at_center(path_tree(3))
        assert rt.preorder(uniform((1, 2))).order == (2, 1, 3)
        assert rt.preorder().kind == PREORDER

    def test_levelwise_full_binary(self):
        rt = full_tree(2, 1)
        assert rt.levelwise.order == (2, 3, 1)
        assert rt.levelwise.kind == LEVELWISE

    def test_levelwise_within_level_order(self):
        rt = full_tree(2, 2)
        assert rt.levelwise.order == (4, 5, 6, 7, 2, 3, 1)

    @pytest.mark.parametrize("seed", range(8))
    def test_ancestor_order(self, seed):
        rt = rand_rooted(40, seed)
        pre = rt.preorder(DrawingDescriptor(Permutation(tuple(range(rt.branching, 0, -1)))))
        lw = rt.levelwise
        for v in rt.nodes:
            for a in ancestors_brute(rt, v):
                assert pre.position[a] < pre.position[v]
                assert lw.position[a] > lw.position[v]

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 10**6), n=st.integers(2, 20))
    def test_mirror_reverses_incomparable_pairs(self, seed, n):
        rng = random.Random(seed)
        rt = root_at_center(random_tree(n, rng))
        b = max(rt.branching, 2)
        base = list(range(1, b + 1))
        rng.shuffle(base)
        d = DrawingDescriptor(Permutation(tuple(base)), rng.choice([None, 1, 2]))
        p1, p2 = rt.preorder(d).position, rt.preorder(d.mirror()).position
        for u, v in itertools.combinations(rt.nodes, 2):
            if rt.is_incomparable(u, v):
                assert (p1[u] < p1[v]) != (p2[u] < p2[v])
