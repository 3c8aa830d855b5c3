import random
from itertools import permutations

import pytest

from mismax import (
    canonical_form,
    complement,
    complete_graph,
    count_isomorphism_classes,
    disjoint_union,
    empty_graph,
    is_isomorphic,
    permute,
)
from mismax.canon import graph_from_triangle_mask, triangle_mask
from mismax.extremal import build_turan

from conftest import cycle_graph, path_graph, random_graph


def brute_force_min_mask(g):
    return min(
        triangle_mask(permute(g, list(p))) for p in permutations(range(g.n))
    )


def test_reversed_path_same_form():
    p4 = path_graph(4)
    assert canonical_form(p4) == canonical_form(permute(p4, [3, 2, 1, 0]))


def test_c4_differs_from_p4():
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))


def test_remark_correspondence_k2_plus_k3():
    h = disjoint_union(complete_graph(2), complete_graph(3))
    assert canonical_form(h) == canonical_form(complement(build_turan(5, 2)))


def test_c5_self_complementary():
    c5 = cycle_graph(5)
    assert is_isomorphic(c5, complement(c5))


def test_two_triangles_not_k33():
    h = disjoint_union(complete_graph(3), complete_graph(3))
    assert not is_isomorphic(h, build_turan(6, 2))


def test_random_relabeling_isomorphic():
    rng = random.Random(99)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 8), 0.5)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert is_isomorphic(g, permute(g, perm))


def test_relabeling_invariance_100_pairs():
    rng = random.Random(4242)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.5, 0.8]))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(permute(g, perm)) == canonical_form(g)


def test_key_is_true_minimum_over_all_permutations():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6), 0.5)
        assert canonical_form(g).key == brute_force_min_mask(g)


def test_is_isomorphic_agrees_with_permutation_oracle():
    rng = random.Random(17)
    suite = [random_graph(rng, 5, p) for p in (0.3, 0.5, 0.5, 0.7) for _ in range(4)]
    for g1 in suite:
        for g2 in suite:
            oracle = any(
                permute(g1, list(p)) == g2 for p in permutations(range(5))
            )
            assert is_isomorphic(g1, g2) == oracle


def test_canonical_form_roundtrip_graph():
    g = cycle_graph(5)
    cf = canonical_form(g)
    assert is_isomorphic(cf.to_graph(), g)
    assert canonical_form(cf.to_graph()) == cf


def test_triangle_mask_roundtrip():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randint(0, 9), 0.5)
        assert graph_from_triangle_mask(g.n, triangle_mask(g)) == g


def test_order_ceiling():
    with pytest.raises(ValueError):
        canonical_form(empty_graph(11))
    with pytest.raises(ValueError):
        is_isomorphic(empty_graph(11), empty_graph(11))


def test_isomorphism_class_counts_small():
    assert [count_isomorphism_classes(n) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_class_count_order_ceiling():
    with pytest.raises(ValueError):
        count_isomorphism_classes(8)


def test_symmetric_graphs_fast_paths():
    # twin pruning keeps highly symmetric graphs cheap
    assert canonical_form(empty_graph(10)).key == 0
    full = complete_graph(10)
    assert canonical_form(full).key == (1 << 45) - 1
    h = disjoint_union(complete_graph(5), complete_graph(5))
    assert canonical_form(h) == canonical_form(permute(h, [9, 8, 7, 6, 5, 4, 3, 2, 1, 0]))
