import itertools
from math import comb

import pytest

from ramseylab import (
    Coloring,
    Hypergraph,
    ParseError,
    complete_hypergraph,
    find_loose_path,
    find_mono_loose_path,
    full_star,
    is_full_star,
    is_star,
    parse_coloring,
    serialize_coloring,
    star_clique_coloring,
)
from conftest import oracle_has_loose_path, random_hypergraph


def test_find_loose_path_complete_host():
    host = complete_hypergraph(7, 3)
    w = find_loose_path(host, 3)
    assert w is not None and w.verify(host)
    # first witness in canonical edge-triple order
    assert w.edges == ((0, 1, 2), (0, 3, 4), (3, 5, 6))
    assert w.links == (0, 3)


def test_find_loose_path_too_few_vertices():
    assert find_loose_path(complete_hypergraph(6, 3), 3) is None


def test_find_loose_path_star_host():
    assert find_loose_path(full_star(10, 3, 0), 3) is None


def test_find_loose_path_length_two():
    host = Hypergraph(3, 6, [(0, 1, 2), (0, 3, 4)])
    w = find_loose_path(host, 2)
    assert w is not None and w.verify(host) and w.links == (0,)
    assert find_loose_path(Hypergraph(3, 6, [(0, 1, 2)]), 2) is None


def test_find_loose_path_invalid_length():
    with pytest.raises(ValueError):
        find_loose_path(complete_hypergraph(5, 2), 4)


def test_completeness_on_complete_hosts():
    for k in (2, 3, 4):
        for n in range(k, 3 * k + 1):
            host = complete_hypergraph(n, k)
            assert (find_loose_path(host, 3) is not None) == (n >= 3 * k - 2)
            assert (find_loose_path(host, 2) is not None) == (n >= 2 * k - 1)


def test_soundness_against_oracle(rng):
    for _ in range(150):
        k = rng.randint(2, 4)
        n = rng.randint(k, 8)
        h = random_hypergraph(rng, n, k, density=rng.choice([0.2, 0.4, 0.7]))
        for length in (2, 3):
            witness = find_loose_path(h, length)
            assert (witness is not None) == oracle_has_loose_path(h, length)
            if witness is not None:
                assert witness.verify(h)


def test_soundness_exhaustive_tiny():
    # every graph on 4 vertices and every 3-graph on 5 vertices
    for n, k in [(4, 2), (5, 3)]:
        population = list(itertools.combinations(range(n), k))
        for bits in range(2 ** len(population)):
            h = Hypergraph(k, n, [e for i, e in enumerate(population) if (bits >> i) & 1])
            for length in (2, 3):
                assert (find_loose_path(h, length) is not None) == oracle_has_loose_path(
                    h, length
                )


def test_determinism():
    h = complete_hypergraph(8, 3)
    assert find_loose_path(h, 3) == find_loose_path(h, 3)


def test_witness_verify_rejects_foreign_edges():
    host = complete_hypergraph(7, 3)
    w = find_loose_path(host, 3)
    smaller = Hypergraph(3, 7, [(0, 1, 2)])
    assert not w.verify(smaller)


def test_is_star_examples():
    assert is_star(Hypergraph(3, 5, [(0, 1, 2), (0, 3, 4)])) == 0
    assert is_star(Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])) is None
    assert is_star(Hypergraph(3, 4, [(0, 1, 2)])) == 0  # smallest of the edge
    assert is_star(Hypergraph(3, 4)) == 0  # edgeless convention


def test_is_full_star():
    assert is_full_star(full_star(6, 3, 2))
    assert not is_full_star(Hypergraph(3, 6, [(0, 1, 2), (0, 3, 4)]))
    assert not is_full_star(Hypergraph(3, 6))


def test_stars_never_contain_length_three(rng):
    for _ in range(20):
        n, k = rng.randint(5, 10), rng.randint(2, 4)
        if k > n:
            continue
        center = rng.randrange(n)
        rest = [v for v in range(n) if v != center]
        all_edges = [tuple(sorted((center,) + c)) for c in itertools.combinations(rest, k - 1)]
        sub = [e for e in all_edges if rng.random() < 0.6]
        assert find_loose_path(Hypergraph(k, n, sub), 3) is None


def test_mono_loose_path_star_clique_free():
    assert find_mono_loose_path(star_clique_coloring(3, 2), 3) is None


def test_mono_loose_path_single_color():
    n = 7
    coloring = Coloring(3, n, 1, {e: 1 for e in itertools.combinations(range(n), 3)})
    found = find_mono_loose_path(coloring, 3)
    assert found is not None
    color, witness = found
    assert color == 1 and witness.verify(complete_hypergraph(n, 3))


def test_every_two_coloring_of_k5_has_mono_path():
    edges = list(itertools.combinations(range(5), 2))
    for bits in range(2 ** len(edges)):
        assignment = {e: 1 + ((bits >> i) & 1) for i, e in enumerate(edges)}
        coloring = Coloring(2, 5, 2, assignment)
        assert find_mono_loose_path(coloring, 3) is not None


def test_coloring_validation():
    edges = list(itertools.combinations(range(4), 2))
    with pytest.raises(ValueError):
        Coloring(2, 4, 2, {e: 1 for e in edges[:-1]})  # not total
    with pytest.raises(ValueError):
        Coloring(2, 4, 2, {e: 3 for e in edges})  # color out of range


def test_coloring_round_trip():
    coloring = star_clique_coloring(3, 3)
    text = serialize_coloring(coloring)
    assert parse_coloring(text) == coloring
    assert serialize_coloring(parse_coloring(text)) == text


def test_coloring_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_coloring("2 4 5 2\n")  # m != C(4,2)
    assert err.value.line == 1
    text = "2 3 3 2\n0 1 1\n0 2 1\n0 2 2\n"
    with pytest.raises(ParseError) as err:
        parse_coloring(text)  # duplicate edge
    assert err.value.line == 4
    with pytest.raises(ParseError) as err:
        parse_coloring("2 3 3 2\n0 1 9\n0 2 1\n1 2 1\n")  # color out of range
    assert err.value.line == 2


def test_color_class_partitions_complete():
    coloring = star_clique_coloring(3, 3)
    total = sum(len(coloring.color_class(c)) for c in range(1, 4))
    assert total == comb(coloring.n, coloring.k)
