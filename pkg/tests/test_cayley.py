import pytest

from cyclospec.cayley import (
    GeneratorSet,
    Graph,
    GroupParseError,
    GroupSpec,
    IntMatrix,
    cayley_graph,
    complement,
    complete_graph,
    cycle_graph,
    format_group,
    isomorphic_small,
    laplacian_of,
    parse_group,
    path_graph,
)


def test_group_basics():
    g = GroupSpec((2, 3))
    assert g.size == 6
    assert g.elements()[:3] == [(0, 0), (0, 1), (0, 2)]
    assert g.inverse((1, 1)) == (1, 2)
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(ValueError):
        GroupSpec((0,))


def test_z2_single_edge():
    g = cycle_graph(2)
    assert g.edges == {(0, 1)}
    assert laplacian_of(g).entries == ((1, -1), (-1, 1))


def test_z1_laplacian():
    assert laplacian_of(cycle_graph(1)).entries == ((0,),)


@pytest.mark.parametrize("n", range(3, 12))
def test_zn_is_cycle(n):
    g = cycle_graph(n)
    assert len(g.edges) == n
    assert set(g.degrees()) == {2}
    lap = laplacian_of(g)
    for i in range(n):
        assert lap[i, i] == 2
        assert lap[i, (i + 1) % n] == -1 and lap[i, (i - 1) % n] == -1


def test_four_cycle_laplacian():
    assert laplacian_of(cycle_graph(4)).entries == (
        (2, -1, 0, -1),
        (-1, 2, -1, 0),
        (0, -1, 2, -1),
        (-1, 0, -1, 2),
    )


def test_edgeless_laplacian():
    assert laplacian_of(Graph(3, frozenset())).entries == ((0,) * 3,) * 3


def test_z2xz2_is_four_cycle():
    g = cayley_graph(GroupSpec((2, 2)), GeneratorSet({(1, 0), (0, 1)}))
    assert len(g.edges) == 4 and set(g.degrees()) == {2}
    assert isomorphic_small(g, cycle_graph(4))


def test_identity_generator_rejected():
    with pytest.raises(ValueError):
        GeneratorSet({(0,)})
    with pytest.raises(ValueError):
        cayley_graph(GroupSpec((4,)), [(4,)])
    with pytest.raises(ValueError):
        cayley_graph(GroupSpec((4,)), GeneratorSet(set()))


def test_generator_override():
    g = cayley_graph(GroupSpec((6,)), GeneratorSet({(1,), (2,)}))
    assert set(g.degrees()) == {4}
    g = cayley_graph(GroupSpec((6,)), GeneratorSet({(3,)}))
    assert set(g.degrees()) == {1}


@pytest.mark.parametrize(
    "orders, gens",
    [((6,), None), ((2, 3), None), ((2, 2), None), ((8,), [(1,), (3,)]), ((3, 4), [(1, 1)]), ((5,), [(2,)])],
)
def test_laplacian_invariants(orders, gens):
    group = GroupSpec(orders)
    lap = laplacian_of(cayley_graph(group, gens))
    e = lap.entries
    assert lap.is_symmetric()
    assert all(sum(row) == 0 for row in e)
    assert len({e[i][i] for i in range(lap.n)}) == 1  # regular
    assert all(e[i][j] in (0, -1) for i in range(lap.n) for j in range(lap.n) if i != j)


def test_complement():
    c6 = cycle_graph(6)
    assert complement(complement(c6)) == c6
    cc = complement(c6)
    assert set(cc.degrees()) == {3}
    prism = cayley_graph(GroupSpec((2, 3)))
    assert isomorphic_small(cc, prism)
    assert complement(complete_graph(4)).edges == frozenset()


def test_isomorphism_examples():
    assert not isomorphic_small(cycle_graph(4), path_graph(4))
    assert not isomorphic_small(cycle_graph(6), cayley_graph(GroupSpec((2, 3))))
    # same degree sequence, different graphs: C6 vs two triangles
    triangles = Graph(6, frozenset({(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}))
    assert not isomorphic_small(cycle_graph(6), triangles)
    relabelled = Graph(5, frozenset({(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)}))
    assert isomorphic_small(cycle_graph(5), relabelled)


def test_isomorphism_size_limit():
    with pytest.raises(ValueError):
        isomorphic_small(cycle_graph(11), cycle_graph(11))
    assert isomorphic_small(cycle_graph(10), cycle_graph(10))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    assert Graph(3, frozenset({(2, 0)})).edges == {(0, 2)}


def test_intmatrix_square():
    with pytest.raises(ValueError):
        IntMatrix(((1, 2),))


@pytest.mark.parametrize(
    "text, orders, gens",
    [
        ("Z6", (6,), {(1,)}),
        ("Z2xZ3", (2, 3), {(1, 0), (0, 1)}),
        ("Z2xZ2", (2, 2), {(1, 0), (0, 1)}),
        ("Z6[1,2]", (6,), {(1,), (2,)}),
        ("Z2xZ3[(1,0);(0,1)]", (2, 3), {(1, 0), (0, 1)}),
        ("Z1", (1,), set()),
    ],
)
def test_parse_group(text, orders, gens):
    group, gset = parse_group(text)
    assert group.orders == orders
    assert set(gset) == gens


@pytest.mark.parametrize("text", ["Q6", "Z", "Z6[]", "Z6[0]", "Z2xZ3[(1,0,1)]", "Z2xZ3[1,0]", "Z0", "Z6[a]"])
def test_parse_group_errors(text):
    with pytest.raises(GroupParseError):
        parse_group(text)


def test_format_group_round_trip():
    for text in ["Z6", "Z2xZ3", "Z6[1,2]", "Z2xZ3[(1,1)]"]:
        assert format_group(*parse_group(text)) == text
