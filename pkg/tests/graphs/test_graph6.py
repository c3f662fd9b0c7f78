"""graph6 Tests"""

import networkx as nx
import pytest

from qextremal.graphs import (
    CharacterError, Graph, HeaderError, LengthError, TrailingDataError, from_networkx, graph6_decode, graph6_encode,
    make_complete, make_cycle, make_empty, make_path, make_split, make_star, random_graph, to_networkx,
)


def nx_graph6(G):
    return nx.to_graph6_bytes(pytest.to_networkx(G), header=False).rstrip(b"\n")


def test_known_strings():
    assert graph6_encode(make_complete(5)) == b"D~{"
    assert graph6_encode(make_path(3)) == b"Bg"
    assert graph6_encode(make_empty(1)) == b"@"
    assert graph6_encode(Graph(0)) == b"?"


def test_matches_networkx(rng):
    for n in (1, 2, 5, 13, 62, 63, 70):
        G = random_graph(n, 0.4, rng)
        assert graph6_encode(G) == nx_graph6(G)


def test_decode_networkx(rng):
    for n in (3, 17, 63):
        H = nx.gnp_random_graph(n, 0.3, seed=n)
        text = nx.to_graph6_bytes(H, header=False)
        assert graph6_decode(text) == pytest.from_networkx(H)


def test_long_form():
    G = make_split(100, 2)
    text = graph6_encode(G)

    assert text.startswith(b"~")
    assert not text.startswith(b"~~")
    assert graph6_decode(text) == G


def test_header_and_newline():
    assert graph6_decode(">>graph6<<D~{\n") == make_complete(5)
    assert graph6_decode(b"D~{") == make_complete(5)


def test_errors():
    with pytest.raises(HeaderError):
        graph6_decode("")

    with pytest.raises(HeaderError):
        graph6_decode("~?")

    with pytest.raises(CharacterError):
        graph6_decode("D~ {")

    with pytest.raises(CharacterError):
        graph6_decode("Dé")

    with pytest.raises(LengthError):
        graph6_decode("D~")

    with pytest.raises(TrailingDataError):
        graph6_decode("D~{?")

    with pytest.raises(TrailingDataError):
        graph6_decode("D~~")


def test_constructions_round_trip(corpus):
    graphs = [G for _, G in corpus if G.n <= 30]
    for n in range(1, 31):
        graphs.extend((make_empty(n), make_complete(n), make_path(n), make_star(n)))
        if n >= 3:
            graphs.append(make_cycle(n))
        graphs.extend(make_split(n, k) for k in (1, 2, 3) if n > k)

    for G in graphs:
        text = graph6_encode(G)
        assert graph6_decode(text) == G
        assert text == nx_graph6(G)


def test_networkx_conversion(rng):
    G = random_graph(9, 0.5, rng)
    H = to_networkx(G)

    assert sorted(H.nodes()) == list(range(9))
    assert H.number_of_edges() == G.edge_count
    assert from_networkx(H) == G
