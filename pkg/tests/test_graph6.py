import io
from pathlib import Path

import pytest

from edds.graph import enumerate_graphs, gen_family, isolated_vertices, new_graph
from edds.graph6 import (
    Graph6Error,
    load_corpus,
    parse_graph6,
    read_graph6_lines,
    to_graph6,
    write_graph6_lines,
)

CORPUS = Path(__file__).resolve().parents[1] / "resources" / "corpora" / "isolated_pairs.g6"


@pytest.mark.parametrize(
    "text, graph",
    [
        ("Bw", gen_family("complete", 3)),
        ("Bg", gen_family("path", 3)),
        ("Cl", gen_family("cycle", 4)),
        ("DhC", gen_family("path", 5)),
        ("@", new_graph(1)),
        ("C_", new_graph(4, [(0, 1)])),
    ],
)
def test_known_encodings(text, graph):
    assert parse_graph6(text) == graph
    assert to_graph6(graph) == text


def test_header_and_whitespace_are_ignored():
    assert parse_graph6(">>graph6<<Bw\n") == gen_family("complete", 3)


@pytest.mark.parametrize("text", ["", "B w", "~?@", "D", "Bw\x7f"])
def test_malformed_lines_raise(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def _packed_graph6(graph):
    """Reference short-form encoder: upper triangle by columns, six bits per character."""

    bits = [int(graph.has_edge(i, j)) for j in range(1, graph.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [bits[k:k + 6] for k in range(0, len(bits), 6)]
    body = "".join(chr(63 + int("".join(map(str, chunk)), 2)) for chunk in chunks)
    return chr(63 + graph.n) + body


@pytest.mark.parametrize(
    "graph, text",
    [
        (gen_family("complete", 3), "Bw"),
        (gen_family("path", 3), "Bg"),
        (gen_family("cycle", 4), "Cl"),
        (gen_family("path", 5), "DhC"),
        (new_graph(4, [(2, 3)]), "C@"),
    ],
)
def test_reference_packer_reproduces_known_encodings(graph, text):
    assert _packed_graph6(graph) == text


def test_encoding_matches_bit_packing_on_small_graphs():
    for n in range(1, 5):
        for graph in enumerate_graphs(n):
            expected = _packed_graph6(graph)
            assert to_graph6(graph) == expected
            assert parse_graph6(expected) == graph


@pytest.mark.slow
def test_round_trip_over_every_graph_up_to_six_vertices():
    for n in range(1, 7):
        for graph in enumerate_graphs(n):
            text = to_graph6(graph)
            assert text == _packed_graph6(graph)
            assert parse_graph6(text) == graph


def test_read_lines_reports_line_number():
    lines = io.StringIO("Bw\n\nB!\n")

    with pytest.raises(Graph6Error, match="line 3"):
        list(read_graph6_lines(lines))


def test_write_and_load_corpus(tmp_path):
    path = tmp_path / "corpus.g6"
    graphs = [gen_family("path", n) for n in range(1, 6)]
    with path.open("w", encoding="ascii") as stream:
        assert write_graph6_lines(graphs, stream) == 5

    assert load_corpus(path) == graphs


def test_sample_corpus_has_two_isolated_vertices_everywhere():
    graphs = load_corpus(CORPUS)
    assert len(graphs) == 6
    assert all(len(isolated_vertices(graph)) >= 2 for graph in graphs)
