import json

import pytest
from hypothesis import given

from hyperconf import cli
from hyperconf.dual_conformality import Certificate, CertificateKind, verify_certificate
from hyperconf.generators import FIXTURES, c5, gurvich_makino, random_hypergraph
from hyperconf.hypergraph import Hypergraph
from hyperconf.io import ParseError, emit_graph, emit_hg, parse_graph, parse_hg

from .strategies import graphs, hypergraphs
from .test_graph import P3


def test_parse_hg_examples():
    assert parse_hg(b"p hg 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n") == c5()
    h = parse_hg("p hg 1 1\ne 1\n")
    assert h.n == 1 and h.edges == ((0,),)


@pytest.mark.parametrize("text,line,msg", [
    ("p hg 2 1\ne 1 3\n", 2, "id 3 out of range"),
    ("p hg 2\ne 1\n", 1, "malformed header"),
    ("# c\np hg 2 2\ne 1\n", None, "declares 2 edges"),
    ("p hg 2 2\ne 1\ne 1\n", 3, "duplicate hyperedge"),
    ("p hg 2 1\ne 1 1\n", 2, "repeated vertex"),
    ("p hg 2 1\ne\n", 2, "empty hyperedge"),
    ("e 1\n", 1, "before header"),
    ("p hg 2 1\nx 1\n", 2, "unknown line"),
    ("p hg 2 1\ne a\n", 2, "integers"),
])
def test_parse_hg_errors(text, line, msg):
    with pytest.raises(ParseError, match=msg) as info:
        parse_hg(text)
    assert info.value.line == line


def test_parse_graph():
    g = parse_graph("c path\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g == P3
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("p edge 3 2\ne 1 2\ne 2 1\n")
    with pytest.raises(ParseError, match="loop"):
        parse_graph("p edge 3 1\ne 2 2\n")


@given(hypergraphs(max_n=9, max_m=10))
def test_hg_round_trip(h):
    text = emit_hg(h)
    assert parse_hg(text) == h
    assert emit_hg(parse_hg(text)) == text


@given(graphs(max_n=9))
def test_graph_round_trip(g):
    text = emit_graph(g)
    assert parse_graph(text) == g
    assert emit_graph(parse_graph(text)) == text


def test_comments_anywhere():
    assert parse_hg("# a\np hg 2 1\n# b\ne 1 2\n# c\n").edges == ((0, 1),)


# -- generators --------------------------------------------------------------

def test_fixture_edge_lists():
    def one(h):
        return [tuple(v + 1 for v in e) for e in h.edges]
    assert one(FIXTURES["c5"]()) == [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    assert one(FIXTURES["ex33"]()) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6), (4, 5, 6)]
    assert one(FIXTURES["ex34"]()) == [(1, 2), (1, 3), (2, 3)]
    assert one(FIXTURES["ex35"]()) == [(1, 4, 5), (1, 4, 6), (2, 4, 5), (2, 5, 6),
                                       (3, 4, 6), (3, 5, 6), (4, 5, 6)]


def test_random_hypergraph():
    a = random_hypergraph(5, 5, 2, 1)
    assert a == random_hypergraph(5, 5, 2, 1)
    assert a.m == 5 and a.dimension() <= 2 and len(set(a.edges)) == 5
    with pytest.raises(ValueError):
        random_hypergraph(3, 7, 2, 0)
    with pytest.raises(ValueError):
        random_hypergraph(3, 2, 4, 0)
    h = random_hypergraph(6, 7, 3, 7)
    assert h.m == 7 and h.dimension() <= 3
    dense = random_hypergraph(4, 10, 2, 3)
    assert dense.m == 10


def test_random_hypergraph_is_frozen():
    # pinned output: the generator must stay stable across platforms and releases
    assert random_hypergraph(6, 4, 3, 0).edges == ((0, 3), (3, 4), (2, 3), (1, 4))


def test_gm_shape():
    h = gurvich_makino(2, 3, 2)
    assert (h.n, h.m) == (9, 9) and h.is_uniform(2)
    with pytest.raises(ValueError):
        gurvich_makino(3, 3, 1)


# -- command line --------------------------------------------------------------

@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, make in FIXTURES.items():
        p = tmp_path / f"{name}.hg"
        p.write_text(emit_hg(make()))
        paths[name] = str(p)
    p = tmp_path / "p3.graph"
    p.write_text(emit_graph(P3))
    paths["p3"] = str(p)
    return paths


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_dual_conformal_text(files, capsys):
    code, out, _ = run(capsys, "dual-conformal", files["ex33"])
    assert code == 0
    assert out.startswith("NO")
    assert "certificate: maximal clique {1 2 3} misses hyperedge {4 5 6}" in out


def test_cli_json_replays(files, capsys):
    for name in FIXTURES:
        for path in ("auto", "general", "dim-k"):
            code, out, _ = run(capsys, "dual-conformal", files[name], "--json", "--path", path)
            rec = json.loads(out)
            assert set(rec) >= {"verdict", "path", "certificate", "timings"}
            c = rec["certificate"]
            cert = Certificate(CertificateKind(c["kind"]), tuple(v - 1 for v in c["clique"]),
                               None if c["vertex"] is None else c["vertex"] - 1)
            assert rec["verdict"] == "NO"
            assert verify_certificate(FIXTURES[name](), None, cert)


def test_cli_quiet_exit_codes(files, capsys):
    assert run(capsys, "uct", files["p3"], "-k", "2", "--quiet") == (0, "", "")
    assert run(capsys, "uct", files["p3"], "-k", "3", "--quiet")[0] == 1
    assert run(capsys, "dual-conformal", files["ex34"], "--quiet")[0] == 1
    assert run(capsys, "conformal", files["c5"], "--quiet")[0] == 0
    assert run(capsys, "conformal", "/nonexistent.hg", "--quiet") == (2, "", "")
    assert run(capsys, "bogus")[0] == 2


def test_cli_parse_error_has_line(tmp_path, capsys):
    p = tmp_path / "bad.hg"
    p.write_text("p hg 2 1\ne 1 3\n")
    code, _, err = run(capsys, "dual", str(p))
    assert code == 2 and "line 2" in err and "id 3 out of range" in err


def test_cli_gen_matches_fixtures(capsys):
    for name, make in FIXTURES.items():
        code, out, _ = run(capsys, "gen", name)
        assert code == 0 and parse_hg(out) == make()


def test_cli_gen_gm_then_dual(tmp_path, capsys):
    _, out, _ = run(capsys, "gen", "gm", "2", "3", "2")
    p = tmp_path / "gm.hg"
    p.write_text(out)
    _, out, _ = run(capsys, "dual", str(p))
    assert parse_hg(out).dimension() == 4


def test_cli_misc(files, capsys):
    code, out, _ = run(capsys, "subtransversal", files["c5"], "-S", "1,2")
    assert code == 0 and out.startswith("YES") and "uncovered union {3 5}" in out
    assert run(capsys, "subtransversal", files["c5"], "-S", "1,2,3,4,5", "-q")[0] == 1
    assert run(capsys, "transversal", files["c5"], "-S", "1,2,4", "--minimal", "-q")[0] == 0
    assert run(capsys, "transversal", files["c5"], "-S", "1,2", "-q")[0] == 1
    _, out, _ = run(capsys, "dual-cooccurrence", files["ex35"])
    assert parse_graph(out).num_edges == 12
    _, out, _ = run(capsys, "conformal", files["ex34"])
    assert "pairwise intersections cover {1 2 3}" in out
    assert run(capsys, "cdc", files["p3"], "-q")[0] == 0
    assert run(capsys, "gen", "random", "3", "7", "2", "1")[0] == 2


def test_cli_parallel_output_identical(tmp_path, capsys):
    h = random_hypergraph(12, 20, 3, 5)
    p = tmp_path / "r.hg"
    p.write_text(emit_hg(h))
    for cmd in (["dual-cooccurrence"], ["dual-conformal", "--path", "dim3"]):
        _, a, _ = run(capsys, *cmd, str(p))
        _, b, _ = run(capsys, *cmd, str(p), "--parallel")
        assert a == b


def test_cli_guard(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("HYPERCONF_GUARD", raising=False)
    p = tmp_path / "big.hg"
    p.write_text(emit_hg(Hypergraph(21, [(v,) for v in range(21)])))
    code, _, err = run(capsys, "dual", str(p))
    assert code == 2 and "guard" in err
    assert run(capsys, "dual", str(p), "--force")[0] == 0
