import random

import pytest

from cbgraph.cli import main
from cbgraph.formats import (
    GraphFormatError,
    load_graph,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from cbgraph.generators import cycle_graph, random_graph
from cbgraph.hypergraph import Hypergraph

C6_TEXT = "6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"
C4_TEXT = "4 4\n1 2\n2 3\n3 4\n4 1\n"
K3_TEXT = "3 3\n1 2\n2 3\n1 3\n"


class TestParseGraph:
    def test_round_trip(self):
        rng = random.Random(97)
        for _ in range(30):
            g = random_graph(rng.randint(0, 9), 0.5, rng)
            assert parse_graph(serialize_graph(g)) == g

    def test_comments_and_blanks(self):
        text = "# a graph\n\n  3 1  \n# edge next\n1 2\n\n"
        g = parse_graph(text)
        assert g.n == 3 and g.m == 1

    def test_rejects(self):
        bad = [
            "",  # no header
            "# only comments\n",
            "3\n",  # header too short
            "3 1 7\n1 2\n",  # header too long
            "x y\n",  # header not integers
            "-1 0\n",  # negative n
            "3 -1\n",  # negative m
            "3 2\n1 2\n",  # fewer edge lines than m
            "3 1\n1 2\n2 3\n",  # more edge lines than m
            "3 1\n1\n",  # edge line too short
            "3 1\n1 2 3\n",  # edge line too long
            "3 1\n1 b\n",  # edge not integers
            "3 1\n1 4\n",  # endpoint out of range
            "3 1\n2 2\n",  # self-loop
            "3 2\n1 2\n2 1\n",  # duplicate edge
        ]
        for text in bad:
            with pytest.raises(GraphFormatError):
                parse_graph(text)

    def test_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_graph("nope\n")


class TestParseHypergraph:
    def test_basic(self):
        h = parse_hypergraph("a b\nb c\n")
        assert h.edges == (frozenset({"a", "b"}), frozenset({"b", "c"}))

    def test_duplicate_warns_and_collapses(self):
        warnings_seen = []
        h = parse_hypergraph("a b\nb a\n", on_warning=warnings_seen.append)
        assert len(h.edges) == 1
        assert len(warnings_seen) == 1
        assert "duplicate" in warnings_seen[0]

    def test_round_trip(self):
        h = Hypergraph([("a", "b"), ("b", "c", "d")])
        assert parse_hypergraph(serialize_hypergraph(h)) == h

    def test_comments(self):
        h = parse_hypergraph("# hg\na b\n\n# next\nc\n")
        assert len(h.edges) == 2


@pytest.fixture
def write(tmp_path):
    counter = [0]

    def _write(text: str) -> str:
        counter[0] += 1
        p = tmp_path / f"in{counter[0]}.txt"
        p.write_text(text)
        return str(p)

    return _write


class TestCliEnumerate:
    def test_c6_lines(self, write, capsys):
        rc = main(["enumerate", write(C6_TEXT)])
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert rc == 0
        assert len(lines) == 63
        assert "" in lines  # the empty solution
        assert sorted(lines) == sorted(set(lines))

    def test_count_only(self, write, capsys):
        rc = main(["enumerate", "--count-only", write(C6_TEXT)])
        assert rc == 0
        assert capsys.readouterr().out == "63\n"

    def test_no_empty(self, write, capsys):
        rc = main(["enumerate", "--no-empty", write(C4_TEXT)])
        lines = capsys.readouterr().out.splitlines()
        assert rc == 0 and len(lines) == 15 and "" not in lines

    def test_limit_note(self, write, capsys):
        rc = main(["enumerate", "--limit", "5", write(C6_TEXT)])
        cap = capsys.readouterr()
        assert rc == 0
        assert len(cap.out.splitlines()) == 5
        assert "limit of 5 solutions reached" in cap.err

    def test_stats_line(self, write, capsys):
        rc = main(["enumerate", "--stats", "--count-only", write(C4_TEXT)])
        cap = capsys.readouterr()
        assert rc == 0
        assert cap.out == "16\n"
        assert "solutions=16" in cap.err and "max_waste=" in cap.err

    def test_ranking_flag(self, write, capsys):
        for ranking in ("natural", "degeneracy"):
            rc = main(["enumerate", "--count-only", "--ranking", ranking, write(C6_TEXT)])
            assert rc == 0
            assert capsys.readouterr().out == "63\n"

    def test_empty_graph(self, write, capsys):
        rc = main(["enumerate", write("0 0\n")])
        assert rc == 0
        assert capsys.readouterr().out == "\n"


class TestCliRecognize:
    def test_yes(self, write, capsys):
        rc = main(["recognize", write(C4_TEXT)])
        out = capsys.readouterr().out.splitlines()
        assert rc == 0
        assert out[0] == "yes" and out[1].startswith("cbeo ")

    def test_no_long_cycle(self, write, capsys):
        rc = main(["recognize", write(C6_TEXT)])
        out = capsys.readouterr().out.splitlines()
        assert rc == 1
        assert out[0] == "no" and out[1].startswith("induced-cycle ")

    def test_no_odd_cycle(self, write, capsys):
        rc = main(["recognize", write(K3_TEXT)])
        out = capsys.readouterr().out.splitlines()
        assert rc == 1
        assert out[0] == "no" and out[1].startswith("odd-cycle ")
        assert sorted(out[1].split()[1:]) == ["1", "2", "3"]


class TestCliCbeo:
    def test_found(self, write, capsys):
        rc = main(["cbeo", "--ranking", "natural", write(C4_TEXT)])
        assert rc == 0
        assert capsys.readouterr().out == "4 3 2 1\n"

    def test_stuck(self, write, capsys):
        rc = main(["cbeo", write(C6_TEXT)])
        cap = capsys.readouterr()
        assert rc == 1
        assert cap.out == "none\n"
        assert "stuck residue: 1 2 3 4 5 6" in cap.err


class TestCliDegeneracy:
    def test_c6(self, write, capsys):
        rc = main(["degeneracy", write(C6_TEXT)])
        out = capsys.readouterr().out.splitlines()
        assert rc == 0
        assert out[0] == "2"
        assert out[1] == "6 5 4 3 2 1"


class TestCliBetaAcyclic:
    def test_yes(self, write, capsys):
        rc = main(["beta-acyclic", write("a b\nb c\n")])
        assert rc == 0
        assert capsys.readouterr().out == "yes\n"

    def test_no_all_methods(self, write, capsys):
        for method in ("incidence", "elimination", "brute"):
            rc = main(["beta-acyclic", "--method", method, write("a b\nb c\nc a\n")])
            assert rc == 1
            assert capsys.readouterr().out == "no\n"

    def test_duplicate_edge_warning_on_stderr(self, write, capsys):
        rc = main(["beta-acyclic", write("a b\nb a\n")])
        cap = capsys.readouterr()
        assert rc == 0
        assert "duplicate" in cap.err


class TestCliOracleAndCompare:
    def test_oracle_count(self, write, capsys):
        rc = main(["oracle", "enumerate", "--count-only", write(C6_TEXT)])
        assert rc == 0
        assert capsys.readouterr().out == "63\n"

    def test_oracle_lines_sorted(self, write, capsys):
        rc = main(["oracle", "enumerate", write(C4_TEXT)])
        lines = capsys.readouterr().out.splitlines()
        assert rc == 0 and len(lines) == 16
        assert lines == sorted(lines)

    def test_compare_match(self, write, capsys):
        rc = main(["compare", write(C6_TEXT)])
        assert rc == 0
        assert capsys.readouterr().out == "match: 63 solutions\n"

    def test_compare_both_rankings(self, write, capsys):
        for ranking in ("natural", "degeneracy"):
            rc = main(["compare", "--ranking", ranking, write(C4_TEXT)])
            assert rc == 0
            assert "match: 16 solutions" in capsys.readouterr().out


class TestCliErrors:
    def test_missing_file(self, capsys):
        rc = main(["enumerate", "/nonexistent/graph.txt"])
        assert rc == 2
        assert capsys.readouterr().err.startswith("error: ")

    def test_malformed(self, write, capsys):
        rc = main(["recognize", write("garbage\n")])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_oracle_too_large(self, write, capsys):
        n = 22
        edges = "\n".join(f"{i} {i + 1}" for i in range(1, n))
        rc = main(["oracle", "enumerate", write(f"{n} {n - 1}\n{edges}\n")])
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestCliBench:
    def test_csv_output(self, capsys):
        rc = main(["bench", "--family", "path", "--sizes", "6,8"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 3
        header = lines[0].split(",")
        assert "label" in header and "solutions" in header and "wall_time" in header
        assert lines[1].split(",")[header.index("solutions")] == str(2 ** 6)
