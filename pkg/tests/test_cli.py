"""CLI surface: line protocols, JSON schemas, exit codes."""

import json

from wordrep import families
from wordrep.cli import main
from wordrep.graphs import parse_graph6, write_graph6
from wordrep.orient import orient_by_bits, is_semi_transitive
from wordrep.words import parse_word, represents


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def g6(tag, *params):
    return write_graph6(families.named(tag, *params))


def test_classify_lines(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(f"{g6('W5')}\n{g6('T1')}\n{g6('K', 4)}\n")
    code, out, err = run(capsys, "classify", str(path))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].split("\t")[1:3] == ["non-representable", "ORACLE_SEARCH"]
    assert lines[1].split("\t")[1:3] == ["non-representable", "THEOREM_MAIN1"]
    assert "witness=A_4:" in lines[1]
    assert lines[2].split("\t")[1:3] == ["representable", "COMPARABILITY"]


def test_classify_json_schema(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(f"{g6('T3')}\n{g6('K_TRIANGLE', 4)}\n")
    code, out, err = run(capsys, "classify", str(path), "--json", "--witness", "--verify")
    assert code == 0
    first, second = map(json.loads, out.splitlines())
    assert set(first) == {"graph6", "representable", "reason", "witness"}
    assert first["representable"] is False
    assert first["reason"] == "THEOREM_MAIN2"
    assert first["witness"]["pattern"] == "T3"
    assert isinstance(first["witness"]["vertices"], list)
    assert second["representable"] is True
    bits = second["witness"]["orientation"]
    og = orient_by_bits(parse_graph6(second["graph6"]), bits)
    assert is_semi_transitive(og)


def test_classify_parse_errors_exit_1(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(f"{g6('W5')}\n\x01bogus\n")
    code, out, err = run(capsys, "classify", str(path))
    assert code == 1
    assert "line 2" in err
    assert len(out.splitlines()) == 1  # the good line still classified


def test_census_small(capsys):
    code, out, err = run(capsys, "census", "6", "--expected", "1")
    assert code == 0
    lines = out.splitlines()
    non_rep = [l for l in lines if not l.startswith("#")]
    assert len(non_rep) == 1
    from wordrep.graphs import is_isomorphic

    assert is_isomorphic(parse_graph6(non_rep[0].split("\t")[0]), families.named("W5"))
    assert any("classes=156" in l for l in lines)


def test_census_expectation_mismatch(capsys):
    code, out, err = run(capsys, "census", "5", "--expected", "3")
    assert code == 2
    assert "expected 3" in err


def test_census_split_filter(capsys):
    code, out, err = run(capsys, "census", "6", "--filter", "split", "--expected", "0", "--json")
    assert code == 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["classes"] == 56
    assert summary["non_representable"] == 0


def test_census_guard(capsys, monkeypatch):
    monkeypatch.delenv("WORDREP_ALLOW_LARGE_CENSUS", raising=False)
    code, out, err = run(capsys, "census", "9")
    assert code == 1
    assert "WORDREP_ALLOW_LARGE_CENSUS" in err


def test_generate(capsys):
    code, out, err = run(capsys, "generate", "K_TRIANGLE", "6", "--orientation")
    assert code == 0
    lines = out.splitlines()
    assert parse_graph6(lines[0]) == families.k_triangle(6)
    og = orient_by_bits(families.k_triangle(6), lines[1])
    assert og == families.k_triangle_canonical_orientation(6)
    assert lines[2] == "digraph G {"
    assert any("->" in l for l in lines[3:])


def test_generate_a_graph_is_t1(capsys):
    code, out, err = run(capsys, "generate", "A_GRAPH", "4")
    assert code == 0
    from wordrep.graphs import is_isomorphic

    assert is_isomorphic(parse_graph6(out.strip()), families.named("T1"))


def test_generate_word(capsys):
    code, out, err = run(capsys, "generate", "K_TRIANGLE", "5", "--word")
    assert code == 0
    g6line, word = out.splitlines()
    assert represents(parse_word(word), parse_graph6(g6line))


def test_generate_errors(capsys):
    code, out, err = run(capsys, "generate", "NOPE")
    assert code == 1
    code, out, err = run(capsys, "generate", "K_L_K", "5", "3", "--orientation")
    assert code == 0
    code, out, err = run(capsys, "generate", "T4", "--orientation")
    assert code == 1
    assert "no canonical orientation" in err


def test_orient_default_and_none(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(f"{g6('K_TRIANGLE', 3)}\n{g6('T4')}\n")
    code, out, err = run(capsys, "orient", str(path))
    assert code == 0
    lines = out.splitlines()
    g, bits = lines[0].split("\t")
    og = orient_by_bits(parse_graph6(g), bits)
    assert is_semi_transitive(og)
    assert lines[1].endswith("\tnone")


def test_orient_count_with_fixed_clique(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(g6("K_TRIANGLE", 3) + "\n")
    code, out, err = run(capsys, "orient", str(path), "--count", "--fix", "0>1,1>2,0>2")
    assert code == 0
    assert out.strip().split("\t")[1] == "4"


def test_orient_all_lists_every_orientation(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(write_graph6(families.complete(3)) + "\n")
    code, out, err = run(capsys, "orient", str(path), "--all")
    assert code == 0
    assert len(out.splitlines()) == 6


def test_orient_classify_types(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(g6("K_TRIANGLE", 6) + "\n")
    code, out, err = run(capsys, "orient", str(path), "--classify-types")
    assert code == 0
    lines = out.splitlines()
    reports = [json.loads(l) for l in lines[1:]]
    kinds = sorted(r["kind"] for r in reports)
    assert kinds == ["B", "B", "B", "B", "B", "C"]
    cvert = next(r for r in reports if r["kind"] == "C")
    assert cvert["source_group"] == [0] and cvert["sink_group"] == [5]
    assert cvert["boundary"] == [0, 5]


def test_orient_bits_inspection(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(g6("T3") + "\n")
    # clique oriented 0->1->2->3, vertices 4 and 5 made sinks, vertex 6
    # threaded 0->6, 1->6, 6->3: every vertex is typed but the type-B
    # vertex 4 straddles vertex 6's boundary pair
    code, out, err = run(capsys, "orient", str(path), "--bits", "000000000000001",
                         "--classify-types")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("\tnot-semi-transitive")
    payloads = [json.loads(l) for l in lines[1:]]
    reports = [p for p in payloads if "kind" in p and "vertex" in p]
    violations = [p for p in payloads if "y" in p]
    assert sorted(r["kind"] for r in reports) == ["B", "B", "C"]
    assert violations == [{"y": 4, "x": 6, "boundary": [1, 3], "kind": "AB"}]


def test_represent_roundtrip(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(f"{g6('K', 3)}\n{g6('W5')}\n")
    code, out, err = run(capsys, "represent", str(path), "--max-uniformity", "3")
    assert code == 0
    lines = out.splitlines()
    w = parse_word(lines[0].split("\t")[1])
    assert represents(w, families.complete(3))
    assert lines[1].endswith("\tnone")


def test_represent_check(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(g6("FIG2_EXAMPLE") + "\n")
    code, out, err = run(capsys, "represent", str(path), "--check", "0102312")
    assert code == 0
    assert "\trepresents" in out
    code, out, err = run(capsys, "represent", str(path), "--check", "0123")
    assert code == 2


def test_usage_error_exits_1(capsys):
    assert main(["census"]) == 1
    assert main(["bogus"]) == 1
    assert main(["--help"]) == 0


def test_internal_disagreement_exits_3(tmp_path, capsys, monkeypatch):
    from wordrep.orient import OracleDisagreement
    import wordrep.cli as cli

    def boom(g, verify, witness):
        raise OracleDisagreement("synthetic disagreement")

    monkeypatch.setattr(cli, "_verdict_for", boom)
    path = tmp_path / "in.g6"
    path.write_text(g6("K", 3) + "\n")
    code, out, err = run(capsys, "classify", str(path))
    assert code == 3
    assert "invariant violation" in err
