import json

from ncrainbow.cli import main
from ncrainbow.colorings import read_coloring_file
from ncrainbow.graphs import read_graph_file
from ncrainbow.groups import dihedral, load_cayley_table


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    manifest = None
    for line in captured.out.strip().splitlines():
        try:
            doc = json.loads(line)
        except json.JSONDecodeError:
            continue
        if isinstance(doc, dict) and "command" in doc:
            manifest = doc
    return code, manifest, captured


def test_group_build_and_round_trip(tmp_path, capsys):
    out = tmp_path / "d18.cay"
    code, manifest, _ = run(capsys, "group", "build", "--family", "dihedral",
                            "--params", "9", "--out", str(out))
    assert code == 0
    assert manifest["outcome"] == {"name": "D18", "order": 18, "center_size": 1}
    assert load_cayley_table(out).table == dihedral(9).table


def test_full_pipeline(tmp_path, capsys):
    cay = tmp_path / "g.cay"
    graph = tmp_path / "g.graph"
    col = tmp_path / "g.col"
    cert = tmp_path / "g.cert.json"
    assert run(capsys, "group", "build", "--family", "dihedral",
               "--params", "9", "--out", str(cay))[0] == 0
    code, manifest, _ = run(capsys, "ncgraph", "--group", str(cay), "--out", str(graph))
    assert code == 0 and manifest["outcome"]["vertices"] == 17
    code, manifest, _ = run(capsys, "search", "--graph", str(graph), "--k", "2",
                            "--attempts", "10000", "--seed", "1", "--out", str(col))
    assert code == 0 and manifest["outcome"]["found"]
    code, manifest, _ = run(capsys, "verify", "--graph", str(graph),
                            "--coloring", str(col), "--k", "2", "--cert", str(cert))
    assert code == 0 and manifest["outcome"]["rainbow_k_connected"]
    assert json.loads(cert.read_text())["k"] == 2
    # every written file reads back to identical content
    g = read_graph_file(graph)
    assert read_coloring_file(col, g).edge_colors is not None


def test_color_commands(tmp_path, capsys):
    graph = tmp_path / "m.graph"
    col = tmp_path / "m.col"
    code, manifest, _ = run(capsys, "color", "multipartite", "--l", "1", "--m", "4",
                            "--n", "1", "--out-graph", str(graph),
                            "--out-coloring", str(col))
    assert code == 0 and manifest["outcome"]["vertices"] == 5
    code, _, _ = run(capsys, "verify", "--graph", str(graph),
                     "--coloring", str(col), "--k", "2")
    assert code == 0

    code, manifest, captured = run(capsys, "color", "multipartite", "--l", "1",
                                   "--m", "2", "--n", "1", "--out-graph", str(graph),
                                   "--out-coloring", str(col))
    assert code == 2
    error = json.loads(captured.err.strip())
    assert error["error"] == "InvalidSpec"

    code, manifest, _ = run(capsys, "color", "j62", "--out-graph", str(graph),
                            "--out-coloring", str(col))
    assert code == 0 and manifest["outcome"]["edges"] == 240


def test_verify_failure_exits_one(tmp_path, capsys):
    graph = tmp_path / "k3.graph"
    col = tmp_path / "k3.col"
    graph.write_text("graph 3 3\nlabels v0 v1 v2\n0 1\n0 2\n1 2\n")
    col.write_text("coloring 2\n0 1 1\n0 2 1\n1 2 1\n")
    code, manifest, _ = run(capsys, "verify", "--graph", str(graph),
                            "--coloring", str(col), "--k", "2")
    assert code == 1
    assert manifest["outcome"]["rainbow_k_connected"] is False
    assert manifest["outcome"]["witness_pair"] == [0, 1]


def test_bounds_modes(tmp_path, capsys):
    cay = tmp_path / "d6.cay"
    run(capsys, "group", "build", "--family", "dihedral", "--params", "3",
        "--out", str(cay))
    code, manifest, _ = run(capsys, "bounds", "--group", str(cay), "--k", "2")
    assert code == 0
    assert manifest["outcome"]["p_num"] == "19" and manifest["outcome"]["p_den"] == "8"
    assert manifest["outcome"]["flagged"] is True

    code, manifest, _ = run(capsys, "bounds", "coarse", "--n", "108")
    assert code == 0 and manifest["outcome"]["holds"] is False
    code, manifest, _ = run(capsys, "bounds", "threshold", "--k", "2")
    assert code == 0 and manifest["outcome"]["threshold"] == 126


def test_scan_directory(tmp_path, capsys):
    for name, n in (("a", 3), ("b", 9)):
        run(capsys, "group", "build", "--family", "dihedral", "--params", str(n),
            "--out", str(tmp_path / f"{name}.cay"))
    out = tmp_path / "scan.json"
    code, manifest, _ = run(capsys, "scan", "--groups", str(tmp_path),
                            "--out", str(out))
    assert code == 0
    assert manifest["outcome"]["flagged"] == ["a"]
    doc = json.loads(out.read_text())
    assert [entry["id"] for entry in doc] == ["a", "b"]


def test_iso_command(tmp_path, capsys):
    g1 = tmp_path / "g1.graph"
    g2 = tmp_path / "g2.graph"
    g3 = tmp_path / "g3.graph"
    g1.write_text("graph 3 3\n0 1\n0 2\n1 2\n")
    g2.write_text("graph 3 3\n0 2\n1 2\n0 1\n")
    g3.write_text("graph 3 2\n0 1\n1 2\n")
    code, manifest, _ = run(capsys, "iso", "--graph", str(g1), "--graph2", str(g2))
    assert code == 0 and manifest["outcome"]["isomorphic"]
    code, manifest, _ = run(capsys, "iso", "--graph", str(g1), "--graph2", str(g3))
    assert code == 1 and not manifest["outcome"]["isomorphic"]


def test_usage_error_is_json(capsys):
    code = main(["group", "build", "--family", "nosuch", "--out", "x"])
    captured = capsys.readouterr()
    assert code == 2
    assert json.loads(captured.err.strip())["error"] == "UsageError"


def test_semidirect_build(tmp_path, capsys):
    z3 = tmp_path / "z3.cay"
    z2 = tmp_path / "z2.cay"
    action = tmp_path / "action.json"
    run(capsys, "group", "build", "--family", "cyclic", "--params", "3", "--out", str(z3))
    run(capsys, "group", "build", "--family", "cyclic", "--params", "2", "--out", str(z2))
    action.write_text(json.dumps([[0, 1, 2], [0, 2, 1]]))
    out = tmp_path / "s3.cay"
    code, manifest, _ = run(capsys, "group", "build", "--family", "semidirect",
                            "--left", str(z3), "--right", str(z2),
                            "--action", str(action), "--out", str(out))
    assert code == 0 and manifest["outcome"]["order"] == 6
    assert manifest["outcome"]["center_size"] == 1


def test_reproduce_quick(capsys):
    code = main(["reproduce", "--quick"])
    captured = capsys.readouterr()
    assert code == 0
    lines = [ln for ln in captured.out.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert len(lines) == 11
    assert all(ln.startswith("PASS") for ln in lines)
