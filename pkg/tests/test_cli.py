import shutil

import pytest

from defectcolor.cli import expectations, main, read_expect
from defectcolor.coloring import check, parse_lists, uniform_lists

from conftest import CORPUS, corpus_paths, graph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_class(capsys):
    code, out, _ = run(capsys, "check-class", CORPUS / "dodecahedron.rot")
    assert code == 0 and out.startswith("in class: yes")
    code, out, _ = run(capsys, "check-class", CORPUS / "k4.rot")
    assert code == 1 and out.startswith("in class: no")


def test_color_uniform(capsys):
    code, out, _ = run(capsys, "color", CORPUS / "k4.rot", "--uniform", 3, "--defect", 1)
    assert code == 0
    body = out.rsplit("check", 1)[0]
    pi = {v: min(c) for v, c in parse_lists(body).items()}
    G = graph("k4")
    assert check(G, uniform_lists(G, 3), pi, 1)


def test_color_from_lists_file(capsys, tmp_path):
    lists = tmp_path / "l.txt"
    lists.write_text("".join(f"{v}: 1 2 3\n" for v in graph("c5").vertices))
    code, out, _ = run(capsys, "color", CORPUS / "c5.rot", lists, "--recursive")
    assert code == 0 and out.endswith("check ok\n")


def test_color_infeasible(capsys):
    code, out, _ = run(capsys, "color", CORPUS / "c5.rot", "--uniform", 2, "--defect", 0)
    assert code == 1 and "no (L,0)-coloring" in out


def test_discharge_c5(capsys):
    code, out, _ = run(capsys, "discharge", CORPUS / "c5.rot")
    assert code == 0
    assert "total -20/1" in out and out.rstrip().endswith("verdict CONSISTENT")


def test_discharge_lines(capsys):
    code, out, _ = run(capsys, "discharge", CORPUS / "bad5.rot")
    assert code == 0
    assert any(line.startswith("R1.1 v1 -> f") for line in out.splitlines())


def test_choosable(capsys):
    code, out, _ = run(capsys, "choosable", CORPUS / "k2.rot", 1, 0)
    assert code == 0 and "(1,0)-choosable: no" in out and "witness lists:" in out
    code, out, _ = run(capsys, "choosable", CORPUS / "c5.rot", 3, 1)
    assert "(3,1)-choosable: yes" in out


def test_simple_queries(capsys):
    assert run(capsys, "girth", CORPUS / "cube.rot")[1] == "4\n"
    assert run(capsys, "girth", CORPUS / "p3.rot")[1] == "acyclic\n"
    out = run(capsys, "faces", CORPUS / "k4.rot")[1]
    assert len(out.splitlines()) == 4 and all(" d=3 " in line for line in out.splitlines())
    out = run(capsys, "classify", CORPUS / "light4.rot")[1]
    assert "flags=light4,S" in out
    out = run(capsys, "find-config", CORPUS / "c5.rot", "--all")[1]
    assert len(out.splitlines()) == 5 and out.startswith("A1_smallDegree")
    out = run(capsys, "find-config", CORPUS / "dodecahedron.rot", "--kind", "KEY_twoBad5s")[1]
    assert out == "none\n"


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.rot"
    bad.write_text("1: 2\n2: x\n")
    code, _, err = run(capsys, "girth", bad)
    assert code == 2 and "bad.rot:2:4:" in err


def test_module_error_has_context(capsys, tmp_path):
    bad = tmp_path / "asym.rot"
    bad.write_text("1: 2\n2:\n")
    code, _, err = run(capsys, "faces", bad)
    assert code == 2 and "asym.rot" in err and "AsymmetricRotation" in err


def test_verify_lemmas_single_kind(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--kind", "A1_smallDegree", "--kind", "F1_34m4face")
    assert code == 0
    assert out.count("PASS") == 2 and "templates failed: 0" in out


@pytest.mark.parametrize("path", corpus_paths(), ids=lambda p: p.stem)
def test_corpus_expectations_hold(path):
    from defectcolor.plane_graph import read_graph

    assert read_expect(path) == expectations(read_graph(path))


def test_corpus_contents():
    names = {p.stem for p in corpus_paths()}
    assert {"c3", "c5", "k4", "k2", "p3", "cube", "octahedron", "dodecahedron", "icosahedron",
            "light4", "soft4", "bad5"} <= names
    assert len(names) >= 12
    girth5 = [p for p in corpus_paths()
              if read_expect(p)["girth"] == "5" and 15 <= len(graph(p.stem)) <= 30]
    assert len(girth5) >= 3


def test_scan_small_corpus(capsys, tmp_path):
    for name in ("c5", "k4", "bad5"):
        shutil.copy(CORPUS / f"{name}.rot", tmp_path)
    code, out, _ = run(capsys, "scan", tmp_path, "--trials", 5, "--seed", 3)
    assert code == 0 and "fixtures 3  failed 0" in out
    again = run(capsys, "scan", tmp_path, "--trials", 5, "--seed", 3)[1]
    assert again == out


def test_scan_flags_wrong_expectation(capsys, tmp_path):
    text = (CORPUS / "c5.rot").read_text().replace("girth=5", "girth=4")
    (tmp_path / "c5.rot").write_text(text)
    code, out, _ = run(capsys, "scan", tmp_path, "--trials", 2)
    assert code == 1 and "expectations differ" in out


def test_scan_empty_dir(capsys, tmp_path):
    assert run(capsys, "scan", tmp_path)[0] == 2
