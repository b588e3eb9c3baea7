import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_xi
from strategies import balls, int_vec
from thurstonlab.cli import main
from thurstonlab.errors import SchemaError
from thurstonlab.io import manifold_to_dict, parse_manifold, serialize_manifold


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_minimal_file():
    m = parse_manifold(json.dumps({"name": "sq", "b1": 2, "dual_ball_vertices": [[1, 1], [1, -1], [-1, 1], [-1, -1]]}))
    assert set(m.dual_ball.vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert m.ball_source == "input"


def test_parse_alexander_only():
    m = parse_manifold(json.dumps({"name": "s", "b1": 1, "alexander": [{"exp": [0], "coeff": 1}, {"exp": [1], "coeff": 1}]}))
    assert set(m.dual_ball.vertices) == {(1,), (-1,)}
    assert m.ball_source == "alexander-convention"


def test_parse_errors_carry_location():
    with pytest.raises(SchemaError):
        parse_manifold(json.dumps({"name": "x", "b1": 2}))
    with pytest.raises(SchemaError, match="line 2"):
        parse_manifold('{"name": "x",\n "b1": }')
    with pytest.raises(SchemaError, match="b1"):
        parse_manifold(json.dumps({"name": "x", "b1": "two", "dual_ball_vertices": [[0, 0]]}))


@st.composite
def manifold_docs(draw):
    B = draw(balls())
    n = B.dim
    doc = {"name": draw(st.text("abcxyz-", min_size=1, max_size=8)), "b1": n,
           "dual_ball_vertices": [list(v) for v in B.vertices]}
    if draw(st.booleans()):
        terms = draw(st.dictionaries(int_vec(n, 2), st.integers(-3, 3).filter(bool), min_size=1, max_size=4))
        doc["alexander"] = [{"exp": list(k), "coeff": v} for k, v in terms.items()]
    if draw(st.booleans()):
        sw = draw(st.dictionaries(st.sampled_from(B.vertices), st.integers(-2, 2).filter(bool), max_size=4))
        doc["sw_support"] = [{"c1": list(k), "value": v} for k, v in sw.items()]
    if draw(st.booleans()):
        doc["fibered_marks"] = draw(st.lists(st.integers(0, len(B.vertices) - 1), max_size=2))
    if draw(st.booleans()):
        del doc["dual_ball_vertices"]
        doc.pop("fibered_marks", None)
        doc.setdefault("alexander", [{"exp": [0] * n, "coeff": 1}])
    return doc


@given(manifold_docs())
def test_round_trip_is_identity(doc):
    m = parse_manifold(json.dumps(doc))
    text = serialize_manifold(m)
    m2 = parse_manifold(text)
    assert m2 == m
    assert serialize_manifold(m2) == text
    assert manifold_to_dict(m2) == json.loads(text)


def test_xi_list_square(capsys, samples_dir):
    code, out, _ = run(capsys, "xi", "list", str(samples_dir / "square.json"))
    assert code == 0
    got = [tuple(v) for v in json.loads(out)]
    assert len(got) == 8
    m = parse_manifold((samples_dir / "square.json").read_text())
    assert got == brute_xi(m.dual_ball)


def test_bound_square(capsys, samples_dir):
    code, out, _ = run(capsys, "bound", str(samples_dir / "square.json"), "--euler", "0,2", "--sigma", "1,0",
                       "--curve", "3,5")
    doc = json.loads(out)
    assert code == 0
    assert (doc["value"], doc["status"], doc["provenance"]) == (7, "EXACT", "Corollary 1.5")


def test_bound_reads_bundle_file(capsys, samples_dir):
    code, out, _ = run(capsys, "bound", str(samples_dir / "square_bundle.json"), "--sigma", "1,0", "--curve", "3,5")
    assert code == 0 and json.loads(out)["status"] == "EXACT"


def test_gysin_violation_exit_code(capsys, samples_dir):
    code, out, _ = run(capsys, "bound", str(samples_dir / "square.json"), "--euler", "1,0", "--sigma", "1,0",
                       "--curve", "0,0")
    assert code == 2 and json.loads(out)["error"] == "GYSIN_VIOLATION"


def test_input_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "b1": 2}')
    code, out, _ = run(capsys, "norm", str(bad), "--sigma", "1,0")
    assert code == 1 and "error" in json.loads(out)
    asym = tmp_path / "asym.json"
    asym.write_text(json.dumps({"name": "x", "b1": 2, "dual_ball_vertices": [[0, 0], [1, 0]]}))
    code, out, _ = run(capsys, "norm", str(asym), "--sigma", "1,0")
    assert code == 1 and json.loads(out)["error"] == "ASYMMETRIC"


def test_other_commands(capsys, samples_dir):
    sq = str(samples_dir / "square.json")
    code, out, _ = run(capsys, "norm", sq, "--sigma", "2,3")
    assert code == 0 and json.loads(out)["norm"] == 5
    code, out, _ = run(capsys, "theta", "test", sq, "--euler", "5,1")
    assert code == 0 and json.loads(out)["in_theta"] is True
    code, out, _ = run(capsys, "xi", "test", sq, "--euler", "2,0")
    assert code == 0 and json.loads(out)["in_xi"] is False
    code, out, _ = run(capsys, "nice", "check", sq)
    assert code == 0 and json.loads(out)["status"] == "NICE"
    code, out, _ = run(capsys, "betti", sq, "--euler", "0,2")
    assert code == 0 and json.loads(out)["b2"] == 2
    code, out, _ = run(capsys, "betti", sq, "--torsion")
    assert code == 0 and json.loads(out)["status"] == "product-up-to-cover"
    code, out, _ = run(capsys, "sw", "average", str(samples_dir / "octahedron.json"), "--euler", "1,0,0")
    assert code == 0
    code, out, _ = run(capsys, "cover", "check", str(samples_dir / "square_double_cover.json"))
    doc = json.loads(out)
    assert code == 0 and doc["deg_M"] == 6 and doc["ok"]
    code, out, _ = run(capsys, "symplectic", sq, "--euler=2,-1", "--sigma", "1,2", "--curve", "0,1")
    assert code == 0 and json.loads(out)["symplectic_candidate"] is True
    code, out, _ = run(capsys, "claim", sq, "--euler", "0,3", "--sigma", "1,0")
    assert code == 0 and json.loads(out)["witness"] == [1, -1]


def test_ball_svg_is_deterministic(capsys, samples_dir, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "ball", str(samples_dir / "square.json"), "--svg", str(a))[0] == 0
    assert run(capsys, "ball", str(samples_dir / "square.json"), "--svg", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().lstrip().startswith(b"<?xml")


def test_nice_env_override(samples_dir):
    import os

    env = dict(os.environ, THURSTONLAB_MAX_SUPPORT="2")
    proc = subprocess.run([sys.executable, "-m", "thurstonlab", "nice", "check", str(samples_dir / "square.json")],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "SUFFICIENT_ONLY_PASS"


def test_fuzz_exit_codes(capsys):
    code, out, _ = run(capsys, "fuzz", "norms", "--trials", "20", "--seed", "3")
    assert code == 0 and json.loads(out)["failures"] == 0
    code, out, _ = run(capsys, "fuzz", "claim", "--trials", "20", "--seed", "3")
    assert code == 0 and json.loads(out)["failures"] == 0


def test_fuzz_observation_seed_7(samples_dir):
    proc = subprocess.run([sys.executable, "-m", "thurstonlab", "fuzz", "observation", "--trials", "1000",
                           "--seed", "7"], capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["failures"] == 0 and doc["trials"] == 1000
