import json

import pytest

from a2reps import catalog as cat
from a2reps.cli import UsageError, main, parse_scalar
from a2reps.field import Cyclo
from a2reps.hopf import Params


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_scalar():
    assert parse_scalar("3/4", 12) == Cyclo.from_rational(12, 0.75)
    assert parse_scalar("w^3", 12) == Cyclo.root(12, 3)
    assert parse_scalar("1+2*w^2", 12) == 1 + 2 * Cyclo.root(12, 2)
    assert parse_scalar("-w", 12) == -Cyclo.root(12, 1)
    with pytest.raises(UsageError):
        parse_scalar("x+1", 12)


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--N", "2", "--M", "3", "--lambda", "1,1,1")
    obj = json.loads(out)
    assert code == 0
    assert obj["case"] == 8 and obj["counts"] == {"dim1": 4, "dim4": 10}
    assert obj["orbit_check_ok"]


def test_build_roundtrip_and_verify(capsys, tmp_path):
    path = tmp_path / "m.json"
    code, _, _ = run(capsys, "build", "M4:0,1:i=3", "--N", "2", "--M", "2", "--out", str(path))
    assert code == 0
    R = cat.Rep.from_json(json.loads(path.read_text()))
    assert cat.verify_rep(Params.make(2, 2), R)
    code, out, _ = run(capsys, "verify", str(path), "--N", "2", "--M", "2")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_violation_exit_code(capsys, tmp_path):
    p = Params.make(2, 2)
    R = cat.build_projective(p, p.chi(0, 0))
    bad = cat.Rep(R.g1, R.g2, R.a1, R.a1, R.ring, "bad")
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad.to_json()))
    code, out, _ = run(capsys, "verify", str(path), "--N", "2", "--M", "2")
    assert code == 1 and json.loads(out)["relation"]


@pytest.mark.parametrize("argv", [
    ("classify",),
    ("classify", "--N", "2", "--M", "2", "--lambda", "1,2"),
    ("build", "L2h:0,0", "--N", "2", "--M", "2"),
    ("build", "Zz:0,0", "--N", "2", "--M", "2"),
    ("qdim", "L1:0,0", "--N", "2", "--M", "2"),
    ("tensor", "L1:0,0", "--N", "3", "--M", "2"),
    ("classify", "--N", "1", "--M", "2"),
    ("nonsense",),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_allow_small(capsys):
    code, out, _ = run(capsys, "classify", "--N", "1", "--M", "2", "--allow-small")
    assert code == 0


def test_fusion_and_qdim(capsys):
    code, out, _ = run(capsys, "fusion", "M3:1,0:i=1", "M3:0,1:i=4", "--N", "3", "--M", "2")
    obj = json.loads(out)
    assert code == 0
    assert sorted((s["label"], s["survives"]) for s in obj["summands"]) == [("L1:1,3", True), ("P:1,1", False)]
    code, out, _ = run(capsys, "qdim", "Q:1,0:n=5", "--N", "3", "--M", "2", "--format", "text")
    assert code == 0 and "text: -1" in out


def test_quiver_dot_and_json(capsys):
    code, out, _ = run(capsys, "quiver", "--N", "2", "--M", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 32
    code, out, _ = run(capsys, "quiver", "--N", "2", "--M", "2")
    assert json.loads(out)["finite_type"] is False


def test_decompose_and_homs(capsys):
    code, out, _ = run(capsys, "decompose", "P:0,1", "--N", "2", "--M", "2", "--lambda", "0,0,1")
    obj = json.loads(out)
    assert code == 0 and [s["dim"] for s in obj["summands"]] == [4, 4]
    code, out, _ = run(capsys, "homs", "P:0,0", "L1:0,0", "--N", "2", "--M", "2")
    assert json.loads(out)["dim"] == 1


def test_l4_roots(capsys):
    args = ("--N", "2", "--M", "2", "--lambda", "1,1,1")
    a = json.loads(run(capsys, "build", "L4:1,1", *args)[1])
    b = json.loads(run(capsys, "build", "L4:1,1:d=root1", *args)[1])
    assert a["a1"] != b["a1"] or a["a2"] != b["a2"]
    assert run(capsys, "build", "L4:1,1:d=5", *args)[0] == 2


def test_deterministic_output(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"d{k}.json"
        run(capsys, "decompose", "M3:0,0:i=2", "--N", "2", "--M", "3", "--seed", "7", "--out", str(path))
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_probe(capsys):
    code, out, _ = run(capsys, "probe-q0", "--N", "3", "--M", "2", "--bound", "6")
    assert code == 0 and json.loads(out)
