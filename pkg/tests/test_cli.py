import json
import subprocess
import sys

import pytest

from intervaldecomp.cli import main
from intervaldecomp.representation import counterexample_truncation, serialize_representation

IDENTITY = {"p": 2, "lo": 1, "hi": 2, "dims": [1, 1], "arrows": [{"dir": "R", "matrix": [[1]]}],
            "left_tail": "zero", "right_tail": "zero"}


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_identity(tmp_path, capsys):
    assert run(capsys, "decompose", write(tmp_path, "a.json", IDENTITY)) == (0, "1 2 1\n", "")


def test_decompose_zero_map(tmp_path, capsys):
    doc = dict(IDENTITY, arrows=[{"dir": "R", "matrix": [[0]]}])
    code, out, _ = run(capsys, "decompose", write(tmp_path, "z.json", doc))
    assert code == 0 and out.splitlines() == ["1 1 1", "2 2 1"]


def test_decompose_truncation(tmp_path, capsys):
    path = write(tmp_path, "t.json", serialize_representation(counterexample_truncation(2, 2)))
    code, out, _ = run(capsys, "decompose", path)
    assert code == 0 and out.splitlines() == ["0 0 1", "0 1 1", "0 2 1"]


def test_infinite_endpoints(tmp_path, capsys):
    doc = dict(IDENTITY, left_tail="constant", right_tail="constant")
    assert run(capsys, "decompose", write(tmp_path, "c.json", doc))[1] == "-inf +inf 1\n"


def test_parse_error_exit(tmp_path, capsys):
    code, _, err = run(capsys, "decompose", write(tmp_path, "bad.json", "{"))
    assert code == 1 and "parse error" in err
    assert run(capsys, "decompose", str(tmp_path / "missing.json"))[0] == 1


def test_verify_round_trip(tmp_path, capsys):
    src = write(tmp_path, "a.json", IDENTITY)
    cert = str(tmp_path / "a.cert")
    assert run(capsys, "decompose", src, "--certificate", cert)[0] == 0
    code, out, _ = run(capsys, "verify", src, cert)
    assert code == 0 and out.splitlines()[-1] == "OK"


def test_barcode_only_writes_nothing(tmp_path, capsys):
    cert = tmp_path / "a.cert"
    run(capsys, "decompose", write(tmp_path, "a.json", IDENTITY), "--certificate", str(cert), "--barcode-only")
    assert not cert.exists()


def test_verify_other_representation(tmp_path, capsys):
    src = write(tmp_path, "a.json", IDENTITY)
    cert = str(tmp_path / "a.cert")
    run(capsys, "decompose", src, "--certificate", cert)
    other = write(tmp_path, "b.json", dict(IDENTITY, arrows=[{"dir": "R", "matrix": [[0]]}]))
    code, out, _ = run(capsys, "verify", other, cert)
    assert code == 3 and out.splitlines()[-1] == "FAILED"


def test_verify_corrupted_entry(tmp_path, capsys):
    src = write(tmp_path, "a.json", IDENTITY)
    cert = tmp_path / "a.cert"
    run(capsys, "decompose", src, "--certificate", str(cert))
    doc = json.loads(cert.read_text())
    doc["pieces"][0]["basis"][1][0][0] = 0
    code, out, _ = run(capsys, "verify", src, write(tmp_path, "bad.cert", doc))
    assert code == 3 and "FAIL (b) map closure and basis alignment" in out


def test_verify_malformed_certificate(tmp_path, capsys):
    src = write(tmp_path, "a.json", IDENTITY)
    assert run(capsys, "verify", src, write(tmp_path, "x.cert", "[]"))[0] == 1


def test_oracle_rank_agree(tmp_path, capsys):
    # the truncation read right to left: projections instead of inclusions
    doc = json.loads(serialize_representation(counterexample_truncation(3, 3)))
    for a in doc["arrows"]:
        a["dir"] = "R"
        a["matrix"] = [list(col) for col in zip(*a["matrix"])]
    code, out, _ = run(capsys, "oracle", write(tmp_path, "r.json", doc), "--method", "rank")
    assert code == 0 and out.splitlines()[-1] == "AGREE"


def test_oracle_idempotent_zigzag(tmp_path, capsys):
    doc = {"p": 2, "lo": 0, "hi": 2, "dims": [1, 2, 1],
           "arrows": [{"dir": "R", "matrix": [[1], [0]]}, {"dir": "L", "matrix": [[1], [1]]}],
           "left_tail": "zero", "right_tail": "zero"}
    code, out, _ = run(capsys, "oracle", write(tmp_path, "z.json", doc), "--method", "idempotent")
    assert code == 0 and out.splitlines()[-1] == "AGREE"


def test_oracle_precondition(tmp_path, capsys):
    doc = dict(IDENTITY, arrows=[{"dir": "L", "matrix": [[1]]}])
    code, _, err = run(capsys, "oracle", write(tmp_path, "l.json", doc), "--method", "rank")
    assert code == 4 and "precondition" in err


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "gen", str(path), "--window", "5", "--p", "3", "--seed", "9",
                   "--tails", "constant,zero")[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_zero(tmp_path, capsys):
    path = tmp_path / "z.json"
    run(capsys, "gen", str(path), "--max-dim", "0", "--window", "3")
    assert json.loads(path.read_text())["dims"] == [0, 0, 0]
    assert run(capsys, "decompose", str(path)) == (0, "", "")


@pytest.mark.parametrize("argv", [
    ["gen", "x.json", "--window", "0"],
    ["gen", "x.json", "--p", "6"],
    ["gen", "x.json", "--tails", "open,zero"],
    ["demo", "--n-max", "0"],
    ["oracle", "x.json", "--method", "svd"],
    [],
])
def test_invalid_flags(argv, capsys):
    assert run(capsys, *argv)[0] == 1


def test_demo(capsys):
    code, out, _ = run(capsys, "demo", "--n-max", "3")
    assert code == 0
    assert "N=3: [0,0]:1 [0,1]:1 [0,2]:1 [0,3]:1" in out


@pytest.mark.parametrize("seed", range(8))
def test_pipeline_closure(tmp_path, capsys, seed):
    src, cert = str(tmp_path / "g.json"), str(tmp_path / "g.cert")
    tails = ["zero,zero", "constant,zero", "zero,constant", "constant,constant"][seed % 4]
    assert run(capsys, "gen", src, "--seed", str(seed), "--tails", tails, "--window", "5")[0] == 0
    first = run(capsys, "decompose", src, "--certificate", cert)
    assert first[0] == 0 and run(capsys, "decompose", src) == first
    assert run(capsys, "verify", src, cert)[0] == 0


def test_module_entry_point(tmp_path):
    src = write(tmp_path, "a.json", IDENTITY)
    done = subprocess.run([sys.executable, "-m", "intervaldecomp", "decompose", src],
                          capture_output=True, text=True, check=False)
    assert (done.returncode, done.stdout) == (0, "1 2 1\n")
