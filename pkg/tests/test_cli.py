from __future__ import annotations

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from wpgl.cli import execute

FIX = Path(__file__).parent / "fixtures"


def run(*argv):
    code, out, err = execute([str(a) for a in argv])
    return code, out, err


def payload(*argv):
    code, out, _ = run(*argv)
    return code, json.loads(out)


def test_counts_examples():
    code, p = payload("counts", "--weights", "1,2,3")
    assert code == 0 and p["k"] == [0, 1, 2] and p["pi1_order"] == 1
    code, p = payload("counts", "--weights", "5,5")
    assert p["pi0_tag"] == "PGL(2)" and p["pi1_order"] == 5
    code, p = payload("counts", "--weights", "2,4")
    assert p["pi1_order"] == 2 and p["unipotent_dims"] == [0, 1]


@pytest.mark.parametrize("weights", ["1,x", "3", "0,2", ""])
def test_bad_weights_exit_2(weights):
    code, out, err = run("counts", "--weights", weights)
    assert code == 2 and "error" in err


def test_decompose_examples():
    code, p = payload("decompose", "--weights", "1,2,3", "--map", FIX / "identity_123.json")
    assert code == 0 and p["factors"] == [] and p["recomposition_ok"] is True
    assert p["linear_blocks"] == [[[1]], [[1]], [[1]]]
    code, p = payload("decompose", "--weights", "1,2,3", "--field", "q", "--map", FIX / "general_element_123.json")
    assert code == 0 and p["recomposition_ok"] is True
    assert [(f["level"], f["coordinates"]) for f in p["factors"]] == [(2, [1]), (3, [0, 1])]


def test_decompose_over_fp():
    code, p = payload("decompose", "--weights", "1,2,3", "--field", "fp:7", "--map", FIX / "identity_123.json")
    # the file declares Q, which conflicts with the flag
    assert code == 2
    obj = json.loads((FIX / "general_element_123.json").read_text())
    obj["field"] = {"Fp": 7}
    path = FIX.parent / "_tmp_fp7.json"
    try:
        path.write_text(json.dumps(obj))
        code, p = payload("decompose", "--weights", "1,2,3", "--field", "fp:7", "--map", path)
        assert code == 0 and p["field"] == {"Fp": 7}
    finally:
        path.unlink()


def test_decompose_failures():
    code, out, _ = run("decompose", "--weights", "1,2,3", "--map", FIX / "singular_123.json", "--text")
    assert code == 1 and "not an automorphism" in out
    code, _, _ = run("decompose", "--weights", "1,2,3", "--map", FIX / "inhomogeneous_123.json")
    assert code == 1
    code, _, err = run("decompose", "--weights", "1,2,3", "--map", FIX / "missing.json")
    assert code == 2 and "cannot read" in err
    code, _, _ = run("decompose", "--weights", "1,2", "--map", FIX / "identity_123.json")
    assert code == 2
    code, _, _ = run("decompose", "--weights", "1,2,3", "--map", FIX / "c4_butterfly.json")
    assert code == 2


def test_sections():
    assert payload("sections", "--weights", "1,1", "--degree", "3")[1]["count"] == 4
    assert payload("sections", "--weights", "2,3", "--degree", "1")[1]["count"] == 0
    assert payload("sections", "--weights", "4,9", "--degree", "0")[1]["count"] == 1
    code, p = payload("sections", "--weights", "1,1", "--degree", "5", "--upto")
    assert p["counts"] == [1, 2, 3, 4, 5, 6] and p["generating_function_ok"] is True
    assert run("sections", "--weights", "1,1", "--degree", "-1")[0] == 2


def test_butterfly_commands():
    path = FIX / "c4_butterfly.json"
    assert payload("verify", "--butterfly", path) == (0, {"kind": "butterfly", "valid": True,
                                                          "violated_axioms": [], "violations": []})
    code, out, _ = run("split", "--butterfly", path, "--text")
    assert code == 0 and out.strip() == "none"
    code, p = payload("quotient", "--butterfly", path)
    assert p["middle"]["structure"] == "C4" and p["is_1_stack"] and not p["is_orbifold_type"]


def test_mutated_butterfly():
    path = FIX / "c4_butterfly_mutated.json"
    code, p = payload("verify", "--butterfly", path)
    assert code == 1 and "B2" in p["violated_axioms"]
    b2 = [v for v in p["violations"] if v["axiom"] == "B2"]
    assert ["iota", 1] in b2[0]["entries"]
    assert run("split", "--butterfly", path)[0] == 1
    assert run("quotient", "--butterfly", path)[0] == 1


def test_split_extensions():
    code, p = payload("split", "--extension", FIX / "product_extension.json")
    assert code == 0 and p["split"] and p["section"] is not None
    code, p = payload("split", "--extension", FIX / "c4_over_c2.json")
    assert code == 0 and not p["split"]


def test_verify_xmod():
    assert run("verify", "--xmod", FIX / "identity_xmod_c2.json")[0] == 0


def test_examples_command():
    code, p = payload("examples")
    assert code == 0 and p["diffs"] == []
    code, out, _ = run("examples", "--text")
    assert "erratum" in out


def test_argparse_errors_exit_2():
    assert run("counts")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("verify", "--xmod", "a", "--butterfly", "b")[0] == 2


@pytest.mark.parametrize("argv", [
    ["counts", "--weights", "1,1,2,3"],
    ["decompose", "--weights", "1,2,3", "--map", FIX / "general_element_123.json"],
    ["quotient", "--butterfly", FIX / "c4_butterfly.json"],
    ["examples"],
])
def test_output_is_byte_deterministic(argv):
    first = run(*argv)[1]
    assert first and all(run(*argv)[1] == first for _ in range(2))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wpgl", "sections", "--weights", "1,1", "--degree", "3", "--text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "4"


@pytest.mark.skipif(shutil.which("wpgl") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["wpgl", "counts", "--weights", "1,x"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
