"""Command-line interface: exit codes, JSON determinism, check mode."""

import json
import os
import subprocess
import sys

import pytest

from syzal import (
    RingSpec,
    ZeroModuleError,
    free_presentation,
    maximal_ideal,
    residue_field,
    save_presentation,
    shift,
    zero_module,
)
import syzal.cli as cli


def run_cli(*argv, env_extra=None):
    env = dict(os.environ)
    env.pop("SYZAL_ORACLE_WINDOW", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "syzal.cli", *argv],
        capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def m_pres(tmp_path):
    path = tmp_path / "m.pres"
    save_presentation(maximal_ideal(RingSpec(2, 2)), str(path))
    return str(path)


@pytest.fixture
def zero_pres(tmp_path):
    path = tmp_path / "zero.pres"
    save_presentation(zero_module(RingSpec(2, 2)), str(path))
    return str(path)


# ---------- happy paths ----------

def test_resolve_text_and_json(m_pres):
    code, out, err = run_cli("resolve", "--file", m_pres)
    assert code == 0, err
    assert "resolution: 2 <- 1" in out
    code, out, err = run_cli("resolve", "--file", m_pres, "--json", "--check")
    assert code == 0, err
    data = json.loads(out)
    assert data["format"] == 1
    assert data["length"] == 1
    assert data["betti"] == [[0, 2, 2], [1, 4, 1]]
    assert data["truncated"] is False


def test_ext_json_check(m_pres):
    code, out, err = run_cli("ext", "--file", m_pres, "--j", "1",
                             "--json", "--check")
    assert code == 0, err
    data = json.loads(out)
    assert data["zero"] is False
    assert data["fingerprint"]["betti"][0] == [0, -4, 1]
    code, out, _ = run_cli("ext", "--file", m_pres, "--j", "2", "--json")
    assert json.loads(out)["zero"] is True


def test_hilbert_json(m_pres):
    code, out, err = run_cli("hilbert", "--file", m_pres, "--json", "--check")
    assert code == 0, err
    data = json.loads(out)
    assert data["series"]["numerator"] == [[2, 2], [4, -1]]
    assert data["window"] == [2, 8]
    assert [2, 2] in data["dims"]


def test_depth_and_cm(m_pres):
    code, out, err = run_cli("depth", "--file", m_pres, "--json", "--check")
    assert code == 0, err
    data = json.loads(out)
    assert (data["depth"], data["dim"]) == (1, 2)
    assert data["projective_dimension"] == 1
    code, out, _ = run_cli("cm", "--file", m_pres)
    assert code == 0
    assert "cohen_macaulay: false" in out


def test_depth_of_zero_module_is_undefined(zero_pres):
    code, out, _ = run_cli("depth", "--file", zero_pres)
    assert code == 0
    assert "undefined" in out
    code, out, _ = run_cli("depth", "--file", zero_pres, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["zero_module"] is True
    assert data["depth"] is None
    code, out, _ = run_cli("cm", "--file", zero_pres, "--json")
    assert json.loads(out)["cohen_macaulay"] is None


def test_syzygy_order_command(m_pres):
    code, out, err = run_cli("syzygy-order", "--file", m_pres,
                             "--json", "--check")
    assert code == 0, err
    assert json.loads(out)["order"] == 1


def test_koszul_command():
    code, out, err = run_cli("koszul", "--r", "3", "--json", "--check")
    assert code == 0, err
    data = json.loads(out)
    assert data["ranks"] == [1, 3, 3, 1]
    code, out, _ = run_cli("koszul", "--r", "2")
    assert "koszul complex (r=2): 1 <- 2 <- 1" in out


def test_fixture_commands():
    code, out, err = run_cli("toric", "ab", "--r", "2", "--json", "--check")
    assert code == 0, err
    rep = json.loads(out)["report"]
    assert rep["syzygy_order"] == 1
    assert rep["nonzero_positions"] == [0, 2]

    code, out, _ = run_cli("toric", "ht", "--r", "2", "--json")
    assert json.loads(out)["projective_dimension"] == 1

    code, out, _ = run_cli("mutant", "ab", "--json")
    rep = json.loads(out)["report"]
    assert rep["nonzero_positions"] == [0, 2]
    from syzal import hilbert_series
    k1 = hilbert_series(shift(residue_field(RingSpec(3, 2)), 1))
    assert rep["aug_zero"] == k1.to_json()

    code, out, _ = run_cli("homogeneous", "hht", "--r", "3", "--i", "1",
                           "--json")
    assert code == 0
    data = json.loads(out)
    assert data["what"] == "hht"

    code, out, _ = run_cli("homogeneous", "ab", "--r", "3", "--i", "1",
                           "--json")
    assert json.loads(out)["report"]["nonzero_positions"] == [-1, 1]


def test_gkm_hypercube_and_file(tmp_path):
    code, out, err = run_cli("gkm", "--r", "2", "--json")
    assert code == 0, err
    data = json.loads(out)
    assert (data["vertices"], data["edges"]) == (4, 4)
    assert data["fingerprint"]["betti"] == [[0, 0, 1], [0, 2, 2], [0, 4, 1]]

    gkm_file = tmp_path / "sphere.gkm"
    gkm_file.write_text("vertex n\nvertex s\nedge n s t1\n")
    code, out, err = run_cli("gkm", "--r", "1", "--file", str(gkm_file),
                             "--json", "--check")
    assert code == 0, err
    assert json.loads(out)["fingerprint"]["betti"] == [[0, 0, 1], [0, 2, 1]]


def test_ab_command_with_files(tmp_path):
    from syzal import mutant_hht, mutant_ht
    hht_path = tmp_path / "hht.pres"
    ht_path = tmp_path / "ht.pres"
    save_presentation(mutant_hht(), str(hht_path))
    save_presentation(mutant_ht(), str(ht_path))
    code, out, err = run_cli("ab", "--file", str(hht_path),
                             "--ht", str(ht_path), "--json")
    assert code == 0, err
    rep = json.loads(out)["report"]
    assert rep["syzygy_order"] == 1
    assert rep["exact_through"] == -1
    code, out, _ = run_cli("ab", "--file", str(hht_path))
    assert code == 0
    assert "position  0" in out


def test_oracle_command(m_pres):
    code, out, err = run_cli("oracle", "--file", m_pres,
                             "--window", "0:6", "--json", "--check")
    assert code == 0, err
    data = json.loads(out)
    assert data["dims"] == [[0, 0], [1, 0], [2, 2], [3, 0], [4, 3], [5, 0], [6, 4]]
    code, out, _ = run_cli("oracle", "--file", m_pres)
    assert code == 0
    assert "dim_2 = 2" in out


def test_oracle_env_window(m_pres):
    code, out, _ = run_cli("oracle", "--file", m_pres, "--json",
                           env_extra={"SYZAL_ORACLE_WINDOW": "0:2"})
    assert code == 0
    assert json.loads(out)["window"] == [0, 2]


# ---------- determinism ----------

def test_json_byte_determinism_across_hash_seeds(m_pres):
    outs = []
    for seed in ("0", "1", "2"):
        code, out, err = run_cli("toric", "ab", "--r", "2", "--json",
                                 env_extra={"PYTHONHASHSEED": seed})
        assert code == 0, err
        outs.append(out)
        code, out2, _ = run_cli("resolve", "--file", m_pres, "--json",
                                env_extra={"PYTHONHASHSEED": seed})
        outs.append(out2)
    assert outs[0] == outs[2] == outs[4]
    assert outs[1] == outs[3] == outs[5]


def test_json_keys_sorted(m_pres):
    _, out, _ = run_cli("hilbert", "--file", m_pres, "--json")
    data = json.loads(out)
    assert list(data.keys()) == sorted(data.keys())


# ---------- failure paths ----------

def test_exit_code_2_on_bad_inputs(tmp_path, m_pres):
    code, _, err = run_cli("ext", "--file", m_pres, "--j", "7")
    assert code == 2
    assert "error:" in err

    code, _, err = run_cli("resolve", "--file", str(tmp_path / "missing.pres"))
    assert code == 2

    code, _, err = run_cli("oracle", "--file", m_pres, "--window", "9:1")
    assert code == 2

    code, _, err = run_cli("toric", "ht", "--r", "0", "--json")
    assert code == 2

    bad = tmp_path / "bad.pres"
    bad.write_text("{not json")
    code, _, err = run_cli("hilbert", "--file", str(bad))
    assert code == 2


def test_exit_code_2_on_inhomogeneous_file(tmp_path, m_pres):
    data = json.load(open(m_pres))
    data["matrix"][0][0] = "t1^3"
    bad = tmp_path / "inhom.pres"
    bad.write_text(json.dumps(data))
    code, _, err = run_cli("hilbert", "--file", str(bad))
    assert code == 2
    assert "error:" in err


def test_argparse_rejects_unknown_fixture_argument():
    code, _, err = run_cli("toric", "nonsense", "--r", "2")
    assert code == 2


def test_exit_code_1_on_verification_failure(m_pres, monkeypatch, capsys):
    # poison the oracle comparison inside --check: engine vs oracle mismatch
    # must surface as a verification failure, not a crash
    def bad_dims(M, config=None):
        return {0: 99}
    monkeypatch.setattr(cli, "module_dims", bad_dims)
    code = cli.main(["hilbert", "--file", m_pres, "--check"])
    assert code == 1
    assert "verification failed" in capsys.readouterr().err


def test_main_maps_zero_module_error_to_exit_2(zero_pres, monkeypatch, capsys):
    def boom(args):
        raise ZeroModuleError("no invariants for the zero module")
    monkeypatch.setattr(cli, "cmd_depth", boom)
    code = cli.main(["depth", "--file", zero_pres])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_module_entrypoint_help():
    code, out, err = run_cli("--help")
    assert code == 0
    assert "resolve" in out and "oracle" in out
