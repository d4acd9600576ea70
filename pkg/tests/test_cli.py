import json
import os

import pytest

from compocode.cli import main
from compocode.compositions import compose_all, parse, serialize

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode_decode_roundtrip_recon(tmp_path, capsys, monkeypatch):
    info = "101001010101"
    inp = tmp_path / "info.txt"
    inp.write_text(info + "\n")
    cw = tmp_path / "cw.txt"
    code, _, _ = run(capsys, "encode", "--scheme", "recon", "--k", "12",
                     "--input", str(inp), "--output", str(cw))
    assert code == 0
    manifest = json.loads((tmp_path / "cw.txt.manifest.json").read_text())
    assert manifest["scheme"] == "recon" and manifest["k"] == 12
    ms = tmp_path / "ms.txt"
    code, _, _ = run(capsys, "compose", "--input", str(cw),
                     "--output", str(ms))
    assert code == 0
    code, out, _ = run(capsys, "decode", "--scheme", "recon", "--k", "12",
                       "--input", str(ms))
    assert code == 0 and out.strip() == info


def test_compose_format_roundtrips(tmp_path, capsys):
    for s in ("010110", "00001111111", "01" * 15 + "1"):
        inp = tmp_path / "cw.txt"
        inp.write_text(s + "\n")
        code, out, _ = run(capsys, "compose", "--input", str(inp))
        assert code == 0
        assert parse(out) == compose_all(s)
        assert serialize(parse(out)) == out


def test_example_pipeline_from_fixtures(capsys):
    # the checked-in corrupted multisets decode back to the same info as
    # the clean codeword they came from
    code, clean_out, _ = run(capsys, "decode", "--scheme", "asym1", "--k",
                             "5", "--input",
                             os.path.join(FIXTURES, "example2_clean.txt"))
    assert code == 0
    for fx in ("example2_corrupted.txt", "example3_corrupted.txt"):
        code, out, _ = run(capsys, "decode", "--scheme", "asym1", "--k", "5",
                           "--input", os.path.join(FIXTURES, fx))
        assert code == 0 and out == clean_out


def test_corrupt_then_decode_asym_t(tmp_path, capsys):
    info = "1011001010"
    inp = tmp_path / "info.txt"
    inp.write_text(info)
    cw = tmp_path / "cw.txt"
    assert run(capsys, "encode", "--scheme", "asym-t", "--t", "2", "--k",
               "10", "--input", str(inp), "--output", str(cw))[0] == 0
    manifest = json.loads((tmp_path / "cw.txt.manifest.json").read_text())
    assert manifest["redundancy"] == manifest["n"] - 10
    ms = tmp_path / "ms.txt"
    assert run(capsys, "compose", "--input", str(cw),
               "--output", str(ms))[0] == 0
    bad = tmp_path / "bad.txt"
    code, _, _ = run(capsys, "corrupt", "--model", "asym", "--errors", "2",
                     "--seed", "7", "--input", str(ms), "--output", str(bad))
    assert code == 0
    log = json.loads((tmp_path / "bad.txt.manifest.json").read_text())
    assert len(log["error_log"]) == 2
    code, out, _ = run(capsys, "decode", "--scheme", "asym-t", "--t", "2",
                       "--k", "10", "--input", str(bad))
    assert code == 0 and out.strip() == info


def test_decode_over_budget_exits_4(tmp_path, capsys):
    info = "10110"
    inp = tmp_path / "info.txt"
    inp.write_text(info)
    cw = tmp_path / "cw.txt"
    run(capsys, "encode", "--scheme", "asym1", "--k", "5",
        "--input", str(inp), "--output", str(cw))
    ms = tmp_path / "ms.txt"
    run(capsys, "compose", "--input", str(cw), "--output", str(ms))
    bad = tmp_path / "bad.txt"
    run(capsys, "corrupt", "--model", "sym", "--errors", "3", "--seed", "1",
        "--input", str(ms), "--output", str(bad))
    code, out, err = run(capsys, "decode", "--scheme", "asym1", "--k", "5",
                         "--input", str(bad))
    # never a silently wrong answer: either a clean failure or the truth
    if code == 0:
        assert out.strip() == info
    else:
        assert code == 4 and "decode" in err


def test_sym_catalan_cli_pipeline(tmp_path, capsys):
    info = "101"
    inp = tmp_path / "info.txt"
    inp.write_text(info)
    cw = tmp_path / "cw.txt"
    assert run(capsys, "encode", "--scheme", "sym-catalan", "--t", "1",
               "--k", "3", "--input", str(inp), "--output", str(cw))[0] == 0
    ms = tmp_path / "ms.txt"
    run(capsys, "compose", "--input", str(cw), "--output", str(ms))
    bad = tmp_path / "bad.txt"
    run(capsys, "corrupt", "--model", "sym", "--errors", "1", "--seed", "2",
        "--input", str(ms), "--output", str(bad))
    code, out, _ = run(capsys, "decode", "--scheme", "sym-catalan", "--t",
                       "1", "--k", "3", "--input", str(bad))
    assert code == 0 and out.strip() == info


def test_golden_sym_poly_codeword(capsys):
    # fixed systematic encoder output for the all-zero info word
    from compocode.sym import etn_encode_info
    with open(os.path.join(FIXTURES, "sym_poly_t1_k8_zero_info.txt")) as f:
        golden = f.read().strip()
    assert etn_encode_info("0" * 8, 1) == golden


def test_exit_codes(tmp_path, capsys):
    # unknown scheme -> argparse exits 2
    with pytest.raises(SystemExit) as ei:
        main(["encode", "--scheme", "nope", "--k", "4"])
    assert ei.value.code == 2
    # info length mismatch -> 3
    inp = tmp_path / "info.txt"
    inp.write_text("10")
    assert run(capsys, "encode", "--scheme", "recon", "--k", "5",
               "--input", str(inp))[0] == 3
    # malformed multiset -> 3
    bad = tmp_path / "bad.txt"
    bad.write_text("not a multiset\n")
    assert run(capsys, "decode", "--scheme", "recon", "--k", "5",
               "--input", str(bad))[0] == 3
    # t missing for a t-parameterized scheme -> 2
    inp2 = tmp_path / "i2.txt"
    inp2.write_text("1010")
    assert run(capsys, "encode", "--scheme", "asym-t", "--k", "4",
               "--input", str(inp2))[0] == 2
    # negative k -> 2
    assert main(["encode", "--scheme", "recon", "--k", "0",
                 "--input", str(inp2)]) == 2


def test_sim_determinism_and_formats(tmp_path, capsys):
    args = ["sim", "--scheme", "asym1", "--k", "6", "--model", "asym",
            "--errors", "1", "--trials", "12", "--seed", "42"]
    code, a, _ = run(capsys, *args)
    code2, b, _ = run(capsys, *args)
    assert code == code2 == 0 and a == b
    assert a.splitlines()[0].startswith("scheme,")
    code, j, _ = run(capsys, *args, "--format", "json")
    assert code == 0
    rep = json.loads(j)
    assert rep["success_rate"] == 1.0 and rep["trials"] == 12


def test_sim_report_file_with_manifest(tmp_path, capsys):
    out = tmp_path / "report.csv"
    code, _, _ = run(capsys, "sim", "--scheme", "recon", "--k", "8",
                     "--model", "sym", "--errors", "0", "--trials", "5",
                     "--seed", "1", "--output", str(out))
    assert code == 0
    assert out.exists() and (tmp_path / "report.csv.manifest.json").exists()
    manifest = json.loads((tmp_path / "report.csv.manifest.json").read_text())
    assert manifest["success_rate"] == 1.0
