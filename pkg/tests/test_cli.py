import json

import pytest

from powerspec import io
from powerspec.cli import main, parse_complex


@pytest.fixture
def c4_file(tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text("2 4 4\n0 1\n1 2\n2 3\n3 0\n")
    return f


def test_parse_complex():
    assert parse_complex("1.5,-2") == complex(1.5, -2)
    assert parse_complex("3") == 3


def test_spectrum(c4_file, tmp_path, capsys):
    out = tmp_path / "sp.json"
    assert main(["spectrum", "--input", str(c4_file), "--json", str(out)]) == 0
    sp = io.spectrum_from_json(out.read_text())
    assert sorted(z.real for z in sp.items) == [-2, 0, 2]


def test_power_spectrum_report_is_deterministic(c4_file, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["power-spectrum", "--input", str(c4_file), "--k", "4", "--json", str(a)]) == 0
    assert main(["power-spectrum", "--input", str(c4_file), "--k", "4", "--json", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["mode"] == "general" and len(doc["classes"]) == 5


def test_certify(c4_file, tmp_path):
    out = tmp_path / "r.json"
    assert main(["certify", "--input", str(c4_file), "--k", "3", "--json", str(out)]) == 0
    assert all(c["certified"] for c in json.loads(out.read_text())["classes"])


def test_lift_verify_descend(c4_file, tmp_path):
    base = tmp_path / "base.json"
    base.write_text(io.eigenpair_to_json(io.Eigenpair(2, [1, 1, 1, 1], 0.0)))
    lifted = tmp_path / "lifted.json"
    power = tmp_path / "power.json"
    down = tmp_path / "down.json"
    assert main(["lift", "--input", str(c4_file), "--k", "3", "--lambda=-0.7937005259840997,1.374729636998603",
                 "--eigenpair", str(base), "--json", str(lifted)]) == 0
    assert main(["power", "--input", str(c4_file), "--k", "3", "--json", str(power)]) == 0
    assert main(["verify", "--input", str(power), "--eigenpair", str(lifted)]) == 0
    assert main(["descend", "--input", str(c4_file), "--k", "3", "--eigenpair", str(lifted), "--json", str(down)]) == 0
    assert io.eigenpair_from_json(down.read_text()).lam ** 2 == pytest.approx(4)


def test_structural_commands(c4_file, tmp_path, capsys):
    assert main(["expand", "--input", str(c4_file), "--k", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "3 8 4"
    assert main(["extend", "--input", str(c4_file), "--s", "2"]) == 0
    assert "4 8 4" in capsys.readouterr().out


def test_radius_and_plot(c4_file, tmp_path, capsys):
    assert main(["radius", "--input", str(c4_file)]) == 0
    assert "spectral radius 2" in capsys.readouterr().out
    svg = tmp_path / "p.svg"
    assert main(["plot", "--input", str(c4_file), "--k", "3", "--plot", str(svg)]) == 0
    assert svg.exists()


def test_check_and_fault(capsys):
    assert main(["check", "--seed", "1", "--trials", "5"]) == 0
    assert main(["check", "--seed", "1", "--trials", "5", "--fault", "skip-cleanup"]) == 3


def test_exit_codes(tmp_path, c4_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 4 2\n0 1\n0 1\n")
    assert main(["spectrum", "--input", str(bad)]) == 2
    assert main(["power-spectrum", "--input", str(c4_file), "--k", "1"]) == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(io.eigenpair_to_json(io.Eigenpair(1.5, [1, 1, 1, 1], 0.0)))
    assert main(["verify", "--input", str(c4_file), "--eigenpair", str(wrong)]) == 3
    big = tmp_path / "big.txt"
    big.write_text("2 40 39\n" + "".join(f"{i} {i + 1}\n" for i in range(39)))
    assert main(["spectrum", "--input", str(big)]) == 4
    with pytest.raises(SystemExit) as info:
        main(["spectrum"])
    assert info.value.code == 2
