import json
import math
import os
import subprocess
import sys

import pytest

from cuplength import cli, spaces
from cuplength.cup import CupDiagram, compute_cup_diagram
from cuplength.errors import AsymmetricMatrix, MissingFace, ParseError
from cuplength.functions import Interval, reconstruct

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "cuplength.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_load_distance_csv(tmp_path):
    p = tmp_path / "d.csv"
    p.write_text("0,1\n1,0\n")
    assert cli.load_distance_csv(str(p)) == [[0.0, 1.0], [1.0, 0.0]]


def test_load_distance_csv_rejects_asymmetry(tmp_path):
    p = tmp_path / "d.csv"
    p.write_text("0,1\n2,0\n")
    with pytest.raises(AsymmetricMatrix):
        cli.load_distance_csv(str(p))


def test_unit_square_fixture_reproduces_square_complex():
    d = cli.load_distance_csv(fixture("unit_square.csv"))
    assert d == spaces.unit_square_distances()


def test_load_filtered_complex(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("# circle\n0 0\n0 1\n0 2\n0 0 1\n0 0 2\n0 1 2\n")
    c = cli.load_filtered_complex(str(p))
    assert len(c) == 6 and c.dim == 1


def test_load_klein_fixture():
    c = cli.load_filtered_complex(fixture("klein_staged.txt"))
    assert c.critical_values == [0.0, 1.0, 2.0, 3.0]
    ref = spaces.staged_klein()
    assert c.simplices == ref.simplices and c.grades == ref.grades


def test_load_complex_sorts_vertices_and_rejects_repeats(tmp_path):
    lone = tmp_path / "lone.txt"
    lone.write_text("1 3 2\n")
    with pytest.raises(MissingFace):
        cli.load_filtered_complex(str(lone))
    ok = tmp_path / "ok.txt"
    ok.write_text("0 2\n0 3\n1 3 2\n")
    c = cli.load_filtered_complex(str(ok))
    assert (2, 3) in c
    dup = tmp_path / "dup.txt"
    dup.write_text("1 2 2\n")
    with pytest.raises(ParseError):
        cli.load_filtered_complex(str(dup))


def test_cup_diagram_klein_json_exact():
    proc = run_cli("cup-diagram", fixture("klein_staged.txt"), "--max-dim", "2")
    assert proc.returncode == 0
    assert proc.stdout == (
        '{"points":[{"birth":1,"death":3,"inf":false,"value":1},'
        '{"birth":2,"death":3,"inf":false,"value":2},'
        '{"birth":2,"inf":true,"value":2}]}\n'
    )


def test_erosion_presets_pi_third():
    proc = run_cli("erosion", "torus:8", "wedge-lower")
    assert proc.returncode == 0
    assert abs(float(proc.stdout.strip()) - math.pi / 3) <= 1e-9


def test_erosion_function_files(tmp_path):
    d, _, _ = compute_cup_diagram(spaces.staged_klein(), 2)
    f = reconstruct(d)
    p = tmp_path / "f.json"
    p.write_text(cli.function_to_json(f))
    proc = run_cli("erosion", str(p), str(p))
    assert proc.returncode == 0
    assert float(proc.stdout.strip()) == 0.0


def test_oracle_check_exit_codes():
    proc = run_cli("oracle-check", fixture("hollow_triangle.txt"))
    assert proc.returncode == 0
    assert "OK" in proc.stdout


def test_vr_command_round_trip(tmp_path):
    out = tmp_path / "square.txt"
    proc = run_cli(
        "vr", fixture("unit_square.csv"), "--max-dim", "1", "--max-scale", "2",
        "--output", str(out),
    )
    assert proc.returncode == 0
    c = cli.load_filtered_complex(str(out))
    assert c.dim == 2
    assert len(c) == 4 + 6 + 4


def test_diagram_json_round_trip():
    for c in (spaces.staged_klein(), spaces.csaszar_torus(), spaces.two_disks()):
        d, _, _ = compute_cup_diagram(c, 2)
        again = cli.parse_diagram(cli.diagram_to_json(d))
        assert again == d


def test_function_json_round_trip():
    d, _, _ = compute_cup_diagram(spaces.staged_klein(), 2)
    f = reconstruct(d)
    assert cli.parse_function(cli.function_to_json(f)) == f


def test_barcode_json_round_trip_and_zero_bars():
    proc = run_cli("barcode", fixture("two_disks.txt"), "--max-dim", "1")
    assert proc.returncode == 0
    bars = cli.parse_barcode(proc.stdout)
    dims = sorted(bar.dim for bar in bars)
    assert dims == [0, 0, 1, 1]


def test_diagram_csv():
    d = CupDiagram(
        {Interval.closed_open(1.0, 3.0): 1, Interval(2.0, math.inf): 2}
    )
    assert cli.diagram_to_csv(d) == "birth,death,inf,value\n1,3,false,1\n2,,true,2\n"


def test_csv_rejected_outside_diagram():
    proc = run_cli("cup-function", fixture("hollow_triangle.txt"), "--format", "csv")
    assert proc.returncode == 2


def test_svg_deterministic_and_plot_command(tmp_path):
    a = run_cli("cup-diagram", fixture("klein_staged.txt"), "--format", "svg")
    b = run_cli("cup-diagram", fixture("klein_staged.txt"), "--format", "svg")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert a.stdout.startswith("<svg") and a.stdout.rstrip().endswith("</svg>")
    dj = tmp_path / "d.json"
    run = run_cli("cup-diagram", fixture("klein_staged.txt"), "--output", str(dj))
    assert run.returncode == 0
    plot = run_cli("plot", str(dj))
    assert plot.returncode == 0 and plot.stdout.startswith("<svg")
    fj = tmp_path / "f.json"
    run_cli("cup-function", fixture("klein_staged.txt"), "--output", str(fj))
    plot2 = run_cli("plot", str(fj))
    assert plot2.returncode == 0 and "polygon" in plot2.stdout


def test_report_directory(tmp_path):
    out = tmp_path / "rep"
    proc = run_cli("report", fixture("klein_staged.txt"), "--output", str(out))
    assert proc.returncode == 0
    names = sorted(os.listdir(out))
    assert names == [
        "barcode.json",
        "barcode.svg",
        "diagram.csv",
        "diagram.json",
        "diagram.svg",
        "function.json",
        "function.svg",
    ]
    data = json.loads((out / "diagram.json").read_text())
    assert len(data["points"]) == 3


def test_missing_file_exit_code():
    proc = run_cli("cup-diagram", "no_such_file.txt")
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_invalid_config_exit_code():
    proc = run_cli("cup-diagram", fixture("hollow_triangle.txt"), "--max-dim", "0")
    assert proc.returncode == 2
    proc = run_cli("cup-diagram", fixture("hollow_triangle.txt"), "--trim", "-1")
    assert proc.returncode == 2
