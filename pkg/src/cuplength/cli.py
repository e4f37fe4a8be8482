"""Command-line pipeline and the JSON/CSV/complex file formats.

Subcommands:

  vr            distance CSV -> filtered complex (text)
  barcode       complex -> annotated barcode (dimension 0 included)
  cup-diagram   complex -> persistent cup-length diagram
  cup-function  complex -> persistent cup-length function
  erosion       two functions (JSON files or presets) -> distance
  oracle-check  complex -> compare pipeline against the brute-force oracle
  plot          diagram/function/barcode JSON -> SVG
  report        complex -> directory of JSON + CSV + SVG artifacts

A complex file holds one simplex per line, "grade v0 v1 ... vp", with
'#' comments.  Commands that read a complex also accept a distance CSV
(suffix .csv), building the Vietoris-Rips filtration up to dimension
max_dim + 1 first.  JSON is the canonical interchange format; infinite
deaths are encoded as "inf": true with the "death"/"right" key omitted,
never as a numeric sentinel.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

from . import oracle, plots
from .cohomology import Bar, Cochain, compute_barcode, connected_component_bars
from .cup import CupDiagram, compute_cup_diagram
from .errors import AsymmetricMatrix, CupLengthError, ParseError
from .functions import (
    CupFunction,
    Interval,
    analytic_vr_circle,
    analytic_vr_torus,
    analytic_vr_wedge_lower,
    erosion_distance,
    evaluate,
    reconstruct,
)
from .simplicial import (
    FilteredComplex,
    build_vietoris_rips,
    diameter,
    from_simplex_list,
    truncate,
)

INF = math.inf


@dataclass
class JobConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    max_dim: int = 2
    max_scale: float = INF
    trim: float = 0.0
    fmt: str = "json"
    output: str | None = None

    def __post_init__(self) -> None:
        if self.max_dim < 1:
            raise ParseError("--max-dim must be at least 1")
        if self.trim < 0:
            raise ParseError("--trim must be non-negative")


# ---------------------------------------------------------------- loading


def load_distance_csv(path: str) -> list[list[float]]:
    """Square symmetric distance matrix from comma-separated rows."""
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                rows.append([float(x) for x in line.split(",")])
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ParseError(f"{path}: expected a non-empty square matrix")
    for i in range(n):
        if rows[i][i] != 0:
            raise AsymmetricMatrix(f"{path}: non-zero diagonal at row {i}")
        for j in range(n):
            if abs(rows[i][j] - rows[j][i]) > 1e-12:
                raise AsymmetricMatrix(f"{path}: asymmetry at ({i},{j})")
            rows[i][j] = rows[j][i]
    return rows


def load_filtered_complex(path: str) -> FilteredComplex:
    """Parse 'grade v0 v1 ... vp' lines; vertices are sorted, repeats rejected."""
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ParseError(f"{path}:{lineno}: need a grade and vertices")
            try:
                grade = float(parts[0])
                verts = [int(x) for x in parts[1:]]
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            if len(set(verts)) != len(verts):
                raise ParseError(f"{path}:{lineno}: repeated vertex in {verts}")
            entries.append((verts, grade))
    if not entries:
        raise ParseError(f"{path}: no simplices")
    return from_simplex_list(entries)


def _load_complex_input(config: JobConfig, path: str) -> FilteredComplex:
    if path.endswith(".csv"):
        d = load_distance_csv(path)
        scale = config.max_scale if not math.isinf(config.max_scale) else diameter(d)
        return build_vietoris_rips(d, config.max_dim + 1, scale)
    return load_filtered_complex(path)


def complex_to_text(c: FilteredComplex) -> str:
    lines = [f"{_fmt_num(g)} {' '.join(str(v) for v in verts)}" for verts, g in zip(c.simplices, c.grades)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- JSON


def _fmt_num(x: float):
    xi = int(x)
    return xi if xi == x else x


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def diagram_to_json(d: CupDiagram) -> str:
    pts = []
    for interval, value in d.sorted_points():
        if interval.unbounded:
            pts.append({"birth": _fmt_num(interval.left), "inf": True, "value": value})
        else:
            pts.append(
                {
                    "birth": _fmt_num(interval.left),
                    "death": _fmt_num(interval.right),
                    "inf": False,
                    "value": value,
                }
            )
    return _dumps({"points": pts})


def parse_diagram(text: str) -> CupDiagram:
    data = json.loads(text)
    points: dict[Interval, int] = {}
    for p in data["points"]:
        birth = float(p["birth"])
        if p.get("inf"):
            interval = Interval(birth, INF)
        else:
            interval = Interval.closed_open(birth, float(p["death"]))
        points[interval] = int(p["value"])
    return CupDiagram(points)


def diagram_to_csv(d: CupDiagram) -> str:
    lines = ["birth,death,inf,value"]
    for interval, value in d.sorted_points():
        death = "" if interval.unbounded else _fmt_num(interval.right)
        flag = "true" if interval.unbounded else "false"
        lines.append(f"{_fmt_num(interval.left)},{death},{flag},{value}")
    return "\n".join(lines) + "\n"


def function_to_json(f: CupFunction) -> str:
    gens = []
    for interval, value in f.generators:
        item = {"left": _fmt_num(interval.left)}
        if interval.unbounded:
            item["inf"] = True
        else:
            item["right"] = _fmt_num(interval.right)
            item["inf"] = False
        item["left_closed"] = interval.left_closed
        item["right_closed"] = interval.right_closed
        item["value"] = value
        gens.append(item)
    return _dumps({"generators": gens})


def parse_function(text: str) -> CupFunction:
    data = json.loads(text)
    gens = []
    for g in data["generators"]:
        right = INF if g.get("inf") else float(g["right"])
        interval = Interval(
            float(g["left"]),
            right,
            bool(g.get("left_closed", True)),
            bool(g.get("right_closed", False)),
        )
        gens.append((interval, int(g["value"])))
    return CupFunction.from_pairs(gens)


def barcode_to_json(bars: list[Bar]) -> str:
    out = []
    for bar in bars:
        item = {"dim": bar.dim, "birth": _fmt_num(bar.birth)}
        if bar.essential:
            item["inf"] = True
        else:
            item["death"] = _fmt_num(bar.death)
            item["inf"] = False
        item["representative"] = [list(v) for v in bar.representative.sorted_summands()]
        out.append(item)
    return _dumps({"bars": out})


def parse_barcode(text: str) -> list[Bar]:
    data = json.loads(text)
    bars = []
    for item in data["bars"]:
        death = INF if item.get("inf") else float(item["death"])
        summands = frozenset(tuple(v) for v in item["representative"])
        rep = Cochain(int(item["dim"]), summands) if summands else Cochain.zero(int(item["dim"]))
        bars.append(Bar(int(item["dim"]), float(item["birth"]), death, rep))
    return bars


# ---------------------------------------------------------------- commands


def _emit(config: JobConfig, text: str) -> None:
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _function_source(source: str) -> CupFunction:
    presets = {"wedge-lower": analytic_vr_wedge_lower, "wedge": analytic_vr_wedge_lower}
    if source in presets:
        return presets[source]()
    for name, builder in (("circle", analytic_vr_circle), ("torus", analytic_vr_torus)):
        if source == name:
            return builder(8)
        if source.startswith(name + ":"):
            return builder(int(source.split(":", 1)[1]))
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_function(fh.read())
    raise ParseError(
        f"unknown function source {source!r}; expected a JSON file, "
        "'circle[:L]', 'torus[:L]' or 'wedge-lower'"
    )


def run(config: JobConfig) -> int:
    """Execute one job; returns the process exit code."""
    cmd = config.command
    if cmd == "vr":
        d = load_distance_csv(config.inputs[0])
        scale = config.max_scale if not math.isinf(config.max_scale) else diameter(d)
        c = build_vietoris_rips(d, config.max_dim + 1, scale)
        _emit(config, complex_to_text(c))
        return 0

    if cmd == "erosion":
        f = _function_source(config.inputs[0])
        g = _function_source(config.inputs[1])
        value = erosion_distance(f, g)
        _emit(config, f"{'inf' if math.isinf(value) else repr(value)}\n")
        return 0

    if cmd == "plot":
        with open(config.inputs[0], "r", encoding="utf-8") as fh:
            text = fh.read()
        data = json.loads(text)
        if "points" in data:
            svg = plots.render_diagram_svg(parse_diagram(text))
        elif "generators" in data:
            svg = plots.render_function_svg(parse_function(text))
        elif "bars" in data:
            svg = plots.render_barcode_svg(parse_barcode(text))
        else:
            raise ParseError(f"{config.inputs[0]}: unrecognized artifact")
        _emit(config, svg)
        return 0

    c = _load_complex_input(config, config.inputs[0])
    k = config.max_dim
    ct = truncate(c, k + 1)

    if cmd == "barcode":
        barcode = compute_barcode(ct, k)
        bars = connected_component_bars(ct) + list(barcode.bars)
        if config.fmt == "svg":
            _emit(config, plots.render_barcode_svg(bars))
        elif config.fmt == "csv":
            raise ParseError("csv output is available for cup-diagram only")
        else:
            _emit(config, barcode_to_json(bars) + "\n")
        return 0

    if cmd == "cup-diagram":
        diagram, stats, _ = compute_cup_diagram(c, k, config.trim)
        if config.fmt == "svg":
            _emit(config, plots.render_diagram_svg(diagram))
        elif config.fmt == "csv":
            _emit(config, diagram_to_csv(diagram))
        else:
            _emit(config, diagram_to_json(diagram) + "\n")
        return 0

    if cmd == "cup-function":
        diagram, _, _ = compute_cup_diagram(c, k, config.trim)
        f = reconstruct(diagram)
        if config.fmt == "svg":
            _emit(config, plots.render_function_svg(f))
        elif config.fmt == "csv":
            raise ParseError("csv output is available for cup-diagram only")
        else:
            _emit(config, function_to_json(f) + "\n")
        return 0

    if cmd == "oracle-check":
        diagram, _, _ = compute_cup_diagram(c, k, config.trim)
        f = reconstruct(diagram)
        g = oracle.oracle_cup_function(ct, k)
        cvs = ct.critical_values
        mismatches = []
        checked = 0
        for j, s in enumerate(cvs):
            for t in cvs[: j + 1]:
                checked += 1
                q = Interval.closed(t, s)
                a, b = evaluate(f, q), evaluate(g, q)
                if a != b:
                    mismatches.append(f"[{t:g}, {s:g}]: pipeline {a} vs oracle {b}")
        if mismatches:
            for line in mismatches:
                print(f"MISMATCH {line}")
            print(f"oracle-check: FAIL ({len(mismatches)}/{checked} grid intervals differ)")
            return 1
        print(f"oracle-check: OK ({checked} grid intervals)")
        return 0

    if cmd == "report":
        if not config.output:
            raise ParseError("report needs --output DIRECTORY")
        os.makedirs(config.output, exist_ok=True)
        diagram, _, barcode = compute_cup_diagram(c, k, config.trim)
        f = reconstruct(diagram)
        bars = connected_component_bars(ct) + list(barcode.bars)
        artifacts = {
            "barcode.json": barcode_to_json(bars) + "\n",
            "diagram.json": diagram_to_json(diagram) + "\n",
            "diagram.csv": diagram_to_csv(diagram),
            "function.json": function_to_json(f) + "\n",
            "diagram.svg": plots.render_diagram_svg(diagram),
            "function.svg": plots.render_function_svg(f),
            "barcode.svg": plots.render_barcode_svg(bars),
        }
        for name, text in artifacts.items():
            with open(os.path.join(config.output, name), "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            print(os.path.join(config.output, name))
        return 0

    raise ParseError(f"unknown command {cmd!r}")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cuplength",
        description="Persistent cup-length diagrams, functions and erosion distances over Z2.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_inputs: int, scale: bool = False):
        sp.add_argument("inputs", nargs=n_inputs, metavar="INPUT")
        sp.add_argument("--max-dim", dest="max_dim", type=int, default=2, metavar="K")
        sp.add_argument("--trim", type=float, default=0.0, metavar="EPS")
        sp.add_argument("--format", dest="fmt", choices=["json", "csv", "svg"], default="json")
        sp.add_argument("--output", default=None, metavar="PATH")
        if scale:
            sp.add_argument("--max-scale", dest="max_scale", type=float, default=INF, metavar="R")

    common(sub.add_parser("vr", help="build a Vietoris-Rips filtration"), 1, scale=True)
    common(sub.add_parser("barcode", help="annotated barcode"), 1, scale=True)
    common(sub.add_parser("cup-diagram", help="persistent cup-length diagram"), 1, scale=True)
    common(sub.add_parser("cup-function", help="persistent cup-length function"), 1, scale=True)
    common(sub.add_parser("erosion", help="erosion distance of two functions"), 2)
    common(sub.add_parser("oracle-check", help="pipeline vs oracle equivalence"), 1, scale=True)
    common(sub.add_parser("plot", help="render a JSON artifact to SVG"), 1)
    common(sub.add_parser("report", help="emit all artifacts into a directory"), 1, scale=True)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = JobConfig(
            command=args.command,
            inputs=list(args.inputs),
            max_dim=args.max_dim,
            max_scale=getattr(args, "max_scale", INF),
            trim=args.trim,
            fmt=args.fmt,
            output=args.output,
        )
        return run(config)
    except CupLengthError as exc:
        print(f"cuplength: error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"cuplength: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
