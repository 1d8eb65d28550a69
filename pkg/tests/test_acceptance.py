"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
repeated in the pytest terminal summary. Run directly for the lines alone:

    python tests/test_acceptance.py
"""
import os
from pathlib import Path
import subprocess
import sys
import tempfile
import time

import numpy as np
import pytest

from madfc import generate_ticks, mad_forward, mad_inverse, scale_inverse
from madfc.render import ChartSpec, render_errorbar, render_violin
from madfc.simulate import simulate_boxplot_dataset, simulate_interval_dataset, \
    simulate_violin_dataset
from madfc.ticks import label_tolerance, parse_label

sys.path.insert(0, str(Path(__file__).parent))
import _svg  # noqa: E402

DATA = Path(__file__).parent / "data"
RESULTS = []


def _samples(n, seed):
    rng = np.random.default_rng(seed)
    return 10.0 ** rng.uniform(-4, 4, n)


def check_round_trip():
    x = _samples(100_000, 1)
    start = time.perf_counter()
    back = mad_inverse(mad_forward(x))
    elapsed = time.perf_counter() - start
    err = float(np.max(np.abs(back - x) / x))
    return err < 1e-12 and elapsed < 1.0, f"max rel err {err:.2e}, {elapsed * 1e3:.1f} ms"


def check_symmetry():
    x = _samples(100_000, 1)
    a, b = mad_forward(1.0 / x), -mad_forward(x)
    err = float(np.max(np.abs(a - b) / np.abs(b)))
    return err < 1e-12, f"max rel err {err:.2e}"


def check_proportionality():
    rng = np.random.default_rng(2)
    x = 1.0 + 10.0 ** rng.uniform(-3, 4, 10_000)
    y = 1.0 + 10.0 ** rng.uniform(-3, 4, 10_000)
    expected = (x - 1) / (y - 1)
    up = float(np.max(np.abs(mad_forward(x) / mad_forward(y) - expected)))
    # reciprocal pairs: ratios reach 1e10 here, so only a relative bound is meaningful
    down = float(np.max(np.abs(mad_forward(1 / x) / mad_forward(1 / y) / expected - 1)))
    return up < 1e-12 and down < 1e-12, f"x, y > 1 abs diff {up:.2e}; reciprocal rel diff {down:.2e}"


def check_fcz_table():
    got = [mad_forward(v) for v in (2.0, 3.0, 1 / 2, 1 / 3)]
    return got == [1.0, 2.0, -1.0, -2.0], f"{got}"


def check_sweep_endpoints():
    ends = (mad_forward(9.0), mad_forward(1 / 9))
    widths = {mad_forward(s.q3) - mad_forward(s.q1) for s in simulate_boxplot_dataset(0)}
    ok = ends == (8.0, -8.0) and widths == {4.0}
    return ok, f"mad(9), mad(1/9) = {ends}, box widths {sorted(widths)}"


def check_errorbar():
    start = time.perf_counter()
    data = simulate_interval_dataset()
    mad = _svg.bar_lengths(_svg.parse(render_errorbar(data, ChartSpec("errorbar", "madfc"))))
    log = _svg.bar_lengths(_svg.parse(render_errorbar(data, ChartSpec("errorbar", "log2"))))
    elapsed = time.perf_counter() - start
    spread, ratio = max(mad) - min(mad), max(log) / min(log)
    ok = spread <= 0.5 and ratio > 1.5 and elapsed < 1.0 and len(mad) == len(data)
    return ok, f"madfc spread {spread:.3f} px, log2 ratio {ratio:.2f}, {elapsed * 1e3:.0f} ms"


def _violin_profiles(scale):
    doc = render_violin(simulate_violin_dataset(), ChartSpec("violin", scale))
    return np.array([_svg.violin_widths(el)[0]
                     for el in _svg.find(_svg.parse(doc), "polygon", "violin")])


def check_violin():
    mad, log = _violin_profiles("madfc"), _violin_profiles("log2")
    d_mad = float(np.max(np.abs(mad - mad[0])))
    d_log = float(np.max(np.abs(log - log[0])))
    return d_mad < 0.5 and d_log > 5.0, f"madfc max diff {d_mad:.3f} px, log2 {d_log:.1f} px"


def check_readability():
    rng = np.random.default_rng(8)
    checked, worst = 0, []
    for _ in range(50):
        lo, hi = sorted(10.0 ** rng.uniform(-3, 3, 2))
        for scale in ("log2", "linear", "madfc"):
            for fmt in ("decimal", "fraction", "exponent"):
                for pos, label in generate_ticks(scale, lo, hi, label_format=fmt):
                    fc = scale_inverse(scale, pos)
                    checked += 1
                    if abs(parse_label(label) - fc) > label_tolerance(fc, fmt):
                        worst.append((scale, fmt, pos, label))
    return not worst and checked > 0, f"{checked} labels, {len(worst)} unreadable {worst[:3]}"


_CLI_SCRIPT = """
import sys
from madfc.cli import main
out, data = sys.argv[1], sys.argv[2]
inputs = {"volcano": "de_table.csv", "ma": "de_table.csv", "heatmap": "heatmap.csv",
          "box": "expression.csv", "violin": "expression.csv"}
for name in ("fig4a", "fig5a", "fig6a"):
    assert main(["simulate", name, "--seed", "7", "--out", f"{out}/{name}.csv"]) == 0
inputs["errorbar"] = f"{out}/fig4a.csv"
for scale in ("log2", "linear", "madfc"):
    for kind, src in inputs.items():
        path = src if src.startswith(out) else f"{data}/{src}"
        assert main(["plot", kind, "--scale", scale, "--input", path,
                     "--out", f"{out}/{kind}_{scale}.svg"]) == 0
    assert main(["plot", "box", "--scale", scale, "--input", f"{out}/fig5a.csv",
                 "--out", f"{out}/boxsummary_{scale}.svg"]) == 0
    assert main(["plot", "violin", "--scale", scale, "--input", f"{out}/fig6a.csv",
                 "--out", f"{out}/violinsim_{scale}.svg"]) == 0
"""


def check_determinism():
    with tempfile.TemporaryDirectory() as tmp:
        dirs = []
        for run, hashseed in enumerate(("1", "2")):
            out = Path(tmp) / str(run)
            out.mkdir()
            env = dict(os.environ, PYTHONHASHSEED=hashseed)
            subprocess.run([sys.executable, "-c", _CLI_SCRIPT, str(out), str(DATA)],
                           check=True, env=env, capture_output=True)
            dirs.append(out)
        names = sorted(p.name for p in dirs[0].iterdir())
        differ = [n for n in names if (dirs[0] / n).read_bytes() != (dirs[1] / n).read_bytes()]
        ok = not differ and names == sorted(p.name for p in dirs[1].iterdir())
    return ok, f"{len(names)} files, {len(differ)} differ {differ[:3]}"


def check_dynamic_range_warning():
    counts = {}
    with tempfile.TemporaryDirectory() as tmp:
        for fc in (1000, 50):
            src = Path(tmp) / f"de_{fc}.csv"
            src.write_text(f"id,fc,pvalue,basemean\nA,{fc},0.001,40\nB,0.5,0.2,12\nC,1.2,0.6,8\n")
            proc = subprocess.run(
                [sys.executable, "-m", "madfc", "plot", "volcano", "--scale", "madfc",
                 "--input", str(src), "--out", str(Path(tmp) / f"v_{fc}.svg")],
                capture_output=True, text=True)
            lines = [ln for ln in proc.stderr.splitlines() if ln.startswith("warning:")]
            counts[fc] = (proc.returncode, len(lines))
    ok = counts == {1000: (0, 1), 50: (0, 0)}
    return ok, f"(exit, warnings) fc=1000 -> {counts[1000]}, fc=50 -> {counts[50]}"


CRITERIA = [
    (1, "transform round-trip", check_round_trip),
    (2, "symmetry", check_symmetry),
    (3, "proportionality", check_proportionality),
    (4, "FCZ table equivalence", check_fcz_table),
    (5, "box sweep endpoints and widths", check_sweep_endpoints),
    (6, "error-bar chart widths", check_errorbar),
    (7, "violin width profiles", check_violin),
    (8, "tick label readability", check_readability),
    (9, "CLI determinism", check_determinism),
    (10, "dynamic-range warning", check_dynamic_range_warning),
]


def _evaluate(number, name, check):
    ok, detail = check()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {name}: {detail}"
    print(line)
    RESULTS.append(line)
    return ok, line


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, name, check):
    ok, line = _evaluate(number, name, check)
    assert ok, line


if __name__ == "__main__":
    results = [_evaluate(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
