"""
Files, the command line, the property harness and plots
=======================================================

Everything the library does is reachable from the ``powerspec`` program.
This script drives it in-process through ``powerspec.cli.main`` and reads
the JSON it writes.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

import powerspec as ps
from powerspec import io
from powerspec.check import run_check
from powerspec.cli import main
from powerspec.plot import emit_plot

work = Path(tempfile.mkdtemp())

# the text format: a header "r n m" followed by one edge per line
graph = work / "s4.txt"
graph.write_text("# star with centre 0\n2 4 3\n0 1\n0 2\n0 3\n")
s4 = io.parse_hypergraph_file(graph)
print(s4.edges)

# malformed input names the offending line
try:
    io.parse_hypergraph_text("2 3 1\n0 7\n")
except ps.ParseError as exc:
    print(exc)

# power-spectrum with a JSON report and an SVG plot
report_path = work / "report.json"
code = main(["power-spectrum", "--input", str(graph), "--s", "2", "--k", "5",
             "--json", str(report_path), "--plot", str(work / "s4.svg")])
print("exit", code)
report = io.report_from_json(report_path.read_text())
print([(c["c"], c["witness"]["subgraph"]) for c in report["classes"]])

# certify exits with 0 only when every class has a certified eigenvector
print("exit", main(["certify", "--input", str(graph), "--s", "2", "--k", "5"]))

# a bad request maps to exit code 2
print("exit", main(["power", "--input", str(graph), "--s", "3", "--k", "5"]))

# lift from an eigenpair file; a negative eigenvalue needs the --lambda=RE,IM form
pair = ps.verify_eigenpair(s4, 3 ** 0.5, [3 ** 0.5, 1, 1, 1])
pair_path = work / "pair.json"
pair_path.write_text(io.eigenpair_to_json(pair))
lam = 9 ** 0.2
print("exit", main(["lift", "--input", str(graph), "--s", "2", "--k", "5",
                    "--eigenpair", str(pair_path), f"--lambda={lam},0"]))

# the randomized harness; the injected fault shows that it can fail
print(run_check(seed=1, trials=50).summary())
try:
    run_check(seed=1, trials=50, fault="skip-cleanup")
except ps.CheckFailed as exc:
    print(exc)

# a plot straight from the library
result = ps.power_spectrum(s4, 2, 5)
points = emit_plot(result.root_classes, work / "direct.svg", title="S4, s = 2, k = 5")
print(len(points), np.round(np.max(np.abs(points)), 6))
print(sorted(p.name for p in work.iterdir()))
