"""Reading and writing hypergraphs, eigenpairs, spectra and reports.

Text format for hypergraphs::

    # optional comment lines
    r n m
    v1 v2 ... vr        (m lines, 0-based vertex ids)

JSON documents are emitted with a fixed key order and two-space indentation,
so identical inputs give byte-identical files.  Floats are written with
Python's shortest round-trip representation, which parses back to the
identical double.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError
from .hypergraph import Additional, Copy, Main, Provenance, UniformHypergraph, validate
from .spectral import RootClass, Spectrum
from .tensor import Eigenpair


# text format

def parse_hypergraph_text(text: str) -> UniformHypergraph:
    header = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            numbers = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {line!r}") from None
        if header is None:
            if len(numbers) != 3:
                raise ParseError(lineno, "header must be 'r n m'")
            r, n, m = numbers
            if r < 2 or n < 0 or m < 0:
                raise ParseError(lineno, f"invalid header values r={r}, n={n}, m={m}")
            header = (r, n, m)
            continue
        r, n, m = header
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges")
        if len(numbers) != r:
            raise ParseError(lineno, f"edge has {len(numbers)} vertex ids, expected {r}")
        if len(set(numbers)) != r:
            raise ParseError(lineno, "edge repeats a vertex")
        bad = [v for v in numbers if not 0 <= v < n]
        if bad:
            raise ParseError(lineno, f"vertex id {bad[0]} not in [0, {n})")
        key = tuple(sorted(numbers))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge (first seen on line {seen[key]})")
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise ParseError(0, "missing 'r n m' header")
    if len(edges) != header[2]:
        raise ParseError(len(text.splitlines()), f"declared {header[2]} edges, found {len(edges)}")
    h = UniformHypergraph(header[0], header[1], tuple(edges))
    validate(h)
    return h


def parse_hypergraph_file(path) -> UniformHypergraph:
    """Read the text format from ``path``.

    :param path: file in the ``r n m`` + edge-lines format
    :raises ParseError: on a malformed line (carries the 1-based line number)
    """
    return parse_hypergraph_text(Path(path).read_text())


def format_hypergraph(h: UniformHypergraph) -> str:
    lines = [f"{h.r} {h.n} {h.m}"]
    lines += [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def write_hypergraph_file(h: UniformHypergraph, path) -> None:
    Path(path).write_text(format_hypergraph(h))


def load_hypergraph(path) -> UniformHypergraph:
    """Read either format, choosing JSON when the file starts with ``{``."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return hypergraph_from_json(text)
    return parse_hypergraph_text(text)


# JSON helpers

def _num(x: float) -> float:
    return float(x) + 0.0  # folds -0.0 into 0.0


def complex_to_json(z) -> dict:
    z = complex(z)
    return {"re": _num(z.real), "im": _num(z.imag)}


def complex_from_json(d) -> complex:
    try:
        return complex(float(d["re"]), float(d["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad complex number {d!r}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None


def tag_to_json(tag) -> dict:
    if isinstance(tag, Main):
        return {"kind": "main", "vertex": tag.vertex}
    if isinstance(tag, Copy):
        return {"kind": "copy", "vertex": tag.vertex, "index": tag.index}
    return {"kind": "additional", "edge": list(tag.edge), "index": tag.index}


def tag_from_json(d):
    kind = d.get("kind")
    if kind == "main":
        return Main(int(d["vertex"]))
    if kind == "copy":
        return Copy(int(d["vertex"]), int(d["index"]))
    if kind == "additional":
        return Additional(tuple(int(v) for v in d["edge"]), int(d["index"]))
    raise ValidationError(f"unknown provenance tag {d!r}")


# hypergraph JSON

def hypergraph_to_dict(h: UniformHypergraph) -> dict:
    out = {"r": h.r, "n": h.n, "edges": [list(e) for e in h.edges], "provenance": None}
    if h.provenance is not None:
        prov = h.provenance
        out["provenance"] = [tag_to_json(t) for t in prov.tags]
        out["s"] = prov.s
        out["k"] = prov.k
        out["base"] = hypergraph_to_dict(prov.base)
    return out


def hypergraph_from_dict(d: dict) -> UniformHypergraph:
    try:
        r, n, edges = int(d["r"]), int(d["n"]), d["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"hypergraph JSON needs r, n and edges: {exc}") from exc
    provenance = None
    if d.get("provenance") is not None:
        base = hypergraph_from_dict(d["base"])
        tags = tuple(tag_from_json(t) for t in d["provenance"])
        if len(tags) != n:
            raise ValidationError(f"provenance lists {len(tags)} tags for {n} vertices")
        provenance = Provenance(base, int(d["s"]), int(d["k"]), tags)
    h = UniformHypergraph(r, n, tuple(tuple(e) for e in edges), provenance=provenance)
    validate(h)
    return h


def hypergraph_to_json(h: UniformHypergraph) -> str:
    return dumps(hypergraph_to_dict(h))


def hypergraph_from_json(text: str) -> UniformHypergraph:
    return hypergraph_from_dict(_loads(text))


# eigenpairs

def eigenpair_to_json(p: Eigenpair) -> str:
    return dumps(
        {
            "lambda": complex_to_json(p.lam),
            "vector": [complex_to_json(z) for z in p.vector],
            "residual": _num(p.residual),
        }
    )


def eigenpair_from_json(text: str) -> Eigenpair:
    d = _loads(text)
    try:
        vec = np.array([complex_from_json(z) for z in d["vector"]], dtype=complex)
        return Eigenpair(complex_from_json(d["lambda"]), vec, float(d.get("residual", float("nan"))))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"eigenpair JSON needs lambda and vector: {exc}") from exc


# spectra

def spectrum_to_dict(sp: Spectrum) -> dict:
    if sp.kind == "values":
        items = [complex_to_json(z) for z in sp.items]
    else:
        items = [{"c": complex_to_json(rc.c), "order": rc.order} for rc in sp.items]
    return {"kind": sp.kind, "k": sp.k, "items": items}


def spectrum_from_dict(d: dict) -> Spectrum:
    kind = d.get("kind")
    if kind == "values":
        items = tuple(complex_from_json(z) for z in d["items"])
    elif kind == "root_classes":
        items = tuple(RootClass(complex_from_json(it["c"]), int(it["order"])) for it in d["items"])
    else:
        raise ValidationError(f"unknown spectrum kind {kind!r}")
    return Spectrum(kind, items, k=d.get("k"))


def spectrum_to_json(sp: Spectrum) -> str:
    return dumps(spectrum_to_dict(sp))


def spectrum_from_json(text: str) -> Spectrum:
    return spectrum_from_dict(_loads(text))


# power-spectrum reports

def report_to_dict(result, certified=None) -> dict:
    """Report document for a :class:`~powerspec.power.PowerSpectrumResult`.

    ``certified`` is ``None`` for every class unless certification ran.
    """
    classes = []
    for pc in result.classes:
        classes.append(
            {
                "c": complex_to_json(pc.root_class.c),
                "order": pc.root_class.order,
                "witness": {"subgraph": pc.witness.canonical.decode(), "beta": complex_to_json(pc.witness.beta)},
                "certified": pc.certified,
            }
        )
    return {"r": result.r, "s": result.s, "k": result.k, "mode": result.mode, "classes": classes}


def report_to_json(result) -> str:
    return dumps(report_to_dict(result))


def report_from_json(text: str) -> dict:
    """Parse a report; complex fields come back as ``complex``."""
    d = _loads(text)
    try:
        out = {key: d[key] for key in ("r", "s", "k", "mode")}
        out["classes"] = [
            {
                "c": complex_from_json(c["c"]),
                "order": int(c["order"]),
                "witness": {"subgraph": c["witness"]["subgraph"], "beta": complex_from_json(c["witness"]["beta"])},
                "certified": c["certified"],
            }
            for c in d["classes"]
        ]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed report: {exc}") from exc
    return out


def supplied_from_json(text: str) -> dict:
    """Eigenpairs for r >= 3 components: ``{canonical form: [{"beta":…, "vector":[…]}, …]}``."""
    d = _loads(text)
    return {
        key: [(complex_from_json(item["beta"]), [complex_from_json(z) for z in item["vector"]]) for item in items]
        for key, items in d.items()
    }
