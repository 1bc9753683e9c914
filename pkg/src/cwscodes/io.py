"""JSON formats for graphs, codes, stabilizer presentations and reports."""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path

from cwscodes.bridge import StabilizerPresentation
from cwscodes.graph import CwsCode, Graph
from cwscodes.pauli import PauliOperator

__all__ = [
    "BUILTIN_CODES",
    "code_from_dict",
    "code_to_dict",
    "dumps",
    "graph_from_dict",
    "graph_to_dict",
    "load_code",
    "load_builtin_code",
    "presentation_from_dict",
]

BUILTIN_CODES = ("5-2-3", "5-6-2", "9-12-3", "10-18-3", "10-20-3")

_SHORT_LIST = re.compile(r"\[\s*(-?\d+),\s*(-?\d+)\s*\]")


def dumps(obj) -> str:
    """Indented JSON with integer pairs (edges, CZ/CX qubits) kept on one line."""
    return _SHORT_LIST.sub(r"[\1, \2]", json.dumps(obj, indent=2)) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(data: dict) -> Graph:
    n = int(data["n"])
    if "edges" in data:
        seen = set()
        for i, j in data["edges"]:
            if not i < j:
                raise ValueError(f"edge [{i}, {j}] must satisfy i < j")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge [{i}, {j}]")
            seen.add((i, j))
        return Graph.from_edges(n, data["edges"])
    if "rows" in data:
        g = Graph.from_row_strings(data["rows"])
        if g.n != n:
            raise ValueError("row count does not match n")
        return g
    raise ValueError("graph needs 'edges' or 'rows'")


def code_to_dict(code: CwsCode) -> dict:
    out = {"n": code.n, "graph": graph_to_dict(code.graph), "codewords": code.codeword_strings()}
    if code.claimed_distance is not None:
        out["claimed_distance"] = code.claimed_distance
    return out


def code_from_dict(data: dict) -> CwsCode:
    g = graph_from_dict(data["graph"])
    if int(data.get("n", g.n)) != g.n:
        raise ValueError("code n does not match graph n")
    d = data.get("claimed_distance")
    return CwsCode.from_strings(g, data["codewords"], None if d is None else int(d))


def presentation_from_dict(data: dict) -> StabilizerPresentation:
    p = StabilizerPresentation.from_strings(
        data["generators"], data.get("logical_x", ()), data.get("logical_z", ())
    )
    if "n" in data and int(data["n"]) != p.n:
        raise ValueError("n does not match operator length")
    if "k" in data and int(data["k"]) != p.k:
        raise ValueError("k does not match number of logical operators")
    return p


def cws_presentation_from_dict(data: dict) -> tuple[list[PauliOperator], list[PauliOperator]]:
    """``{"n", "stabilizer": [...], "word_operators": [...]}`` (any local frame)."""
    stab = [PauliOperator.from_str(s) for s in data["stabilizer"]]
    words = [PauliOperator.from_str(s) for s in data["word_operators"]]
    return stab, words


def load_code(path: str | Path) -> CwsCode:
    return code_from_dict(json.loads(Path(path).read_text()))


def load_builtin_code(name: str) -> CwsCode:
    """One of :data:`BUILTIN_CODES`, shipped as package data."""
    if name not in BUILTIN_CODES:
        raise KeyError(f"unknown code {name!r}; choose from {BUILTIN_CODES}")
    text = resources.files("cwscodes.data").joinpath(f"{name}.json").read_text()
    return code_from_dict(json.loads(text))
