"""
Graph file formats.

- json: canonical GraphDocument (sorted keys, sorted edges, no whitespace)
- edgelist: `n <count>` first, then `e <u> <v>` per edge and optionally
  `l <v> <label>` per label, the label written as a JSON string; `#` starts
  a comment outside a quoted label
- dot: Graphviz text through pydot, output only
"""
import json
import sys
from pathlib import Path
from typing import Optional

import pydot
from pydantic import ValidationError

from matchdim.exceptions import DocumentError, GraphError
from matchdim.models.document import GraphDocument
from matchdim.models.graph import Graph

FORMATS = ("json", "edgelist", "dot")

_DECODER = json.JSONDecoder()


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# ── Writers ───────────────────────────────────────────────────────

def to_json(g: Graph) -> str:
    return canonical_json(GraphDocument.from_graph(g).canonical())


def to_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edge_list())
    for v, name in sorted(g.labels_dict().items()):
        lines.append(f"l {v} {json.dumps(name)}")
    return "\n".join(lines)


def to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT with one node per vertex labelled by its name, one line per edge."""
    dot = pydot.Dot(name, graph_type="graph")
    for v in g.vertices:
        dot.add_node(pydot.Node(str(v), label=g.label(v)))
    for u, v in g.edge_list():
        dot.add_edge(pydot.Edge(str(u), str(v)))
    return dot.to_string()


def render(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return to_json(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    raise DocumentError(f"unknown output format {fmt!r}")


# ── Readers ───────────────────────────────────────────────────────

def parse_json(text: str, source: Optional[str] = None) -> Graph:
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise DocumentError(f"invalid graph document: {e.errors()[0]['msg']}", source) from e
    try:
        return document.to_graph()
    except GraphError as e:
        raise DocumentError(str(e), source) from e


def _int(token: str, lineno: int, source: Optional[str]) -> int:
    try:
        return int(token)
    except ValueError:
        raise DocumentError(f"line {lineno}: expected an integer, got {token!r}", source)


def _label(token: str, lineno: int, source: Optional[str]) -> str:
    """A JSON string literal, or a bare word, optionally followed by a comment."""
    if token.startswith('"'):
        try:
            label, end = _DECODER.raw_decode(token)
        except json.JSONDecodeError as e:
            raise DocumentError(f"line {lineno}: bad quoted label: {e.msg}", source) from e
        tail = token[end:].strip()
        if tail and not tail.startswith("#"):
            raise DocumentError(f"line {lineno}: unexpected text after label: {tail!r}", source)
        return label

    words = token.split("#", 1)[0].split()
    if len(words) != 1:
        raise DocumentError(f"line {lineno}: labels with spaces or '#' must be quoted", source)
    return words[0]


def parse_edgelist(text: str, source: Optional[str] = None) -> Graph:
    n = None
    edges = []
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        parts = stripped.split(None, 2)
        # Quoted labels may contain '#', so they are read before comments are cut.
        if n is not None and len(parts) == 3 and parts[0] == "l":
            labels[_int(parts[1], lineno, source)] = _label(parts[2], lineno, source)
            continue

        line = stripped.split("#", 1)[0].strip()
        if not line:
            continue

        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise DocumentError(f"line {lineno}: first entry must be 'n <count>'", source)
            n = _int(parts[1], lineno, source)
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((_int(parts[1], lineno, source), _int(parts[2], lineno, source)))
        else:
            raise DocumentError(f"line {lineno}: cannot parse {line!r}", source)

    if n is None:
        raise DocumentError("missing 'n <count>' line", source)
    try:
        return Graph(n=n, edges=frozenset(edges), labels=labels or None)
    except GraphError as e:
        raise DocumentError(str(e), source) from e


def parse_graph(text: str, source: Optional[str] = None) -> Graph:
    """JSON when the text starts with '{', edge list otherwise."""
    if text.lstrip().startswith("{"):
        return parse_json(text, source)
    return parse_edgelist(text, source)


def read_graph(path: str) -> Graph:
    """Read a graph file; '-' reads standard input."""
    if path == "-":
        try:
            text = sys.stdin.read()
        except UnicodeDecodeError as e:
            raise DocumentError(f"input is not valid UTF-8: {e.reason} at byte {e.start}", "<stdin>") from e
        return parse_graph(text, "<stdin>")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read file: {e.strerror}", path) from e
    except UnicodeDecodeError as e:
        raise DocumentError(f"file is not valid UTF-8: {e.reason} at byte {e.start}", path) from e
    return parse_graph(text, path)


def write_output(text: str, path: Optional[str]) -> None:
    """Write to `path`, or to standard output when no path is given."""
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
        return
    try:
        Path(path).write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot write file: {e.strerror}", path) from e
