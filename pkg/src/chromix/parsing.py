"""Readers and writers for the graph and poset text formats.

Line format::

    # comment
    vertex a
    edge a b
    arc a b        # a -> b

DOT subset: ``graph`` or ``digraph`` with an optional name, a body of
``a -- b;`` / ``a -> b;`` / ``a;`` statements (chains like ``a -> b -> c``
allowed), ``//`` and ``#`` comments. Attributes, subgraphs, ports and quoted
identifiers are rejected.

Poset format::

    elem a
    rel a b        # a <= b, closed transitively
    label a 1      # optional, all or none
"""

from __future__ import annotations

import re

from .errors import ParseError, PosetAxiomError, UnsupportedFeatureError
from .graph import MixedGraph
from .poset import OmegaLabeling, Poset, natural_labeling

_TOKEN = re.compile(r"^[A-Za-z0-9_]+$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_lines(text: str) -> MixedGraph:
    vertices: dict[str, None] = {}
    edges, arcs = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        words = line.split()
        directive, args = words[0], words[1:]
        expected = {"vertex": 1, "edge": 2, "arc": 2}.get(directive)
        if expected is None:
            raise ParseError(f"unknown directive {directive!r}", lineno)
        if len(args) != expected:
            raise ParseError(f"{directive} takes {expected} argument(s), got {len(args)}", lineno)
        for tok in args:
            if not _TOKEN.match(tok):
                raise ParseError(f"invalid vertex token {tok!r}", lineno)
            vertices.setdefault(tok)
        if directive == "vertex":
            continue
        u, v = args
        if u == v:
            raise ParseError(f"self-loop {directive} {u} {v} is not allowed", lineno)
        (edges if directive == "edge" else arcs).append((u, v))
    return MixedGraph(vertices, edges, arcs)


def render_lines(g: MixedGraph) -> str:
    out = [f"vertex {v}" for v in g.vertices]
    out += [f"edge {u} {v}" for u, v in g.sorted_edges]
    out += [f"arc {u} {v}" for u, v in g.sorted_arcs]
    return "\n".join(out) + "\n"


def render_dot(g: MixedGraph) -> str:
    kind = "graph" if not g.arcs else "digraph"
    out = [f"{kind} {{"]
    out += [f"  {v};" for v in g.vertices]
    out += [f"  {u} -- {v};" for u, v in g.sorted_edges]
    out += [f"  {u} -> {v};" for u, v in g.sorted_arcs]
    out.append("}")
    return "\n".join(out) + "\n"


_DOT_TOKENS = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>(//|\#)[^\n]*)|(?P<block>/\*)"
    r"|(?P<op>--|->)|(?P<id>[A-Za-z0-9_]+)|(?P<punct>[{};,\[\]=:\"<])|(?P<other>.)"
)

_UNSUPPORTED_PUNCT = {
    "[": "attribute list",
    "]": "attribute list",
    "=": "attribute assignment",
    ":": "port",
    '"': "quoted identifier",
    "<": "HTML identifier",
    ",": "attribute list",
}


def _dot_tokens(text: str):
    line, col = 1, 1
    for m in _DOT_TOKENS.finditer(text):
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            line, col = line + 1, 1
            continue
        if kind not in ("ws", "comment"):
            if kind == "block":
                raise UnsupportedFeatureError("block comments are not supported", line, col)
            if kind == "other":
                raise ParseError(f"unexpected character {value!r}", line, col)
            if kind == "punct" and value in _UNSUPPORTED_PUNCT:
                kind = "unsupported"
            yield kind, value, line, col
        col += len(value)
    yield "eof", "", line, col


def parse_dot_subset(text: str) -> MixedGraph:
    tokens = list(_dot_tokens(text))
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind=None, value=None):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] == "unsupported":
            raise UnsupportedFeatureError(f"{_UNSUPPORTED_PUNCT[tok[1]]} is not supported", tok[2], tok[3])
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2], tok[3])
        pos += 1
        return tok

    head = take("id")
    if head[1] == "strict":
        raise UnsupportedFeatureError("strict graphs are not supported", head[2], head[3])
    if head[1] not in ("graph", "digraph"):
        raise ParseError(f"expected 'graph' or 'digraph', found {head[1]!r}", head[2], head[3])
    if peek()[0] == "id":
        take("id")
    take("punct", "{")

    vertices: dict[str, None] = {}
    edges, arcs = [], []
    while True:
        tok = peek()
        if tok[0] == "punct" and tok[1] == "}":
            take()
            break
        if tok[0] == "punct" and tok[1] == "{":
            raise UnsupportedFeatureError("anonymous subgraphs are not supported", tok[2], tok[3])
        if tok[0] == "punct" and tok[1] == ";":
            take()
            continue
        first = take("id")
        if first[1] in ("subgraph", "node", "edge", "graph"):
            what = "subgraphs" if first[1] == "subgraph" else f"'{first[1]}' default attribute statements"
            raise UnsupportedFeatureError(f"{what} are not supported", first[2], first[3])
        chain = [first]
        ops = []
        while peek()[0] == "op":
            ops.append(take("op"))
            nxt = peek()
            if nxt[0] == "punct" and nxt[1] == "{":
                raise UnsupportedFeatureError("subgraph endpoints are not supported", nxt[2], nxt[3])
            chain.append(take("id"))
        for t in chain:
            vertices.setdefault(t[1])
        for op, (a, b) in zip(ops, zip(chain, chain[1:])):
            if a[1] == b[1]:
                raise ParseError(f"self-loop {a[1]} {op[1]} {b[1]} is not allowed", op[2], op[3])
            (edges if op[1] == "--" else arcs).append((a[1], b[1]))
        nxt = peek()
        if nxt[0] == "punct" and nxt[1] == ";":
            take()
    end = peek()
    if end[0] != "eof":
        raise ParseError(f"unexpected {end[1]!r} after the closing brace", end[2], end[3])
    return MixedGraph(vertices, edges, arcs)


def looks_like_dot(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("#", "//")):
            continue
        return bool(re.match(r"(strict\s+)?(di)?graph\b", line))
    return False


def parse_graph(text: str, fmt: str = "auto") -> MixedGraph:
    if fmt == "auto":
        fmt = "dot" if looks_like_dot(text) else "lines"
    if fmt == "dot":
        return parse_dot_subset(text)
    if fmt == "lines":
        return parse_lines(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def parse_poset(text: str) -> OmegaLabeling:
    """Returns the labeling (its ``poset`` attribute is the poset); without
    label lines the natural labeling is used."""
    elements: dict[str, None] = {}
    rels, labels = [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        words = line.split()
        directive, args = words[0], words[1:]
        expected = {"elem": 1, "rel": 2, "label": 2}.get(directive)
        if expected is None:
            raise ParseError(f"unknown directive {directive!r}", lineno)
        if len(args) != expected:
            raise ParseError(f"{directive} takes {expected} argument(s), got {len(args)}", lineno)
        if directive == "label":
            tok, value = args
            if not re.fullmatch(r"-?\d+", value):
                raise ParseError(f"label must be an integer, got {value!r}", lineno)
            if tok in labels:
                raise ParseError(f"element {tok} is labeled twice", lineno)
            labels[tok] = int(value)
            elements.setdefault(tok)
            continue
        for tok in args:
            if not _TOKEN.match(tok):
                raise ParseError(f"invalid element token {tok!r}", lineno)
            elements.setdefault(tok)
        if directive == "rel":
            rels.append(tuple(args))
    poset = Poset.from_relations(elements, rels)
    if not labels:
        return natural_labeling(poset)
    try:
        return OmegaLabeling(poset, labels)
    except ValueError as exc:
        raise PosetAxiomError(f"bad labeling: {exc}") from None
