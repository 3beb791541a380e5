"""Word co-occurrence graphs.

Nodes are the distinct words of a sequence, numbered by first occurrence.
Two words are linked when some occurrence of one lies within ``w`` positions
of some occurrence of the other. Edges are unweighted and there are no
self-loops.
"""

from __future__ import annotations

import io
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable, Mapping, Sequence, Union

__all__ = [
    "Vocabulary",
    "CoocGraph",
    "EXPORT_FORMATS",
    "get_neighbors",
    "build_graph",
    "export_graph",
    "write_graph",
    "read_edgelist",
]

EXPORT_FORMATS = ("edgelist", "graphml", "dot")


@dataclass(frozen=True)
class Vocabulary:
    labels: tuple
    index_of: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        index_of = {label: i for i, label in enumerate(labels)}
        if len(index_of) != len(labels):
            raise ValueError("vocabulary labels must be unique")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "index_of", index_of)

    @classmethod
    def from_sequence(cls, words: Iterable[str]) -> "Vocabulary":
        return cls(tuple(dict.fromkeys(words)))

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i: int) -> str:
        return self.labels[i]

    def __contains__(self, label) -> bool:
        return label in self.index_of


@dataclass(frozen=True)
class CoocGraph:
    vocabulary: Vocabulary
    edges: frozenset
    window: int = 1
    occurrence_counts: tuple = ()

    def __post_init__(self):
        n = len(self.vocabulary)
        edges = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            edges.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(edges))
        counts = tuple(self.occurrence_counts) or (1,) * n
        if len(counts) != n or any(c < 1 for c in counts):
            raise ValueError("occurrence_counts needs one positive count per node")
        object.__setattr__(self, "occurrence_counts", counts)
        if self.window < 1:
            raise ValueError("window must be >= 1")

    @property
    def node_count(self) -> int:
        return len(self.vocabulary)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> tuple:
        return self.vocabulary.labels

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple:
        """Sorted neighbour ids per node."""
        adj = [[] for _ in range(self.node_count)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def label_edges(self) -> set:
        """Edges as a set of frozensets of labels (index-free comparison)."""
        labels = self.vocabulary.labels
        return {frozenset((labels[u], labels[v])) for u, v in self.edges}

    def has_edge(self, a: str, b: str) -> bool:
        idx = self.vocabulary.index_of
        if a not in idx or b not in idx:
            return False
        u, v = idx[a], idx[b]
        return (min(u, v), max(u, v)) in self.edges


def get_neighbors(word_list: Sequence[str], index: int, w: int) -> list[str]:
    """Words up to *w* positions left and right of ``word_list[index]``."""
    if not 0 <= index < len(word_list):
        raise IndexError(f"index {index} out of range for a list of {len(word_list)} words")
    if w < 1:
        raise ValueError("w must be >= 1")
    left = word_list[max(0, index - w):index]
    right = word_list[index + 1:index + 1 + w]
    return list(left) + list(right)


def build_graph(words: Sequence[str], w: int = 1) -> CoocGraph:
    if w < 1:
        raise ValueError(f"window must be >= 1, got {w}")
    words = list(words)
    vocab = Vocabulary.from_sequence(words)
    ids = [vocab.index_of[word] for word in words]
    edges = set()
    n = len(ids)
    for i, u in enumerate(ids):
        for v in ids[i + 1:min(n, i + w + 1)]:
            if u != v:
                edges.add((u, v) if u < v else (v, u))
    counts = Counter(ids)
    return CoocGraph(vocab, frozenset(edges), w, tuple(counts[i] for i in range(len(vocab))))


# ---------------------------------------------------------------------------
# serialization

_EDGELIST_MAGIC = "# cooc-graph"


def _edgelist(graph: CoocGraph) -> str:
    labels = graph.labels
    lines = [
        f"{_EDGELIST_MAGIC} window={graph.window} nodes={graph.node_count} edges={graph.edge_count}",
        "\t".join(["# nodes", *labels]),
    ]
    lines += [f"{labels[u]}\t{labels[v]}" for u, v in graph.sorted_edges]
    return "\n".join(lines) + "\n"


def _graphml(graph: CoocGraph) -> bytes:
    ns = "http://graphml.graphdrawing.org/xmlns"
    ET.register_namespace("", ns)
    root = ET.Element(f"{{{ns}}}graphml")
    for key_id, target, name, kind in (
        ("window", "graph", "window", "int"),
        ("label", "node", "label", "string"),
        ("count", "node", "occurrences", "int"),
    ):
        ET.SubElement(root, f"{{{ns}}}key", {
            "id": key_id, "for": target, "attr.name": name, "attr.type": kind,
        })
    g = ET.SubElement(root, f"{{{ns}}}graph", {"id": "G", "edgedefault": "undirected"})
    ET.SubElement(g, f"{{{ns}}}data", {"key": "window"}).text = str(graph.window)
    for i, label in enumerate(graph.labels):
        node = ET.SubElement(g, f"{{{ns}}}node", {"id": f"n{i}"})
        ET.SubElement(node, f"{{{ns}}}data", {"key": "label"}).text = label
        ET.SubElement(node, f"{{{ns}}}data", {"key": "count"}).text = str(graph.occurrence_counts[i])
    for k, (u, v) in enumerate(graph.sorted_edges):
        ET.SubElement(g, f"{{{ns}}}edge", {"id": f"e{k}", "source": f"n{u}", "target": f"n{v}"})
    ET.indent(root)
    buf = io.BytesIO()
    ET.ElementTree(root).write(buf, encoding="utf-8", xml_declaration=True)
    return buf.getvalue() + b"\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(graph: CoocGraph) -> str:
    lines = ["graph cooc {", f"  graph [window={graph.window}];"]
    for i, label in enumerate(graph.labels):
        lines.append(f"  n{i} [label={_dot_quote(label)}, occurrences={graph.occurrence_counts[i]}];")
    for u, v in graph.sorted_edges:
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(graph: CoocGraph, format: str = "edgelist") -> bytes:
    """Serialize *graph* as ``edgelist`` (TSV), ``graphml`` or ``dot``.

    The edge list starts with two comment lines: a summary line and a
    ``# nodes`` line listing every label in node order (so isolated nodes
    survive a round trip). Each following line is ``label_u<TAB>label_v``
    with ``u < v`` in node order, edges sorted.
    """
    if format == "edgelist":
        return _edgelist(graph).encode("utf-8")
    if format == "graphml":
        return _graphml(graph)
    if format == "dot":
        return _dot(graph).encode("utf-8")
    raise ValueError(f"unknown export format {format!r}; choose from {EXPORT_FORMATS}")


def write_graph(graph: CoocGraph, dest: Union[str, IO[bytes]], format: str = "edgelist") -> None:
    data = export_graph(graph, format)
    if hasattr(dest, "write"):
        dest.write(data)
    else:
        with open(dest, "wb") as fh:
            fh.write(data)


def read_edgelist(data: Union[str, bytes]) -> CoocGraph:
    """Parse the TSV written by :func:`export_graph`.

    Headerless TSV is accepted too; labels are then numbered by first
    appearance and the window defaults to 1.
    """
    if isinstance(data, (bytes, bytearray)):
        data = bytes(data).decode("utf-8")
    window = 1
    labels: dict[str, None] = {}
    pairs = []
    for lineno, line in enumerate(data.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith(_EDGELIST_MAGIC):
            for part in line.split():
                if part.startswith("window="):
                    window = int(part.split("=", 1)[1])
            continue
        if line.startswith("# nodes"):
            for label in line.split("\t")[1:]:
                labels.setdefault(label)
            continue
        if line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected label<TAB>label, got {line!r}")
        a, b = fields
        labels.setdefault(a)
        labels.setdefault(b)
        pairs.append((a, b))
    vocab = Vocabulary(tuple(labels))
    idx = vocab.index_of
    return CoocGraph(vocab, frozenset((idx[a], idx[b]) for a, b in pairs), window)
