"""Command-line interface.

    langnet metrics --window 2 --keep-stopwords --no-lemmatize corpus/
    langnet build --format graphml --out graphs/ a.txt b.txt
    langnet keywords --measure pagerank --top 5 essay.txt

Inputs are files or directories (searched recursively for ``*.txt``).
Without ``--out`` results go to stdout; with it, one file per document is
written, plus ``report.json`` aggregating all documents when the format
is JSON. Exit status is 1 if any document failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .apps import extract_keywords, feature_vector
from .graph import build_graph, export_graph
from .lemmatizer import LemmaLexicon
from .metrics import MEASURES, PageRankParams, compute_report
from .preprocess import InputEncodingError, PipelineConfig, StopList, decode_text, run_pipeline

COMMANDS = ("preprocess", "build", "metrics", "keywords", "features")

# first entry is the default
FORMATS = {
    "preprocess": ("text", "json"),
    "build": ("edgelist", "graphml", "dot", "json"),
    "metrics": ("json", "text"),
    "keywords": ("text", "json"),
    "features": ("json", "text"),
}
ALL_FORMATS = ("edgelist", "graphml", "dot", "json", "text")

_SUFFIX = {
    "preprocess": "lemmas",
    "build": "graph",
    "metrics": "metrics",
    "keywords": "keywords",
    "features": "features",
}
_EXT = {"edgelist": "tsv", "graphml": "graphml", "dot": "dot", "json": "json", "text": "txt"}

CONFIG_KEYS = {
    "inputs", "window", "remove_stopwords", "lowercase", "keep_alphabetic_only",
    "lemmatize", "stoplist", "lexicon", "pretagged", "format", "top", "measure",
    "damping", "tolerance", "max_iterations", "out", "jobs",
}
_PATH_KEYS = {"stoplist", "lexicon", "out"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Document:
    id: str
    path: Path
    text: str


def ingest_corpus(paths: Sequence) -> tuple:
    """Collect documents from files and directories.

    Returns ``(documents, failures)``; failures are ``(id, message)`` pairs
    for files that could not be read or decoded. A path that does not exist
    raises ``FileNotFoundError``.
    """
    found = []
    for p in map(Path, paths):
        if p.is_dir():
            for f in p.rglob("*.txt"):
                if f.is_file():
                    found.append((f, f.relative_to(p).as_posix()))
        elif p.exists():
            found.append((p, p.name))
        else:
            raise FileNotFoundError(f"no such file or directory: {p}")
    found.sort(key=lambda item: (str(item[0]), item[1]))

    docs, failures = [], []
    for path, doc_id in found:
        try:
            docs.append(Document(doc_id, path, decode_text(path.read_bytes())))
        except (OSError, InputEncodingError) as exc:
            failures.append((doc_id, str(exc)))
    return docs, failures


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    pagerank: PageRankParams = field(default_factory=PageRankParams)
    stoplist: Optional[str] = None
    lexicon: Optional[str] = None
    pretagged: bool = False
    format: str = ""
    top: int = 10
    measure: str = "pagerank"
    out: Optional[str] = None
    jobs: int = 1

    def echo(self) -> dict:
        """Settings that affect results (no output location)."""
        d = {
            "command": self.command,
            "pipeline": asdict(self.pipeline),
            "stoplist": self.stoplist or "default",
            "lexicon": self.lexicon or "default",
            "pretagged": self.pretagged,
        }
        if self.command != "preprocess":
            d["window"] = self.pipeline.window_size
        if self.command in ("metrics", "keywords", "features"):
            d["pagerank"] = asdict(self.pagerank)
        if self.command == "keywords":
            d["measure"] = self.measure
            d["top"] = self.top
        return d


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("inputs", nargs="*", help="text files or directories")
    common.add_argument("--config", help="JSON file with default settings")
    common.add_argument("--window", type=int, help="co-occurrence window size w (default 1)")
    sw = common.add_mutually_exclusive_group()
    sw.add_argument("--no-stopwords", dest="remove_stopwords", action="store_const", const=True,
                    help="remove stopwords (default)")
    sw.add_argument("--keep-stopwords", dest="remove_stopwords", action="store_const", const=False,
                    help="keep stopwords")
    common.add_argument("--no-lemmatize", dest="lemmatize", action="store_const", const=False,
                        help="skip tagging and lemmatization")
    common.add_argument("--keep-case", dest="lowercase", action="store_const", const=False,
                        help="do not lowercase tokens")
    common.add_argument("--keep-numbers", dest="keep_alphabetic_only", action="store_const", const=False,
                        help="keep tokens containing digits")
    common.add_argument("--stoplist", help="stopword file, one word per line")
    common.add_argument("--lexicon", help="lemmatizer lexicon directory")
    common.add_argument("--pretagged", action="store_const", const=True,
                        help="input is word_TAG tokens; bypasses the tagger")
    common.add_argument("--format", choices=ALL_FORMATS)
    common.add_argument("--top", type=int, help="number of keywords (default 10)")
    common.add_argument("--measure", choices=MEASURES, help="keyword ranking measure (default pagerank)")
    common.add_argument("--damping", type=float, help="PageRank damping (default 0.85)")
    common.add_argument("--tolerance", type=float, help="PageRank L1 tolerance (default 1e-10)")
    common.add_argument("--max-iterations", dest="max_iterations", type=int)
    common.add_argument("--out", help="output directory")
    common.add_argument("--jobs", type=int, help="worker processes (default 1)")
    common.add_argument("-v", "--verbose", action="store_true", default=False)

    parser = _Parser(prog="langnet", description="Word co-occurrence networks from text.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "preprocess": "print lemma sequences",
        "build": "export co-occurrence graphs",
        "metrics": "degree, PageRank and betweenness per word",
        "keywords": "top-ranked words by a centrality measure",
        "features": "network feature vector per document",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
    return parser


def _load_config_file(path: str) -> dict:
    p = Path(path)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    unknown = sorted(set(data) - CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config keys in {path}: {', '.join(unknown)}")
    base = p.parent
    for key in _PATH_KEYS & set(data):
        data[key] = str(base / data[key])
    if "inputs" in data:
        if isinstance(data["inputs"], str):
            data["inputs"] = [data["inputs"]]
        data["inputs"] = [str(base / x) for x in data["inputs"]]
    return data


def resolve_config(ns: argparse.Namespace) -> RunConfig:
    given = vars(ns).copy()
    command = given.pop("command")
    given.pop("verbose", None)
    settings = _load_config_file(given.pop("config")) if "config" in given else {}
    if not given.get("inputs"):
        given.pop("inputs", None)
    settings.update(given)

    inputs = tuple(settings.get("inputs") or ())
    if not inputs:
        raise UsageError("no input files given")
    fmt = settings.get("format", FORMATS[command][0])
    if fmt not in FORMATS[command]:
        raise UsageError(f"format {fmt!r} is not available for {command}; choose from {FORMATS[command]}")
    top = settings.get("top", 10)
    if not isinstance(top, int) or top < 1:
        raise UsageError(f"--top must be a positive integer, got {top}")
    jobs = settings.get("jobs", 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise UsageError(f"--jobs must be a positive integer, got {jobs}")
    measure = settings.get("measure", "pagerank")
    if measure not in MEASURES:
        raise UsageError(f"unknown measure {measure!r}")
    try:
        pipeline = PipelineConfig(
            lowercase=settings.get("lowercase", True),
            remove_stopwords=settings.get("remove_stopwords", True),
            window_size=settings.get("window", 1),
            keep_alphabetic_only=settings.get("keep_alphabetic_only", True),
            lemmatize=settings.get("lemmatize", True),
        )
        pr = PageRankParams(
            damping=settings.get("damping", 0.85),
            tolerance=settings.get("tolerance", 1e-10),
            max_iterations=settings.get("max_iterations", 200),
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return RunConfig(
        command=command, inputs=inputs, pipeline=pipeline, pagerank=pr,
        stoplist=settings.get("stoplist"), lexicon=settings.get("lexicon"),
        pretagged=bool(settings.get("pretagged", False)), format=fmt, top=top,
        measure=measure, out=settings.get("out"), jobs=jobs,
    )


# ---------------------------------------------------------------------------
# per-document work


def analyze_document(doc: Document, cfg: RunConfig, stoplist: StopList, lexicon: LemmaLexicon) -> dict:
    """Run *cfg.command* on one document and return a JSON-ready record."""
    result = run_pipeline(doc.text, cfg.pipeline, stoplist, lexicon, pretagged=cfg.pretagged)
    record = {
        "id": doc.id,
        "tokens": {"total": len(result.tokens), "after_filtering": len(result.kept)},
    }
    if cfg.command == "preprocess":
        record["lemmas"] = list(result.lemmas)
        return record

    graph = build_graph(result.lemmas, cfg.pipeline.window_size)
    record["node_count"] = graph.node_count
    record["edge_count"] = graph.edge_count
    if cfg.command == "build":
        record["window"] = graph.window
        record["nodes"] = list(graph.labels)
        record["edges"] = [[graph.labels[u], graph.labels[v]] for u, v in graph.sorted_edges]
        if cfg.format in ("edgelist", "graphml", "dot"):
            record["_export"] = export_graph(graph, cfg.format)
        return record

    if graph.node_count == 0:
        raise ValueError("no words left after preprocessing")
    report = compute_report(graph, cfg.pagerank)
    if cfg.command == "metrics":
        record.update(report.to_dict())
        record["_order"] = list(graph.labels)
    elif cfg.command == "keywords":
        kws = extract_keywords(graph, report, cfg.measure, cfg.top)
        record["measure"] = cfg.measure
        record["keywords"] = [{"word": k.word, "score": k.score} for k in kws]
    else:
        fv = feature_vector(report)
        record["schema"] = list(fv.schema)
        record["values"] = list(fv.values)
    return record


def _worker(args):
    doc, cfg, stoplist, lexicon = args
    try:
        return analyze_document(doc, cfg, stoplist, lexicon), None
    except Exception as exc:  # reported per document
        return None, f"{type(exc).__name__}: {exc}"


def _fmt_real(x: float) -> str:
    return f"{x:.2f}"


def render(record: dict, cfg: RunConfig) -> bytes:
    """Human or machine rendering of one document record."""
    if "_export" in record:
        return record["_export"]
    if cfg.format == "json":
        return dump_json({k: v for k, v in record.items() if not k.startswith("_")})
    cmd = cfg.command
    lines = []
    if cmd == "preprocess":
        lines.append(" ".join(record["lemmas"]))
    elif cmd == "metrics":
        lines.append(f"# nodes={record['node_count']} edges={record['edge_count']}")
        lines.append("word\tdegree\tpagerank\tbetweenness")
        for label in record["_order"]:
            lines.append("\t".join([
                label, str(record["degree"][label]),
                _fmt_real(record["pagerank"][label]), _fmt_real(record["betweenness"][label]),
            ]))
    elif cmd == "keywords":
        for kw in record["keywords"]:
            score = kw["score"]
            shown = str(int(score)) if record["measure"] == "degree" else _fmt_real(score)
            lines.append(f"{kw['word']}\t{shown}")
    elif cmd == "features":
        lines.extend(f"{n}\t{_fmt_real(v)}" for n, v in zip(record["schema"], record["values"]))
    return ("\n".join(lines) + "\n").encode("utf-8")


def dump_json(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _output_names(ids: Sequence[str], command: str, fmt: str) -> list:
    names, seen = [], {}
    for doc_id in ids:
        stem = doc_id[:-4] if doc_id.endswith(".txt") else doc_id
        stem = stem.replace("/", "__")
        n = seen.get(stem, 0)
        seen[stem] = n + 1
        if n:
            stem = f"{stem}-{n + 1}"
        names.append(f"{stem}.{_SUFFIX[command]}.{_EXT[fmt]}")
    return names


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else 1
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=stderr)

    def fail(msg):
        print(f"langnet: error: {msg}", file=stderr)
        return 1

    try:
        cfg = resolve_config(ns)
        stoplist = StopList.from_file(cfg.stoplist) if cfg.stoplist else StopList.default()
        lexicon = LemmaLexicon.from_directory(cfg.lexicon) if cfg.lexicon else LemmaLexicon.default()
        docs, failures = ingest_corpus(cfg.inputs)
    except UsageError as exc:
        return fail(str(exc))
    except (OSError, ValueError) as exc:
        return fail(str(exc))

    for doc_id, msg in failures:
        print(f"langnet: {doc_id}: {msg}", file=stderr)
    failures = list(failures)

    jobs = [(doc, cfg, stoplist, lexicon) for doc in docs]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(_worker, jobs))
    else:
        outcomes = [_worker(job) for job in jobs]

    records = []
    for doc, (record, err) in zip(docs, outcomes):
        if err is not None:
            print(f"langnet: {doc.id}: {err}", file=stderr)
            failures.append((doc.id, err))
        else:
            records.append(record)
    failures.sort()

    aggregate = None
    if cfg.format == "json":
        aggregate = {
            "config": cfg.echo(),
            "documents": [{k: v for k, v in r.items() if not k.startswith("_")} for r in records],
            "failures": [{"id": i, "error": m} for i, m in failures],
        }

    if cfg.out:
        out = Path(cfg.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
            names = _output_names([r["id"] for r in records], cfg.command, cfg.format)
            for record, name in zip(records, names):
                (out / name).write_bytes(render(record, cfg))
            if aggregate is not None:
                (out / "report.json").write_bytes(dump_json(aggregate))
        except OSError as exc:
            return fail(f"cannot write output: {exc}")
    elif aggregate is not None:
        stdout.write(dump_json(aggregate))
    else:
        for record in records:
            if len(records) > 1:
                stdout.write(f"==> {record['id']} <==\n".encode("utf-8"))
            stdout.write(render(record, cfg))
    stdout.flush()
    return 1 if failures else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
