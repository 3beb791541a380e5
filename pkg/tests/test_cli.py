import io
import json
import subprocess
import sys

import pytest

import paper_data
from langnet.cli import ingest_corpus, run
from langnet.graph import read_edgelist

PAPER_FLAGS = ["--window", "2", "--keep-stopwords", "--no-lemmatize"]


def invoke(*argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue().decode("utf-8"), err.getvalue()


@pytest.fixture
def paper_file(tmp_path):
    p = tmp_path / "example.txt"
    p.write_text(paper_data.TEXT + "\n", encoding="utf-8")
    return p


class TestIngest:
    def test_lexicographic(self, tmp_path):
        (tmp_path / "b.txt").write_text("bee", encoding="utf-8")
        (tmp_path / "a.txt").write_text("ay", encoding="utf-8")
        docs, failures = ingest_corpus([tmp_path])
        assert [d.id for d in docs] == ["a.txt", "b.txt"] and failures == []

    def test_single_file(self, paper_file):
        docs, _ = ingest_corpus([paper_file])
        assert len(docs) == 1 and docs[0].id == "example.txt" and docs[0].text.startswith("today")

    def test_nested(self, tmp_path):
        (tmp_path / "x" / "y").mkdir(parents=True)
        (tmp_path / "x" / "y" / "deep.txt").write_text("deep", encoding="utf-8")
        (tmp_path / "top.txt").write_text("top", encoding="utf-8")
        (tmp_path / "skip.md").write_text("no", encoding="utf-8")
        docs, _ = ingest_corpus([tmp_path])
        assert [d.id for d in docs] == ["top.txt", "x/y/deep.txt"]

    def test_missing_path(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ingest_corpus([tmp_path / "gone"])

    def test_invalid_utf8_reported(self, tmp_path):
        (tmp_path / "bad.txt").write_bytes(b"ok \xff\xfe")
        (tmp_path / "good.txt").write_text("fine", encoding="utf-8")
        docs, failures = ingest_corpus([tmp_path])
        assert [d.id for d in docs] == ["good.txt"]
        assert failures[0][0] == "bad.txt" and "UTF-8" in failures[0][1]


class TestSubcommands:
    def test_metrics_paper_counts(self, paper_file):
        code, out, _ = invoke("metrics", *PAPER_FLAGS, paper_file)
        assert code == 0
        doc = json.loads(out)["documents"][0]
        assert (doc["node_count"], doc["edge_count"]) == (11, 21)
        assert doc["degree"]["learning"] == 6
        assert doc["tokens"] == {"total": 12, "after_filtering": 12}

    def test_metrics_text_rounds(self, paper_file):
        code, out, _ = invoke("metrics", *PAPER_FLAGS, "--format", "text", paper_file)
        assert code == 0
        assert "learning\t6\t0.14\t17.47" in out.splitlines()

    def test_build_path(self, tmp_path):
        f = tmp_path / "abc.txt"
        f.write_text("a b c", encoding="utf-8")
        code, out, _ = invoke("build", "--window", "1", "--keep-stopwords", f)
        assert code == 0
        edges = [ln for ln in out.splitlines() if not ln.startswith("#")]
        assert edges == ["a\tb", "b\tc"]

    def test_build_formats(self, paper_file):
        for fmt, marker in (("graphml", "<graphml"), ("dot", "graph cooc {")):
            code, out, _ = invoke("build", *PAPER_FLAGS, "--format", fmt, paper_file)
            assert code == 0 and marker in out
        code, out, _ = invoke("build", *PAPER_FLAGS, "--format", "json", paper_file)
        doc = json.loads(out)["documents"][0]
        assert len(doc["edges"]) == 21 and doc["window"] == 2

    def test_keywords(self, paper_file):
        code, out, _ = invoke("keywords", *PAPER_FLAGS, "--measure", "pagerank", "--top", "1", paper_file)
        assert code == 0
        assert out.split("\t")[0] == "learning"

    def test_keywords_degree_json(self, paper_file):
        code, out, _ = invoke("keywords", *PAPER_FLAGS, "--measure", "degree", "--top", "2",
                              "--format", "json", paper_file)
        kws = json.loads(out)["documents"][0]["keywords"]
        assert kws[0] == {"word": "learning", "score": 6}
        assert len(kws) == 2

    def test_features(self, paper_file):
        code, out, _ = invoke("features", *PAPER_FLAGS, paper_file)
        doc = json.loads(out)["documents"][0]
        assert doc["schema"][0] == "degree_mean"
        assert doc["values"][0] == pytest.approx(42 / 11)

    def test_features_text(self, paper_file):
        code, out, _ = invoke("features", *PAPER_FLAGS, "--format", "text", paper_file)
        assert out.splitlines()[0] == "degree_mean\t3.82"

    def test_preprocess(self, tmp_path):
        f = tmp_path / "kids.txt"
        f.write_text("The children were playing games.", encoding="utf-8")
        assert invoke("preprocess", f)[1] == "child play game\n"
        assert invoke("preprocess", "--keep-stopwords", f)[1] == "the child be play game\n"
        code, out, _ = invoke("preprocess", "--format", "json", f)
        doc = json.loads(out)["documents"][0]
        assert doc["lemmas"] == ["child", "play", "game"]
        assert doc["tokens"] == {"total": 5, "after_filtering": 3}

    def test_pretagged(self, tmp_path):
        f = tmp_path / "tagged.txt"
        f.write_text("children_NNS playing_NN games_NNS", encoding="utf-8")
        assert invoke("preprocess", "--pretagged", f)[1] == "child playing game\n"

    def test_custom_stoplist_and_lexicon(self, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("the geese were flying", encoding="utf-8")
        stop = tmp_path / "stop.txt"
        stop.write_text("were\n", encoding="utf-8")
        lex = tmp_path / "lex"
        lex.mkdir()
        (lex / "noun.exc").write_text("geese\tgoose\n", encoding="utf-8")
        (lex / "verb.lemmas").write_text("fly\n", encoding="utf-8")
        code, out, _ = invoke("preprocess", "--stoplist", stop, "--lexicon", lex, f)
        assert code == 0 and out == "the goose fly\n"

    def test_multiple_docs_stdout(self, tmp_path):
        (tmp_path / "a.txt").write_text("alpha beta", encoding="utf-8")
        (tmp_path / "b.txt").write_text("gamma delta", encoding="utf-8")
        code, out, _ = invoke("preprocess", tmp_path)
        assert out == "==> a.txt <==\nalpha beta\n==> b.txt <==\ngamma delta\n"


class TestOutputDir:
    def test_files_written(self, tmp_path, paper_file):
        out = tmp_path / "out"
        code, stdout, _ = invoke("metrics", *PAPER_FLAGS, "--out", out, paper_file)
        assert code == 0 and stdout == ""
        assert sorted(p.name for p in out.iterdir()) == ["example.metrics.json", "report.json"]
        single = json.loads((out / "example.metrics.json").read_text())
        assert single["edge_count"] == 21

    def test_edgelist_round_trip(self, tmp_path, paper_file):
        out = tmp_path / "g"
        invoke("build", *PAPER_FLAGS, "--out", out, paper_file)
        g = read_edgelist((out / "example.graph.tsv").read_bytes())
        assert g.label_edges() == paper_data.label_edges()

    def test_nested_names(self, tmp_path):
        corpus = tmp_path / "c"
        (corpus / "sub").mkdir(parents=True)
        (corpus / "sub" / "x.txt").write_text("one two", encoding="utf-8")
        (corpus / "x.txt").write_text("three four", encoding="utf-8")
        out = tmp_path / "o"
        invoke("build", "--out", out, corpus)
        assert sorted(p.name for p in out.iterdir()) == ["sub__x.graph.tsv", "x.graph.tsv"]


class TestErrors:
    def test_missing_input(self, tmp_path):
        code, _, err = invoke("metrics", tmp_path / "nope.txt")
        assert code == 1 and "no such file" in err

    def test_no_inputs(self):
        code, _, err = invoke("metrics")
        assert code == 1 and "no input" in err

    def test_bad_window(self, paper_file):
        code, _, err = invoke("build", "--window", "0", paper_file)
        assert code == 1 and "window" in err

    def test_non_integer_window(self, paper_file):
        code, _, err = invoke("build", "--window", "two", paper_file)
        assert code == 1

    def test_format_not_for_command(self, paper_file):
        code, _, err = invoke("metrics", "--format", "dot", paper_file)
        assert code == 1 and "not available" in err

    def test_bad_top(self, paper_file):
        assert invoke("keywords", "--top", "0", paper_file)[0] == 1

    def test_bad_damping(self, paper_file):
        assert invoke("metrics", "--damping", "1.5", paper_file)[0] == 1

    def test_partial_failure(self, tmp_path):
        (tmp_path / "a.txt").write_text("alpha beta gamma", encoding="utf-8")
        (tmp_path / "b.txt").write_bytes(b"\xff\xfe broken")
        (tmp_path / "c.txt").write_text("delta epsilon", encoding="utf-8")
        code, out, err = invoke("metrics", tmp_path)
        assert code == 1
        report = json.loads(out)
        assert [d["id"] for d in report["documents"]] == ["a.txt", "c.txt"]
        assert report["failures"][0]["id"] == "b.txt"
        assert "b.txt" in err

    def test_empty_document_is_a_failure_for_metrics(self, tmp_path):
        (tmp_path / "e.txt").write_text("the of and", encoding="utf-8")
        code, out, err = invoke("metrics", tmp_path)
        assert code == 1 and "no words" in err

    def test_empty_document_builds_empty_graph(self, tmp_path):
        (tmp_path / "e.txt").write_text("", encoding="utf-8")
        code, out, _ = invoke("build", tmp_path)
        assert code == 0 and out == "# cooc-graph window=1 nodes=0 edges=0\n# nodes\n"


class TestConfigFile:
    def test_values_and_override(self, tmp_path, paper_file):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"window": 1, "remove_stopwords": False, "lemmatize": False,
                                   "inputs": [paper_file.name]}), encoding="utf-8")
        code, out, _ = invoke("metrics", "--config", cfg)
        assert code == 0
        doc = json.loads(out)["documents"][0]
        assert doc["edge_count"] == 11
        code, out, _ = invoke("metrics", "--config", cfg, "--window", "2")
        assert json.loads(out)["documents"][0]["edge_count"] == 21

    def test_unknown_key(self, tmp_path, paper_file):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"windw": 2}), encoding="utf-8")
        code, _, err = invoke("metrics", "--config", cfg, paper_file)
        assert code == 1 and "windw" in err

    def test_unreadable(self, tmp_path, paper_file):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{not json", encoding="utf-8")
        assert invoke("metrics", "--config", cfg, paper_file)[0] == 1


def test_parallel_matches_serial(tmp_path):
    for i in range(4):
        (tmp_path / f"d{i}.txt").write_text(f"word{'abcd'[i]} other stuff here and more words", encoding="utf-8")
    serial = invoke("metrics", tmp_path)[1]
    parallel = invoke("metrics", "--jobs", "3", tmp_path)[1]
    assert serial == parallel


def test_module_entry_point(paper_file):
    proc = subprocess.run(
        [sys.executable, "-m", "langnet", "keywords", *PAPER_FLAGS, "--top", "1", str(paper_file)],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.startswith("learning\t0.14")
