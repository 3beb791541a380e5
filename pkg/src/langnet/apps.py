"""Keyword ranking and style feature vectors built on centrality measures."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import CoocGraph
from .metrics import MEASURES, MetricsReport

__all__ = ["Keyword", "KeywordList", "FeatureVector", "FEATURE_SCHEMA", "extract_keywords", "feature_vector"]


@dataclass(frozen=True)
class Keyword:
    word: str
    score: float
    measure: str


@dataclass(frozen=True)
class KeywordList:
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def words(self) -> list:
        return [kw.word for kw in self.entries]


def extract_keywords(graph: CoocGraph, report: MetricsReport, measure: str = "pagerank", k: int = 10) -> KeywordList:
    """Top-*k* words by *measure*; ties go to the word seen first in the text.

    Asking for more words than the graph has returns all of them.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    scores = report.measure(measure)
    if set(scores) != set(graph.labels):
        raise ValueError("report does not belong to this graph")
    labels = graph.labels
    ranked = sorted(range(len(labels)), key=lambda i: (-scores[labels[i]], i))
    return KeywordList(tuple(Keyword(labels[i], scores[labels[i]], measure) for i in ranked[:k]))


@dataclass(frozen=True)
class FeatureVector:
    values: tuple
    schema: tuple

    def __post_init__(self):
        if len(self.values) != len(self.schema):
            raise ValueError("values and schema differ in length")

    def as_dict(self) -> dict:
        return dict(zip(self.schema, self.values))


_STATS = ("mean", "std", "max")
FEATURE_SCHEMA = tuple(f"{m}_{s}" for m in MEASURES for s in _STATS)


def _moments(values) -> tuple:
    # fsum is exact, so the result does not depend on node order
    n = len(values)
    mean = math.fsum(values) / n
    var = math.fsum((v - mean) ** 2 for v in values) / n
    return mean, math.sqrt(var), max(values)


def feature_vector(report: MetricsReport) -> FeatureVector:
    """Mean, population std and max of degree, PageRank and betweenness."""
    if report.node_count == 0:
        raise ValueError("empty report")
    values = []
    for name in MEASURES:
        values.extend(float(x) for x in _moments(list(report.measure(name).values())))
    return FeatureVector(tuple(values), FEATURE_SCHEMA)
