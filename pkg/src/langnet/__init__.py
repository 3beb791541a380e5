"""Word co-occurrence networks from raw text, with centrality measurements."""

from .apps import FeatureVector, KeywordList, extract_keywords, feature_vector
from .graph import CoocGraph, Vocabulary, build_graph, export_graph, get_neighbors, read_edgelist
from .lemmatizer import LemmaLexicon, lemmatize
from .metrics import MetricsReport, PageRankParams, betweenness, compute_report, degree, pagerank
from .preprocess import (
    InputEncodingError,
    PipelineConfig,
    PosTag,
    StopList,
    TagClass,
    Token,
    map_tag,
    pos_tag,
    preprocess,
    remove_stopwords,
    run_pipeline,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "CoocGraph", "FeatureVector", "InputEncodingError", "KeywordList", "LemmaLexicon",
    "MetricsReport", "PageRankParams", "PipelineConfig", "PosTag", "StopList", "TagClass",
    "Token", "Vocabulary", "betweenness", "build_graph", "compute_report", "degree",
    "export_graph", "extract_keywords", "feature_vector", "get_neighbors", "lemmatize",
    "map_tag", "pagerank", "pos_tag", "preprocess", "read_edgelist", "remove_stopwords",
    "run_pipeline", "tokenize",
]
