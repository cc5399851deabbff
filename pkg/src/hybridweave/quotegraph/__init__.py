"""Quotation detection, resolution, thread graphs, and quote statistics."""

from hybridweave.quotegraph.blocks import QuoteBlock, detect_quotes
from hybridweave.quotegraph.resolve import (
    QuoteEdge,
    normalize_quoted_text,
    resolve_quote_sources,
)
from hybridweave.quotegraph.threads import (
    DivergenceReport,
    StructureReport,
    ThreadGraph,
    binary_role,
    build_reply_graph,
    classify_structure,
    compare_models,
    split_threads,
    with_quote_edges,
)
from hybridweave.quotegraph.statistics import QuoteStats, quote_statistics

__all__ = [
    "QuoteBlock",
    "detect_quotes",
    "QuoteEdge",
    "normalize_quoted_text",
    "resolve_quote_sources",
    "ThreadGraph",
    "StructureReport",
    "DivergenceReport",
    "binary_role",
    "build_reply_graph",
    "with_quote_edges",
    "classify_structure",
    "compare_models",
    "split_threads",
    "QuoteStats",
    "quote_statistics",
]
