"""Citation-curve analytics: penalty areas, PT/PI indices, author rankings."""

from ._core import (
    AreaDecomposition,
    AuthorProfile,
    IndexWeights,
    build_curve,
    classify,
    compute_metric,
    decompose,
    filter_self_citations,
    generate_synthetic,
    h_index,
    load_corpus,
    m_quotient,
    parameterized_count,
    penalty_pi,
    penalty_pt,
    rank_correlation,
    write_corpus,
    __version__,
)

__all__ = [
    "AreaDecomposition",
    "AuthorProfile",
    "IndexWeights",
    "build_curve",
    "classify",
    "compute_metric",
    "decompose",
    "filter_self_citations",
    "generate_synthetic",
    "h_index",
    "load_corpus",
    "m_quotient",
    "parameterized_count",
    "penalty_pi",
    "penalty_pt",
    "rank_correlation",
    "write_corpus",
    "__version__",
]
