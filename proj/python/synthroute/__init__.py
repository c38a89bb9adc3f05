"""Python bindings for the synthroute core: SMILES similarity, route trees,
multi-criteria ranking, t-SNE projection and the extraction scorer."""

import json

from synthroute._core import (
    Error,
    RouteTree,
    canonical_key,
    evaluate_files,
    fingerprint,
    metrics_from_counts,
    rank,
    remove_overlap,
    same_molecule,
    search_sigma,
    tanimoto,
    tsne,
    write_smiles,
)

__version__ = "0.1.0"


def workspace_rankings(path):
    """Rankings of a saved workspace file, shaped like GET /rankings."""
    from synthroute._core import workspace_rankings_json

    return json.loads(workspace_rankings_json(str(path)))


__all__ = [
    "Error",
    "RouteTree",
    "canonical_key",
    "evaluate_files",
    "fingerprint",
    "metrics_from_counts",
    "rank",
    "remove_overlap",
    "same_molecule",
    "search_sigma",
    "tanimoto",
    "tsne",
    "workspace_rankings",
    "write_smiles",
]
