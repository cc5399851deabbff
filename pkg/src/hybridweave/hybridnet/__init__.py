"""People+artifact network snapshots, metrics, layout, and analytics."""

from hybridweave.hybridnet.snapshot import (
    HybridSnapshot,
    MetricBundle,
    artifact_node_id,
    build_snapshot,
    snapshot_series,
    window_spans,
)
from hybridweave.hybridnet.metrics import compute_metrics
from hybridweave.hybridnet.layout import layout_snapshot
from hybridweave.hybridnet.ownership import OwnershipEntry, OwnershipMap, ownership_map
from hybridweave.hybridnet.trajectory import STAGES, Trajectory, compute_trajectory
from hybridweave.hybridnet.correlation import CorrelationReport, structure_correlation

__all__ = [
    "HybridSnapshot",
    "MetricBundle",
    "artifact_node_id",
    "build_snapshot",
    "snapshot_series",
    "window_spans",
    "compute_metrics",
    "layout_snapshot",
    "OwnershipEntry",
    "OwnershipMap",
    "ownership_map",
    "STAGES",
    "Trajectory",
    "compute_trajectory",
    "CorrelationReport",
    "structure_correlation",
]
