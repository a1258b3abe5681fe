from landscape_atlas.models.base import (
    Comparison,
    DeceptiveFlag,
    NodeRole,
    Partition,
    RankVector,
)
from landscape_atlas.models.records import (
    ClassRecord,
    ClimbReport,
    ClimberComparison,
    OrbitInfo,
    PropertyReport,
    SimulationSummary,
    group_order,
)
