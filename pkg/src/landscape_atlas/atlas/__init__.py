from landscape_atlas.atlas.manager import AtlasManager
from landscape_atlas.atlas.schema import Atlas, read_atlas, write_atlas
from landscape_atlas.atlas.stats import AtlasStats, compute_stats
