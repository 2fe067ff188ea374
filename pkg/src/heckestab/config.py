"""Run-wide defaults.

The element budget is denominated in "elements touched": permutations
enumerated by a counting pass, or orbit members held by a BFS.  The
default corresponds to roughly one full pass over S_12.  Seed and shard
defaults match the CLI documentation; results never depend on the shard
count, only wall time does.
"""

from __future__ import annotations

DEFAULT_BUDGET = 500_000_000
DEFAULT_SEED = 20140601
DEFAULT_SHARDS = 1

# Counting passes are split into fixed-size contiguous rank blocks so that
# the merge order (and hence every printed number) is independent of how
# many workers consume the blocks.
RANK_BLOCK = 5_000_000
