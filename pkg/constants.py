import os

WORKLOAD_NAME = "tilinglab"

# Largest vertex count any construction or expansion may produce.
MAX_N = int(os.getenv("TILINGLAB_MAX_N", "1000000"))

# Exact tiling limits
EXACT_TILING_MAX_N = 20 # sweep cells above this size fall back to the greedy tiler
DEFAULT_COPY_CAP = 200000 # copies enumerated before the exact tiler gives up
DEFAULT_NODE_BUDGET = 2000000 # branch-and-bound nodes before returning best-found

# Regularity checker limits
EXACT_REGULARITY_MAX_SIDE = 16

# Iteration driver defaults (desk scale, see IterationConfig.asymptotic for the asymptotic values)
DEFAULT_EXPANSION_FACTOR = 2
DEFAULT_ROUNDS = 3

# Enables the n = 7 exhaustive Erdos-Gallai run in the test suite (~2.1M graphs).
RUN_STRETCH = os.getenv("TILINGLAB_STRETCH", "0") == "1"

FLOAT_FORMAT = "%.10g"
