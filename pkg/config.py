# config.py
# central config for mapforge

import os
from dotenv import load_dotenv

# pick up MAPFORGE_* overrides from a local .env if one exists
load_dotenv()

# enumeration bounds
# (the full census is only feasible for a handful of edges)
max_edges = int(os.getenv("MAPFORGE_MAX_EDGES", 8))
max_nodes = int(os.getenv("MAPFORGE_MAX_NODES", 2_000_000))
propp_max_edges = 4
scheme_max_genus = 2

# series truncation
default_order = int(os.getenv("MAPFORGE_ORDER", 8))

# output
output_format = os.getenv("MAPFORGE_FORMAT", "json")
output_formats = ["json", "csv", "ndjson", "text"]

# randomized property tests
seed = 20240917

# known censuses used as sanity anchors
# rooted maps with n edges, summed over all genera (n = 0..5)
all_genera_counts = [1, 2, 10, 74, 706, 8162]
# planar rooted maps by edges (n = 0..5)
planar_counts = [1, 2, 9, 54, 378, 2916]
# genus-1 rooted maps by edges (n = 2..5)
torus_counts = {2: 1, 3: 20, 4: 307, 5: 4280}
