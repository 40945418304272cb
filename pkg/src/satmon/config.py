"""Resource caps. Each may be overridden through the environment."""

import os

EXPONENT_CAP = int(os.environ.get("SATMON_CAP_EXPONENT", 10**6))
CLOSURE_NODE_CAP = int(os.environ.get("SATMON_CAP_NODES", 10**6))
SATURATE_STEP_CAP = int(os.environ.get("SATMON_CAP_STEPS", 10**4))

# Largest staircase box (product of (max exponent + 1)) handled by the dense colon path.
DENSE_BOX_CAP = int(os.environ.get("SATMON_CAP_BOX", 4 * 10**6))

# When set, fast paths are re-derived through the general route and compared.
DEBUG_CHECKS = os.environ.get("SATMON_DEBUG", "") not in ("", "0")


def closure_node_cap():
    # read lazily so tests and the CLI can adjust the env var at runtime
    return int(os.environ.get("SATMON_CAP_NODES", CLOSURE_NODE_CAP))
