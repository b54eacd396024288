from typing import Any

# Merged app rc sections for the current boot mode, keyed by config name,
# e.g. {"Experiment": {...}, "Heuristic": {"epsilon": 0.01}}
AppRC = dict[str, Any]
