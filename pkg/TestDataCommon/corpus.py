"""Standard corpus of group actions, as GroupSpec documents.

Every check records the specs it ran on, so a verdict can be reproduced from
its report entry alone.
"""

import copy
from typing import Dict, List


def _symmetric(n: int) -> dict:
    return {"constructor": "symmetric", "n": n}


def _cyclic(n: int) -> dict:
    return {"constructor": "cyclic", "n": n}


def _dihedral(n: int) -> dict:
    return {"constructor": "dihedral", "n": n}


corpus: Dict[str, dict] = {
    "S2": _symmetric(2),
    "S3": _symmetric(3),
    "S4": _symmetric(4),
    "S5": _symmetric(5),
    "A4": {"constructor": "alternating", "n": 4},
    "A5": {"constructor": "alternating", "n": 5},
    "A5_pairs": {"constructor": "k_subsets", "inner": {"constructor": "alternating", "n": 5}, "k": 2},
    "C2": _cyclic(2),
    "C3": _cyclic(3),
    "C4": _cyclic(4),
    "C5": _cyclic(5),
    "C6": _cyclic(6),
    "D4": _dihedral(4),
    "D5": _dihedral(5),
    "D6": _dihedral(6),
    "K6": {"constructor": "multipartite_witness", "degree": 6, "parts": 3},
}

TRIVIAL = {"constructor": "trivial", "n": 1}

# transitive H <= G on the same points
subgroup_pairs = [("S4", "A4"), ("S4", "D4"), ("S4", "C4"), ("S5", "A5"), ("S3", "C3"), ("D6", "C6"), ("D4", "C4")]

regular_names = ["C2", "C3", "C4", "C5", "C6"]

# transitive actions of degree at least 3
triangle_names = [name for name in corpus if name not in ("S2", "C2")]


def spec(name: str) -> dict:
    """Deep copy of a corpus spec, so callers may annotate it."""
    if name not in corpus:
        raise KeyError(f"{name!r} is not in the standard corpus")
    return copy.deepcopy(corpus[name])


def names() -> List[str]:
    return list(corpus)


def external(*specs: dict) -> dict:
    return {"constructor": "external", "factors": [copy.deepcopy(s) for s in specs]}


def internal(*specs: dict) -> dict:
    return {"constructor": "internal", "factors": [copy.deepcopy(s) for s in specs]}


def wreath(inner: dict, outer: dict) -> dict:
    return {"constructor": "wreath", "inner": copy.deepcopy(inner), "outer": copy.deepcopy(outer)}


def left_regular(inner: dict) -> dict:
    return {"constructor": "left_regular", "inner": copy.deepcopy(inner)}
