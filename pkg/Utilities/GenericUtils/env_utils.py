# fetch and return environment variables used as settings overrides
import os
from typing import Dict

ENV_PREFIX = "EKR_"


def get_prefixed_overrides(prefix: str = ENV_PREFIX) -> Dict[str, str]:
    """Return ``{"threads": "4"}`` for ``EKR_THREADS=4`` and so on (keys lower-cased)."""
    return {key[len(prefix) :].lower(): value for key, value in os.environ.items() if key.startswith(prefix)}
