# This file contains helpful utilities for the rest of the code: environment
# variables and the binary-word helpers used by the hierarchical decomposition.

import os

from typing import Optional


def get_from_env(env_key: str, default: Optional[str] = None) -> str:
    """Get a value from an environment variable."""
    if env_key in os.environ and os.environ[env_key]:
        return os.environ[env_key]
    elif default is not None:
        return default
    else:
        raise ValueError(
            f"Did not find {env_key}, please add an environment variable"
            f" `{env_key}` which contains it. "
        )


def binary_words(length: int):
    """All binary words of the given length in lexicographic order ('' for 0)."""
    if length == 0:
        return [""]
    shorter = binary_words(length - 1)
    return ["0" + w for w in shorter] + ["1" + w for w in shorter]


def ceil_log2(value: int) -> int:
    """Smallest k >= 0 with 2**k >= value (0 for value <= 1)."""
    if value <= 1:
        return 0
    return (value - 1).bit_length()
