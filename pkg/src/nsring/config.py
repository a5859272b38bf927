"""Size caps. NSRING_MAX_FROBENIUS and NSRING_MAX_RESIDUES override the table caps."""

import os

MAX_GENERATOR = 2**31
DEFAULT_MAX_FROBENIUS = 10**8
# residue-class shortest paths run in pure Python; beyond this they take minutes
DEFAULT_MAX_RESIDUES = 2 * 10**6
INT64_MAX = 2**63 - 1


def _env_int(name: str, default: int) -> int:
    try:
        value = int(os.environ.get(name, default))
    except ValueError:
        return default
    return value if value > 0 else default


def max_frobenius() -> int:
    return _env_int("NSRING_MAX_FROBENIUS", DEFAULT_MAX_FROBENIUS)


def max_residues() -> int:
    return _env_int("NSRING_MAX_RESIDUES", DEFAULT_MAX_RESIDUES)
