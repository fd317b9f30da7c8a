"""Multicriteria decision engine.

Thin wrapper over the compiled ``_mcdm`` module. Documents (situations,
usage preferences, requirements, registries, configs) are plain dicts with
the same field names the CLI file formats use.
"""

try:
    from ._mcdm import *  # noqa: F401,F403
    from ._mcdm import McdmError  # noqa: F401
except ImportError:  # running against a build tree
    from _mcdm import *  # noqa: F401,F403
    from _mcdm import McdmError  # noqa: F401

__all__ = [
    "McdmError",
    "screen_dm_point",
    "classify_typology",
    "validate_situation",
    "bucketize_count",
    "derive_requirements",
    "builtin_interfaces",
    "match_methods",
    "select_by_weighting",
    "saw_rank",
    "minmax_normalize",
    "ahp_priorities",
    "ahp_consistency",
    "promethee_flows",
    "apply_method",
    "run",
    "emit_matrix",
    "fingerprint",
    "validate_result",
]
