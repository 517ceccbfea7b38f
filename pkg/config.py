"""
Configuration for the multivector algebra kernel and the gacalc calculator.
Tolerances, size caps, exit codes and logging settings for all modules.
"""
import os

from dotenv import load_dotenv
load_dotenv(override=False)

# Numeric tolerances, keyed by the check that uses them
TOLERANCES = {
    "prune_epsilon": 1e-12,        # float coefficients at or below are dropped
    "antisymmetry": 1e-12,         # oracle tensors must be antisymmetric to this
    "symmetry": 1e-12,             # metric matrices must be symmetric to this
    "reciprocal_check": 1e-10,     # e^k . e_j = delta^k_j after inversion
    "degeneracy": 1e-10,           # |det| / prod(row norms) below this is singular
    "deformation_check": 1e-10,    # residual allowed on v.G w = g(v).E w
}

# Size caps
LIMITS = {
    "max_dim": 12,                 # 2^12 blades
    "oracle_max_dim": 4,           # dense rank-k storage is n^k
    "cofactor_max_order": 4,       # larger Gram determinants go through LU
    "significant_digits": 12,      # printed precision of float results
}

# Process exit codes for the gacalc command
EXIT_CODES = {
    "success": 0,
    "syntax": 1,
    "dimension": 2,
    "invariant": 3,
}

LOGGING = {
    "level": "WARNING",
    "format": "%(levelname)s %(name)s: %(message)s",
}


def _env_override(name: str) -> str | None:
    return os.getenv(f"GACALC_{name.upper()}")


def get_tolerance(name: str) -> float:
    """
    Get a numeric tolerance.

    Args:
        name: Tolerance key (e.g., "prune_epsilon")

    Returns:
        Tolerance value, overridden by GACALC_<NAME> when set
    """
    override = _env_override(name)
    if override is not None:
        return float(override)
    return TOLERANCES.get(name, 1e-12)


def get_limit(name: str) -> int:
    """
    Get a size cap.

    Args:
        name: Limit key (e.g., "max_dim")

    Returns:
        Limit value, overridden by GACALC_<NAME> when set
    """
    override = _env_override(name)
    if override is not None:
        return int(override)
    return LIMITS.get(name, 12)


def get_exit_code(kind: str) -> int:
    """Exit code for an outcome kind ("success", "syntax", "dimension", "invariant")."""
    return EXIT_CODES.get(kind, EXIT_CODES["invariant"])


def get_logging_config() -> dict:
    """
    Get logging settings for the console entry point.

    Returns:
        Dict with level and format: {'level': 'WARNING', 'format': '...'}
    """
    return {
        "level": (_env_override("log_level") or LOGGING["level"]).upper(),
        "format": LOGGING["format"],
    }
