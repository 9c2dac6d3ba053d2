"""
Error Handling and Recovery Guidance for projcodes

Exception types raised by the library plus user-facing messages with
specific recovery steps, keyed by module and error code.
"""

from typing import Optional, Any
from dataclasses import dataclass
from enum import Enum


class ErrorCategory(Enum):
    """Categories of errors for better handling."""
    FIELD = "field"
    PARAMETER = "parameter"
    SHAPE = "shape"
    CAPACITY = "capacity"
    PARSE = "parse"
    CERTIFICATION = "certification"
    CONFIGURATION = "configuration"
    UNKNOWN = "unknown"


@dataclass
class RecoveryGuidance:
    """Recovery steps for an error."""
    summary: str
    steps: list[str]
    docs: Optional[str] = None


# ============================================================================
# Error Recovery Database
# ============================================================================

RECOVERY_GUIDES: dict[str, dict[str, RecoveryGuidance]] = {
    "gf": {
        "NOT_PRIME": RecoveryGuidance(
            summary="Field characteristic must be prime",
            steps=[
                "1. Pass a prime p to field_make(p, e)",
                "2. For q = 4, 8, 9, 16 use field_make(2, 2), (2, 3), (3, 2), (2, 4)",
            ],
        ),
        "SIZE_EXCEEDED": RecoveryGuidance(
            summary="Field order exceeds the supported size",
            steps=[
                "1. Table mode covers fields up to 2^16 elements",
                "2. Polynomial mode covers fields up to 2^20 elements",
                "3. Reduce q or n (the extension degree grows with n)",
            ],
            docs="projcodes/codes_config.yaml (limits.max_field_order)",
        ),
        "ZERO_INVERSE": RecoveryGuidance(
            summary="Zero has no multiplicative inverse",
            steps=["1. Check for a zero pivot before inverting"],
        ),
        "BAD_MODULUS": RecoveryGuidance(
            summary="Modulus polynomial is reducible or malformed",
            steps=[
                "1. Supply a monic irreducible polynomial (lowest degree first)",
                "2. Or omit the modulus and let the field pick one",
            ],
        ),
        "FIELD_MISMATCH": RecoveryGuidance(
            summary="Operands belong to different fields",
            steps=["1. Build both operands over the same FieldSpec"],
        ),
        "NO_BASE": RecoveryGuidance(
            summary="Field has no declared base field",
            steps=["1. Build the field with ext_make(base, m) before calling expand"],
        ),
    },
    "matq": {
        "SHAPE_MISMATCH": RecoveryGuidance(
            summary="Matrix shapes are incompatible",
            steps=[
                "1. Check row and column counts of both operands",
                "2. Rank distance needs equal shapes",
            ],
        ),
        "AMBIENT_MISMATCH": RecoveryGuidance(
            summary="Subspaces live in different ambient spaces",
            steps=["1. Both subspaces need the same n and the same field"],
        ),
        "BAD_MATRIX_TEXT": RecoveryGuidance(
            summary="Matrix text could not be parsed",
            steps=[
                "1. One row per line, entries separated by single spaces",
                "2. Blocks are separated by a blank line",
                "3. Entries must be integers in [0, q)",
            ],
        ),
    },
    "profiles": {
        "LENGTH_MISMATCH": RecoveryGuidance(
            summary="Profile vectors have different lengths",
            steps=["1. Compare vectors of the same length n"],
        ),
        "BAD_PROFILE": RecoveryGuidance(
            summary="Profile vector text is invalid",
            steps=["1. Use a string of 0/1 digits, one vector per line"],
        ),
        "OUT_OF_RANGE": RecoveryGuidance(
            summary="Selection parameters out of range",
            steps=[
                "1. Require d >= 1 and 1 <= n <= 16",
                "2. A fixed weight k must satisfy 0 <= k <= n",
            ],
        ),
    },
    "rankmetric": {
        "DELTA_OUT_OF_RANGE": RecoveryGuidance(
            summary="Designed rank distance out of range",
            steps=["1. Gabidulin codes need 1 <= delta <= min(m, eta)"],
        ),
        "SHAPE_MISMATCH": RecoveryGuidance(
            summary="Ferrers shape does not match the mother code",
            steps=["1. The mother code must be m x eta with m = wt(v)"],
        ),
        "CAP_EXCEEDED": RecoveryGuidance(
            summary="Exhaustive scan too large",
            steps=[
                "1. Use sampled mode with an explicit seed",
                "2. Or raise limits.max_rank_codewords in codes_config.yaml",
            ],
        ),
        "BAD_MODE": RecoveryGuidance(
            summary="Unknown scan mode",
            steps=["1. Use mode='exhaustive' or mode='sampled'"],
        ),
    },
    "bounds": {
        "OUT_OF_RANGE": RecoveryGuidance(
            summary="Bound parameters out of range",
            steps=[
                "1. Require 0 <= k <= n and t >= 0",
                "2. Require d >= 1 for the GV bound",
            ],
        ),
    },
    "codebook": {
        "MASK_VIOLATION": RecoveryGuidance(
            summary="Filling has entries outside the Ferrers diagram",
            steps=["1. Fillings must be zero wherever S(v) has no dot"],
        ),
        "OUT_OF_RANGE": RecoveryGuidance(
            summary="Code parameters out of range",
            steps=["1. Require 1 <= n <= 16 and 1 <= d <= n"],
        ),
        "CAP_EXCEEDED": RecoveryGuidance(
            summary="Code too large for exhaustive verification",
            steps=[
                "1. Use sampled verification (--cap-verify or sampled mode)",
                "2. The decomposed certificate stays exact",
            ],
        ),
        "BAD_MODE": RecoveryGuidance(
            summary="Unknown verification mode",
            steps=["1. Use mode='exhaustive' or mode='sampled'"],
        ),
        "BAD_DUMP": RecoveryGuidance(
            summary="Code dump could not be parsed",
            steps=[
                "1. Header line must read: n q d metric M",
                "2. Regenerate the dump with: projcode.py construct",
            ],
        ),
        "NOT_CERTIFIED": RecoveryGuidance(
            summary="Claimed minimum distance could not be certified",
            steps=[
                "1. Inspect the violating pair in the report",
                "2. Rebuild the code instead of editing dumps by hand",
            ],
        ),
    },
    "cli": {
        "USAGE": RecoveryGuidance(
            summary="Invalid command-line parameters",
            steps=[
                "1. q must be a prime power with 2 <= q <= 16",
                "2. n must satisfy 1 <= n <= 16 and 1 <= d <= n",
                "3. Run: projcode.py help",
            ],
        ),
        "CONFIG": RecoveryGuidance(
            summary="Configuration file could not be loaded",
            steps=[
                "1. Check PROJCODES_CONFIG in your environment or .env",
                "2. Validate the YAML syntax of codes_config.yaml",
            ],
        ),
    },
}


# ============================================================================
# Exceptions
# ============================================================================

class ProjCodesError(ValueError):
    """Base error; carries the module and code used for recovery lookup."""

    category = ErrorCategory.UNKNOWN

    def __init__(
        self,
        message: str,
        module: str = "projcodes",
        code: str = "UNKNOWN",
        context: Optional[dict[str, Any]] = None
    ):
        super().__init__(message)
        self.message = message
        self.module = module
        self.code = code
        self.context = context or {}

    def to_dict(self) -> dict[str, Any]:
        return format_error(self.module, self.code, self.message, self.context)


class FieldError(ProjCodesError):
    category = ErrorCategory.FIELD


class ShapeError(ProjCodesError):
    category = ErrorCategory.SHAPE


class ParameterError(ProjCodesError):
    category = ErrorCategory.PARAMETER


class CapacityError(ProjCodesError):
    category = ErrorCategory.CAPACITY


class ParseError(ProjCodesError):
    category = ErrorCategory.PARSE


class CertificationError(ProjCodesError):
    category = ErrorCategory.CERTIFICATION


class ConfigError(ProjCodesError):
    category = ErrorCategory.CONFIGURATION


# ============================================================================
# Error Formatting Functions
# ============================================================================

def format_error(
    module: str,
    error_code: str,
    original_message: str = "",
    context: Optional[dict[str, Any]] = None
) -> dict[str, Any]:
    """
    Format an error with recovery guidance.

    Args:
        module: Module name (gf, matq, codebook, ...)
        error_code: Error code
        original_message: Original error message
        context: Additional context

    Returns:
        Formatted error dictionary with recovery steps
    """
    error_code = str(error_code)
    guidance = RECOVERY_GUIDES.get(module, {}).get(error_code)

    result = {
        "error": True,
        "module": module,
        "code": error_code,
        "message": original_message or (guidance.summary if guidance else "Unknown error"),
        "category": _categorize_error(error_code),
    }

    if guidance:
        result["recovery"] = {
            "summary": guidance.summary,
            "steps": guidance.steps,
        }
        if guidance.docs:
            result["recovery"]["documentation"] = guidance.docs

    if context:
        result["context"] = context

    return result


def _categorize_error(code: str) -> str:
    """Categorize error by code."""
    code = str(code)

    if code in ("NOT_PRIME", "ZERO_INVERSE", "BAD_MODULUS", "FIELD_MISMATCH", "NO_BASE"):
        return ErrorCategory.FIELD.value
    elif code in ("SHAPE_MISMATCH", "AMBIENT_MISMATCH", "LENGTH_MISMATCH", "MASK_VIOLATION"):
        return ErrorCategory.SHAPE.value
    elif code in ("OUT_OF_RANGE", "DELTA_OUT_OF_RANGE", "BAD_MODE", "USAGE"):
        return ErrorCategory.PARAMETER.value
    elif code in ("SIZE_EXCEEDED", "CAP_EXCEEDED"):
        return ErrorCategory.CAPACITY.value
    elif code in ("BAD_MATRIX_TEXT", "BAD_PROFILE", "BAD_DUMP"):
        return ErrorCategory.PARSE.value
    elif code == "NOT_CERTIFIED":
        return ErrorCategory.CERTIFICATION.value
    elif code == "CONFIG":
        return ErrorCategory.CONFIGURATION.value
    else:
        return ErrorCategory.UNKNOWN.value


# ============================================================================
# User-Friendly Message Formatting
# ============================================================================

def format_error_message(error: dict[str, Any]) -> str:
    """
    Format error dictionary into user-friendly message.

    Args:
        error: Error dictionary from format_error()

    Returns:
        Formatted string for display
    """
    lines = [f"Error: {error.get('message', 'Unknown error')}", ""]

    if "recovery" in error:
        recovery = error["recovery"]
        lines.append(recovery["summary"])
        lines.append("")
        lines.append("How to fix:")
        for step in recovery["steps"]:
            lines.append(f"   {step}")

        if "documentation" in recovery:
            lines.append("")
            lines.append(f"See: {recovery['documentation']}")

    return "\n".join(lines)
