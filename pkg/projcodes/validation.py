"""
Input Validation Models for projcodes

Pydantic models for command parameters, checked before any construction
starts so that range errors surface as clear messages instead of deep
inside the field or matrix code.
"""

from typing import Optional, Literal
from pydantic import BaseModel, Field, field_validator, model_validator

from projcodes.config import get_limit
from projcodes.gf import prime_power


# ============================================================================
# Common Validators
# ============================================================================

def validate_prime_power(q: int) -> tuple[int, int]:
    """Validate a field order and return (p, e) with q = p^e."""
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"q={q} is not a prime power")
    max_q = get_limit("max_q")
    if q > max_q:
        raise ValueError(f"q={q} exceeds the supported maximum {max_q}")
    return pe


def validate_metric(name: str) -> str:
    """Validate a code metric name."""
    name = name.strip().lower()
    valid = {"injection", "subspace"}
    if name not in valid:
        raise ValueError(f"Invalid metric: {name}. Valid options: {valid}")
    return name


# ============================================================================
# Command Models
# ============================================================================

class RunConfig(BaseModel):
    """Validate construct / verify / profiles parameters."""

    command: Literal["construct", "verify", "profiles"] = Field(..., description="Command")
    n: Optional[int] = Field(None, ge=1, description="Ambient dimension")
    q: int = Field(2, ge=2, description="Field order")
    d: Optional[int] = Field(None, ge=1, description="Target distance")
    metric: str = Field("injection", description="injection or subspace")
    seed: int = Field(0, ge=0, description="RNG seed for sampled checks")
    cap_enum: int = Field(100000, ge=1, description="Enumeration cap")
    cap_verify: int = Field(5000, ge=1, description="Exhaustive verification cap")
    output: Optional[str] = Field(None, description="Output path")
    format: Literal["json", "csv", "text"] = Field("json", description="Output format")

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        validate_prime_power(v)
        return v

    @field_validator('metric')
    @classmethod
    def validate_metric_field(cls, v):
        return validate_metric(v)

    @field_validator('n')
    @classmethod
    def validate_n(cls, v):
        if v is not None and v > get_limit("max_n"):
            raise ValueError(f"n={v} exceeds the supported maximum {get_limit('max_n')}")
        return v

    @model_validator(mode='after')
    def check_distance(self):
        if self.command in ("construct", "profiles"):
            if self.n is None or self.d is None:
                raise ValueError(f"{self.command} needs -n and -d")
            if self.d > self.n:
                raise ValueError(f"d={self.d} exceeds n={self.n}")
        return self


class TableRange(BaseModel):
    """Validate a comparison-table sweep."""

    q: int = Field(2, ge=2, description="Field order")
    d_values: list[int] = Field([2], min_length=1, description="Injection distances d_I")
    n_min: int = Field(..., ge=1, description="Smallest n")
    n_max: int = Field(..., ge=0, description="Largest n (below n_min means no rows)")
    with_gv: bool = Field(False, description="Append the GV column")

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        validate_prime_power(v)
        return v

    @field_validator('d_values')
    @classmethod
    def validate_d_values(cls, v):
        if any(d < 1 for d in v):
            raise ValueError("Every d_I must be >= 1")
        return sorted(set(v))

    @model_validator(mode='after')
    def check_n_range(self):
        # the punctured column builds a code of length n + 1
        if self.n_min <= self.n_max and self.n_max + 1 > get_limit("max_n"):
            raise ValueError(f"n_max={self.n_max} needs n_max + 1 <= {get_limit('max_n')}")
        return self

    def rows(self) -> list[tuple[int, int]]:
        """(d_I, n) pairs with 2 d_I <= n, d_I ascending then n ascending."""
        return [
            (d, n)
            for d in self.d_values
            for n in range(self.n_min, self.n_max + 1)
            if 2 * d <= n
        ]


class BoundsRequest(BaseModel):
    """Validate a bounds query."""

    kind: Literal["gauss", "projective", "sphere", "gv", "punct"] = Field(..., description="Quantity")
    n: int = Field(..., ge=0, description="Ambient dimension")
    q: int = Field(2, ge=2, description="Field order")
    k: Optional[int] = Field(None, ge=0, description="Dimension")
    t: Optional[int] = Field(None, ge=0, description="Radius")
    d: Optional[int] = Field(None, ge=1, description="Distance")
    M: Optional[int] = Field(None, ge=0, description="Code size")
    metric: str = Field("injection", description="injection or subspace")
    all_k: bool = Field(False, description="Sphere sizes for every center dimension")

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        if prime_power(v) is None:
            raise ValueError(f"q={v} is not a prime power")
        return v

    @field_validator('metric')
    @classmethod
    def validate_metric_field(cls, v):
        return validate_metric(v)

    @model_validator(mode='after')
    def check_required_fields(self):
        needs = {
            "gauss": ["k"],
            "projective": [],
            "sphere": ["t"] if self.all_k else ["k", "t"],
            "gv": ["d"],
            "punct": ["M", "k"],
        }[self.kind]
        missing = [name for name in needs if getattr(self, name) is None]
        if missing:
            raise ValueError(f"bounds {self.kind} needs: {', '.join('-' + m for m in missing)}")
        if self.kind in ("sphere", "punct") and self.k is not None and self.k > self.n:
            raise ValueError(f"k={self.k} exceeds n={self.n}")
        if self.kind == "punct" and self.n < 1:
            raise ValueError("bounds punct needs n >= 1")
        return self


# ============================================================================
# Validation Helper Functions
# ============================================================================

def validate_run_config(command: str, **kwargs) -> RunConfig:
    """Validate and return construct / verify / profiles parameters."""
    return RunConfig(command=command, **kwargs)


def validate_table_range(n_min: int, n_max: int, **kwargs) -> TableRange:
    """Validate and return a table sweep."""
    return TableRange(n_min=n_min, n_max=n_max, **kwargs)


def validate_bounds_request(kind: str, n: int, **kwargs) -> BoundsRequest:
    """Validate and return a bounds query."""
    return BoundsRequest(kind=kind, n=n, **kwargs)
