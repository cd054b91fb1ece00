"""
Pydantic models for the toolkit's reports and the HTTP API.

Every report carries `schema` so JSON consumers can detect format changes.
"""

from typing import Annotated, Literal

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1

_Schema = Annotated[
    int, Field(serialization_alias="schema", description="Report schema version")
]


class ErrorResponse(BaseModel):
    """Standard error response model."""

    error: Annotated[int | None, Field(description="Error code")] = None
    error_type: Annotated[str | None, Field(description="Error type")] = None
    message: Annotated[str | None, Field(description="Error message")] = None


class HealthResponse(BaseModel):
    """Health check response model."""

    status: Annotated[str, Field(description="Health status")]


class CountResponse(BaseModel):
    """Number of avoiders of a pattern at one length."""

    schema_version: _Schema = SCHEMA_VERSION
    pattern: Annotated[str, Field(description="Forbidden pattern", examples=["1324"])]
    n: Annotated[int, Field(description="Permutation length")]
    count: Annotated[int, Field(description="s_n(pattern)")]


class TriangleResponse(BaseModel):
    """Distribution of inversions over the avoiders of a pattern."""

    schema_version: _Schema = SCHEMA_VERSION
    pattern: Annotated[str, Field(description="Forbidden pattern", examples=["132"])]
    n_max: Annotated[int, Field(description="Largest length enumerated")]
    k_max: Annotated[
        int | None, Field(description="Largest inversion count kept, None for full rows")
    ] = None
    rows: Annotated[
        list[list[int]],
        Field(description="rows[n-1][k] = number of avoiders of length n with k inversions"),
    ]


class ColumnResponse(BaseModel):
    """One column of an inversion triangle."""

    schema_version: _Schema = SCHEMA_VERSION
    pattern: Annotated[str, Field(description="Forbidden pattern")]
    k: Annotated[int, Field(description="Inversion count")]
    values: Annotated[list[int], Field(description="values[n-1] = s_{n,k}(pattern)")]


class MahonianResponse(BaseModel):
    """Number of all permutations of length n with k inversions."""

    schema_version: _Schema = SCHEMA_VERSION
    n: int
    k: int
    count: int


class ColoringRequest(BaseModel):
    """A permutation and the triple (sigma, tau, rho) to color it against."""

    perm: Annotated[str, Field(description="Permutation to color", examples=["364251"])]
    sigma: Annotated[str, Field(description="sigma, '-' for empty", examples=["1"])] = "1"
    tau: Annotated[str, Field(description="tau, '-' for empty", examples=["1"])] = "1"
    rho: Annotated[str, Field(description="rho, '-' for empty", examples=["1"])] = "1"


class ColoringViolation(BaseModel):
    """An occurrence of a forbidden pattern in one color class."""

    part: Annotated[Literal["red", "blue"], Field(description="Color class")]
    pattern: Annotated[str, Field(description="Pattern found in that color class")]
    witness: Annotated[list[int], Field(description="1-based positions of the occurrence")]


class ColoringReport(BaseModel):
    """Red-blue coloring trace of one permutation and the verdict of the merge lemma."""

    schema_version: _Schema = SCHEMA_VERSION
    perm: str
    triple: Annotated[list[str], Field(description="sigma, tau, rho")]
    coloring: Annotated[str, Field(description="R/B per position", examples=["RRBRBR"])]
    red: Annotated[str, Field(description="Red values in order", examples=["3621"])]
    blue: Annotated[str, Field(description="Blue values in order", examples=["45"])]
    avoids_composite: Annotated[bool, Field(description="Whether perm avoids the composite")]
    passed: bool
    violations: list[ColoringViolation] = []


class BoundResponse(BaseModel):
    """Value of a bound formula together with the trace of its evaluation."""

    schema_version: _Schema = SCHEMA_VERSION
    formula: Annotated[str, Field(description="Formula name", examples=["layered"])]
    topic: Annotated[str, Field(description="Result the formula belongs to")]
    value: Annotated[float, Field(description="Value as a double")]
    value_text: Annotated[str, Field(description="Value at full working precision")]
    derivation: Annotated[str, Field(description="Human readable evaluation trace")]


class BijectionRequest(BaseModel):
    """Input to one direction of a partition bijection."""

    perm: Annotated[str | None, Field(description="Permutation for forward directions")] = None
    partition: Annotated[
        str | None, Field(description="Partition for the 132 inverse", examples=["5+4+4+1+1"])
    ] = None
    lam: Annotated[str | None, Field(description="First partition of a pair")] = None
    mu: Annotated[str | None, Field(description="Second partition of a pair")] = None
    n: Annotated[int | None, Field(description="Target length for inverse directions")] = None


class BijectionResponse(BaseModel):
    """Result of applying a bijection."""

    schema_version: _Schema = SCHEMA_VERSION
    bijection: str
    perm: str | None = None
    partition: str | None = None
    lam: str | None = None
    mu: str | None = None
    inversions: int


class MonotoneViolation(BaseModel):
    """A column decrease s_{n,k} > s_{n+1,k}."""

    n: int
    k: int
    s_n_k: int
    s_next_k: int


class MonotoneReport(BaseModel):
    """Every adjacent-row column decrease of an inversion triangle."""

    schema_version: _Schema = SCHEMA_VERSION
    pattern: str
    n_max: int
    violations: list[MonotoneViolation] = []

    @property
    def is_monotone(self) -> bool:
        return not self.violations


class PolyFitModel(BaseModel):
    """A polynomial fitted to the tail of a sequence, with exact rational coefficients."""

    degree: int
    coefficients: Annotated[list[str], Field(description="Leading coefficient first")]
    stabilization_point: Annotated[int, Field(description="Least n from which the fit holds")]
    is_zero: bool


class ProfileExpectationModel(BaseModel):
    """The polynomial profile predicted for s_{n,k}(pattern) as n grows."""

    profile_class: Literal["identity-pattern", "fibonacci", "non-fibonacci"]
    expected_degree: int | None = None
    expected_leading: str | None = None
    zero_threshold: int | None = None
    in_hypothesis: bool = True


class ProfileReport(BaseModel):
    """Detected versus predicted polynomial profile for one column."""

    schema_version: _Schema = SCHEMA_VERSION
    pattern: str
    k: int
    n_max: int
    values: list[int]
    fit: PolyFitModel | None = None
    expectation: ProfileExpectationModel
    verdict: Literal["match", "mismatch", "no-fit", "out-of-hypothesis"]


class RatioPoint(BaseModel):
    """The share of permutations of length n with k inversions that avoid the pattern."""

    n: int
    avoiders: Annotated[int, Field(description="s_{n,k}(pattern)")]
    total: Annotated[int, Field(description="Permutations of length n with k inversions")]
    ratio: Annotated[str, Field(description="avoiders / total as an exact fraction", examples=["2/3"])]
    value: float
    lower_bound: Annotated[
        int | None, Field(description="C(n - k, r - 1) for a Fibonacci pattern with r >= 2 inversions")
    ] = None


class CoreCount(BaseModel):
    """Number of avoiders with a given core."""

    core: Annotated[list[str], Field(description="Indecomposable blocks of size at least 2")]
    count: int


class RatioReport(BaseModel):
    """Avoiding share of a column over n and the limit it tends to."""

    schema_version: _Schema = SCHEMA_VERSION
    pattern: str
    k: int
    n_max: int
    profile_class: Literal["identity-pattern", "fibonacci", "non-fibonacci"]
    limit: Annotated[str, Field(description="Limit of the share as n grows: 0 or 1")]
    trend: Literal["constant", "decreasing", "increasing", "mixed"]
    points: list[RatioPoint] = []
    cores: Annotated[list[CoreCount], Field(description="Avoiders of length n_max by core")] = []


class CheckReport(BaseModel):
    """Outcome of an exhaustive harness."""

    schema_version: _Schema = SCHEMA_VERSION
    name: str
    parameters: dict[str, int | str] = {}
    checked: Annotated[int, Field(description="Number of instances examined")]
    passed: bool
    violations: Annotated[list[str], Field(description="Human readable failures")] = []
