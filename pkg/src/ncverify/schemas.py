"""Request and response models for the verification service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator


class Report(BaseModel):
    """Outcome of one named check.

    ``witness`` carries the full structured evidence; on failure it is never
    empty.  ``timing`` and ``resources`` stay null unless explicitly requested,
    so serialised reports are byte-identical across runs with the same seed.
    """

    checkName: str
    status: Literal["pass", "fail", "skipped"]
    witness: Any
    timing: float | None = None
    resources: dict[str, int] | None = None
    seed: int | None = None


class CheckInfo(BaseModel):
    name: str
    description: str
    modes: list[str] = Field(default_factory=list)


class RunRequest(BaseModel):
    """Options for executing one check."""

    seed: int = 0
    mode: str | None = None
    budget_time: float | None = Field(default=None, gt=0)
    budget_mem: int | None = Field(default=None, gt=0)
    cache_dir: str | None = None
    with_timing: bool = False


class TraceRequest(BaseModel):
    """A word in the two tensor factors, given by the factor index of each letter."""

    pattern: list[int] = Field(min_length=1)
    reversed_indices: bool = False

    @field_validator("pattern")
    @classmethod
    def _factors_in_range(cls, value: list[int]) -> list[int]:
        if any(i not in (1, 2) for i in value):
            raise ValueError("pattern entries must name factor 1 or 2")
        return value


class TraceResponse(BaseModel):
    pattern: list[int]
    reversed_indices: bool
    text: str


class LrRequest(BaseModel):
    """Multiplicity query: how often ``target`` appears in ``left`` tensor ``right``."""

    left: tuple[int, int]
    right: tuple[int, int]
    target: tuple[int, int]

    @field_validator("left", "right", "target")
    @classmethod
    def _positive(cls, value: tuple[int, int]) -> tuple[int, int]:
        if min(value) < 1:
            raise ValueError("weight labels are pairs of positive integers")
        return value


class LrResponse(BaseModel):
    left: tuple[int, int]
    right: tuple[int, int]
    target: tuple[int, int]
    multiplicity: int
