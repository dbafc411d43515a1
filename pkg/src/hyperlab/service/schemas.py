"""Request/response models for the HTTP surface.

A StructureSpec names a hyperfield in exactly one of three ways: a builtin
name, a finite-field recipe (order, optional modulus, optional subgroup),
or a full exchange record.  Semantic negatives (no roots, not minimal,
axioms failed) are 200 responses carrying the negative flag; only malformed
or impossible requests produce error statuses.
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator


class StructureSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    builtin: Optional[str] = None
    field: Optional[int] = None
    modulus: Optional[str] = None      # comma separated, constant first
    subgroup: Optional[str] = None     # keyword or generator list
    record: Optional[dict] = None

    @model_validator(mode="after")
    def _one_source(self):
        picked = [s for s in (self.builtin, self.field, self.record)
                  if s is not None]
        if len(picked) != 1:
            raise ValueError(
                "give exactly one of builtin, field, or record")
        if self.field is None and (self.modulus or self.subgroup):
            raise ValueError("modulus/subgroup only apply to field specs")
        return self


Format = Literal["table", "records"]


class BuildRequest(BaseModel):
    spec: StructureSpec
    format: Format = "table"


class BuildResponse(BaseModel):
    name: str
    size: int
    text: Optional[str] = None
    record: Optional[dict] = None


class VerifyRequest(BaseModel):
    spec: StructureSpec


class VerifyResponse(BaseModel):
    name: str
    passed: bool
    text: str
    record: dict


class EvalRequest(BaseModel):
    spec: StructureSpec
    poly: str
    at: str


class EvalResponse(BaseModel):
    values: list[str]


class RootsRequest(BaseModel):
    spec: StructureSpec
    poly: str


class RootsResponse(BaseModel):
    roots: list[str]


class ExtendRequest(BaseModel):
    field: int
    subgroup: str = "squares"
    modulus: Optional[str] = None
    poly: str


class ExtendResponse(BaseModel):
    text: str
    record: dict


class MinimalRequest(ExtendRequest):
    exhaustive: bool = False


class MinimalResponse(BaseModel):
    minimal: bool
    text: str
    record: dict


class ExperimentResponse(BaseModel):
    verdict: str
    text: str
    record: dict
