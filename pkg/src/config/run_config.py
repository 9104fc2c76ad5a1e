"""
Run Configuration
- JSON documents naming p, q, d, both polynomials and the partial augmentations
- Every parameter explicit; unknown keys rejected
- Decode and validation failures carry their position
"""

import json
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from metabelian import EpsilonVector, GroupParams, make_group
from utils.errors import ZassenhausError


class ConfigParseError(ZassenhausError):
    """Run configuration cannot be decoded or validated"""


class SearchOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(1, alias="M", ge=1)
    p_max: int = Field(200, ge=5)


class CheckToggles(BaseModel):
    model_config = ConfigDict(extra="forbid")

    assemblies: bool = True
    assembly_character: bool = True


class RunOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    aux_primes: Optional[List[int]] = None
    search: SearchOptions = Field(default_factory=SearchOptions)
    checks: CheckToggles = Field(default_factory=CheckToggles)


class RunConfig(BaseModel):
    """Explicit parameters of one verification run"""

    model_config = ConfigDict(extra="forbid")

    p: int
    q: int
    d: int
    poly_p: Tuple[int, int]
    poly_q: Tuple[int, int]
    epsilon: List[int]
    options: RunOptions = Field(default_factory=RunOptions)

    @field_validator('epsilon')
    @classmethod
    def validate_epsilon(cls, v):
        if not v:
            raise ValueError('epsilon must not be empty')
        return v

    def to_params(self) -> GroupParams:
        return make_group(self.p, self.q, self.d, self.poly_p, self.poly_q)

    def to_epsilon(self) -> EpsilonVector:
        return EpsilonVector(tuple(self.epsilon))

    def canonical_json(self) -> str:
        """Stable serialization used for the provenance hash"""
        return json.dumps(self.model_dump(by_alias=True), sort_keys=True, separators=(",", ":"))


def parse_run_config(text: str, source: str = "<config>") -> RunConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigParseError(f"{source}:{e.lineno}:{e.colno}: {e.msg}")
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        path = ".".join(str(part) for part in err['loc']) or "<root>"
        raise ConfigParseError(f"{source}: field {path}: {err['msg']}")


def load_run_config(path: Union[str, Path]) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigParseError(f"{path}: cannot read ({e.strerror})")
    return parse_run_config(text, str(path))
