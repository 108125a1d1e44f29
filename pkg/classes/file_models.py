# =============================================================================
# classes/file_models.py
# JSON file formats for polytopes, nef-partitions and reports
# =============================================================================
import hashlib
import json
import logging
import re
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Sequence, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError, model_validator

from classes.config import __version__
from classes.exceptions import InputError
from classes.nef_partition import NefPartition, part_sort_key
from classes.polytope import LatticePolytope, hull_from_vertices

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"
_INTEGER = re.compile(r'^-?[0-9]+$')


def _coordinate(value: Any) -> str:
    """Accept decimal-integer strings and JSON integers, nothing else"""
    if isinstance(value, bool):
        raise ValueError(f"coordinate must be an integer, got {value!r}")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str) and _INTEGER.match(value.strip()):
        return str(int(value.strip()))
    raise ValueError(f"coordinate must be a decimal integer, got {value!r}")


Coordinate = Annotated[str, BeforeValidator(_coordinate)]
Vertex = List[Coordinate]


def _check_vertices(vertices: Sequence[Sequence[str]], dim: int, where: str):
    if not vertices:
        raise ValueError(f"{where} has no vertices")
    for n, v in enumerate(vertices):
        if len(v) != dim:
            raise ValueError(f"{where} vertex {n} has {len(v)} coordinates, expected dim = {dim}")


class PolytopeFile(BaseModel):
    """A lattice polytope given by generating points"""
    model_config = ConfigDict(populate_by_name=True, extra='forbid')

    schema_version: Literal["1"] = Field(SCHEMA_VERSION, alias='schemaVersion')
    dim: int = Field(ge=1)
    vertices: List[Vertex]

    @model_validator(mode='after')
    def _dimensions(self) -> 'PolytopeFile':
        _check_vertices(self.vertices, self.dim, 'polytope')
        return self


class PartitionFile(BaseModel):
    """The parts Delta_1, ..., Delta_r of a candidate nef-partition"""
    model_config = ConfigDict(populate_by_name=True, extra='forbid')

    schema_version: Literal["1"] = Field(SCHEMA_VERSION, alias='schemaVersion')
    dim: int = Field(ge=1)
    parts: List[List[Vertex]]

    @model_validator(mode='after')
    def _dimensions(self) -> 'PartitionFile':
        if not self.parts:
            raise ValueError("partition has no parts")
        for j, part in enumerate(self.parts):
            _check_vertices(part, self.dim, f'part {j + 1}')
        return self


class ReportFile(BaseModel):
    """Result envelope written by every computing command"""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal["1"] = Field(SCHEMA_VERSION, alias='schemaVersion')
    command: List[str]
    input_digest: str = Field(alias='inputDigest')
    results: Dict[str, Any]
    tool_version: str = Field(__version__, alias='toolVersion')


# ---------------------------------------------------------------------------
# reading
# ---------------------------------------------------------------------------

def read_input(path: Union[str, Path]) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}")


def input_digest(data: Union[bytes, str]) -> str:
    if isinstance(data, str):
        data = data.encode('utf-8')
    return hashlib.sha256(data).hexdigest()


def _validation_message(e: ValidationError) -> str:
    lines = []
    for err in e.errors():
        location = '.'.join(str(x) for x in err['loc']) or '<root>'
        lines.append(f"{location}: {err['msg']}")
    return '; '.join(lines)


def _parse(model, data: Union[bytes, str]):
    try:
        raw = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        if isinstance(e, json.JSONDecodeError):
            raise InputError(f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}")
        raise InputError(f"input is not UTF-8: {e}")
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        raise InputError(f"invalid {model.__name__}: {_validation_message(e)}")


def parse_polytope_file(data: Union[bytes, str]) -> PolytopeFile:
    return _parse(PolytopeFile, data)


def parse_partition_file(data: Union[bytes, str]) -> PartitionFile:
    return _parse(PartitionFile, data)


def _points(vertices: Sequence[Sequence[str]]) -> List[tuple]:
    return [tuple(int(x) for x in v) for v in vertices]


def polytope_from_file(model: PolytopeFile) -> LatticePolytope:
    return hull_from_vertices(_points(model.vertices), model.dim)


def parts_from_file(model: PartitionFile) -> List[LatticePolytope]:
    return [hull_from_vertices(_points(part), model.dim) for part in model.parts]


# ---------------------------------------------------------------------------
# writing
# ---------------------------------------------------------------------------

def _vertex_strings(p: LatticePolytope) -> List[List[str]]:
    return [[str(x) for x in v] for v in sorted(p.vertices)]


def polytope_to_file(p: LatticePolytope) -> PolytopeFile:
    return PolytopeFile(dim=p.ambient_dim, vertices=_vertex_strings(p))


def partition_to_file(parts: Union[NefPartition, Sequence[LatticePolytope]]) -> PartitionFile:
    if isinstance(parts, NefPartition):
        parts = parts.parts
    ordered = sorted(parts, key=part_sort_key)
    return PartitionFile(dim=ordered[0].ambient_dim, parts=[_vertex_strings(p) for p in ordered])


def dump_model(model: BaseModel) -> str:
    """Canonical JSON: model field order, two-space indent, trailing newline"""
    return json.dumps(model.model_dump(by_alias=True), indent=2) + "\n"
