"""Pydantic models of the JSON input files.

Matrices are sparse ``[row, col, "p/q"]`` triples; dictionary keys are
degrees or column indices. Every file carries ``format_version: 1`` and a
``kind`` discriminator.
"""

from __future__ import annotations

from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

FORMAT_VERSION = 1

Triple = Tuple[int, int, str]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ComplexModel(_Strict):
    dims: Dict[int, int]
    differentials: Dict[int, List[Triple]] = Field(default_factory=dict)


class GradedMapModel(_Strict):
    degree: int = 0
    components: Dict[int, List[Triple]] = Field(default_factory=dict)


class BicomplexModel(_Strict):
    columns: Dict[int, ComplexModel]
    horizontal: Dict[int, GradedMapModel] = Field(default_factory=dict)


class _File(_Strict):
    format_version: Literal[1]


class ComplexFile(_File):
    kind: Literal["complex"] = "complex"
    complex: ComplexModel


class ChainMapFile(_File):
    kind: Literal["chain_map"] = "chain_map"
    source: ComplexModel
    target: ComplexModel
    map: GradedMapModel


class BicomplexFile(_File):
    kind: Literal["bicomplex"] = "bicomplex"
    bicomplex: BicomplexModel


class SimplicialObjectFile(_File):
    kind: Literal["simplicial_object"] = "simplicial_object"
    objects: List[ComplexModel]
    # faces[n][i] is ∂_i on degree n; faces[0] is empty
    faces: List[List[GradedMapModel]]
    degeneracies: Optional[List[List[GradedMapModel]]] = None


class SimplicialMapFile(_File):
    kind: Literal["simplicial_map"] = "simplicial_map"
    source: BicomplexModel
    target: BicomplexModel
    maps: Dict[int, GradedMapModel]
    # stage-1 homotopies s_p, degree 1, column p -> column p-1
    witnesses: Dict[int, GradedMapModel] = Field(default_factory=dict)
    # layers[j][p] for j >= 2
    layers: Dict[int, Dict[int, GradedMapModel]] = Field(default_factory=dict)


class HomotopyChainFile(_File):
    kind: Literal["homotopy_chain"] = "homotopy_chain"
    objects: Dict[int, ComplexModel]
    maps: Dict[int, GradedMapModel] = Field(default_factory=dict)
    homotopies: Dict[int, GradedMapModel] = Field(default_factory=dict)


class ProbeFile(_File):
    kind: Literal["probe"] = "probe"
    complex: ComplexModel
    variance: Literal["co", "contra"] = "co"


InputFile = Annotated[
    Union[
        ComplexFile,
        ChainMapFile,
        BicomplexFile,
        SimplicialObjectFile,
        SimplicialMapFile,
        HomotopyChainFile,
        ProbeFile,
    ],
    Field(discriminator="kind"),
]
