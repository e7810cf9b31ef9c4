"""Load input files into engine objects and dump engine objects canonically."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

from pydantic import TypeAdapter

from totguild.chain import ChainComplex, ChainHomotopy, ChainMap, GradedMap
from totguild.logs import logger
from totguild.obstruct import HomotopyChainObject, HomotopySimplicialMap, Layers
from totguild.response import SchemaError
from totguild.simpfilt import Bicomplex, SimplicialChainObject
from totguild.specseq import ProbeComplex, Variance
from totguild.utils import decode_matrix, dump_canonical, encode_matrix

from .schemas import (FORMAT_VERSION, BicomplexFile, BicomplexModel,
                      ChainMapFile, ComplexFile, ComplexModel, GradedMapModel,
                      HomotopyChainFile, InputFile, ProbeFile,
                      SimplicialMapFile, SimplicialObjectFile)

_ADAPTER = TypeAdapter(InputFile)

PathLike = Union[str, Path]

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def data_path(name: str) -> Path:
    """A file shipped in ``totguild/data``."""
    return DATA_DIR / name


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def parse_document(text: str, kinds: Optional[Iterable[str]] = None, source: str = "<input>"):
    """Validate JSON text against the file schemas, optionally restricting the kind."""
    data = json.loads(text)
    model = _ADAPTER.validate_python(data)
    if kinds is not None:
        kinds = tuple(kinds)
        if model.kind not in kinds:
            raise SchemaError(
                f"expected a file of kind {' or '.join(kinds)}, got {model.kind!r}", source
            )
    logger.debug(f"parsed {model.kind} file from {source}")
    return model


def load_document(path: PathLike, kinds: Optional[Iterable[str]] = None):
    """``(model, sha256 of the file text)``."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_document(text, kinds, str(path)), digest(text)


def complex_from_model(model: ComplexModel, where: str = "complex") -> ChainComplex:
    dims = dict(model.dims)
    diffs = {
        n: decode_matrix(
            triples, dims.get(n - 1, 0), dims.get(n, 0), f"{where}.differentials.{n}"
        )
        for n, triples in model.differentials.items()
    }
    return ChainComplex(dims, diffs)


def graded_from_model(
    model: GradedMapModel, source: ChainComplex, target: ChainComplex, where: str = "map"
) -> GradedMap:
    k = model.degree
    comps = {
        n: decode_matrix(
            triples, target.dim(n + k), source.dim(n), f"{where}.components.{n}"
        )
        for n, triples in model.components.items()
    }
    return GradedMap(source, target, k, comps)


def chain_map_from_model(
    model: GradedMapModel, source: ChainComplex, target: ChainComplex, where: str = "map"
) -> ChainMap:
    if model.degree != 0:
        raise SchemaError(f"a chain map has degree 0, got {model.degree}", where)
    return ChainMap.from_graded(graded_from_model(model, source, target, where))


def bicomplex_from_model(model: BicomplexModel, where: str = "bicomplex") -> Bicomplex:
    columns = {
        p: complex_from_model(c, f"{where}.columns.{p}") for p, c in model.columns.items()
    }

    def column(p: int) -> ChainComplex:
        return columns.get(p, ChainComplex.zero())

    horizontal = {
        p: chain_map_from_model(h, column(p), column(p - 1), f"{where}.horizontal.{p}")
        for p, h in model.horizontal.items()
    }
    return Bicomplex(columns, horizontal)


def simplicial_object_from_file(model: SimplicialObjectFile) -> SimplicialChainObject:
    objects = [
        complex_from_model(c, f"objects.{n}") for n, c in enumerate(model.objects)
    ]
    faces = [
        [
            chain_map_from_model(f, objects[n], objects[n - 1], f"faces.{n}.{i}")
            for i, f in enumerate(fs)
        ]
        for n, fs in enumerate(model.faces)
    ]
    degeneracies = None
    if model.degeneracies is not None:
        degeneracies = [
            [
                chain_map_from_model(s, objects[n], objects[n + 1], f"degeneracies.{n}.{j}")
                for j, s in enumerate(ss)
            ]
            for n, ss in enumerate(model.degeneracies)
        ]
    return SimplicialChainObject(objects, faces, degeneracies)


def simplicial_map_from_file(model: SimplicialMapFile) -> Tuple[HomotopySimplicialMap, Layers]:
    """The map with its stage-1 witnesses (solved when absent) and any higher layers."""
    C = bicomplex_from_model(model.source, "source")
    D = bicomplex_from_model(model.target, "target")
    maps = {
        p: chain_map_from_model(f, C.column(p), D.column(p), f"maps.{p}")
        for p, f in model.maps.items()
    }
    witnesses = {}
    for p, s in model.witnesses.items():
        where = f"witnesses.{p}"
        if s.degree != 1:
            raise SchemaError(f"a stage-1 witness has degree 1, got {s.degree}", where)
        f_p = maps.get(p, ChainMap.zero(C.column(p), D.column(p)))
        f_prev = maps.get(p - 1, ChainMap.zero(C.column(p - 1), D.column(p - 1)))
        witnesses[p] = ChainHomotopy(
            f_prev @ C.h(p), D.h(p) @ f_p,
            graded_from_model(s, C.column(p), D.column(p - 1), where),
        )
    fmap = HomotopySimplicialMap(C, D, maps, witnesses)
    higher = {}
    for j, per_column in model.layers.items():
        for p, g in per_column.items():
            higher[(j, p)] = graded_from_model(
                g, C.column(p), D.column(p - j), f"layers.{j}.{p}"
            )
    return fmap, Layers(fmap, higher)


def homotopy_chain_from_file(model: HomotopyChainFile) -> HomotopyChainObject:
    objects = {n: complex_from_model(c, f"objects.{n}") for n, c in model.objects.items()}

    def obj(n: int) -> ChainComplex:
        return objects.get(n, ChainComplex.zero())

    maps = {
        n: chain_map_from_model(d, obj(n), obj(n - 1), f"maps.{n}")
        for n, d in model.maps.items()
    }
    homotopies = {
        n: graded_from_model(h, obj(n), obj(n - 2), f"homotopies.{n}")
        for n, h in model.homotopies.items()
    }
    if not homotopies and any(n >= 2 for n in objects):
        return HomotopyChainObject.solve(objects, maps)
    return HomotopyChainObject(objects, maps, homotopies)


def probe_from_file(model: ProbeFile) -> ProbeComplex:
    variance = Variance.COVARIANT if model.variance == "co" else Variance.CONTRAVARIANT
    return ProbeComplex(complex_from_model(model.complex, "complex"), variance)


def chain_map_from_file(model: ChainMapFile) -> ChainMap:
    source = complex_from_model(model.source, "source")
    target = complex_from_model(model.target, "target")
    return chain_map_from_model(model.map, source, target, "map")


def complex_model(C: ChainComplex) -> ComplexModel:
    return ComplexModel(
        dims={n: C.dim(n) for n in sorted(C.dims)},
        differentials={
            n: [tuple(t) for t in encode_matrix(C.d(n))]
            for n in sorted(C.dims) if not C.d(n).is_zero()
        },
    )


def graded_model(g: GradedMap) -> GradedMapModel:
    comps = g.components
    return GradedMapModel(
        degree=g.degree,
        components={n: [tuple(t) for t in encode_matrix(comps[n])] for n in sorted(comps)},
    )


def bicomplex_model(B: Bicomplex) -> BicomplexModel:
    columns, horizontal = B.columns, B.horizontal
    return BicomplexModel(
        columns={p: complex_model(columns[p]) for p in sorted(columns)},
        horizontal={p: graded_model(horizontal[p]) for p in sorted(horizontal)},
    )


def complex_file(C: ChainComplex) -> ComplexFile:
    return ComplexFile(format_version=FORMAT_VERSION, complex=complex_model(C))


def bicomplex_file(B: Bicomplex) -> BicomplexFile:
    return BicomplexFile(format_version=FORMAT_VERSION, bicomplex=bicomplex_model(B))


def simplicial_map_file(
    fmap: HomotopySimplicialMap, layers: Optional[Layers] = None
) -> SimplicialMapFile:
    higher: Dict[int, Dict[int, GradedMapModel]] = {}
    if layers is not None:
        for j, p in layers:
            if j >= 2:
                higher.setdefault(j, {})[p] = graded_model(layers.get(j, p))
    return SimplicialMapFile(
        format_version=FORMAT_VERSION,
        source=bicomplex_model(fmap.source),
        target=bicomplex_model(fmap.target),
        maps={p: graded_model(fmap.maps[p]) for p in sorted(fmap.maps)},
        witnesses={
            p: graded_model(fmap.witnesses[p].s) for p in sorted(fmap.witnesses)
        },
        layers=higher,
    )


def homotopy_chain_file(X: HomotopyChainObject) -> HomotopyChainFile:
    return HomotopyChainFile(
        format_version=FORMAT_VERSION,
        objects={n: complex_model(X.objects[n]) for n in sorted(X.objects)},
        maps={n: graded_model(X.maps[n]) for n in sorted(X.maps)},
        homotopies={n: graded_model(X.homotopies[n]) for n in sorted(X.homotopies)},
    )


def dump(model) -> str:
    """Canonical JSON text: two-space indent, schema key order, trailing newline."""
    return dump_canonical(model.model_dump(mode="json"))
