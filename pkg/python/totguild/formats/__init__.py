"""Versioned JSON file formats for complexes, bicomplexes and maps."""

from .files import (DATA_DIR, bicomplex_file, bicomplex_from_model,
                    bicomplex_model, chain_map_from_file,
                    chain_map_from_model, complex_file, complex_from_model,
                    complex_model, data_path, digest, dump,
                    graded_from_model, graded_model, homotopy_chain_file,
                    homotopy_chain_from_file, load_document, parse_document,
                    probe_from_file, simplicial_map_file,
                    simplicial_map_from_file, simplicial_object_from_file)
from .schemas import (FORMAT_VERSION, BicomplexFile, BicomplexModel,
                      ChainMapFile, ComplexFile, ComplexModel, GradedMapModel,
                      HomotopyChainFile, InputFile, ProbeFile,
                      SimplicialMapFile, SimplicialObjectFile)

__all__ = [
    "FORMAT_VERSION",
    "DATA_DIR",
    "data_path",
    "ComplexModel",
    "GradedMapModel",
    "BicomplexModel",
    "ComplexFile",
    "ChainMapFile",
    "BicomplexFile",
    "SimplicialObjectFile",
    "SimplicialMapFile",
    "HomotopyChainFile",
    "ProbeFile",
    "InputFile",
    "digest",
    "parse_document",
    "load_document",
    "complex_from_model",
    "graded_from_model",
    "chain_map_from_model",
    "chain_map_from_file",
    "bicomplex_from_model",
    "simplicial_object_from_file",
    "simplicial_map_from_file",
    "homotopy_chain_from_file",
    "probe_from_file",
    "complex_model",
    "graded_model",
    "bicomplex_model",
    "complex_file",
    "bicomplex_file",
    "simplicial_map_file",
    "homotopy_chain_file",
    "dump",
]
