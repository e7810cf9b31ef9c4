"""Obstructions to totalizing homotopy-coherent simplicial data."""

from .bn_tower import BNTower, TowerStage, bn_totalization_tower
from .bracket import (BracketWitness, ObstructionClass, bracket_vanishes,
                      toda_bracket)
from .layers import Layers, gr2_map, layered_map
from .simplicial_map import (HomotopyChainObject, HomotopySimplicialMap,
                             solve_stage1)
from .tower import ExtensionResult, assemble_filtered_map, extend_tower

__all__ = [
    "HomotopySimplicialMap",
    "HomotopyChainObject",
    "solve_stage1",
    "Layers",
    "layered_map",
    "gr2_map",
    "ObstructionClass",
    "BracketWitness",
    "toda_bracket",
    "bracket_vanishes",
    "ExtensionResult",
    "extend_tower",
    "assemble_filtered_map",
    "TowerStage",
    "BNTower",
    "bn_totalization_tower",
]
