"""Chain complexes, maps, homotopies, cones, Hom-complexes and tensors."""

from .complex import (ChainComplex, Homology, betti, boundaries, cycles,
                      direct_sum, homology, homology_dims, is_acyclic,
                      suspend)
from .cone import Cone, mapping_cone
from .hom import (HomComplex, HomotopyClassSpace, homotopy_classes,
                  nullhomotopy)
from .maps import (ChainHomotopy, ChainMap, GradedMap,
                   induced_map_on_homology, induced_rank,
                   is_quasi_isomorphism)
from .tensor import tensor, tensor_blocks, tensor_maps

__all__ = [
    "ChainComplex",
    "Homology",
    "betti",
    "boundaries",
    "cycles",
    "direct_sum",
    "homology",
    "homology_dims",
    "is_acyclic",
    "suspend",
    "Cone",
    "mapping_cone",
    "HomComplex",
    "HomotopyClassSpace",
    "homotopy_classes",
    "nullhomotopy",
    "GradedMap",
    "ChainMap",
    "ChainHomotopy",
    "induced_map_on_homology",
    "induced_rank",
    "is_quasi_isomorphism",
    "tensor",
    "tensor_blocks",
    "tensor_maps",
]
