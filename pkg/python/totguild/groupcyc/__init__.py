from .burghelea import (BurgheleaMaps, bar_complex, burghelea_maps, compose,
                        conjugation_map, coset_map, decompose)
from .cells import (CellAlgebra, FiniteGroupCells, FreeAbelianWindow,
                    FreeGroupWindow)
from .cyclic import CyclicSetTrunc, ncy_truncated
from .finite import FiniteGroup
from .hochschild import (ConnesQuotient, CyclicHomology, component_dims,
                         connes_complex, connes_operator, cyclic_homology,
                         hochschild_boundary, hochschild_complex)
from .small_model import small_model_labels, wtcc_small_model
from .words import (ConjClassRep, ConjugacyResult, ConjugatorWitness,
                    FreeWord, canonical_form, conjugacy_class_rep,
                    conjugacy_classes_up_to, free_reduce_and_conjugacy,
                    primitive_root, words_up_to)

__all__ = [
    "BurgheleaMaps",
    "CellAlgebra",
    "ConjClassRep",
    "ConjugacyResult",
    "ConjugatorWitness",
    "ConnesQuotient",
    "CyclicHomology",
    "CyclicSetTrunc",
    "FiniteGroup",
    "FiniteGroupCells",
    "FreeAbelianWindow",
    "FreeGroupWindow",
    "FreeWord",
    "bar_complex",
    "burghelea_maps",
    "canonical_form",
    "component_dims",
    "compose",
    "conjugacy_class_rep",
    "conjugacy_classes_up_to",
    "conjugation_map",
    "connes_complex",
    "connes_operator",
    "coset_map",
    "cyclic_homology",
    "decompose",
    "free_reduce_and_conjugacy",
    "hochschild_boundary",
    "hochschild_complex",
    "ncy_truncated",
    "primitive_root",
    "small_model_labels",
    "words_up_to",
    "wtcc_small_model",
]
