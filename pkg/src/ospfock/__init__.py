"""Exact combinatorics of the orthosymplectic superalgebra osp(2|2n).

Dominant weights and the L-operator, the q-Fock space with its canonical and
dual canonical bases, exact characters, and the harmonic decomposition of
symmetric tensors of the natural module.
"""

from .characters import (
    Character,
    composition_factors,
    dim_char,
    dual_char,
    irr_char,
    irr_char_by_kac_sum,
    kac_char,
    kac_decompose,
    tilting_char,
    translate,
)
from .errors import (
    DecompositionFailed,
    DegreeTooSmall,
    NotDivisible,
    NotInKacSpan,
    OspFockError,
    RankTooLarge,
    TypicalWeight,
)
from .fock import (
    FockVector,
    apply_generator,
    apply_sequence,
    bar,
    canonical,
    dual_canonical,
    kl_poly,
    procedure_sequence,
)
from .laurent import LaurentPoly
from .tensor import SuperMonomial, SuperPoly, decompose_kernel, gamma, kernel_laplacian
from .weights import (
    DominantWeight,
    FTuple,
    bruhat_less,
    dual_weight,
    from_ftuple,
    l_chain,
    l_step,
    l_step_oracle,
    to_ftuple,
)

__version__ = "0.1.0"

__all__ = [
    "apply_generator",
    "apply_sequence",
    "bar",
    "bruhat_less",
    "canonical",
    "Character",
    "composition_factors",
    "decompose_kernel",
    "DecompositionFailed",
    "DegreeTooSmall",
    "dim_char",
    "DominantWeight",
    "dual_canonical",
    "dual_char",
    "dual_weight",
    "FockVector",
    "from_ftuple",
    "FTuple",
    "gamma",
    "irr_char",
    "irr_char_by_kac_sum",
    "kac_char",
    "kac_decompose",
    "kernel_laplacian",
    "kl_poly",
    "l_chain",
    "l_step",
    "l_step_oracle",
    "LaurentPoly",
    "NotDivisible",
    "NotInKacSpan",
    "OspFockError",
    "procedure_sequence",
    "RankTooLarge",
    "SuperMonomial",
    "SuperPoly",
    "tilting_char",
    "to_ftuple",
    "translate",
    "TypicalWeight",
]
