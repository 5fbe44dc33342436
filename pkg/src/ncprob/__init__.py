"""Exact Hopf-algebraic calculus for non-commutative probability.

Words and bar monomials over an indexed alphabet, the coproducts of the
double tensor algebra and of S(T+(A)), half-shuffle calculus on linear
forms, universal products, and moment-cumulant transforms for the classical,
free, Boolean, and monotone theories - all over exact rationals.
"""

from .core import (
    BarMonomial,
    COMMUTATIVE,
    EMPTY_WORD,
    LinComb,
    ORDERED,
    Word,
    as_bar,
    bar_mul,
    concat,
    parse_element,
    parse_word,
    render,
    subword,
    tensor,
    unit_bar,
)
from .cumulants import (
    CUMULANT_KINDS,
    classical_convolve,
    cumulant_cross_convert,
    cumulants_to_moments,
    moments_to_cumulants,
)
from .functionals import (
    CumulantTable,
    Functional,
    StateTable,
    all_words,
    char_extend,
    conv_exp,
    conv_log,
    convolve,
    counit_functional,
    gm,
    half_exp,
    half_log,
    half_shuffle,
    ichar,
    igm,
    invert,
    prelie,
    prelie_m,
    random_state,
)
from .hopf import (
    antipode,
    coproduct,
    counit,
    delta,
    delta_b,
    delta_f,
    delta_half,
    delta_m_linearized,
    extract_alpha,
)
from .partitions import (
    ANCSplitting,
    NestingForest,
    SetPartition,
    adapted_splittings,
    connected_components,
    enumerate_partitions,
    kreweras_complement,
    mobius_nc,
    nesting_forest,
    tree_factorial,
)
from .universal import (
    TaggedWord,
    UNIVERSAL_KINDS,
    additive_convolve,
    additive_convolve_table,
    group_law_check,
    normalize,
    universal_product,
)
from .verify import run_suite

__version__ = "0.1.0"
