"""Braid group B_inf acting on a free group, Dehornoy's LD operation on braid
words, and executable irreflexivity certificates."""

from .artin import (
    DEFAULT_SYLLABLE_CAP,
    BraidLetter,
    BraidWord,
    WordSizeError,
    apply,
    braid_eq,
    concat,
    decompose_sigma1,
    free_reduce_word,
    inv_word,
    is_sigma1_positive,
    letter_action,
    shift,
)
from .freeword import (
    FreeWord,
    Syllable,
    in_F2,
    in_G_minus,
    in_W,
    in_Z,
    inv,
    mul,
    reduce,
    strip_x1_conjugate,
)
from .ldalg import (
    LEAF,
    UNKNOWN,
    IrreflexivityCertificate,
    Leaf,
    LDTerm,
    Node,
    check_distributivity,
    check_laver_witness,
    eval_term,
    fold_star,
    ld_equiv_oracle,
    ld_equiv_search,
    star,
    verify_irreflexivity,
)
from .textio import (
    ParseError,
    SourceSpan,
    parse_braid_word,
    parse_free_word,
    parse_ld_term,
    print_braid_word,
    print_free_word,
    print_ld_term,
)

__version__ = "0.1.0"
