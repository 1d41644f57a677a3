from ordwqo.theta.term import (
    ZERO_TERM,
    BaseOrder,
    Const,
    Diagnosis,
    GTerm,
    Sum,
    Theta,
    Zero,
    gamma_omega_term,
    make_sum,
    well_formed,
)
from ordwqo.theta.compare import compare_g, g_key
from ordwqo.theta.enumerate import enumerate_terms
from ordwqo.theta.text import parse_g, print_g
