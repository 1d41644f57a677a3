from ordwqo.qo.finite import FiniteQO, is_transitive, reflexive_transitive_closure
from ordwqo.qo.combinators import NFoldMode, disjoint_union, n_fold, ordered_sum, product
from ordwqo.qo.badseq import (
    BadSeqTree,
    ReificationCheck,
    check_reification,
    good_pair,
    kb_compare,
    kb_linearize,
    kb_reification,
    longest_bad,
    maximal_order_type,
)
from ordwqo.qo.catalogue import catalogue, quasi_orders
