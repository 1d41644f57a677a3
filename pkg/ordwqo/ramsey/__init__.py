from ordwqo.ramsey.colouring import (
    Colouring,
    colour_bad_product_seq,
    homogeneous_subset,
    homogeneous_subsets,
    parse_colouring,
    parse_tuples,
    print_colouring,
)
from ordwqo.ramsey.pigeonhole import PigeonholeOrder, pigeonhole_extract, pigeonhole_order
