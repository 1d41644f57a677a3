from ordwqo.ordinal.cnf import (
    OMEGA,
    ONE,
    ZERO,
    OrdinalCNF,
    add,
    cnf_key,
    compare_cnf,
    mul,
    nat_prod,
    nat_sum,
    of_int,
    omega_power,
    omega_tower,
)
from ordwqo.ordinal.text import parse_cnf, print_cnf
from ordwqo.ordinal.wop import approx_index, gamma_plus, gamma_times, pow_n
from ordwqo.ordinal.generate import enumerate_cnf, monomials, random_cnf
