from .cnf import (
    FLAVOURS,
    NAE_ALL_POSITIVE,
    SPLIT_POS_NEG,
    CnfInstance,
    InvalidInstance,
    emit_dimacs,
    fano_instance,
    parse_dimacs,
    random_nae_instance,
    random_split_instance,
    sat_oracle,
    satisfies,
    six_variable_example,
    validate_instance,
)
from .line_gadget import LINE_GADGET, build_line_gadget, mixed_seed_is_infeasible, witness_edge_colouring
from .threep2 import THREE_P2_GADGET, build_3p2_gadget, witness_colouring_3p2
from .verify import AgreementReport, verify_reduction
