"""Run both sides of a reduction and compare."""
import time
from dataclasses import asdict, dataclass, field

from ..exceptions import OracleTimeout
from ..oracle import oracle_solve
from .cnf import satisfies, sat_oracle
from .line_gadget import LINE_GADGET, build_line_gadget, validate_line_witness, witness_edge_colouring
from .threep2 import (
    THREE_P2_GADGET,
    assignment_from_colouring,
    build_3p2_gadget,
    check_witness,
    witness_colouring_3p2,
)


@dataclass
class AgreementReport:
    flavour: str
    d: int
    sat: bool
    dcut: str  # "yes", "no", "timeout" or "skipped"
    agree: object = None  # None when the d-cut side is not decided
    forward_witness_ok: object = None
    backward_assignment_ok: object = None
    sat_ms: float = 0.0
    dcut_ms: float = 0.0
    gadget_vertices: int = 0
    notes: dict = field(default_factory=dict)

    def to_json(self):
        return asdict(self)


def verify_reduction(inst, d, flavour, timeout=None, run_dcut=True):
    t0 = time.perf_counter()
    assignment = sat_oracle(inst)
    sat_ms = (time.perf_counter() - t0) * 1000.0
    if flavour == THREE_P2_GADGET:
        gadget = build_3p2_gadget(inst, d)
    elif flavour == LINE_GADGET:
        gadget = build_line_gadget(inst, d)
    else:
        raise ValueError(f"unknown gadget flavour {flavour!r}")
    report = AgreementReport(flavour, d, assignment is not None, "skipped", sat_ms=sat_ms, gadget_vertices=gadget.graph.n)
    report.notes.update(gadget.properties)
    if assignment is not None:
        report.forward_witness_ok = _forward_ok(inst, assignment, d, gadget)
    if not run_dcut:
        return report
    t0 = time.perf_counter()
    try:
        cert = oracle_solve(gadget.graph, d, guard=False, timeout=timeout)
    except OracleTimeout:
        report.dcut = "timeout"
        report.dcut_ms = (time.perf_counter() - t0) * 1000.0
        return report
    report.dcut_ms = (time.perf_counter() - t0) * 1000.0
    report.dcut = "yes" if cert is not None else "no"
    report.agree = (cert is not None) == report.sat
    if cert is not None:
        derived = _assignment_from_cert(gadget, cert)
        report.backward_assignment_ok = satisfies(inst, derived)
    return report


def _forward_ok(inst, assignment, d, gadget):
    if gadget.flavour == THREE_P2_GADGET:
        red, blue = witness_colouring_3p2(inst, assignment, d, gadget)
        return check_witness(gadget, red, blue, d)
    ec = witness_edge_colouring(inst, assignment, d, gadget)
    return not validate_line_witness(gadget, ec, d)


def _assignment_from_cert(gadget, cert):
    if gadget.flavour == THREE_P2_GADGET:
        return assignment_from_colouring(gadget, cert.red)
    # colour of a named clique = colour of any edge inside it (L(G) vertex)
    index = {e: i for i, e in enumerate(gadget.edge_list)}

    def clique_red(name):
        a, b = gadget.cliques[name][:2]
        return index[(min(a, b), max(a, b))] in cert.red

    s_red = clique_red("S")
    n_vars = sum(1 for name in gadget.cliques if name.startswith("V_x") and not name.startswith("V_xbar"))
    return tuple(clique_red(f"V_x{h}") == s_red for h in range(1, n_vars + 1))

