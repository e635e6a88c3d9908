"""Crossed-Dynkin diagram strings, appendix tables and JSON command reports."""
from __future__ import annotations

import json
import logging
import re
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import pandas as pd
from tabulate import tabulate

from chevalley import all_triples, build_chevalley, jacobi_violations, random_triples
from grading import CaseKind, CrossedDiagram, build_grading, classify_case, levi_type
from homology import (
    DEFAULT_CAP,
    build_complex,
    compare_with_kostant,
    harm_curv_checks,
    inclusion_intertwines,
    squares_vanish,
)
from kostant import H2Component, classify_h2_positive, h2_components
from nested import build_nested, component, is_projective_space_case, nested_checks, short_root_failure
from rootsys import LieType, RootSystem, RootSystemError, all_lie_types, build_root_system, format_root
from utils import DEFAULT_FIXTURES, dump_json

__all__ = [
    "DiagramParseError",
    "DiagramSemanticError",
    "TableRow",
    "build_table_rows",
    "cmd_classify",
    "cmd_info",
    "cmd_kostant",
    "cmd_nested",
    "cmd_oracle",
    "cmd_tables",
    "emit_table",
    "format_diagram",
    "load_fixtures",
    "maximal_node",
    "parse_diagram",
    "report_passed",
    "resolve_node",
    "table_mismatches",
]

LOGGER = logging.getLogger(__name__)

RANK_PATTERN = re.compile(r"\d+")
POSITIVE_CASES = (CaseKind.SYMMETRIC, CaseKind.CONTACT, CaseKind.BD3)
TABLE_COLUMNS = ["g", "p", "q", "levi_ss", "ambient_proj_dim", "cone_dim", "vmrt_name"]


class DiagramParseError(ValueError):
    """Raised when a diagram string does not follow the grammar; carries a 1-based column."""

    def __init__(self, text: str, column: int, message: str) -> None:
        self.text = text
        self.column = column
        super().__init__(f"{message} at column {column} of {text!r}")


class DiagramSemanticError(ValueError):
    """Raised when a well-formed diagram cannot be used for the requested command."""


# ----------------------------------------------------------------------
# Diagram strings
# ----------------------------------------------------------------------
def _parse_cross_list(cross: Union[str, Iterable[int]]) -> List[int]:
    if isinstance(cross, str):
        items = [item for item in cross.split(",") if item]
        if not all(item.isdigit() for item in items):
            raise DiagramSemanticError(f"Cross list {cross!r} must be comma-separated node numbers")
        return [int(item) for item in items]
    return [int(item) for item in cross]


def parse_diagram(
    text: str,
    cross: Optional[Union[str, Iterable[int]]] = None,
    require_cross: bool = False,
) -> CrossedDiagram:
    """Parse "<Family><rank>[:<mask>]" with mask over {'*', 'x'}, or a bare type plus a cross list."""
    if not text:
        raise DiagramParseError(text, 1, "Empty diagram")
    for column, char in enumerate(text, start=1):
        if char.isspace():
            raise DiagramParseError(text, column, "Whitespace is not allowed")
    family = text[0].upper()
    if family not in "ABCDEFG":
        raise DiagramParseError(text, 1, f"Unknown family {text[0]!r}")
    head, sep, mask = text[1:].partition(":")
    if not RANK_PATTERN.fullmatch(head):
        raise DiagramParseError(text, 2, "Expected a decimal rank")
    try:
        lie_type = LieType(family, int(head))
    except RootSystemError as exc:
        raise DiagramParseError(text, 2, str(exc)) from exc
    mask_column = len(head) + 3
    if sep:
        if cross is not None:
            raise DiagramParseError(text, mask_column - 1, "Give either a mask or a cross list, not both")
        if len(mask) != lie_type.rank:
            raise DiagramParseError(
                text, mask_column, f"Mask has length {len(mask)}, expected {lie_type.rank}"
            )
        for offset, char in enumerate(mask):
            if char not in "*xX":
                raise DiagramParseError(text, mask_column + offset, f"Unexpected mask symbol {char!r}")
        sigma = frozenset(k + 1 for k, char in enumerate(mask) if char in "xX")
    else:
        sigma = frozenset(_parse_cross_list(cross) if cross is not None else ())
        bad = sorted(i for i in sigma if not 1 <= i <= lie_type.rank)
        if bad:
            raise DiagramSemanticError(f"Crossed nodes {bad} out of range 1..{lie_type.rank} for {lie_type}")
    if require_cross and not sigma:
        raise DiagramSemanticError(f"{text}: a parabolic needs at least one crossed node")
    return CrossedDiagram(lie_type, sigma)


def format_diagram(diagram: CrossedDiagram) -> str:
    return str(diagram)


def maximal_node(diagram: CrossedDiagram) -> int:
    if len(diagram.sigma) != 1:
        raise DiagramSemanticError(f"{diagram}: expected exactly one crossed node, got {sorted(diagram.sigma)}")
    return next(iter(diagram.sigma))


def resolve_node(rs: RootSystem, descriptor: Union[int, str]) -> int:
    """Node number for 3, "3", "n", "n-1", "adjoint" or "cominuscule"."""
    n = rs.rank
    if isinstance(descriptor, int) or str(descriptor).isdigit():
        node = int(descriptor)
    elif descriptor == "n":
        node = n
    elif descriptor == "n-1":
        node = n - 1
    elif descriptor == "adjoint":
        nodes = [i for i in range(1, n + 1) if rs.pairing(rs.highest_root, i)]
        if len(nodes) != 1:
            raise DiagramSemanticError(f"{rs.lie_type}: no unique adjoint node, theta pairs with {nodes}")
        node = nodes[0]
    elif descriptor == "cominuscule":
        nodes = [i for i in range(1, n + 1) if rs.theta_coefficient(i) == 1]
        if not nodes:
            raise DiagramSemanticError(f"{rs.lie_type} has no cominuscule node")
        node = nodes[-1]
    else:
        raise DiagramSemanticError(f"Unknown node descriptor {descriptor!r}")
    if not 1 <= node <= n:
        raise DiagramSemanticError(f"Node {descriptor!r} resolves to {node}, outside 1..{n} for {rs.lie_type}")
    return node


# ----------------------------------------------------------------------
# Appendix tables
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class TableRow:
    table: int
    row: str
    g: str
    p: str
    q: str
    levi_ss: str
    ambient_proj_dim: int
    cone_dim: int
    vmrt_name: str


def load_fixtures(path: Optional[Path] = None) -> Dict[str, Any]:
    path = Path(path or DEFAULT_FIXTURES)
    LOGGER.debug("Loading table fixtures from %s", path)
    return json.loads(path.read_text(encoding="utf-8"))


def _instances(which: int, fixtures: Dict[str, Any]) -> Iterator[Tuple[Dict[str, Any], Dict[str, Any], LieType, int]]:
    table = fixtures["tables"].get(str(which))
    if table is None:
        raise DiagramSemanticError(f"No fixtures for table {which}")
    for entry in table["rows"]:
        for instance in entry["instances"]:
            t = LieType(entry["family"], instance["rank"])
            node = resolve_node(build_root_system(t), instance.get("node", entry["node"]))
            yield entry, instance, t, node


def _compute_row(which: int, entry: Dict[str, Any], t: LieType, node: int) -> TableRow:
    np_ = build_nested(t, node)
    return TableRow(
        table=which,
        row=entry["row"],
        g=t.label,
        p=format_diagram(np_.p_grading.diagram),
        q=format_diagram(np_.q_grading.diagram),
        levi_ss=levi_type(np_.p_grading).label,
        ambient_proj_dim=np_.p_grading.dims[-1] - 1,
        cone_dim=len(np_.v1_minus),
        vmrt_name=entry["vmrt_name"],
    )


def build_table_rows(which: int, fixtures: Dict[str, Any]) -> List[TableRow]:
    return [_compute_row(which, entry, t, node) for entry, _, t, node in _instances(which, fixtures)]


def table_mismatches(which: int, fixtures: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Computed fields that disagree with the fixture instances."""
    mismatches = []
    for entry, instance, t, node in _instances(which, fixtures):
        row = _compute_row(which, entry, t, node)
        q_cross = sorted(build_nested(t, node).sigma_q)
        computed = {
            "q_cross": q_cross,
            "levi_ss": row.levi_ss,
            "ambient_proj_dim": row.ambient_proj_dim,
            "cone_dim": row.cone_dim,
        }
        for name, value in computed.items():
            if instance[name] != value:
                mismatches.append({"row": entry["row"], "g": t.label, "field": name, "expected": instance[name], "computed": value})
    if mismatches:
        LOGGER.error("Table %d: %d fields disagree with fixtures", which, len(mismatches))
    return mismatches


def emit_table(which: int, fmt: str = "json", fixtures_path: Optional[Path] = None) -> str:
    fixtures = load_fixtures(fixtures_path)
    rows = build_table_rows(which, fixtures)
    if fmt == "json":
        caption = fixtures["tables"][str(which)]["caption"]
        return dump_json({"table": which, "caption": caption, "rows": [asdict(r) for r in rows]})
    frame = pd.DataFrame([asdict(r) for r in rows], columns=TABLE_COLUMNS)
    if fmt == "text":
        return frame.to_markdown(index=False)
    if fmt == "latex":
        return tabulate(frame.values.tolist(), headers=TABLE_COLUMNS, tablefmt="latex")
    raise DiagramSemanticError(f"Unknown table format {fmt!r}; expected json, text or latex")


# ----------------------------------------------------------------------
# Command reports
# ----------------------------------------------------------------------
def _report(
    case: Dict[str, Any],
    classification: Any = None,
    predictions: Optional[List[Any]] = None,
    oracle: Optional[Dict[str, Any]] = None,
    checks: Optional[Dict[str, Dict[str, Any]]] = None,
) -> Dict[str, Any]:
    return {
        "case": case,
        "classification": classification,
        "predictions": predictions or [],
        "oracle": oracle or {},
        "checks": checks or {},
    }


def _check(passed: bool, witness: Any = None) -> Dict[str, Any]:
    return {"status": "pass" if passed else "fail", "witness": witness}


def report_passed(report: Dict[str, Any]) -> bool:
    return all(check["status"] == "pass" for check in report["checks"].values())


def _case_block(t: LieType, node: int) -> Dict[str, Any]:
    rs = build_root_system(t)
    return {
        "lie_type": t.label,
        "node": node,
        "diagram": format_diagram(CrossedDiagram(t, frozenset({node}))),
        "long_root": rs.is_long(rs.simple_root(node)),
        "kind": classify_case(t, node).value,
    }


def cmd_info(diagram: CrossedDiagram) -> Dict[str, Any]:
    grading = build_grading(diagram)
    levi = levi_type(grading)
    case = {
        "lie_type": diagram.lie_type.label,
        "diagram": format_diagram(diagram),
        "sigma": sorted(diagram.sigma),
        "dim": grading.rs.dim,
        "depth": grading.depth,
        "dims": {str(i): d for i, d in sorted(grading.dims.items())},
        "levi_ss": levi.label,
        "center_dim": levi.center_dim,
        "highest_root": format_root(grading.rs.highest_root),
    }
    classification = None
    if len(diagram.sigma) == 1:
        classification = classify_case(diagram.lie_type, maximal_node(diagram)).value
    checks = {
        "dims_symmetric": _check(all(grading.dims[i] == grading.dims[-i] for i in grading.dims)),
        "bracket_generates": _check(grading.bracket_generates()),
    }
    return _report(case, classification, checks=checks)


def cmd_nested(t: LieType, node: int) -> Dict[str, Any]:
    np_ = build_nested(t, node)
    case = _case_block(t, node)
    case["q"] = format_diagram(np_.q_grading.diagram)
    selectors = ["q-1F", "q-1V", "q-2", "q-3", "q-4", "p-1", "p-2"]
    predictions = [{"component": s, "dim": len(component(np_, s))} for s in selectors]
    predictions.append({"depth_q": np_.q_grading.depth})
    checks = {name: dict(value) for name, value in nested_checks(np_).items()}
    if not np_.is_long:
        failure = short_root_failure(np_)
        checks["short_root_failure"] = _check(not failure.zero, list(failure.witnesses[:3]))
    return _report(case, np_.case.value, predictions, checks=checks)


def _component_dict(comp: H2Component) -> Dict[str, Any]:
    return {
        "word": comp.word.label,
        "lowest_weight_triple": [format_root(root) for root in comp.lw_triple],
        "homogeneity": comp.homogeneity,
        "q_degree": comp.q_degree,
        "levi_dim": comp.levi_dim,
        "classified": comp.classified,
    }


def cmd_kostant(t: LieType, node: int) -> Dict[str, Any]:
    classification = classify_h2_positive(t, node)
    predictions = [_component_dict(c) for c in h2_components(t, node)]
    return _report(
        _case_block(t, node),
        {"kind": classification.case.value, "positive_homogeneities": list(classification.positive_rs)},
        predictions,
    )


def cmd_classify(max_rank: int = 8) -> Dict[str, Any]:
    """Positive homogeneities for every maximal parabolic up to max_rank (A1 excluded)."""
    predictions = []
    outside = []
    for t in all_lie_types(max_rank):
        if t.family == "A" and t.rank == 1:
            continue
        rs = build_root_system(t)
        for node in range(1, rs.rank + 1):
            classification = classify_h2_positive(t, node)
            entry = {
                "lie_type": t.label,
                "node": node,
                "kind": classification.case.value,
                "positive_homogeneities": list(classification.positive_rs),
            }
            predictions.append(entry)
            if classification.case is CaseKind.SHORT_ROOT:
                continue
            if classification.positive_rs and classification.case not in POSITIVE_CASES:
                outside.append(f"{t.label} alpha{node}")
    LOGGER.info("Classified %d maximal parabolics up to rank %d", len(predictions), max_rank)
    families = sorted({p["kind"] for p in predictions if p["positive_homogeneities"] and p["kind"] != "ShortRoot"})
    checks = {"positive_only_symmetric_contact_bd3": _check(not outside, outside)}
    return _report({"max_rank": max_rank}, {"positive_families": families}, predictions, checks=checks)


def _jacobi_check(t: LieType, samples: int, seed: int) -> Dict[str, Any]:
    """Exhaustive up to rank 4, a seeded sample of basis triples beyond."""
    cb = build_chevalley(build_root_system(t))
    triples = all_triples(cb) if t.rank <= 4 else random_triples(cb, samples, seed)
    violations = jacobi_violations(cb, triples)
    return _check(not violations, [list(v) for v in violations[:3]])


def cmd_oracle(
    t: LieType,
    node: int,
    cap: int = DEFAULT_CAP,
    partial: bool = False,
    jacobi_samples: int = 10_000,
    seed: int = 20240611,
) -> Dict[str, Any]:
    verdict = compare_with_kostant(t, node, cap, partial=partial)
    oracle = verdict.as_dict()
    checks = {
        "jacobi": _jacobi_check(t, jacobi_samples, seed),
        "lowest_weights_harmonic": _check(verdict.lowest_weights_harmonic),
        "harmonic_degrees": _check(verdict.degrees_match, [list(verdict.predicted_degrees), list(verdict.harmonic_degrees)]),
        "hodge_identities": _check(verdict.identities_hold),
    }
    if verdict.total_matches is not None:
        checks["harmonic_total"] = _check(verdict.total_matches, [verdict.predicted_total, verdict.harmonic_total])
    np_ = build_nested(t, node)
    complex_ = build_complex(np_.p_grading)
    if complex_.dim(3) <= cap:
        squares = squares_vanish(complex_, 2)
        checks["boundary_squared_zero"] = _check(squares["boundary"])
        checks["coboundary_squared_zero"] = _check(squares["coboundary"])
    if build_complex(np_.q_grading).dim(2) <= cap:
        checks["inclusion_intertwines"] = _check(inclusion_intertwines(np_))
        if np_.is_long and np_.case in POSITIVE_CASES and not is_projective_space_case(np_):
            for name, value in harm_curv_checks(np_).items():
                checks[f"harm_curv_{name}"] = value
    return _report(_case_block(t, node), np_.case.value, [_component_dict(c) for c in h2_components(t, node)], oracle, checks)


def cmd_tables(
    which: Optional[Iterable[int]] = None,
    fmt: str = "json",
    fixtures_path: Optional[Path] = None,
) -> Tuple[List[str], List[Dict[str, Any]]]:
    """Rendered tables plus every field that disagrees with the fixtures."""
    fixtures = load_fixtures(fixtures_path)
    documents, mismatches = [], []
    for table in which or (1, 2, 3):
        documents.append(emit_table(table, fmt, fixtures_path))
        mismatches.extend({"table": table, **m} for m in table_mismatches(table, fixtures))
    return documents, mismatches
