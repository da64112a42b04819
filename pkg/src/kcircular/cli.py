"""Command-line front end: ``kcirc analyze|enumerate|certify|corpus``.

Graphs are read as JSON documents of the form
``{"vertices": [...], "edges": [{"id": ..., "ends": [u, v]}, ...]}``.
Exit codes: 0 success, 1 verification failure, 2 parse error,
3 infeasible k, 4 resource limit, 5 hypothesis unmet.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import graph as gr
from . import matroid as mt
from .corpus import multigraphs, random_corpus
from .errors import EnumerationLimitError, HypothesisError
from .graph import Multigraph
from .kcirc import (
    DEFAULT_MAX_EDGES,
    KContext,
    is_base_by_structure,
    is_connected_k,
    is_nontrivial,
    rank_formulas,
)
from .stars import Status, classify, nonsep_cocircuits_oracle, nonsep_stars
from .uniqueness import SearchBounds, Verdict, decide_unique
from .verify import mutant_connectivity, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_K, EXIT_LIMIT, EXIT_HYPOTHESIS = range(6)

STATUS_COLOURS = {Status.SMALL: "palegreen", Status.TIGHT: "gold", Status.BIG: "salmon"}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    k: int = 1
    format: str = "json"
    max_edges: Optional[int] = None
    max_time: float = 600.0
    search: bool = False
    seed: Optional[int] = None
    family: Optional[str] = None
    max_vertices: int = 5
    random: int = 0
    mutant: bool = False

    @property
    def enum_limit(self) -> int:
        if self.max_edges is not None:
            return self.max_edges
        return int(os.environ.get("KCIRC_MAX_EDGES", DEFAULT_MAX_EDGES))


# ----------------------------------------------------------------------
# helpers


def load_graph(path: Optional[str]) -> Multigraph:
    try:
        text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}")
    if not text.strip():
        raise CliError(EXIT_PARSE, f"{path or '<stdin>'}: empty input")
    try:
        return Multigraph.from_json(text)
    except (ValueError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"{path or '<stdin>'}: {exc}")


def _sets(family) -> list:
    return sorted(sorted(s) for s in family)


def _subgraph(h: Optional[Multigraph]):
    if h is None:
        return None
    return {"vertices": sorted(h.vertices), "edges": sorted(h.edges)}


def _context(cfg: RunConfig, g: Multigraph) -> KContext:
    if cfg.k < 0:
        raise CliError(EXIT_K, f"k must be non-negative, got {cfg.k}")
    return KContext(g, cfg.k, cfg.enum_limit)


# ----------------------------------------------------------------------
# commands


def cmd_analyze(cfg: RunConfig) -> tuple[dict, int]:
    g = load_graph(cfg.input)
    ctx = _context(cfg, g)
    mem = gr.membership(g)
    report = {
        "k": cfg.k,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "delta": gr.delta(g),
        "cacti_graph": mem.is_cacti,
        "cactus": mem.is_cactus,
        "kernel": _subgraph(gr.kernel(g)),
        "core": _subgraph(gr.core(g)),
        "tree_components": gr.tree_forest(g)[1],
        "nontrivial": None,
        "connected": None,
        "rho": None,
        "rho_star": None,
        "stars": [],
    }
    if cfg.k >= 1:
        report["nontrivial"] = is_nontrivial(g, cfg.k)
        report["connected"] = ctx.connected
        if not report["nontrivial"]:
            report["note"] = f"M_{cfg.k} trivial"
        if ctx.connected:
            report["rho"], report["rho_star"] = rank_formulas(ctx)
            report["stars"] = [r.to_dict() for r in classify(ctx)]
    return report, EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> tuple[dict, int]:
    g = load_graph(cfg.input)
    ctx = _context(cfg, g)
    try:
        m = ctx.matroid
        m.rho  # forces the table build, which can hit the ground-set limit
    except EnumerationLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc))
    fam = cfg.family
    report = {"family": fam, "k": cfg.k}
    agree = None
    if fam == "circuits":
        report["sets"] = _sets(m.circuits)
        agree = mt.validate(m)
        report["check"] = "circuit axioms"
    elif fam == "bases":
        report["sets"] = _sets(m.bases)
        if cfg.k >= 1 and ctx.connected:
            predicted = {
                m.members(x) for x in range(m.full + 1) if is_base_by_structure(ctx, m.members(x))
            }
            agree = predicted == set(m.bases)
            report["check"] = "base-structure predicate vs oracle"
    elif fam == "cocircuits":
        report["sets"] = _sets(m.cocircuits)
        agree = all(len(c) <= m.corank + 1 for c in m.cocircuits)
        report["check"] = "|K| <= rho* + 1"
    elif fam == "nonsep":
        if cfg.k < 1 or not is_connected_k(g, cfg.k):
            raise CliError(EXIT_HYPOTHESIS, f"M_{cfg.k}(G) is not connected")
        oracle = nonsep_cocircuits_oracle(ctx)
        report["sets"] = _sets(oracle)
        agree = nonsep_stars(ctx) == oracle
        report["check"] = "star predicate vs oracle"
    report["count"] = len(report["sets"])
    report["agree"] = agree
    return report, EXIT_OK if agree in (None, True) else EXIT_VERIFY


def cmd_certify(cfg: RunConfig) -> tuple[dict, int]:
    g = load_graph(cfg.input)
    ctx = _context(cfg, g)
    if cfg.k < 1 or not ctx.connected:
        raise CliError(EXIT_HYPOTHESIS, f"M_{cfg.k}(G) is not connected; no certificate applies")
    bounds = SearchBounds(time_limit=cfg.max_time)
    if cfg.max_edges is not None:
        bounds = SearchBounds(time_limit=cfg.max_time, max_edges=cfg.max_edges)
    try:
        cert = decide_unique(ctx, search=cfg.search, bounds=bounds)
    except EnumerationLimitError as exc:
        raise CliError(EXIT_LIMIT, str(exc))
    code = EXIT_OK
    if cfg.search and cert.verdict is Verdict.UNKNOWN and cert.search_complete is False:
        code = EXIT_LIMIT
    return cert.to_dict(), code


def cmd_corpus(cfg: RunConfig) -> tuple[dict, int]:
    graphs = list(multigraphs(cfg.max_vertices, 6 if cfg.max_edges is None else cfg.max_edges))
    if cfg.seed is not None:
        graphs += random_corpus(cfg.seed, cfg.random or 25, max_vertices=5, max_edges=8)
    predicates = {"is_connected_k": mutant_connectivity} if cfg.mutant else None
    suite = run_suite(graphs, predicates=predicates)
    checks = []
    for r in suite.reports.values():
        entry = {
            "name": r.name,
            "description": r.description,
            "instances": r.instances,
            "failures": len(r.failures),
            "passed": r.passed,
        }
        if not r.passed:
            wg, wk, detail = r.witness()
            entry["witness"] = {"graph": wg.to_dict(), "k": wk, "detail": detail}
        checks.append(entry)
    ok = all(c["passed"] for c in checks)
    return {"graphs": len(graphs), "checks": checks, "ok": ok}, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "certify": cmd_certify,
    "corpus": cmd_corpus,
}


# ----------------------------------------------------------------------
# rendering


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines += _text(val, indent + 1)
            else:
                lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                sub = _text(item, indent + 1)
                lines.append(f"{pad}- {sub[0].strip()}")
                lines += sub[1:]
            else:
                lines.append(f"{pad}- {json.dumps(item, sort_keys=True)}")
    return lines


def to_dot(g: Multigraph, report: Optional[dict] = None) -> str:
    """DOT drawing of ``g``; vertices are coloured by k-status when known."""
    colours = {}
    for star in (report or {}).get("stars", []):
        colours[star["vertex"]] = STATUS_COLOURS[Status(star["status"])]
    out = ["graph G {", "  node [style=filled];"]
    for v in sorted(g.vertices):
        out.append(f'  "{v}" [fillcolor={colours.get(v, "lightgrey")}];')
    for e, (u, v) in g.edges.items():
        out.append(f'  "{u}" -- "{v}" [label="{e}"];')
    out.append("}")
    return "\n".join(out)


def render(cfg: RunConfig, payload: dict) -> str:
    if cfg.format == "json":
        return json.dumps(payload, sort_keys=True, indent=2)
    if cfg.format == "dot":
        if cfg.command != "analyze":
            raise CliError(EXIT_PARSE, "--format dot is only available for analyze")
        return to_dot(load_graph(cfg.input), payload)
    return "\n".join(_text(payload))


# ----------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kcirc", description="k-circular matroids of multigraphs")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=1)
    common.add_argument("--format", choices=["json", "dot", "text"], default="json")
    common.add_argument("--max-edges", type=int, default=None)
    common.add_argument("--max-time", type=float, default=600.0)
    common.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="graph and matroid summary")
    a.add_argument("--input", "-i")
    e = sub.add_parser("enumerate", parents=[common], help="circuits, bases, cocircuits or nonsep")
    e.add_argument("family", choices=["circuits", "bases", "cocircuits", "nonsep"])
    e.add_argument("--input", "-i")
    c = sub.add_parser("certify", parents=[common], help="uniqueness certificate")
    c.add_argument("--input", "-i")
    c.add_argument("--search", action="store_true", help="fall back on exhaustive search")
    s = sub.add_parser("corpus", parents=[common], help="run the verification corpus")
    s.add_argument("--max-vertices", type=int, default=5)
    s.add_argument("--random", type=int, default=0, help="random graphs added when --seed is given")
    s.add_argument("--mutant", action="store_true", help=argparse.SUPPRESS)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.max_edges is not None and ns.max_edges <= 0:
        raise CliError(EXIT_PARSE, "--max-edges must be positive")
    if ns.max_time <= 0:
        raise CliError(EXIT_PARSE, "--max-time must be positive")
    fields = {f: getattr(ns, f) for f in RunConfig.__dataclass_fields__ if hasattr(ns, f)}
    return RunConfig(**fields)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        cfg = config_from_args(ns)
        payload, code = COMMANDS[cfg.command](cfg)
        text = render(cfg, payload)
    except CliError as exc:
        print(f"kcirc: {exc}", file=sys.stderr)
        return exc.code
    except EnumerationLimitError as exc:
        print(f"kcirc: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except HypothesisError as exc:
        print(f"kcirc: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
