"""Rendering of group summaries, census reports and verification results.

Three formats: ``text`` (for people), ``json`` (sorted keys, orders as
decimal strings) and ``tsv``.  TSV output starts with ``#`` header lines
(artifact version, n, seed, bounds); data cells are left-aligned with
trailing spaces so columns line up, so readers should strip each cell.

TSV columns:

* group: ``n  order  class  abelian  transitive  generators``
* census: ``class  count  order  example``
* verify: ``theorem  params  status  instances  counterexample``
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import __version__
from .census import CensusReport, VerificationResult
from .classify import GroupClass
from .forest import Forest
from .perm import PermGroup

FORMATS = ("text", "json", "tsv")


@dataclass(frozen=True)
class GroupSummary:
    forest: Forest
    group: PermGroup
    group_class: GroupClass

    def to_json(self) -> dict:
        out = self.group_class.to_json()
        out["n"] = self.forest.n
        out["generators"] = [str(g) for g in self.group.generators]
        out["class"] = self.group_class.label
        return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _meta(n=None, seed=None, bounds=None) -> dict:
    return {"artifact": "chaingroup", "version": __version__, "n": n, "seed": seed, "bounds": bounds}


def _tsv(header_meta: dict, columns: list[str], rows: list[list[str]]) -> str:
    lines = [f"# {k}: {json.dumps(v, sort_keys=True)}" for k, v in header_meta.items()]
    table = [columns] + rows
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
    for r in table:
        cells = [c.ljust(w) for c, w in zip(r, widths)]
        lines.append("\t".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _edges_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges) or "(no edges)"


def render_group(summary: GroupSummary, fmt: str = "text") -> str:
    gens = [str(g) for g in summary.group.generators]
    cls = summary.group_class
    if fmt == "json":
        return dumps(summary.to_json())
    if fmt == "tsv":
        row = [str(summary.forest.n), str(cls.order), cls.label, str(cls.abelian).lower(),
               str(cls.transitive).lower(), " ".join(gens) or "()"]
        return _tsv(_meta(n=summary.forest.n),
                    ["n", "order", "class", "abelian", "transitive", "generators"], [row])
    lines = [
        f"n: {summary.forest.n}",
        f"order: {cls.order}",
        f"class: {cls.label}",
        f"abelian: {str(cls.abelian).lower()}",
        f"generators: {len(gens)}",
    ]
    lines += [f"  {g}" for g in gens]
    return "\n".join(lines) + "\n"


def render_census(report: CensusReport, fmt: str = "text", seed=None) -> str:
    rows = report.rows()
    meta = _meta(n=report.n, seed=seed, bounds={"cap": report.cap})
    if fmt == "json":
        return dumps({
            "meta": meta,
            "n": report.n,
            "total": report.total,
            "classes": [
                {"label": c.label, "class": c.to_json(), "count": count,
                 "example": [list(e) for e in ex]}
                for c, count, ex in rows
            ],
        })
    table = [[c.label, str(count), str(c.order), _edges_text(ex)] for c, count, ex in rows]
    if fmt == "tsv":
        return _tsv(meta, ["class", "count", "order", "example"], table)
    width = max([len("class")] + [len(r[0]) for r in table])
    cw = max([len("count")] + [len(r[1]) for r in table])
    lines = [f"census n={report.n}: {report.total} forests, {len(rows)} classes",
             f"{'class'.ljust(width)}  {'count'.rjust(cw)}  example"]
    lines += [f"{r[0].ljust(width)}  {r[1].rjust(cw)}  {r[3]}" for r in table]
    return "\n".join(lines) + "\n"


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def result_to_json(r: VerificationResult, timing: bool = False) -> dict:
    out = {
        "theorem": r.theorem,
        "params": r.params,
        "status": r.status,
        "instances": r.instances,
        "counterexample": r.counterexample,
        "details": r.details,
    }
    if timing:
        out["elapsed_s"] = round(r.elapsed, 3)
    return out


def render_results(results: list[VerificationResult], fmt: str = "text", seed=None,
                   timing: bool = False) -> str:
    bounds = [dict(theorem=r.theorem, **r.params) for r in results]
    ns = sorted({r.params["n"] for r in results if "n" in r.params})
    meta = _meta(n=ns[0] if len(ns) == 1 else ns, seed=seed, bounds=bounds)
    if fmt == "json":
        return dumps({"meta": meta, "results": [result_to_json(r, timing) for r in results]})
    if fmt == "tsv":
        rows = [[r.theorem, _params_text(r.params), r.status, str(r.instances),
                 json.dumps(r.counterexample, sort_keys=True) if r.counterexample else ""]
                for r in results]
        return _tsv(meta, ["theorem", "params", "status", "instances", "counterexample"], rows)
    lines = []
    for r in results:
        line = f"{r.theorem} {_params_text(r.params)}: {r.status} {r.instances} instances"
        if timing:
            line += f" ({r.elapsed:.2f}s)"
        lines.append(line)
        if r.counterexample:
            cx = r.counterexample
            lines.append(f"  expected: {cx['expected']}")
            lines.append(f"  actual:   {cx['actual']}")
            lines.append("  forest:")
            lines += ["    " + ln for ln in cx["forest"]["text"].splitlines()]
    passed = sum(r.status == "PASS" for r in results)
    failed = sum(r.status == "FAIL" for r in results)
    skipped = len(results) - passed - failed
    lines.append(f"summary: {passed} PASS, {failed} FAIL, {skipped} SKIPPED")
    return "\n".join(lines) + "\n"


def render_paths(paths) -> str:
    return "".join(" ".join(map(str, p)) + "\n" for p in paths)
