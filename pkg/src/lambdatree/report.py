"""Serialization of analysis results to JSON, CSV and markdown."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .analysis import ClassSetResult, Finding, SpecRecord, VerdictReport
from .configurations import PeriodicSpec, classify_spec
from .model import (
    CLASSES,
    LambdaParams,
    Region,
    class_energy,
    class_label,
    min_energy,
    region_membership_Am,
)

SCHEMA_VERSION = "1.0"
FORMATS = ("json", "csv", "markdown")


def fmt_number(x: Fraction) -> str:
    return str(x)


def region_dict(r: Region | None) -> dict | None:
    if r is None:
        return None
    return {"canonical": r.canonical(), "paper": r.label()}


def params_dict(p: LambdaParams) -> dict:
    return {"a": fmt_number(p.a), "b": fmt_number(p.b), "c": fmt_number(p.c)}


def classify_params_table(p: LambdaParams) -> dict:
    return {
        "params": params_dict(p),
        "energies": {f"U{m}": fmt_number(class_energy(m, p)) for m in CLASSES},
        "minimum": fmt_number(min_energy(p)),
        "regions": [f"A{m}" for m in CLASSES if region_membership_Am(m, p)],
    }


def record_dict(rec: SpecRecord) -> dict:
    return {
        "spec": rec.spec,
        "kind": rec.kind,
        "classes": [f"C{m}" for m in rec.classes],
        "region": region_dict(rec.region),
        "paper_name": rec.paper_name,
        "claimed_region": region_dict(rec.claimed_region),
        "agrees": rec.agrees,
        "witnesses": rec.witnesses,
        "notes": rec.notes,
    }


def finding_dict(f: Finding) -> dict:
    return {
        "spec": f.spec,
        "classes": [f"C{m}" for m in f.classes],
        "region": region_dict(f.region),
        "witnesses": f.witnesses,
        "oracle_point": params_dict(f.oracle_point),
        "oracle_ground_state": f.oracle_ok,
        "mirror_of": f.mirror_of,
        "reflection_of": f.reflection_of,
        "detail": f.detail,
    }


def report_dict(report: VerdictReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "title": report.title,
        "ok": report.ok,
        "summary": report.summary(),
        "checks": report.checks,
        "records": [record_dict(r) for r in report.records],
        "findings": [finding_dict(f) for f in report.findings],
        "mismatches": [
            {"spec": m.spec, "point": params_dict(m.point), "root_rule": m.root_rule,
             "symbolic": m.symbolic, "oracle": m.oracle}
            for m in report.mismatches
        ],
        "extra": report.extra,
    }


def analysis_dict(res: ClassSetResult) -> dict:
    spec = res.spec
    wp = spec.as_weakly_periodic() if isinstance(spec, PeriodicSpec) else spec
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": str(spec),
        "subgroup": str(res.A),
        "kind": classify_spec(wp).value,
        "classes": [class_label(m) for m in sorted(res.classes)],
        "witnesses": [
            {"class": f"C{m}", "pattern": str(w.pattern), "ball": str(w.ball)}
            for m, w in res.witnesses.items()
        ],
        "region": region_dict(res.region),
    }


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


CSV_COLUMNS = ("spec", "kind", "classes", "region", "paper_region", "paper_name",
               "claimed_region", "agrees", "finding")


def report_to_csv(report: VerdictReport) -> str:
    flagged = {f.spec for f in report.findings}
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.records:
        w.writerow([
            r.spec, r.kind, " ".join(f"C{m}" for m in r.classes),
            r.region.canonical(), r.region.label(), r.paper_name or "",
            r.claimed_region.canonical() if r.claimed_region else "",
            "" if r.agrees is None else str(r.agrees).lower(),
            str(r.spec in flagged).lower(),
        ])
    return buf.getvalue()


def report_to_markdown(report: VerdictReport) -> str:
    lines = [f"# {report.title}", ""]
    lines += [f"- {k}: {v}" for k, v in report.summary().items()]
    if report.checks:
        lines += ["", "## Checks", ""]
        lines += [f"- [{'x' if v else ' '}] {k}" for k, v in report.checks.items()]
    lines += ["", "## Specs", "", "| spec | kind | classes | region | paper | agrees |", "|---|---|---|---|---|---|"]
    for r in report.records:
        claimed = r.claimed_region.canonical() if r.claimed_region else ""
        agrees = "" if r.agrees is None else ("yes" if r.agrees else "no")
        name = f"{r.paper_name} " if r.paper_name else ""
        lines.append(f"| {r.spec} | {r.kind} | {' '.join(f'C{m}' for m in r.classes)} | "
                     f"{r.region} | {name}{claimed} | {agrees} |")
    if report.findings:
        lines += ["", "## Findings", ""]
        for f in report.findings:
            mirror = f"; coset swap of {f.mirror_of}" if f.mirror_of else ""
            mirror += f"; spin reflection of {f.reflection_of}" if f.reflection_of else ""
            wit = ", ".join(f"C{w['class']} at {w.get('vertex')} via {w['pattern']}" for w in f.witnesses)
            lines.append(f"- {f.spec}: {f.detail}{mirror}. Oracle at {f.oracle_point}: "
                         f"{'ground state' if f.oracle_ok else 'not a ground state'}. Witnesses: {wit}")
    if report.mismatches:
        lines += ["", "## Symbolic/oracle mismatches", ""]
        lines += [f"- {m.spec} at {m.point} ({m.root_rule}): symbolic={m.symbolic} oracle={m.oracle}"
                  for m in report.mismatches]
    return "\n".join(lines) + "\n"


def render_report(report: VerdictReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report_dict(report))
    if fmt == "csv":
        return report_to_csv(report)
    if fmt == "markdown":
        return report_to_markdown(report)
    raise ValueError(f"unknown format {fmt!r}")


def render_params(table: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json({"schema_version": SCHEMA_VERSION, **table})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "value", "minimal"])
        for name, val in table["energies"].items():
            w.writerow([name, val, str(f"A{name[1:]}" in table["regions"]).lower()])
        return buf.getvalue()
    p = table["params"]
    lines = [f"# (a,b,c) = ({p['a']},{p['b']},{p['c']})", "", "| m | U_m | in A_m |", "|---|---|---|"]
    for name, val in table["energies"].items():
        lines.append(f"| {name[1:]} | {val} | {'yes' if f'A{name[1:]}' in table['regions'] else ''} |")
    lines += ["", f"minimum: {table['minimum']}", f"regions: {', '.join(table['regions'])}"]
    return "\n".join(lines) + "\n"


def render_analysis(data: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(data)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["spec", "kind", "class", "pattern", "ball", "region", "paper_region"])
        for wit in data["witnesses"]:
            w.writerow([data["spec"], data["kind"], wit["class"], wit["pattern"], wit["ball"],
                        data["region"]["canonical"], data["region"]["paper"]])
        return buf.getvalue()
    lines = [f"# {data['spec']} (A={data['subgroup']})", "", f"- kind: {data['kind']}",
             f"- classes: {', '.join(data['classes'])}",
             f"- region: {data['region']['canonical']} ({data['region']['paper']})", "", "| class | pattern | ball |",
             "|---|---|---|"]
    lines += [f"| {w['class']} | {w['pattern']} | {w['ball']} |" for w in data["witnesses"]]
    return "\n".join(lines) + "\n"
