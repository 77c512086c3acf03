"""Reference tables, computed tables, and the comparison between them.

The fixed exceptional types carry a pinned fixture file; the classical
families and the dihedral types generate their expected rows from the
closed-form models.  Comparison happens at printed-row granularity: classes
of one degree with identical profile columns share a row (the two
reflection classes of F4, for instance).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

from .classicmodels import PredictedProfile, predicted_rows
from .coxtype import CoxeterType, factored
from .group import CoxeterGroup
from .involutions import InvolutionClass, enumerate_involution_classes, first_cube
from .structure import CentralizerProfile, profiles_for_group

SCHEMA_VERSION = 1

CSV_HEADER = [
    "type",
    "degree",
    "label",
    "order_factored",
    "Gminus",
    "TildeGminus",
    "Gplus",
    "TildeGplus",
    "gamma",
]


@dataclass(frozen=True)
class TableRow:
    degree: int
    labels: tuple[str, ...]
    classes: int
    class_size: int
    order: str
    g_minus: str
    tilde_g_minus: str
    g_plus: str
    tilde_g_plus: str
    gamma: str

    def key(self):
        return (self.degree, self.labels)

    def columns(self):
        return (
            self.class_size,
            self.classes,
            self.order,
            self.g_minus,
            self.tilde_g_minus,
            self.g_plus,
            self.tilde_g_plus,
            self.gamma,
        )


def load_fixture(path=None) -> dict:
    if path is None:
        text = (
            resources.files("coxcent.data")
            .joinpath("expected_tables.json")
            .read_text()
        )
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _fixture_rows(table: dict) -> list[TableRow]:
    return [
        TableRow(
            degree=r["degree"],
            labels=tuple(r["labels"]),
            classes=r["classes"],
            class_size=r["class_size"],
            order=r["order"],
            g_minus=r["g_minus"],
            tilde_g_minus=r["tilde_g_minus"],
            g_plus=r["g_plus"],
            tilde_g_plus=r["tilde_g_plus"],
            gamma=r["gamma"],
        )
        for r in table["rows"]
    ]


def _dihedral_rows(m: int) -> list[TableRow]:
    full = str(CoxeterType([("I", m)]))
    order = factored(2 * m)
    rows = [
        TableRow(0, ("",), 1, 1, order, "1", "1", full, full, "1"),
    ]
    if m % 2:
        rows.append(TableRow(1, ("",), 1, m, "2", "A1", "A1", "1", "1", "1"))
    else:
        rows.append(
            TableRow(1, ("", ""), 2, m // 2, "2^2", "A1", "A1", "A1", "A1", "1")
        )
        rows.append(TableRow(2, ("",), 1, 1, order, full, full, "1", "1", "1"))
    return rows


def _model_rows(family: str, rank: int) -> list[TableRow]:
    rows: dict[tuple, list[PredictedProfile]] = {}
    for p in predicted_rows(family, rank):
        key = (
            p.degree,
            p.class_size,
            factored(p.order),
            str(p.minus_type),
            str(p.tilde_minus_type),
            str(p.plus_type),
            str(p.tilde_plus_type),
            p.gamma_printed,
        )
        rows.setdefault(key, []).append(p)
    out = []
    for key, ps in rows.items():
        degree, size, order, gm, tgm, gp, tgp, gamma = key
        out.append(
            TableRow(
                degree=degree,
                labels=tuple(sorted(p.label for p in ps)),
                classes=len(ps),
                class_size=size,
                order=order,
                g_minus=gm,
                tilde_g_minus=tgm,
                g_plus=gp,
                tilde_g_plus=tgp,
                gamma=gamma,
            )
        )
    out.sort(key=lambda r: (r.degree, r.labels))
    return out


def expected_rows(ctype: CoxeterType, fixture_path=None) -> list[TableRow]:
    """The reference table for an irreducible type."""
    family, n = ctype.components[0]
    if family in ("A", "B", "D") and not (family == "A" and n == 1):
        return _model_rows(family, n)
    if family in ("I", "G"):
        m = 6 if family == "G" else n
        return _dihedral_rows(m)
    fixture = load_fixture(fixture_path)
    name = str(ctype)
    if name not in fixture["tables"]:
        raise KeyError(f"no reference table for type {name}")
    return _fixture_rows(fixture["tables"][name])


def printed_gamma(group: CoxeterGroup, profile: CentralizerProfile) -> str:
    """The gamma column in each family's table convention."""
    family, n = group.ctype.components[0]
    cls = profile.cls
    if family == "A" and n >= 2:
        return str(cls.degree)
    if family in ("B", "D") and not group.is_dihedral:
        a, a_fixed, b = cls.label.rstrip("+-").split(",")
        if family == "D" and int(a) > 0 and int(a_fixed) > 0:
            return f"{b},2"
        return b
    label = profile.gamma_structure
    return str(label.r) if label.kind == "sym" and label.r >= 2 else "1"


def computed_rows(
    group: CoxeterGroup,
    profiles: list[CentralizerProfile],
) -> list[TableRow]:
    """Merge per-class profiles into printed-row granularity."""
    buckets: dict[tuple, list[CentralizerProfile]] = {}
    for p in profiles:
        key = (
            p.cls.degree,
            p.cls.size,
            factored(p.order),
            str(p.minus_type),
            str(p.tilde_minus_type),
            str(p.plus_type),
            str(p.tilde_plus_type),
            printed_gamma(group, p),
        )
        buckets.setdefault(key, []).append(p)
    out = []
    for key, ps in buckets.items():
        degree, size, order, gm, tgm, gp, tgp, gamma = key
        out.append(
            TableRow(
                degree=degree,
                labels=tuple(sorted(p.cls.label for p in ps)),
                classes=len(ps),
                class_size=size,
                order=order,
                g_minus=gm,
                tilde_g_minus=tgm,
                g_plus=gp,
                tilde_g_plus=tgp,
                gamma=gamma,
            )
        )
    out.sort(key=lambda r: (r.degree, r.labels))
    return out


@dataclass
class RowDiff:
    key: tuple
    column: str
    expected: object
    computed: object


def compare_rows(
    expected: list[TableRow], computed: list[TableRow]
) -> list[RowDiff]:
    diffs: list[RowDiff] = []
    exp = {r.key(): r for r in expected}
    got = {r.key(): r for r in computed}
    for key in sorted(set(exp) - set(got)):
        diffs.append(RowDiff(key, "row", "present", "missing"))
    for key in sorted(set(got) - set(exp)):
        diffs.append(RowDiff(key, "row", "missing", "present"))
    columns = (
        "class_size",
        "classes",
        "order",
        "g_minus",
        "tilde_g_minus",
        "g_plus",
        "tilde_g_plus",
        "gamma",
    )
    for key in sorted(set(exp) & set(got)):
        for col in columns:
            e = getattr(exp[key], col)
            c = getattr(got[key], col)
            if e != c:
                diffs.append(RowDiff(key, col, e, c))
    return diffs


# -- analysis artifacts -------------------------------------------------------------


@dataclass
class Analysis:
    group: CoxeterGroup
    classes: list[InvolutionClass]
    profiles: list[CentralizerProfile]


def analyze(ctype: CoxeterType, max_rank: int = 12) -> Analysis:
    group = CoxeterGroup(ctype, max_rank=max_rank)
    classes = enumerate_involution_classes(group)
    profiles = profiles_for_group(group, classes)
    return Analysis(group, classes, profiles)


def class_csv(analysis: Analysis) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    name = str(analysis.group.ctype)
    for p in analysis.profiles:
        writer.writerow(
            [
                name,
                p.cls.degree,
                p.cls.label,
                factored(p.order),
                str(p.minus_type),
                str(p.tilde_minus_type),
                str(p.plus_type),
                str(p.tilde_plus_type),
                printed_gamma(analysis.group, p),
            ]
        )
    return buf.getvalue()


def class_json(analysis: Analysis) -> str:
    group = analysis.group
    rows = []
    for p in analysis.profiles:
        rep_word = list(first_cube(group, p.cls.rep))
        rows.append(
            {
                "degree": p.cls.degree,
                "label": p.cls.label,
                "class_size": p.cls.size,
                "order": p.order,
                "order_factored": factored(p.order),
                "g_minus": str(p.minus_type),
                "tilde_g_minus": str(p.tilde_minus_type),
                "g_plus": str(p.plus_type),
                "tilde_g_plus": str(p.tilde_plus_type),
                "gamma": printed_gamma(group, p),
                "gamma_structure": str(p.gamma_structure),
                "gamma_order": p.gamma_order,
                "representative": rep_word,
            }
        )
    doc = {
        "schema_version": SCHEMA_VERSION,
        "type": str(group.ctype),
        "group_order": group.order,
        "group_order_factored": factored(group.order),
        "classes": rows,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def verify_type(
    ctype: CoxeterType, fixture_path=None, max_rank: int = 12
) -> tuple[list[TableRow], list[RowDiff]]:
    analysis = analyze(ctype, max_rank=max_rank)
    expect = expected_rows(ctype, fixture_path)
    got = computed_rows(analysis.group, analysis.profiles)
    return expect, compare_rows(expect, got)


def diff_report(ctype: CoxeterType, diffs: list[RowDiff]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": str(ctype),
        "match": not diffs,
        "diffs": [
            {
                "row": {"degree": d.key[0], "labels": list(d.key[1])},
                "column": d.column,
                "expected": str(d.expected),
                "computed": str(d.computed),
            }
            for d in diffs
        ],
    }
