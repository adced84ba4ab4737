"""
Verification reports: per-module blocks, per-ideal blocks, corpus summary,
and their JSON / CSV / plain-table renderings.
"""

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from lcderham import oracle
from lcderham.homology import (DERHAM, FAIL, KOSZUL, PASS, homology_tables,
                               verify_localized_vanishing, verify_main_theorem)
from lcderham.monomial import format_ideal, format_monomial
from lcderham.straight import from_local_cohomology, localization_module

HEADER = {
    "indexing": "homological: H_p for p in 0..n+1; cohomological H^i = H_{n+1-i}",
    "zdegree": "Koszul H_p sits in Z-degree |t|-p, de Rham H_p in |t|+p (untwisted complexes)",
    "twist_note": "de Rham degrees use the untwisted complex; no shift by n+1 is applied",
}


@dataclass
class ModuleBlock:
    label: str
    provenance: str
    j: object
    chambers: dict
    koszul: list
    derham: list
    chi_koszul: int
    chi_derham: int
    main_theorem: str
    localized: dict
    oracle: object = None
    field_check: object = None

    @property
    def ok(self):
        verdicts = [self.main_theorem] + list(self.localized.values())
        if self.oracle is not None:
            verdicts.append(self.oracle["status"])
        if self.field_check is not None:
            verdicts.append(self.field_check)
        return FAIL not in verdicts


@dataclass
class IdealBlock:
    n: int
    ideal: str
    radicalized: bool
    modules: list
    additivity: object = None

    @property
    def ok(self):
        add_ok = self.additivity is None or self.additivity["status"] == PASS
        return add_ok and all(m.ok for m in self.modules)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["modules"] = [ModuleBlock(**m) for m in d["modules"]]
        return cls(**d)


@dataclass
class Report:
    header: dict
    ideals: list
    summary: dict = field(default_factory=dict)

    def to_dict(self):
        return {"header": self.header, "ideals": [b.to_dict() for b in self.ideals],
                "summary": self.summary}

    @classmethod
    def from_dict(cls, d):
        return cls(d["header"], [IdealBlock.from_dict(b) for b in d["ideals"]], d["summary"])

    @property
    def ok(self):
        return all(b.ok for b in self.ideals)

    def verified_line(self):
        return "VERIFIED %d/%d" % (self.summary["ideals_verified"], self.summary["ideals"])


def summarize(ideals):
    counts = {PASS: 0, FAIL: 0, "HYPOTHESIS_NOT_MET": 0}
    modules = 0
    add_checked = add_pass = 0
    for b in ideals:
        for m in b.modules:
            modules += 1
            counts[m.main_theorem] = counts.get(m.main_theorem, 0) + 1
        if b.additivity is not None:
            add_checked += 1
            add_pass += b.additivity["status"] == PASS
    return {
        "ideals": len(ideals),
        "ideals_verified": sum(b.ok for b in ideals),
        "modules": modules,
        "main_theorem": counts,
        "additivity": {"checked": add_checked, "pass": add_pass},
    }


def _module_block(M, label, j, localized_vars, box=None, eulerian=None, field_module=None):
    table = homology_tables(M)
    check = verify_main_theorem(M, table)
    localized = {str(i): verify_localized_vanishing(M, i, table) for i in localized_vars}
    oracle_result = None
    if box is not None:
        oracle_result = oracle.cross_check(M, box, 0 if j is None else j, table).to_dict()
        if eulerian is not None and not eulerian.ok:
            oracle_result = eulerian.to_dict()
    field_check = None
    if field_module is not None:
        other = homology_tables(field_module)
        same = (field_module.chamber_dims_by_mask() == M.chamber_dims_by_mask()
                and [(e.cls, e.p, e.t, e.dim) for e in other.entries]
                == [(e.cls, e.p, e.t, e.dim) for e in table.entries])
        field_check = PASS if same else FAIL
    return ModuleBlock(
        label=label,
        provenance=M.provenance,
        j=j,
        chambers={str(k): v for k, v in M.chamber_dims_by_mask().items()},
        koszul=[e.to_dict() for e in table.of(KOSZUL)],
        derham=[e.to_dict() for e in table.of(DERHAM)],
        chi_koszul=check.chi_koszul,
        chi_derham=check.chi_derham,
        main_theorem=check.status,
        localized=localized,
        oracle=oracle_result,
        field_check=field_check,
    )


def ideal_block(I, modules="all", oracle_radius=None, field_prime=None,
                oracle_cap=oracle.DEFAULT_SIZE_CAP):
    """Run the whole pipeline on every requested H^j_I(R)."""
    js = list(range(I.s + 1)) if modules == "all" else [j for j in [modules] if j <= I.s]
    box = oracle.build_box(I, oracle_radius, cap=oracle_cap) if oracle_radius else None
    eulerian = oracle.eulerian_check(box) if box is not None else None
    blocks = []
    for j in js:
        M = from_local_cohomology(I, j)
        Mp = from_local_cohomology(I, j, field_prime) if field_prime else None
        blocks.append(_module_block(M, "H^%d" % j, j, range(I.n + 1), box, eulerian, Mp))
    additivity = None
    if modules == "all":
        ak = sum((-1) ** m.j * m.chi_koszul for m in blocks)
        ad = sum((-1) ** m.j * m.chi_derham for m in blocks)
        ok = ak == 1 and ad == (-1) ** (I.n + 1)
        additivity = {"koszul": ak, "derham": ad, "status": PASS if ok else FAIL}
    return IdealBlock(I.n, format_ideal(I), I.radicalized, blocks, additivity)


def localization_block(T, n, oracle_radius=None, field_prime=None,
                       oracle_cap=oracle.DEFAULT_SIZE_CAP):
    M = localization_module(T, n)
    Mp = localization_module(T, n, field_prime) if field_prime else None
    box = (oracle.build_localization_box(T, n, oracle_radius, cap=oracle_cap)
           if oracle_radius else None)
    eulerian = oracle.eulerian_check(box) if box is not None else None
    block = _module_block(M, M.provenance, None, range(n + 1), box, eulerian, Mp)
    name = "R_{%s}" % format_monomial(T) if T else "R"
    return IdealBlock(n, name, False, [block], None)


def to_json(report):
    return json.dumps(report.to_dict(), indent=2) + "\n"


def from_json(text):
    return Report.from_dict(json.loads(text))


CSV_COLUMNS = ["n", "ideal", "j", "class", "p", "dim", "zdegree", "chi_koszul", "chi_derham", "verdict"]


def to_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for b in report.ideals:
        for m in b.modules:
            j = m.j if m.j is not None else m.label
            for cls, entries in ((KOSZUL, m.koszul), (DERHAM, m.derham)):
                for p in range(b.n + 2):
                    dim = sum(e["dim"] for e in entries if e["p"] == p)
                    z = -p if cls == KOSZUL else p - (b.n + 1)
                    w.writerow([b.n, b.ideal, j, cls, p, dim, z, m.chi_koszul, m.chi_derham,
                                m.main_theorem])
    return buf.getvalue()


def _dims_text(entries):
    if not entries:
        return "0"
    parts = []
    for e in entries:
        parts.append("H_%d=K^%d @t=%s z=%d" % (e["p"], e["dim"], tuple(e["t"]), e["zdegree"]))
    return ", ".join(parts)


def to_table(report):
    lines = ["# " + report.header["indexing"], "# " + report.header["zdegree"]]
    for b in report.ideals:
        note = " (radicalized)" if b.radicalized else ""
        if b.ideal.startswith("R"):
            lines.append("M = %s, n = %d" % (b.ideal, b.n))
        else:
            lines.append("I = (%s), n = %d%s" % (b.ideal, b.n, note))
        for m in b.modules:
            lines.append("  %-6s chambers %s" % (m.label, " ".join(
                "%s:%d" % (k, v) for k, v in m.chambers.items())))
            lines.append("         Koszul:  " + _dims_text(m.koszul))
            lines.append("         de Rham: " + _dims_text(m.derham))
            extra = ""
            if m.oracle is not None:
                extra += "  oracle %s" % m.oracle["status"]
            if m.field_check is not None:
                extra += "  F_p %s" % m.field_check
            loc = " ".join("x%s:%s" % (i, v) for i, v in m.localized.items())
            lines.append("         chi = (%d, %d)  main %s  localized [%s]%s"
                         % (m.chi_koszul, m.chi_derham, m.main_theorem, loc, extra))
        if b.additivity is not None:
            lines.append("  additivity: sum (-1)^j chi = (%d, %d) %s"
                         % (b.additivity["koszul"], b.additivity["derham"], b.additivity["status"]))
    s = report.summary
    lines.append("modules: %d  main theorem: %s  additivity: %d/%d"
                 % (s["modules"], " ".join("%s=%d" % kv for kv in s["main_theorem"].items()),
                    s["additivity"]["pass"], s["additivity"]["checked"]))
    return "\n".join(lines) + "\n"

