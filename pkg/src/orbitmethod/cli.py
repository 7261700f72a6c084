"""Command-line entry point: ``orbitmethod <command> <action> [flags]``.

Each command prints a human table followed by a machine block (JSON).  With
``--json`` only the machine block is printed.  Exit codes: 0 success,
1 computation error (the error class is echoed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import arthur as art
from . import fixtures as fx
from .errors import ComputationError
from .geoparams import complete_label, complete_parameters_of, stratify_orbit
from .lparams import (
    component_group,
    enumerate_parameters,
    group_by_name,
    is_discrete_series_packet,
    is_tempered,
    pgl2_row_kind,
)
from .orbits import (
    CoadjointDescriptor,
    InductionDatum,
    RealCoadjointDescriptor,
    bind,
    is_birationally_rigid,
    minimal_datum,
)
from .partitions import LeviBlocks, Partition, partition_count, partitions
from .rootdatum import CartanVector
from .scalars import format_gaussian, parse_gaussian
from .sheafk import (
    arthur_microlocal_packet,
    characteristic_cycle,
    m_g_matrix,
    m_r_matrix,
    serialize_matrix,
    stratum_dimensions,
)

GROUPS = ("pgl2", "gl2", "gl3", "gl4", "gl5")


class UsageError(Exception):
    pass


@dataclass
class Report:
    title: str
    header: list[str] = field(default_factory=list)
    rows: list[list[str]] = field(default_factory=list)
    machine: object = None

    def table(self) -> str:
        lines = [f"== {self.title} =="]
        if self.rows:
            cols = [self.header, *self.rows] if self.header else self.rows
            widths = [max(len(r[k]) for r in cols) for k in range(len(cols[0]))]
            fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
            if self.header:
                lines.append(fmt(self.header))
                lines.append("  ".join("-" * w for w in widths))
            lines += [fmt(r) for r in self.rows]
        return "\n".join(lines)

    def render(self, machine_only: bool) -> str:
        block = json.dumps({"title": self.title, "data": self.machine}, indent=2, ensure_ascii=False)
        return block if machine_only else self.table() + "\n--- machine ---\n" + block


# argument parsing helpers -------------------------------------------------------------


def _scalar(text: str):
    try:
        return parse_gaussian(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as a complex rational") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _coords(text: str) -> list:
    return [_scalar(x) for x in text.split(",") if x.strip()]


def _lambda(text: str, n: int) -> CartanVector:
    if text == "rho":
        return CartanVector(tuple(_scalar(str(Fraction(n - 1 - 2 * k, 2))) for k in range(n)))
    vals = _coords(text)
    if len(vals) != n:
        raise UsageError(f"--lambda needs {n} coordinates")
    return CartanVector(tuple(vals))


def _broadcast(text: str, n: int) -> list:
    vals = _coords(text)
    if len(vals) == 1:
        return vals * n
    if len(vals) != n:
        raise UsageError(f"expected 1 or {n} values, got {len(vals)}")
    return vals


def _descriptor(text: str) -> CoadjointDescriptor:
    """``value:parts;value:parts``, e.g. ``0:2,1;i:1``."""
    parts = []
    for chunk in text.split(";"):
        if ":" not in chunk:
            raise UsageError(f"descriptor chunk {chunk!r} needs value:parts")
        v, p = chunk.split(":", 1)
        parts.append((_scalar(v), Partition.of(_ints(p))))
    try:
        return CoadjointDescriptor(tuple(parts))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# rendering ----------------------------------------------------------------------------


def describe_orbit(p: Partition) -> str:
    if p.is_zero_orbit():
        return "zero orbit"
    if len(p) == 1 and p.total > 1:
        return "principal nilpotent orbit"
    return f"nilpotent orbit {p}"


def describe_cover(cover: RealCoadjointDescriptor) -> str:
    if cover.is_nilpotent():
        (_, p), = cover.parts
        return f"{describe_orbit(p)}, xi = 0"
    items = []
    for f, p in cover.parts:
        items.append(f"xi = i*({f.on_real[0]}, {f.on_imag[0]}) with {describe_orbit(p)} {p}")
    return "; ".join(items)


def _cover_machine(cover: RealCoadjointDescriptor) -> list:
    return [{"on_1": a, "on_i": b, "partition": p} for a, b, p in cover.serialize()]


def _matrix_report(title: str, ser: dict) -> Report:
    header = ["", *ser["legend"]]
    rows = [[lab, *map(str, row)] for lab, row in zip(ser["legend"], ser["rows"])]
    return Report(title, header, rows, ser)


# commands -----------------------------------------------------------------------------


def _pgl2_only(args) -> None:
    if args.group != "pgl2":
        from .errors import UnsupportedGroup

        raise UnsupportedGroup(f"{args.group}: only the PGL(2) inner class has tables")


def cmd_params(args) -> list[Report]:
    _pgl2_only(args)
    a = _scalar(args.a)
    if args.action == "enumerate":
        rows = fx.langlands_rows(a)
        keys = ["lambda", "y", "split", "compact", "centralizer"]
        return [Report(f"Langlands parameters at a = {format_gaussian(a)}", keys,
                       [[r[k] for k in keys] for r in rows], rows)]
    data = []
    for p in enumerate_parameters(group_by_name("pgl2"), a):
        data.append({
            "kind": pgl2_row_kind(p),
            "tempered": is_tempered(p),
            "discrete_series": is_discrete_series_packet(p),
            "component_group": str(component_group(p)),
        })
    keys = ["kind", "tempered", "discrete_series", "component_group"]
    return [Report(f"classification at a = {format_gaussian(a)}", keys,
                   [[str(d[k]) for k in keys] for d in data], data)]


def _poset(args):
    group = group_by_name(args.group)
    return stratify_orbit(_lambda(args.lam, group.n), group)


def stratify_report(poset) -> Report:
    data = [
        {"id": s.id, "dimension": s.dimension, "pi1": str(s.fundamental_group),
         "closure": sorted(poset.closure(s.id))}
        for s in poset.ordered()
    ]
    cps = [complete_label(poset, cp) for cp in complete_parameters_of(poset)]
    rows = [[d["id"], str(d["dimension"]), d["pi1"], ",".join(d["closure"])] for d in data]
    rows.append(["complete parameters", str(len(cps)), " ".join(cps), ""])
    return Report(f"strata at lambda = {poset.lam}", ["stratum", "dim", "pi_1", "closure"], rows,
                  {"geometry": poset.geometry, "strata": data, "complete_parameters": cps})


def cmd_geo(args) -> list[Report]:
    return [stratify_report(_poset(args))]


def cc_report(poset) -> Report:
    order = [s.id for s in poset.ordered()]
    data, rows = [], []
    for cp in complete_parameters_of(poset):
        vec = characteristic_cycle(poset, *cp).vector(order)
        label = complete_label(poset, cp)
        data.append({"parameter": label, "multiplicities": list(vec)})
        rows.append([label, *map(str, vec)])
    return Report("characteristic cycles of P(xi)", ["", *order], rows, {"order": order, "cycles": data})


def packet_report(poset, sid: str, name: str | None = None) -> Report:
    packet = arthur_microlocal_packet(poset, sid)
    labels = [complete_label(poset, cp) for cp in packet]
    data = {"stratum": sid, "packet": labels}
    rows = [[lab] for lab in labels]
    if poset.group.kind == "SL" and poset.geometry == "p1-torus":
        reps = fx.resolve_packet(poset, packet)
        data["representations"] = reps
        rows = [[lab, rep] for lab, rep in zip(labels, reps)]
    title = f"microlocal packet at {sid}" + (f" ({name})" if name else "")
    return Report(title, ["parameter", "representation"][: len(rows[0]) if rows else 1], rows, data)


def cmd_kgroup(args) -> list[Report]:
    poset = _poset(args)
    if args.action == "mg":
        return [_matrix_report("m_g", serialize_matrix(m_g_matrix(poset), poset))]
    if args.action == "mr":
        ser = serialize_matrix(m_r_matrix(poset), poset)
        ser["dimensions"] = stratum_dimensions(poset)
        return [_matrix_report("m_r", ser)]
    if args.action == "cc":
        return [cc_report(poset)]
    if args.stratum is None:
        return [packet_report(poset, s.id) for s in poset.ordered()]
    return [packet_report(poset, args.stratum)]


def cmd_orbit(args) -> list[Report]:
    if args.action == "bind":
        sizes = _ints(args.levi)
        orbs = [Partition.of(_ints(p)) for p in args.orbits.split(";")] if args.orbits else [
            Partition((1,) * s) for s in sizes]
        xi = _broadcast(args.xi, len(sizes)) if args.xi else [0] * len(sizes)
        desc = bind(InductionDatum(LeviBlocks(tuple(sizes)), tuple(orbs), tuple(xi)))
        return [Report("Bind", ["xi", "partition"], [[str(v), str(p)] for v, p in desc.parts],
                       {"descriptor": [[format_gaussian(v), list(p.parts)] for v, p in desc.parts]})]
    if args.action == "minimal":
        d = minimal_datum(_descriptor(args.desc))
        rows = [[str(s), str(p), format_gaussian(v)] for s, p, v in zip(d.levi, d.orbits, d.xi)]
        return [Report("minimal datum", ["block", "orbit", "xi"], rows,
                       {"levi": list(d.levi.sizes), "orbits": [list(p.parts) for p in d.orbits],
                        "xi": [format_gaussian(v) for v in d.xi]})]
    n = args.n
    targets = [Partition.of(_ints(args.partition))] if args.partition else list(partitions(n))
    data = [{"partition": list(p.parts), "rigid": is_birationally_rigid(p)} for p in targets]
    return [Report("birational rigidity", ["partition", "rigid"],
                   [[str(Partition.of(d["partition"])), str(d["rigid"])] for d in data], data)]


def _arthur_from_args(args) -> art.ArthurParameter:
    group = group_by_name(args.group)
    q = _ints(args.q)
    if args.group == "pgl2":
        if args.chol not in ("0", None) or args.canti not in ("0", None):
            raise art.UnsupportedGroup("PGL(2): only unipotent parameters are supported here")
        return art.psi_minus() if args.sign == "-" else art.psi_plus()
    hol = _broadcast(args.chol or "0", group.n)
    anti = _broadcast(args.canti or "0", group.n)
    return art.ArthurParameter(group, Partition(tuple(q)), CartanVector(tuple(hol)), CartanVector(tuple(anti)))


def cmd_duality(args) -> list[Report]:
    psi = _arthur_from_args(args)
    if args.action == "split":
        s = art.split_at_levi(psi)
        rows = [[str(b), str(p.sl2_partition), format_gaussian(x)] for b, p, x in zip(s.levi, s.psi0, s.xi1)]
        return [Report("Levi splitting", ["block", "q", "xi1"], rows, {
            "levi": list(s.levi.sizes), "q": [list(p.sl2_partition.parts) for p in s.psi0],
            "xi1": [format_gaussian(x) for x in s.xi1]})]
    cover = art.duality_map(psi)
    text = describe_cover(cover)
    data = {"class": art.classify_arthur(psi), "descriptor": text, "cover": _cover_machine(cover)}
    rows = [["class", data["class"]], ["D(psi)", text]]
    try:
        fixture = "pgl2" if args.group == "pgl2" else "gl"
        if fixture == "pgl2" and args.sign == "-":
            raise art.UnsupportedFixture("the PGL(2) fixture covers psi+ only")
        pkt = art.kirillov_packet_descriptor(cover, fixture)
        data["kirillov"] = {"levi": list(pkt.levi.sizes), "labels": list(pkt.labels)}
        rows.append(["Kirillov packet", pkt.name()])
    except ComputationError as exc:
        rows.append(["Kirillov packet", f"unavailable ({type(exc).__name__})"])
    return [Report("duality map", ["field", "value"], rows, data)]


def pgl2_reports(full: bool) -> list[Report]:
    poset = fx.rho_poset()
    out: list[Report] = []
    if full:
        for a in ("1/2", "3/2", "2/3", "i"):
            rows = fx.langlands_rows(_scalar(a))
            keys = ["lambda", "y", "split", "compact", "centralizer"]
            out.append(Report(f"Langlands parameters at a = {a}", keys, [[r[k] for k in keys] for r in rows], rows))
    else:
        rows = fx.langlands_rows(Fraction(1, 2))
        keys = ["lambda", "y", "split", "compact", "centralizer"]
        out.append(Report("Langlands parameters at a = 1/2", keys, [[r[k] for k in keys] for r in rows], rows))
    out.append(stratify_report(poset))
    out.append(_matrix_report("m_g", serialize_matrix(m_g_matrix(poset), poset)))
    out.append(_matrix_report("m_r", serialize_matrix(m_r_matrix(poset), poset)))
    out.append(cc_report(poset))
    for name in ("psi+", "psi-"):
        out.append(packet_report(poset, fx.ARTHUR_STRATUM[name], name))
    return out


def cmd_report(args) -> list[Report]:
    return pgl2_reports(args.all)


def verify_checks() -> list[tuple[str, bool]]:
    """Quick end-to-end checks of the worked example and the type-A combinatorics."""
    from .orbits import induction_in_stages_holds, all_nilpotent_data

    poset = fx.rho_poset()
    checks = [
        ("strata (0,0,1)", [s.dimension for s in poset.ordered()] == [0, 0, 1]),
        ("m_g", m_g_matrix(poset).matrix == fx.EXPECTED_MG),
        ("m_r", m_r_matrix(poset).matrix == fx.EXPECTED_MR),
        ("m_r from standard modules", fx.m_r_from_representations(poset).matrix == fx.EXPECTED_MR),
    ]
    order = [s.id for s in poset.ordered()]
    checks.append(("characteristic cycles", all(
        characteristic_cycle(poset, *cp).vector(order) == v for cp, v in fx.EXPECTED_CC.items())))
    for name, sid in fx.ARTHUR_STRATUM.items():
        reps = tuple(fx.resolve_packet(poset, arthur_microlocal_packet(poset, sid)))
        checks.append((f"Arthur packet {name}", reps == fx.EXPECTED_ARTHUR[name]))
    for n in range(1, 6):
        images = {bind(minimal_datum(CoadjointDescriptor(((0, p),)))) for p in partitions(n)}
        checks.append((f"Bind bijection n={n}", len(images) == partition_count(n)))
    checks.append(("induction in stages n<=4", all(
        induction_in_stages_holds(d) for n in range(1, 5) for d in all_nilpotent_data(n))))
    for n in (1, 2, 3):
        grid = art.arthur_grid(n)
        checks.append((f"D injective n={n}", len({art.duality_map(p) for p in grid}) == len(grid)))
    return checks


def cmd_verify(args) -> list[Report]:
    checks = verify_checks()
    rows = [[name, "pass" if ok else "FAIL"] for name, ok in checks]
    rep = Report("verification", ["check", "result"], rows, {name: ok for name, ok in checks})
    if not all(ok for _, ok in checks):
        rep.title += " (failures)"
    return [rep]


# parser -------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orbitmethod", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, group_default="pgl2"):
        sp.add_argument("--group", choices=GROUPS, default=group_default)
        sp.add_argument("--json", action="store_true", help="machine block only")

    sp = sub.add_parser("params", help="Langlands parameters of the PGL(2) inner class")
    sp.add_argument("action", choices=("enumerate", "classify"))
    sp.add_argument("--a", default="1/2")
    common(sp)

    sp = sub.add_parser("geo", help="orbit stratification of the geometric parameter space")
    sp.add_argument("action", choices=("stratify",))
    sp.add_argument("--lambda", dest="lam", default="rho")
    common(sp)

    sp = sub.add_parser("kgroup", help="change of basis, characteristic cycles, packets")
    sp.add_argument("action", choices=("mg", "mr", "cc", "packet"))
    sp.add_argument("--lambda", dest="lam", default="rho")
    sp.add_argument("--stratum")
    common(sp)

    sp = sub.add_parser("orbit", help="type-A coadjoint orbit combinatorics")
    sp.add_argument("action", choices=("bind", "minimal", "rigid"))
    sp.add_argument("--levi", default="1")
    sp.add_argument("--orbits", help="partitions per block, ';'-separated")
    sp.add_argument("--xi", help="xi-values per block (one value broadcasts)")
    sp.add_argument("--desc", default="0:1", help="descriptor value:parts;value:parts")
    sp.add_argument("--partition")
    sp.add_argument("--n", type=int, default=3)
    common(sp, "gl2")

    sp = sub.add_parser("duality", help="the duality map on Arthur parameters")
    sp.add_argument("action", choices=("map", "split"))
    sp.add_argument("--q", default="1")
    sp.add_argument("--chol", help="lambda_hol coordinates (one value broadcasts)")
    sp.add_argument("--canti", help="lambda_anti coordinates (one value broadcasts)")
    sp.add_argument("--sign", choices=("+", "-"), default="+", help="PGL(2): psi+ or psi-")
    common(sp, "gl2")

    sp = sub.add_parser("report", help="full worked example")
    sp.add_argument("action", choices=("pgl2",))
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("verify", help="run the quick verification suite")
    sp.add_argument("action", choices=("all",))
    sp.add_argument("--json", action="store_true")
    return p


COMMANDS: dict[str, Callable] = {
    "params": cmd_params,
    "geo": cmd_geo,
    "kgroup": cmd_kgroup,
    "orbit": cmd_orbit,
    "duality": cmd_duality,
    "report": cmd_report,
    "verify": cmd_verify,
}


def execute(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        reports = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ComputationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return 1
    if getattr(args, "json", False):
        out.write(json.dumps([json.loads(r.render(True)) for r in reports], indent=2, ensure_ascii=False) + "\n")
    else:
        out.write("\n\n".join(r.render(False) for r in reports) + "\n")
    if args.command == "verify" and not all(reports[0].machine.values()):
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return execute(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
