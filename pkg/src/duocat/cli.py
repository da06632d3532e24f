"""Command-line verifier: ``duocat <command> --input <file>``."""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import click

from . import __version__
from .bases import (VARIANTS, IdempotentViolation, bar_isos, base_object, bimodule_isos,
                    check_module, check_section3, check_weak_bimonad, frobenius_structure,
                    sqcap_alt, sqcap_R)
from .bimonoid import (AXIOMS, check_bimonoid_laws, check_comonoid, check_kappa_properties,
                       check_monoid, classify_report, duality_closure, evaluate_axiom)
from .definition import (Definition, DefinitionError, load_definition, load_probes, parse_field)
from .duoidal import check_duoidal
from .hopf import (ForkViolation, NonFactoringAction, check_hopf_module, check_lambda0,
                   check_weak_mdl, default_module_probes, free_hopf_module, fundamental_check,
                   lifted_coaction_idempotent, omega_and_action, regular_hopf_module, theta_L,
                   trivial_icomodule)
from .linalg import Mat
from .objects import I, J
from .reports import FAIL, PASS, SKIP, CheckReport, Entry, PrerequisiteFailed, compare, verdict

SECTIONS = ("duoidal", "monoid", "comonoid", "axioms", "classification", "bases", "frobenius",
            "prop4", "section3", "wbm", "psi", "hopf", "fundamental")
_STRUCTURE = ("monoid", "comonoid", "axioms", "classification")
COMMANDS = {
    "check-category": ("duoidal",),
    "check-bimonoid": _STRUCTURE,
    "bases": _STRUCTURE + ("bases", "frobenius", "prop4", "section3", "wbm"),
    "hopf": _STRUCTURE + ("psi", "hopf", "fundamental"),
    "all": SECTIONS,
}
# section -> sections that must have passed for it to run
REQUIRES = {
    "monoid": (), "comonoid": (), "duoidal": (),
    "axioms": ("monoid", "comonoid"),
    "classification": ("monoid", "comonoid"),
    "bases": ("classification",),
    "frobenius": ("bases",),
    "prop4": ("bases",),
    "section3": ("bases",),
    "wbm": ("monoid", "comonoid"),
    "psi": ("monoid", "comonoid"),
    "hopf": ("classification",),
    "fundamental": ("classification",),
}
EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class Section:
    name: str
    status: str
    report: CheckReport = field(default_factory=CheckReport)
    reason: str | None = None
    data: dict | None = None
    root: str = ""

    def __post_init__(self):
        # the section a skip is ultimately caused by
        self.root = self.root or self.name

    def to_json(self, field_) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        out["entries"] = self.report.to_json(field_)
        if self.data is not None:
            out["data"] = self.data
        return out


def mat_json(m: Mat, field_) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[field_.format(x) for x in row] for row in m.to_lists()]}


class _Pipeline:
    def __init__(self, defn: Definition, probes=None):
        self.defn = defn
        self.inst = defn.inst
        self.d = defn.data
        duo, objs = probes if probes is not None else (None, None)
        self.duoidal_probes = duo if duo is not None else defn.duoidal_probes
        objs = objs if objs is not None else defn.object_probes
        self.object_probes = objs if objs is not None else (
            [I, J, defn.carrier] if defn.carrier is not None else None)
        self.sections: dict = {}

    def run(self, names) -> list:
        return [self._section(name) for name in names]

    def _section(self, name) -> Section:
        if name in self.sections:
            return self.sections[name]
        if self.d is None and name != "duoidal":
            sec = Section(name, SKIP, reason="no monoid/comonoid data in the definition")
        else:
            # prerequisites outside the command are evaluated too, but not reported
            blocked = [self._section(r) for r in REQUIRES[name]]
            blocked = [r for r in blocked if r.status != PASS]
            if blocked:
                failed = sorted({r.root for r in blocked})
                sec = Section(name, SKIP, reason="prerequisite failed: " + ", ".join(failed))
                sec.root = ", ".join(failed)
            else:
                sec = self._evaluate(name)
        self.sections[name] = sec
        return sec

    def _evaluate(self, name) -> Section:
        try:
            sec = getattr(self, "_" + name)()
        except PrerequisiteFailed as exc:
            sec = Section(name, FAIL)
            if exc.report is not None and exc.report.failures:
                sec.report.extend(CheckReport(exc.report.failures), prefix="prerequisite:")
            else:
                sec.report.add(verdict("prerequisite", False, detail=exc.what))
        except ForkViolation as exc:
            sec = Section(name, FAIL)
            sec.report.add(exc.entry)
        except (IdempotentViolation, NonFactoringAction) as exc:
            sec = Section(name, FAIL)
            idx = getattr(exc, "index", None)
            sec.report.add(verdict(type(exc).__name__, False, detail=str(exc), witness=idx,
                                   lhs=[] if idx is not None else None,
                                   rhs=[] if idx is not None else None))
        if sec.status is None:
            sec.status = PASS if sec.report.passed else FAIL
        return sec

    # sections

    def _duoidal(self):
        return Section("duoidal", None, check_duoidal(self.inst, self.duoidal_probes))

    def _monoid(self):
        return Section("monoid", None, check_monoid(self.inst, self.d))

    def _comonoid(self):
        return Section("comonoid", None, check_comonoid(self.inst, self.d))

    def _axioms(self):
        rep = CheckReport()
        for name in AXIOMS:
            rep.add(evaluate_axiom(self.inst, self.d, name))
        rep.extend(check_kappa_properties(self.inst, self.d, self.object_probes), prefix="kappa:")
        rep.extend(duality_closure(self.inst, self.d), prefix="duality:")
        return Section("axioms", None, rep)

    def _classification(self):
        label, rep = classify_report(self.inst, self.d)
        out = CheckReport()
        e = out.add(verdict(f"classify:{label}", label != "none", detail=label))
        if label == "none":
            first = rep.failures[0]
            e.witness, e.lhs, e.rhs = first.witness, first.lhs, first.rhs
            e.detail = f"none; first failing axiom {first.name}"
        # strict bimonoid laws are informative here: failing them is what makes A weak
        for e in check_bimonoid_laws(self.inst, self.d).entries:
            detail = "holds" if e.ok else f"fails at basis index {e.witness}"
            out.add(Entry(f"strict:{e.name}", PASS, detail=detail))
        return Section("classification", None, out)

    def _bases(self):
        inst, d = self.inst, self.d
        rep = CheckReport()
        rep.add(compare("sqcap_R_equals_alt", sqcap_R(inst, d).data, sqcap_alt(inst, d).data))
        data = {}
        f = inst.field
        for v in VARIANTS:
            bo = base_object(inst, d, v)
            rep.add(Entry(f"{v}:dim={bo.dim}", PASS, dims={"dim": bo.dim}))
            rep.add(compare(f"{v}:iota_pi", bo.iota.data @ bo.pi.data, bo.idempotent.data))
            rep.add(compare(f"{v}:pi_iota", bo.pi.data @ bo.iota.data, Mat.identity(bo.dim, f)))
            data[v] = {"dim": bo.dim, "idempotent": mat_json(bo.idempotent.data, f),
                       "pi": mat_json(bo.pi.data, f), "iota": mat_json(bo.iota.data, f)}
        return Section("bases", None, rep, data=data)

    def _frobenius(self):
        rep = CheckReport()
        data = {}
        f = self.inst.field
        for v in VARIANTS:
            fd = frobenius_structure(self.inst, self.d, v)
            rep.extend(CheckReport(list(fd.report.entries)), prefix=f"{v}:")
            data[v] = {k: mat_json(getattr(fd, k).data, f) for k in ("mu", "eta", "delta", "eps")}
        return Section("frobenius", None, rep, data=data)

    def _prop4(self):
        rep = CheckReport()
        _, bars = bar_isos(self.inst, self.d)
        rep.extend(bars, prefix="bar:")
        _, parts = bimodule_isos(self.inst, self.d)
        rep.extend(parts)
        return Section("prop4", None, rep)

    def _section3(self):
        return Section("section3", None, check_section3(self.inst, self.d))

    def _wbm(self):
        return Section("wbm", None, check_weak_bimonad(self.inst, self.d, self.object_probes))

    def _psi(self):
        return Section("psi", None, check_weak_mdl(self.inst, self.d, self.object_probes))

    def _hopf(self):
        inst, d = self.inst, self.d
        rep = CheckReport()
        rep.extend(check_hopf_module(inst, d, regular_hopf_module(inst, d)), prefix="regular:")
        for name, hm in sorted(self.defn.hopf_modules.items()):
            rep.extend(check_hopf_module(inst, d, hm), prefix=f"hopf_module[{name}]:")
        comodules = {"I-trivial": trivial_icomodule(inst), **self.defn.comodules}
        for name, z in sorted(comodules.items()):
            rep.extend(check_hopf_module(inst, d, free_hopf_module(inst, d, z)),
                       prefix=f"free[{name}]:")
        for name, q in sorted(self._modules().items()):
            _, sub = lifted_coaction_idempotent(inst, d, q)
            rep.extend(sub, prefix=f"module[{name}]:")
        rep.extend(check_lambda0(inst, d, self.object_probes), prefix="lambda0:")
        rep.extend(theta_L(inst, d)[1])
        rep.extend(omega_and_action(inst, d)[2])
        return Section("hopf", None, rep)

    def _modules(self) -> dict:
        mods = default_module_probes(self.inst, self.d)
        for name, q in self.defn.modules.items():
            mods[name] = q
        return mods

    def _fundamental(self):
        rep = CheckReport()
        probes = {}
        for name, q in sorted(self._modules().items()):
            sub = check_module(self.inst, self.d, q)
            if sub.passed:
                probes[name] = q
            else:
                rep.extend(sub, prefix=f"{name}:")
        res = fundamental_check(self.inst, self.d, probes)
        rep.extend(res.report)
        e = rep.add(verdict(f"summary:{res.summary}", res.summary == "galois-on-probes",
                            detail=res.note))
        singular = [f for f in rep.failures if f.witness is not None]
        if not e.ok and singular:
            first = singular[0]
            e.witness, e.lhs, e.rhs = first.witness, first.lhs, first.rhs
            e.detail = f"{res.note}; first singular probe entry {first.name}"
        data = {name: str(v) for name, v in res.verdicts.items()}
        return Section("fundamental", None, rep, data=data)


def run(command: str, defn: Definition, probes=None) -> tuple[int, dict]:
    """Run a command's sections; returns the exit code and the JSON report."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    sections = _Pipeline(defn, probes).run(COMMANDS[command])
    report = {"version": __version__, "digest": defn.digest,
              "sections": [s.to_json(defn.inst.field) for s in sections]}
    code = EXIT_FAIL if any(s.status == FAIL for s in sections) else EXIT_PASS
    return code, report


def render_text(report: dict) -> str:
    lines = []
    for sec in report["sections"]:
        if sec["status"] == SKIP:
            lines.append(f"{sec['name']}/*: SKIP")
            continue
        for e in sec["entries"]:
            line = f"{sec['name']}/{e['name']}: {e['status'].upper()}"
            if "witness" in e:
                line += f" witness={e['witness']}"
            lines.append(line)
    return "\n".join(lines) + "\n"


def render_json(report: dict) -> str:
    return json.dumps(report, indent=1, ensure_ascii=False, sort_keys=False) + "\n"


def resolve_input(text: str) -> Path:
    """A file path, or ``builtin:<name>`` for a packaged fixture."""
    if text.startswith("builtin:"):
        res = resources.files("duocat") / "fixtures" / f"{text[len('builtin:'):]}.json"
        return Path(str(res))
    return Path(text)


def _execute(command, input_, probes, fmt, field_):
    try:
        fld = parse_field(field_) if field_ else None
        path = resolve_input(input_)
        if not path.is_file():
            raise DefinitionError(f"{input_}: no such file")
        defn = load_definition(path, fld)
        pr = load_probes(probes, defn.inst) if probes else None
    except (DefinitionError, OSError) as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    code, report = run(command, defn, pr)
    click.echo(render_json(report) if fmt == "json" else render_text(report), nl=False)
    sys.exit(code)


def _command(name, help_):
    @click.option("--input", "input_", required=True, help="definition file or builtin:<name>")
    @click.option("--probes", default=None, help="JSON file with probe overrides")
    @click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
    @click.option("--field", "field_", default=None, help="Q or gf:<p>; overrides the file")
    def cmd(input_, probes, fmt, field_):
        _execute(name, input_, probes, fmt, field_)
    cmd.__doc__ = help_
    return click.command(name)(cmd)


@click.group()
@click.version_option(__version__)
def main():
    """Exact verification of weak bimonoids in duoidal categories."""


for _name, _help in (("check-category", "Check the duoidal axioms of the instance."),
                     ("check-bimonoid", "Check the (weak) bimonoid axioms and classify."),
                     ("bases", "Build and check the eight base objects."),
                     ("hopf", "Check ψ, Hopf modules and the fundamental theorem on probes."),
                     ("all", "Run every section.")):
    main.add_command(_command(_name, _help))


if __name__ == "__main__":
    main()
