"""Loading structure-definition files.

A definition is a JSON document naming a duoidal instance, its atoms, the
(monoid, comonoid) data on a carrier and optional probe modules, comodules
and Hopf-module candidates.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .bases import AModule
from .bimonoid import WeakBimonoidData
from .hopf import HopfModule, IComodule
from .instances import DuoidalInstance, GroupTable, NotAGroup, make_braided_vec, make_graded_vec
from .linalg import QQ, Mat, PrimeField
from .objects import I, J, Atom, ObjExpr, bullet, circ, obj_from_json


class DefinitionError(ValueError):
    """Base class of input errors (exit code 2)."""


class ParseError(DefinitionError):
    def __init__(self, line: int, msg: str = "malformed JSON"):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class SchemaError(DefinitionError):
    def __init__(self, field_: str, msg: str = "missing or invalid"):
        super().__init__(f"{field_}: {msg}")
        self.field = field_


class DimensionError(DefinitionError):
    def __init__(self, field_: str, msg: str = "shape does not match the declared objects"):
        super().__init__(f"{field_}: {msg}")
        self.field = field_


@dataclass
class Definition:
    inst: DuoidalInstance
    carrier: ObjExpr | None
    data: WeakBimonoidData | None
    digest: str
    modules: dict = field(default_factory=dict)
    comodules: dict = field(default_factory=dict)
    hopf_modules: dict = field(default_factory=dict)
    duoidal_probes: list | None = None
    object_probes: list | None = None


def parse_field(value) -> object:
    """``{"kind": "Q"}``, ``{"kind": "GFp", "p": 5}`` or the CLI forms ``Q`` and ``gf:5``."""
    if isinstance(value, str):
        if value.upper() == "Q":
            return QQ
        if value.lower().startswith("gf:"):
            try:
                return PrimeField(int(value[3:]))
            except ValueError as exc:
                raise SchemaError("field", str(exc)) from exc
        raise SchemaError("field", f"unknown field {value!r}")
    if not isinstance(value, dict) or value.get("kind") not in ("Q", "GFp"):
        raise SchemaError("category.field")
    if value["kind"] == "Q":
        return QQ
    p = value.get("p")
    if not isinstance(p, int):
        raise SchemaError("category.field.p")
    try:
        return PrimeField(p)
    except ValueError as exc:
        raise SchemaError("category.field.p", str(exc)) from exc


def _instance(cat, field_override):
    if not isinstance(cat, dict):
        raise SchemaError("category")
    fld = field_override if field_override is not None else parse_field(cat.get("field", {"kind": "Q"}))
    kind = cat.get("kind")
    if kind == "braided_vec":
        return make_braided_vec(fld)
    if kind == "graded_vec":
        g = cat.get("group")
        if not isinstance(g, dict) or "elements" not in g or "table" not in g:
            raise SchemaError("category.group")
        try:
            group = GroupTable.from_lists(g["elements"], g["table"])
        except (NotAGroup, TypeError) as exc:
            raise SchemaError("category.group", str(exc)) from exc
        return make_graded_vec(group, fld)
    raise SchemaError("category.kind", f"unknown instance kind {kind!r}")


def _declare_atoms(inst, atoms):
    if atoms is None:
        return
    if not isinstance(atoms, dict):
        raise SchemaError("atoms")
    for name, d in atoms.items():
        where = f"atoms.{name}"
        if inst.kind == "braided_vec":
            if not isinstance(d, int) or isinstance(d, bool) or d < 0:
                raise SchemaError(where, "expected a non-negative dimension")
            inst.declare_atom(name, d)
        else:
            n = inst.group.order
            if (not isinstance(d, list) or len(d) != n
                    or any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in d)):
                raise SchemaError(where, f"expected {n} per-grade dimensions")
            inst.declare_atom(name, tuple(d))


def _obj(inst, raw, where) -> ObjExpr:
    try:
        x = obj_from_json(raw)
    except ValueError as exc:
        raise SchemaError(where, str(exc)) from exc
    missing = [a for a in x.leaves() if isinstance(a, Atom) and a.name not in inst.atoms]
    if missing:
        raise SchemaError(where, f"undeclared atom {missing[0].name}")
    return x


def _dense(inst, raw, rows, cols, where) -> Mat:
    if not isinstance(raw, dict) or not {"rows", "cols", "entries"} <= set(raw):
        raise SchemaError(where, "expected {rows, cols, entries}")
    if raw["rows"] != rows or raw["cols"] != cols:
        raise DimensionError(where, f"declared {raw['rows']}x{raw['cols']}, expected {rows}x{cols}")
    ent = raw["entries"]
    if not isinstance(ent, list) or len(ent) != rows or any(
            not isinstance(r, list) or len(r) != cols for r in ent):
        raise DimensionError(where, f"entries do not form a {rows}x{cols} array")
    try:
        return Mat.from_rows(ent, inst.field, ncols=cols)
    except (ValueError, TypeError) as exc:
        raise SchemaError(where, str(exc)) from exc


def _matrix(inst, raw, dom: ObjExpr, cod: ObjExpr, where) -> Mat:
    """A morphism matrix; graded instances take one block per grade."""
    if inst.kind == "braided_vec":
        return _dense(inst, raw, inst.dim(cod), inst.dim(dom), where)
    dd, dc = inst.desc(dom), inst.desc(cod)
    n = inst.group.order
    if not isinstance(raw, list) or len(raw) != n:
        raise DimensionError(where, f"expected {n} per-grade blocks")
    blocks = [_dense(inst, b, dc[x], dd[x], f"{where}[{x}]") for x, b in enumerate(raw)]
    out = Mat.zero(0, 0, inst.field)
    return out.block_diag(*blocks) if blocks else out


def _section(raw, name):
    v = raw.get(name)
    if not isinstance(v, dict):
        raise SchemaError(name)
    return v


def _named_list(raw, key):
    v = raw.get(key, [])
    if not isinstance(v, list) or any(not isinstance(x, dict) or not isinstance(x.get("name"), str)
                                      for x in v):
        raise SchemaError(key, "expected a list of named records")
    return v


def _probes(inst, raw, where):
    if raw is None:
        return None, None
    if not isinstance(raw, dict):
        raise SchemaError(where)
    duo = raw.get("duoidal")
    objs = raw.get("objects")
    if duo is not None:
        if not isinstance(duo, list) or any(not isinstance(t, list) or not t for t in duo):
            raise SchemaError(f"{where}.duoidal", "expected a list of object tuples")
        duo = [tuple(_obj(inst, x, f"{where}.duoidal") for x in t) for t in duo]
    if objs is not None:
        if not isinstance(objs, list):
            raise SchemaError(f"{where}.objects")
        objs = [_obj(inst, x, f"{where}.objects") for x in objs]
    return duo, objs


def _load_json(text: str, location: str):
    if not text.strip():
        raise ParseError(1, f"{location} is empty")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from exc


def load_probes(path: str | Path, inst: DuoidalInstance):
    text = Path(path).read_text(encoding="utf-8")
    return _probes(inst, _load_json(text, str(path)), "probes")


def load_definition(path: str | Path, field_override=None) -> Definition:
    """Parse and validate a definition file."""
    raw_bytes = Path(path).read_bytes()
    try:
        text = raw_bytes.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(1, "not UTF-8") from exc
    return definition_from_json(_load_json(text, str(path)), hashlib.sha256(raw_bytes).hexdigest(),
                                field_override)


def definition_from_json(raw, digest: str = "", field_override=None) -> Definition:
    if not isinstance(raw, dict):
        raise SchemaError("<root>", "expected an object")
    inst = _instance(raw.get("category"), field_override)
    _declare_atoms(inst, raw.get("atoms"))
    carrier = data = None
    if "monoid" in raw or "comonoid" in raw:
        if "carrier" not in raw:
            raise SchemaError("carrier")
        carrier = _obj(inst, raw["carrier"], "carrier")
        mon, com = _section(raw, "monoid"), _section(raw, "comonoid")
        for sec, keys in (("monoid", ("mu", "eta")), ("comonoid", ("delta", "eps"))):
            for k in keys:
                if k not in raw[sec]:
                    raise SchemaError(f"{sec}.{k}")
        a = carrier
        mu = _matrix(inst, mon["mu"], circ(a, a), a, "monoid.mu")
        eta = _matrix(inst, mon["eta"], I, a, "monoid.eta")
        delta = _matrix(inst, com["delta"], a, bullet(a, a), "comonoid.delta")
        eps = _matrix(inst, com["eps"], a, J, "comonoid.eps")
        data = WeakBimonoidData.from_matrices(inst, a, mu, eta, delta, eps)
    defn = Definition(inst, carrier, data, digest)
    for key in ("modules", "comodules", "hopf_modules"):
        for i, rec in enumerate(_named_list(raw, key)):
            where = f"{key}[{i}]"
            if "carrier" not in rec:
                raise SchemaError(f"{where}.carrier")
            x = _obj(inst, rec["carrier"], f"{where}.carrier")
            if key != "comodules" and data is None:
                raise SchemaError(where, "modules need monoid data")
            if key == "comodules":
                if "rho" not in rec:
                    raise SchemaError(f"{where}.rho")
                rho = _matrix(inst, rec["rho"], x, bullet(x, I), f"{where}.rho")
                defn.comodules[rec["name"]] = IComodule(x, inst.morph(x, bullet(x, I), rho))
                continue
            if "gamma" not in rec:
                raise SchemaError(f"{where}.gamma")
            xa = circ(x, carrier)
            gamma = inst.morph(xa, x, _matrix(inst, rec["gamma"], xa, x, f"{where}.gamma"))
            if key == "modules":
                defn.modules[rec["name"]] = AModule(x, gamma)
            else:
                if "rho" not in rec:
                    raise SchemaError(f"{where}.rho")
                xb = bullet(x, carrier)
                rho = inst.morph(x, xb, _matrix(inst, rec["rho"], x, xb, f"{where}.rho"))
                defn.hopf_modules[rec["name"]] = HopfModule(x, gamma, rho)
    defn.duoidal_probes, defn.object_probes = _probes(inst, raw.get("probes"), "probes")
    return defn
