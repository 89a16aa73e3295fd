"""Reading group spec files, congruence strings and element literals.

A group spec file is line oriented::

    # Z/4 with the doubling map
    backend: finite-cayley
    order: 4
    identity: 0
    table: 0 1 2 3 / 1 2 3 0 / 2 3 0 1 / 3 0 1 2
    endo: 0 2 0 2
    subgroup N1: 0 2

The free abelian backend uses ``rank: r``, ``endo-matrix: <r*r ints,
row-major>`` and ``subgroup <name>: basis <ints, column-major>``.
"""

import re
from dataclasses import dataclass, field

from . import groups
from .bruck_reilly import BrContext, BrElement
from .congruences import validate_gc, validate_is
from .groups import FiniteGroup, GroupError


class SpecFileError(ValueError):
    def __init__(self, reason, line=None, path=None):
        where = path or "<spec>"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {reason}")
        self.reason = reason
        self.line = line
        self.path = path


@dataclass
class GroupSpec:
    context: BrContext
    subgroups: dict = field(default_factory=dict)  # name -> Subgroup
    path: str = None

    @property
    def group(self):
        return self.context.group

    def names(self):
        """Subgroup -> display name, file names first."""
        out = {}
        for name, H in self.subgroups.items():
            out.setdefault(H, name)
        if isinstance(self.group, FiniteGroup):
            for i, H in enumerate(groups.enumerate_normal_subgroups(self.group)):
                out.setdefault(H, f"H{i}")
        return out

    def resolve(self, name):
        if name in self.subgroups:
            return self.subgroups[name]
        m = re.fullmatch(r"H(\d+)", name)
        if m and isinstance(self.group, FiniteGroup):
            normals = groups.enumerate_normal_subgroups(self.group)
            i = int(m.group(1))
            if i < len(normals):
                return normals[i]
        raise SpecFileError(f"unknown subgroup {name!r}", path=self.path)


_KEYS = {"backend", "order", "identity", "table", "rank", "endo", "endo-matrix"}


def _ints(text, line, path):
    try:
        return [int(t) for t in text.split()]
    except ValueError:
        raise SpecFileError(f"expected integers, got {text!r}", line, path) from None


def _one_int(text, line, path):
    vals = _ints(text, line, path)
    if len(vals) != 1:
        raise SpecFileError(f"expected one integer, got {text!r}", line, path)
    return vals[0]


def parse_group_spec(text, path=None):
    entries = {}
    subgroup_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if ":" not in body:
            raise SpecFileError("expected 'key: value'", lineno, path)
        key, value = (s.strip() for s in body.split(":", 1))
        if key.startswith("subgroup"):
            parts = key.split()
            if len(parts) != 2 or parts[0] != "subgroup":
                raise SpecFileError("expected 'subgroup <name>: ...'", lineno, path)
            subgroup_lines.append((lineno, parts[1], value))
            continue
        if key not in _KEYS:
            raise SpecFileError(f"unknown key {key!r}", lineno, path)
        if key in entries:
            raise SpecFileError(f"duplicate key {key!r}", lineno, path)
        entries[key] = (lineno, value)

    def need(key):
        if key not in entries:
            raise SpecFileError(f"missing '{key}'", path=path)
        return entries[key]

    lineno, backend = need("backend")
    try:
        if backend == "finite-cayley":
            ln, order = need("order")
            order = _one_int(order, ln, path)
            ln, ident = need("identity")
            ident = _one_int(ident, ln, path)
            ln, table = need("table")
            rows = [_ints(r, ln, path) for r in table.split("/")]
            if len(rows) != order or any(len(r) != order for r in rows):
                raise SpecFileError(f"table must have {order} rows of {order} entries", ln, path)
            lineno = ln
            G = FiniteGroup(rows, ident)
            lineno, endo = need("endo")
            alpha = groups.FiniteEndo(G, _ints(endo, lineno, path))
        elif backend == "free-abelian":
            ln, rank = need("rank")
            rank = _one_int(rank, ln, path)
            lineno = ln
            G = groups.FreeAbelianGroup(rank)
            lineno, mat = need("endo-matrix")
            vals = _ints(mat, lineno, path)
            if len(vals) != rank * rank:
                raise SpecFileError(f"endo-matrix needs {rank * rank} integers", lineno, path)
            alpha = groups.MatrixEndo(G, [vals[i * rank:(i + 1) * rank] for i in range(rank)])
        else:
            raise SpecFileError(f"unknown backend {backend!r}", lineno, path)
    except GroupError as err:
        raise SpecFileError(str(err), lineno, path) from None
    except ValueError as err:
        if isinstance(err, SpecFileError):
            raise
        raise SpecFileError(str(err), lineno, path) from None

    subgroups = {}
    for ln, name, value in subgroup_lines:
        if name in subgroups:
            raise SpecFileError(f"duplicate subgroup {name!r}", ln, path)
        try:
            if isinstance(G, FiniteGroup):
                subgroups[name] = G.subgroup(_ints(value, ln, path))
            else:
                words = value.split()
                if not words or words[0] != "basis":
                    raise SpecFileError("abelian subgroups are given as 'basis <ints>'", ln, path)
                vals = _ints(" ".join(words[1:]), ln, path)
                if len(vals) % G.rank:
                    raise SpecFileError(f"basis length must be a multiple of rank {G.rank}", ln, path)
                cols = [vals[i:i + G.rank] for i in range(0, len(vals), G.rank)]
                subgroups[name] = G.subgroup(cols)
        except GroupError as err:
            raise SpecFileError(str(err), ln, path) from None
    return GroupSpec(BrContext(G, alpha), subgroups, path)


def load_group_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_group_spec(fh.read(), str(path))


_GROUP_ELT = r"(\[[^\],]*\]|-?\d+)"


def parse_group_element(G, text):
    text = text.strip()
    try:
        if isinstance(G, FiniteGroup):
            return G.check(int(text))
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError
        return G.check(int(t) for t in text[1:-1].split())
    except (ValueError, GroupError):
        raise SpecFileError(f"bad group element {text!r}") from None


def parse_element(S, text):
    m = re.fullmatch(r"\s*(\d+)\s*,\s*" + _GROUP_ELT + r"\s*,\s*(\d+)\s*", text)
    if not m:
        raise SpecFileError(f"bad element {text!r}; expected m,g,n")
    return BrElement(int(m.group(1)), parse_group_element(S.group, m.group(2)), int(m.group(3)))


def parse_congruence(spec, text):
    """Resolve ``is:<name>`` or ``gc:<name>,z=<elt>,k=<int>`` and validate it.

    Raises SpecFileError for syntax problems and ValidationError when the
    parameters do not define a congruence.
    """
    S = spec.context
    m = re.fullmatch(r"is:([^,\s]+)", text.strip())
    if m:
        return validate_is(S, spec.resolve(m.group(1)), m.group(1))
    m = re.fullmatch(r"gc:([^,\s]+),z=" + _GROUP_ELT + r",k=(\d+)", text.strip())
    if m:
        name = m.group(1)
        z = parse_group_element(S.group, m.group(2))
        return validate_gc(S, spec.resolve(name), z, int(m.group(3)), name)
    raise SpecFileError(f"bad congruence {text!r}; expected is:<name> or gc:<name>,z=<elt>,k=<int>")
