# parsers/map_parser.py
# one-line text records for maps, blossoming maps and schemes

import re
import sys
from pathlib import Path

from models.blossoming_map import SINGLE_LEAF, BlossomingMap, StemKind, build_blossoming_map
from models.errors import MapForgeError, ParseError
from models.rooted_map import Orientation, RootedMap, build_map, cycles_of
from models.scheme import UnlabeledScheme

# darts 4 / sigma (1 2)(3 4) / alpha (1 3)(2 4) / root 1
# blossoming maps replace root by: stems (5,b)(6,l) / rootbud 5
# schemes add: heads 2 4 7 [/ types (1:0)(2:1)...]

_CYCLE = re.compile(r"\(([^()]*)\)")
_KIND = {"b": StemKind.BUD, "l": StemKind.LEAF}


def _fields(record: str) -> dict[str, str]:
    fields = {}
    for chunk in record.split("/"):
        chunk = " ".join(chunk.split())
        if not chunk:
            continue
        name, _, value = chunk.partition(" ")
        if name in fields:
            raise ParseError(f"field {name!r} given twice")
        fields[name] = value
    return fields


def _require(fields: dict[str, str], *names: str):
    missing = [n for n in names if n not in fields]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None


def _cycles(text: str, what: str) -> list[tuple[int, ...]]:
    stripped = _CYCLE.sub("", text).strip()
    if stripped:
        raise ParseError(f"unexpected text {stripped!r} in {what}")
    cycles = []
    for body in _CYCLE.findall(text):
        items = body.replace(",", " ").split()
        cycles.append(tuple(_int(x, what) for x in items))
    return cycles


def _fmt_cycles(cycles) -> str:
    return "".join("(" + " ".join(str(d) for d in c) + ")" for c in cycles)


# --- maps ---

def parse_map(record: str) -> RootedMap:
    fields = _fields(record)
    _require(fields, "darts", "sigma", "alpha", "root")
    n = _int(fields["darts"], "darts")
    try:
        return build_map(n, _cycles(fields["sigma"], "sigma"), _cycles(fields["alpha"], "alpha"),
                         _int(fields["root"], "root"))
    except ParseError:
        raise
    except (MapForgeError, IndexError) as e:
        raise ParseError(f"invalid map record: {e}") from e


def format_map(m: RootedMap) -> str:
    return (
        f"darts {m.n_darts} / sigma {_fmt_cycles(cycles_of(m.sigma))} / "
        f"alpha {_fmt_cycles(cycles_of(m.alpha))} / root {m.root_dart}"
    )


# --- blossoming maps ---

def parse_blossoming_map(record: str) -> BlossomingMap:
    fields = _fields(record)
    _require(fields, "darts", "sigma", "alpha", "stems", "rootbud")
    n = _int(fields["darts"], "darts")
    if n == 0:
        return SINGLE_LEAF
    kinds = {}
    for body in _CYCLE.findall(fields["stems"]):
        dart, _, kind = body.partition(",")
        if kind.strip() not in _KIND:
            raise ParseError(f"stem kind must be b or l, got {kind.strip()!r}")
        kinds[_int(dart.strip(), "stem")] = _KIND[kind.strip()]
    try:
        return build_blossoming_map(
            n, _cycles(fields["sigma"], "sigma"), _cycles(fields["alpha"], "alpha"), kinds,
            _int(fields["rootbud"], "rootbud"),
        )
    except ParseError:
        raise
    except (MapForgeError, IndexError) as e:
        raise ParseError(f"invalid blossoming map record: {e}") from e


def format_blossoming_map(u: BlossomingMap) -> str:
    if u.is_single_leaf:
        return "darts 0 / sigma / alpha / stems / rootbud 0"
    pairs = [(d, u.alpha[d]) for d in u.interior_darts if d < u.alpha[d]]
    stems = "".join(f"({d},{u.kinds[d].value[0]})" for d in u.stems)
    return (
        f"darts {u.n_darts} / sigma {_fmt_cycles(cycles_of(u.sigma))} / "
        f"alpha {_fmt_cycles(pairs)} / stems {stems} / rootbud {u.root_dart}"
    )


# --- schemes ---

def parse_scheme(record: str) -> UnlabeledScheme:
    fields = _fields(record)
    _require(fields, "heads")
    u = parse_blossoming_map("/".join(f"{k} {v}" for k, v in fields.items() if k not in ("heads", "types")))
    heads = frozenset(_int(x, "heads") for x in fields["heads"].split())
    for d in u.interior_darts:
        if (d in heads) == (u.alpha[d] in heads):
            raise ParseError(f"edge ({d} {u.alpha[d]}) needs exactly one head")
    s = UnlabeledScheme(u, Orientation(heads))
    try:
        s.relative_labels
    except MapForgeError as e:
        raise ParseError(f"invalid scheme record: {e}") from e
    if "types" in fields:
        for body in _CYCLE.findall(fields["types"]):
            dart, _, t = body.partition(":")
            if s.half_edge_type(_int(dart.strip(), "types")) != _int(t.strip(), "types"):
                raise ParseError(f"declared type of half-edge {dart.strip()} disagrees with the orientation")
    return s


def format_scheme(s: UnlabeledScheme) -> str:
    heads = " ".join(str(d) for d in sorted(s.orientation.heads))
    types = "".join(f"({d}:{s.half_edge_type(d)})" for d in s.map.interior_darts)
    return f"{format_blossoming_map(s.map)} / heads {heads} / types {types}"


class MapParser:
    """reads a file of records, one per line; blank lines and # comments are skipped"""

    PARSERS = {"map": parse_map, "blossoming": parse_blossoming_map, "scheme": parse_scheme}

    def __init__(self, filepath: str, kind: str = "map"):
        if kind not in self.PARSERS:
            raise ParseError(f"unknown record kind {kind!r}")
        self.filepath = filepath
        self.kind = kind
        self.records = []

    def load(self) -> list:
        print(f"📂 loading {self.filepath}...", file=sys.stderr)
        parse = self.PARSERS[self.kind]
        for number, line in enumerate(Path(self.filepath).read_text().splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                self.records.append(parse(line))
            except ParseError as e:
                raise ParseError(f"{self.filepath}:{number}: {e}") from e
        print(f"   parsed {len(self.records)} {self.kind} records", file=sys.stderr)
        return self.records
