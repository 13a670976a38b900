"""Text formats: matroid blocks, corpus manifests, class specs.

Matroid block grammar (whitespace separated, `#` starts a comment):

    matroid NAME
    uniform R N
      | graph NV        followed by lines: edge LABEL U V
      | linear gfP      followed by lines: col LABEL a1 ... aR
      | bases R         followed by lines: basis L1 ... LR
    [dualize | minor contract=a,b delete=c,d]...
    end

Postfix directives may repeat and are applied in order.  Manifest lines are
`pair MREF NREF [STATEMENT...]`; a `!` prefix on a statement means "check the
conclusion without verifying the hypothesis" (used by harness self-tests).
Class spec lines: `class NAME`, `member REF`, `ambient KIND`,
`caps elements=N rank=R seconds=S`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catalog
from .core import Matroid, default_labels
from .errors import InputError, ParseError


def _tokenize(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line.split()


def parse_matroid_file(text: str) -> list[tuple[str, Matroid]]:
    out: list[tuple[str, Matroid]] = []
    state = None  # None, or dict describing the open block
    for ln, tokens in _tokenize(text):
        head = tokens[0]
        if state is None:
            if head != "matroid":
                raise ParseError(f"expected 'matroid NAME', got {head!r}", ln)
            if len(tokens) != 2:
                raise ParseError("matroid header takes exactly one name", ln)
            state = {"name": tokens[1], "base": None, "rows": [], "directives": [],
                     "line": ln}
            continue
        if head == "end":
            out.append((state["name"], _build_block(state, ln)))
            state = None
        elif head in ("uniform", "graph", "linear", "bases"):
            if state["base"] is not None:
                raise ParseError("matroid block already has a base definition", ln)
            state["base"] = (head, tokens[1:], ln)
        elif head in ("edge", "col", "basis"):
            state["rows"].append((head, tokens[1:], ln))
        elif head in ("dualize", "minor"):
            state["directives"].append((head, tokens[1:], ln))
        else:
            raise ParseError(f"unknown keyword {head!r} inside matroid block", ln)
    if state is not None:
        raise ParseError(f"matroid block {state['name']!r} is missing 'end'", state["line"])
    return out


def _int(tok: str, what: str, ln: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", ln) from None


def _build_block(state: dict, end_ln: int) -> Matroid:
    if state["base"] is None:
        raise ParseError(f"matroid block {state['name']!r} has no base definition", end_ln)
    kind, args, ln = state["base"]
    rows = state["rows"]
    try:
        return _build_block_inner(kind, args, ln, rows, state)
    except InputError as exc:
        raise ParseError(str(exc), ln) from None


def _build_block_inner(kind, args, ln, rows, state) -> Matroid:
    if kind == "uniform":
        if len(args) != 2:
            raise ParseError("uniform takes: uniform R N", ln)
        r, n = _int(args[0], "rank", ln), _int(args[1], "size", ln)
        if rows:
            raise ParseError("uniform block takes no element rows", rows[0][2])
        m = Matroid.uniform(r, n)
    elif kind == "graph":
        if len(args) != 1:
            raise ParseError("graph takes: graph NV", ln)
        nv = _int(args[0], "vertex count", ln)
        edges = []
        for rk, rargs, rln in rows:
            if rk != "edge" or len(rargs) != 3:
                raise ParseError("graph rows are: edge LABEL U V", rln)
            edges.append((rargs[0], _int(rargs[1], "endpoint", rln),
                          _int(rargs[2], "endpoint", rln)))
        m = Matroid.graphic(nv, edges)
    elif kind == "linear":
        if len(args) != 1 or not args[0].startswith("gf"):
            raise ParseError("linear takes: linear gfP", ln)
        p = _int(args[0][2:], "field order", ln)
        cols = []
        arity = None
        for rk, rargs, rln in rows:
            if rk != "col" or len(rargs) < 2:
                raise ParseError("linear rows are: col LABEL a1 ... aR", rln)
            vec = tuple(_int(x, "entry", rln) for x in rargs[1:])
            if arity is None:
                arity = len(vec)
            elif len(vec) != arity:
                raise ParseError(
                    f"column {rargs[0]!r} has {len(vec)} entries, expected {arity}", rln)
            cols.append((rargs[0], vec))
        m = Matroid.linear(p, cols)
    else:  # bases
        if len(args) != 1:
            raise ParseError("bases takes: bases R", ln)
        r = _int(args[0], "rank", ln)
        ground: list = []
        seen = set()
        blist = []
        for rk, rargs, rln in rows:
            if rk != "basis":
                raise ParseError("bases rows are: basis L1 ... LR", rln)
            if len(rargs) != r:
                raise ParseError(f"basis line has {len(rargs)} labels, expected {r}", rln)
            for lab in rargs:
                if lab not in seen:
                    seen.add(lab)
                    ground.append(lab)
            blist.append(tuple(rargs))
        m = Matroid.from_bases(ground, blist)
    for dkind, dargs, dln in state["directives"]:
        if dkind == "dualize":
            if dargs:
                raise ParseError("dualize takes no arguments", dln)
            m = m.dual()
        else:
            contract_labels: list = []
            delete_labels: list = []
            for arg in dargs:
                key, _, val = arg.partition("=")
                labs = [x for x in val.split(",") if x]
                if key == "contract":
                    contract_labels = labs
                elif key == "delete":
                    delete_labels = labs
                else:
                    raise ParseError(f"minor takes contract=/delete=, got {key!r}", dln)
            try:
                m = m.contract(contract_labels).delete(delete_labels)
            except Exception as exc:
                raise ParseError(f"bad minor directive: {exc}", dln) from None
    return m


def serialize_matroid(name: str, m: Matroid) -> str:
    lines = [f"matroid {name}"]
    directives: list[str] = []
    base = m
    while True:
        desc = base.describe()
        if desc[0] == "dual":
            directives.append("dualize")
            base = desc[1]
        elif desc[0] == "minor":
            _, inner, cmask, dmask = desc
            c = ",".join(str(x) for x in inner.sorted_labels(cmask))
            d = ",".join(str(x) for x in inner.sorted_labels(dmask))
            directives.append(f"minor contract={c} delete={d}")
            base = inner
        else:
            break
    desc = base.describe()
    if desc[0] == "uniform" and base.ground == default_labels(desc[2]):
        lines.append(f"uniform {desc[1]} {desc[2]}")
    elif desc[0] == "graph":
        _, nv, endpoints = desc
        lines.append(f"graph {nv}")
        for lab, (u, v) in zip(base.ground, endpoints):
            lines.append(f"edge {lab} {u} {v}")
    elif desc[0] == "linear":
        _, p, cols = desc
        lines.append(f"linear gf{p}")
        for lab, col in zip(base.ground, cols):
            lines.append(f"col {lab} " + " ".join(str(x) for x in col))
    else:
        # uniform with custom labels and basis lists both serialize as bases
        lines.append(f"bases {base.full_rank}")
        for bmask in base.bases_masks():
            lines.append("basis " + " ".join(str(x) for x in base.sorted_labels(bmask)))
    lines.extend(reversed(directives))
    lines.append("end")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PairSpec:
    """One manifest entry: a pair of matroid references plus statement ids."""

    m_ref: str
    n_ref: str
    statements: tuple[str, ...]
    assume: frozenset = field(default_factory=frozenset)

    @property
    def pair_name(self) -> str:
        return f"{self.m_ref}/{self.n_ref}"


def parse_manifest(text: str) -> tuple[list[PairSpec], dict]:
    """Returns (pair specs, file-defined matroids by name)."""
    defined: dict[str, Matroid] = {}
    # Matroid blocks may be interleaved with pair lines; split them out first.
    pair_lines = []
    block_lines: list[str] = []
    in_block = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if in_block:
            block_lines.append(raw)
            if stripped.split()[0] == "end":
                in_block = False
            continue
        if stripped.split()[0] == "matroid":
            in_block = True
            block_lines.append(raw)
        elif stripped.split()[0] == "pair":
            pair_lines.append((ln, stripped.split()))
        else:
            raise ParseError(f"unexpected manifest line {stripped.split()[0]!r}", ln)
    for name, m in parse_matroid_file("\n".join(block_lines)):
        if name in defined:
            raise ParseError(f"duplicate matroid name {name!r}")
        defined[name] = m
    pairs = []
    for ln, tokens in pair_lines:
        if len(tokens) < 3:
            raise ParseError("pair lines are: pair MREF NREF [STATEMENT...]", ln)
        stmts = []
        assume = set()
        for tok in tokens[3:] or []:
            if tok.startswith("!"):
                stmts.append(tok[1:])
                assume.add(tok[1:])
            else:
                stmts.append(tok)
        pairs.append(PairSpec(tokens[1], tokens[2], tuple(stmts), frozenset(assume)))
    return pairs, defined


@dataclass(frozen=True)
class Caps:
    max_elements: int
    max_rank: int
    seconds: float


@dataclass(frozen=True)
class ClassSpec:
    name: str
    members: tuple[tuple[str, Matroid], ...]
    ambient: str
    caps: Caps


def parse_class_spec(text: str, extra: dict | None = None) -> ClassSpec:
    name = None
    members: list[tuple[str, Matroid]] = []
    ambient = None
    caps = Caps(max_elements=8, max_rank=4, seconds=1800.0)
    for ln, tokens in _tokenize(text):
        head = tokens[0]
        if head == "class":
            if len(tokens) != 2:
                raise ParseError("class line takes one name", ln)
            name = tokens[1]
        elif head == "member":
            if len(tokens) != 2:
                raise ParseError("member line takes one matroid reference", ln)
            members.append((tokens[1], catalog.resolve(tokens[1], extra)))
        elif head == "ambient":
            if len(tokens) != 2:
                raise ParseError("ambient line takes one generator id", ln)
            ambient = tokens[1]
        elif head == "caps":
            kv = {}
            for tok in tokens[1:]:
                key, _, val = tok.partition("=")
                kv[key] = val
            try:
                caps = Caps(
                    max_elements=int(kv.get("elements", caps.max_elements)),
                    max_rank=int(kv.get("rank", caps.max_rank)),
                    seconds=float(kv.get("seconds", caps.seconds)),
                )
            except ValueError:
                raise ParseError("caps values must be numeric", ln) from None
            if caps.max_elements < 0 or caps.max_rank < 0:
                raise ParseError("caps must be nonnegative", ln)
        else:
            raise ParseError(f"unknown class spec keyword {head!r}", ln)
    if name is None:
        raise ParseError("class spec needs a 'class NAME' line")
    if ambient is None:
        raise ParseError("class spec needs an 'ambient' line")
    return ClassSpec(name, tuple(members), ambient, caps)
