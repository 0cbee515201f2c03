"""Presentation files, canonical printing, DOT export and JSON reports.

A presentation file looks like::

    # Weyl algebra A_1
    generators: X < Y
    order: deglex
    Y*X - X*Y - 1

Generators are listed in increasing precedence.  Each remaining line is one
relation: signed terms ``[coeff*]word`` where ``coeff`` is an integer or
``p/q`` and the word is generator names joined by ``*``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from importlib import resources
from typing import Any

from .errors import DuplicateGenerator, PresentationSyntaxError, UnknownGenerator
from .freealg import GeneratorSet, MonomialOrder, NcPolynomial, Word, deglex
from .graphs import ChainGraph, UfnarovskiGraph
from .groebner import GroebnerResult, Presentation

REPORT_SCHEMA_VERSION = "1.0"

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/]))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _tokenize(text: str, lineno: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PresentationSyntaxError(lineno, col, f"unexpected character {text[col - 1]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, order: MonomialOrder, lineno: int = 1) -> NcPolynomial:
    """Parse one signed sum of terms over ``order``'s generators."""
    gens = order.generators
    toks = _tokenize(text, lineno)
    if not toks:
        raise PresentationSyntaxError(lineno, 1, "empty polynomial")
    pos = 0
    terms: list[tuple[Word, Fraction]] = []

    def peek():
        return toks[pos] if pos < len(toks) else None

    def fail(msg: str, tok=None):
        col = tok[2] if tok else (toks[-1][2] + len(toks[-1][1]) if toks else 1)
        raise PresentationSyntaxError(lineno, col, msg)

    first = True
    while pos < len(toks):
        sign = 1
        tok = peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            pos += 1
        elif not first:
            fail("expected '+' or '-' between terms", tok)
        first = False
        coeff = Fraction(1)
        word: list[int] = []
        tok = peek()
        if tok is None:
            fail("expected a term")
        if tok[0] == "num":
            pos += 1
            num = int(tok[1])
            nxt = peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                pos += 1
                den_tok = peek()
                if not den_tok or den_tok[0] != "num":
                    fail("expected denominator after '/'", den_tok)
                if int(den_tok[1]) == 0:
                    fail("zero denominator", den_tok)
                pos += 1
                coeff = Fraction(num, int(den_tok[1]))
            else:
                coeff = Fraction(num)
            nxt = peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                pos += 1
                tok = peek()
                if not tok or tok[0] != "name":
                    fail("expected a generator after '*'", tok)
            else:
                terms.append(((), sign * coeff))
                continue
        elif tok[0] != "name":
            fail(f"unexpected {tok[1]!r}", tok)
        # word: name ('*' name)*
        while True:
            tok = peek()
            if not tok or tok[0] != "name":
                fail("expected a generator name", tok)
            if tok[1] not in gens.names:
                raise UnknownGenerator(lineno, tok[2], f"unknown generator {tok[1]!r}")
            word.append(gens.index(tok[1]))
            pos += 1
            nxt = peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                pos += 1
                continue
            if nxt and nxt[0] != "op":
                fail("factors must be separated by '*'", nxt)
            if nxt and nxt[1] == "/":
                fail("unexpected '/'", nxt)
            break
        terms.append((tuple(word), sign * coeff))
    return NcPolynomial(order, terms)


def _parse_generators(value: str, lineno: int, offset: int) -> GeneratorSet:
    names = []
    col = offset
    for part in value.split("<"):
        name = part.strip()
        start = col + (len(part) - len(part.lstrip()))
        if not _NAME.match(name):
            raise PresentationSyntaxError(lineno, start + 1, f"bad generator name {name!r}")
        if name in names:
            raise DuplicateGenerator(lineno, start + 1, f"duplicate generator {name!r}")
        names.append(name)
        col += len(part) + 1
    return GeneratorSet(tuple(names))


def parse_presentation(text: str) -> Presentation:
    gens: GeneratorSet | None = None
    order_kind: str | None = None
    relations: list[NcPolynomial] = []
    order: MonomialOrder | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        header = re.match(r"\s*(generators|order)\s*:(.*)\Z", line)
        if header:
            key, value = header.group(1), header.group(2)
            if relations:
                raise PresentationSyntaxError(lineno, 1, f"'{key}:' must precede the relations")
            if key == "generators":
                if gens is not None:
                    raise PresentationSyntaxError(lineno, 1, "generators declared twice")
                gens = _parse_generators(value, lineno, header.start(2))
            else:
                order_kind = value.strip()
                if order_kind != "deglex":
                    raise PresentationSyntaxError(lineno, header.start(2) + 2,
                                                  f"unsupported order {order_kind!r}")
            continue
        if gens is None:
            raise PresentationSyntaxError(lineno, 1, "relation before 'generators:' line")
        if order is None:
            order = deglex(gens)
        f = parse_polynomial(line, order, lineno)
        if f.is_zero():
            raise PresentationSyntaxError(lineno, 1, "relation is zero")
        relations.append(f)
    if gens is None:
        raise PresentationSyntaxError(1, 1, "missing 'generators:' line")
    order = order or deglex(gens)
    return Presentation.build(order, relations)


# -- printing ------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_poly(f: NcPolynomial) -> str:
    if f.is_zero():
        return "0"
    gens = f.order.generators
    parts: list[str] = []
    for k, (c, w) in enumerate(f.terms):
        mag = abs(c)
        if not w:
            body = _format_coeff(mag)
        elif mag == 1:
            body = gens.format_word(w)
        else:
            body = f"{_format_coeff(mag)}*{gens.format_word(w)}"
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def print_basis(g: GroebnerResult) -> str:
    lines = [print_poly(f) for f in g.basis]
    lines.append(f"status: {g.status_text()}")
    return "\n".join(lines)


def print_presentation(p: Presentation) -> str:
    gens = p.generators
    lines = [
        "generators: " + " < ".join(gens.names[i] for i in gens.ascending()),
        f"order: {p.order.kind}",
    ]
    lines += [print_poly(f) for f in p.relations]
    return "\n".join(lines) + "\n"


def format_word(w: Word, gens: GeneratorSet) -> str:
    return gens.format_word(w)


# -- DOT -----------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: UfnarovskiGraph | ChainGraph) -> str:
    gens = g.omega.order.generators
    name = "ufnarovski" if isinstance(g, UfnarovskiGraph) else "chains"
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        label = gens.format_word(v)
        lines.append(f"  {_quote(label)} [label={_quote(label)}];")
    if isinstance(g, UfnarovskiGraph):
        for e in g.edges:
            lines.append(
                f"  {_quote(gens.format_word(e.src))} -> {_quote(gens.format_word(e.dst))}"
                f" [label={_quote(gens.names[e.letter])}];"
            )
    else:
        for u, v in g.edges:
            lines.append(f"  {_quote(gens.format_word(u))} -> {_quote(gens.format_word(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- JSON report -----------------------------------------------------------

def report_document(r) -> dict[str, Any]:
    """Plain-data tree for a :class:`~gradelift.transfer.LiftReport`."""
    from .transfer import RULES, Target

    p = r.presentation
    gens = p.generators
    fw = gens.format_word
    doc: dict[str, Any] = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "invocation": r.invocation,
        "presentation": {
            "generators": [gens.names[i] for i in gens.ascending()],
            "order": p.order.kind,
            "relations": [print_poly(f) for f in p.relations],
            "graded": r.graded,
        },
        "groebner": {
            "status": r.gb.status.value,
            "degree_bound": r.gb.degree_bound,
            "basis": [print_poly(f) for f in r.gb.basis],
        },
        "head_terms": {
            "generators": [print_poly(f) for f in r.head_terms],
            "status": r.head_term_gb.status.value,
            "basis": [print_poly(f) for f in r.head_term_gb.basis],
        },
        "obstructions": [fw(w) for w in r.obstructions.sorted_words()],
        "hilbert": {
            "depth": r.hilbert_depth,
            "counts": list(r.hilbert.counts),
            "series": str(r.series),
            "numerator": list(r.series.numerator),
            "denominator": list(r.series.denominator),
        },
        "kbasis_sample": [[fw(w) for w in level] for level in r.kbasis],
        "ufnarovski_graph": {
            "ell": r.graph.ell,
            "vertices": [fw(v) for v in r.graph.vertices],
            "edges": [[fw(e.src), fw(e.dst), gens.names[e.letter]] for e in r.graph.edges],
            "convention": r.graph.convention,
        },
        "conventions": list(r.conventions),
        "targets": {},
        "rules": {name: {"kind": rule.kind, "statement": rule.statement}
                  for name, rule in RULES.items()},
    }
    for t in Target:
        doc["targets"][t.value] = {
            prop: {
                "value": v.value.value,
                "certainty": v.certainty.kind,
                "degree_bound": v.certainty.degree_bound,
                "theorem": v.theorem,
                "detail": v.detail,
            }
            for prop, v in r.properties[t].items()
        }
    return doc


def emit_report_json(r) -> str:
    return json.dumps(report_document(r), indent=2, ensure_ascii=False) + "\n"


def load_report_json(text: str) -> dict[str, Any]:
    return json.loads(text)


def report_schema() -> dict[str, Any]:
    return json.loads(resources.files("gradelift").joinpath("report.schema.json").read_text("utf-8"))


def emit_report_text(r) -> str:
    from .transfer import Target

    p = r.presentation
    lines = [
        f"groebner basis ({r.gb.status_text()}, degree bound {r.gb.degree_bound}):",
        *(f"  {print_poly(f)}" for f in r.gb.basis),
        "head terms: " + ", ".join(print_poly(f) for f in r.head_terms),
        "obstructions: " + ", ".join(p.generators.format_word(w) for w in r.obstructions.sorted_words()),
        "hilbert function: " + " ".join(str(c) for c in r.hilbert.counts),
        f"hilbert series: {r.series}",
        f"graded ideal: {'yes' if r.graded else 'no'}",
    ]
    for c in r.conventions:
        lines.append(f"convention: {c}")
    width = max(len(prop) for prop in r.properties[Target.MONOMIAL])
    for t in Target:
        lines.append(f"[{t.value}]")
        for prop, v in r.properties[t].items():
            detail = "" if v.detail is None else f"  ({_detail_text(v.detail)})"
            lines.append(f"  {prop:<{width}}  {v.value.value:<7}  {v.certainty}  [{v.theorem}]{detail}")
    return "\n".join(lines) + "\n"


def _detail_text(detail: Any) -> str:
    if isinstance(detail, list):
        return " ".join(str(x) for x in detail)
    return str(detail)
