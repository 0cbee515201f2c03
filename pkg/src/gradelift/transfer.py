"""Property report for R/<LM(G)>, R/<HT(G)> and R/I.

Each verdict is produced by a named rule.  Rules come in two kinds:

* ``equality`` rules transport a value both ways (bases, dimension,
  Hilbert function, growth), so a "no" may be reported for R/I;
* ``lift`` rules are sufficient conditions only: a "yes" on the monomial
  side becomes a "yes" upstairs, anything else becomes "unknown".

When the Groebner basis is only complete up to the degree bound, every
verdict is downgraded to bounded evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .freealg import Word
from .graphs import (
    GlobalDimBound,
    GrowthClass,
    NoetherianVerdict,
    UfnarovskiGraph,
    build_chain_graph,
    build_ufnarovski,
    classify_growth,
    global_dim_bound,
    noetherian_test,
    prime_test,
    semiprime_test,
)
from .groebner import (
    GroebnerResult,
    Presentation,
    complete,
    ht_generators,
    lm_obstructions,
    pbw_shape,
)
from .monoideal import (
    Dimension,
    HilbertData,
    ObstructionSet,
    RationalSeries,
    hilbert_function,
    hilbert_series,
    normal_words,
    quotient_dimension,
)


class Value(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Target(str, Enum):
    MONOMIAL = "monomial-algebra"
    HEAD_TERM = "head-term-algebra"
    QUOTIENT = "quotient-algebra"


@dataclass(frozen=True)
class Certainty:
    kind: str  # "certified" or "bounded-evidence"
    degree_bound: int | None = None

    def __str__(self) -> str:
        if self.kind == "certified":
            return "certified"
        return f"bounded-evidence({self.degree_bound})"


CERTIFIED = Certainty("certified")


@dataclass(frozen=True)
class Rule:
    name: str
    kind: str  # "equality", "lift" or "direct"
    statement: str


RULES: dict[str, Rule] = {r.name: r for r in [
    Rule("normal-word-basis", "equality",
         "the normal words B - LM(I) give a K-basis of R/I, R/<LM(I)> and R/<HT(I)>"),
    Rule("dimension-equality", "equality",
         "R/I, R/<LM(I)> and R/<HT(I)> are finite dimensional together, with equal dimension"),
    Rule("hilbert-function-equality", "equality",
         "the three algebras share one Hilbert function, hence growth and GK dimension"),
    Rule("graded-hilbert-series", "equality",
         "for an N-graded ideal, R/I and R/<LM(I)> share the Hilbert series; R/<HT(I)> always does"),
    Rule("ufnarovski-growth", "direct",
         "growth of R/<Omega> read from cycles of the Ufnarovski graph"),
    Rule("noetherian-lift", "lift",
         "no edge entering (leaving) a cycle of the Ufnarovski graph makes R/<LM(G)>, "
         "R/<HT(I)> and R/I left (right) Noetherian"),
    Rule("weak-noetherian-lift", "lift",
         "no cycle with edges both entering and leaving makes the algebras weakly Noetherian"),
    Rule("semiprime-lift", "lift",
         "all normal words of length 1..l cyclic makes R/I and R/<HT(I)> semiprime"),
    Rule("prime-lift", "lift",
         "short normal words are vertex suffixes and the Ufnarovski graph is strongly "
         "connected, so R/I and R/<HT(I)> are prime"),
    Rule("domain-lift", "lift",
         "if the associated graded algebra is a domain then so is the algebra"),
    Rule("artinian-lift", "lift",
         "a finite-dimensional associated graded algebra makes the algebra artinian"),
    Rule("semisimple-lift", "lift",
         "semiprime test plus finite dimension for a non-graded ideal gives semisimple artinian R/I"),
    Rule("simple-undecided", "lift",
         "no procedure for graded simplicity of the monomial algebra; never decided"),
    Rule("chain-graph-gldim", "lift",
         "no d-chains in the chain graph bounds gl.dim of R/I <= R/<HT(I)> <= R/<LM(G)> by d"),
    Rule("pbw-shape", "lift",
         "LM(G) = {X_j X_i : i < j} gives a PBW basis and gl.dim <= n"),
    Rule("head-term-presentation", "direct",
         "for a Groebner basis G, HT(G) generates <HT(I)>, presenting the associated N-graded algebra"),
]}


@dataclass(frozen=True)
class Verdict:
    value: Value
    certainty: Certainty
    theorem: str
    detail: Any = None


PROPERTIES = (
    "finite_dimensional", "dimension", "hilbert_function", "hilbert_series",
    "growth", "gk_dimension", "noetherian_left", "noetherian_right",
    "noetherian_weak", "semiprime", "prime", "domain", "artinian",
    "semisimple", "simple", "gldim_bound", "pbw",
)


@dataclass
class LiftReport:
    presentation: Presentation
    gb: GroebnerResult
    obstructions: ObstructionSet
    head_term_gb: GroebnerResult
    head_terms: list
    graded: bool
    hilbert: HilbertData
    series: RationalSeries
    growth: GrowthClass
    dimension: Dimension
    noetherian: NoetherianVerdict
    semiprime_test: bool
    prime_test: bool
    gldim: GlobalDimBound
    pbw: bool
    kbasis: list[list[Word]]
    graph: UfnarovskiGraph
    hilbert_depth: int
    properties: dict[Target, dict[str, Verdict]] = field(default_factory=dict)
    conventions: list[str] = field(default_factory=list)
    invocation: str | None = None

    @property
    def certainty(self) -> Certainty:
        if self.gb.is_complete:
            return CERTIFIED
        return Certainty("bounded-evidence", self.gb.degree_bound)

    def verdict(self, target: Target, prop: str) -> Verdict:
        return self.properties[target][prop]


def kbasis_sample(p: Presentation, g: GroebnerResult, d: int) -> list[list[Word]]:
    """Normal words up to degree ``d``; their images form a K-basis of R/I."""
    return normal_words(lm_obstructions(g), d)


def graded_ideal_check(p: Presentation) -> bool:
    return all(f.is_homogeneous() for f in p.relations)


def _yes_no(flag: bool) -> Value:
    return Value.YES if flag else Value.NO


def _lifted(flag: bool) -> Value:
    return Value.YES if flag else Value.UNKNOWN


def analyze(p: Presentation, degree_bound: int, hilbert_depth: int,
            invocation: str | None = None) -> LiftReport:
    gb = complete(p, degree_bound)
    omega = lm_obstructions(gb)
    heads = ht_generators(gb)
    head_gb = complete(Presentation.build(p.order, heads), degree_bound)
    graph = build_ufnarovski(omega)
    growth = classify_growth(graph)
    report = LiftReport(
        presentation=p,
        gb=gb,
        obstructions=omega,
        head_term_gb=head_gb,
        head_terms=heads,
        graded=graded_ideal_check(p),
        hilbert=hilbert_function(omega, hilbert_depth),
        series=hilbert_series(omega),
        growth=growth,
        dimension=quotient_dimension(omega),
        noetherian=noetherian_test(graph),
        semiprime_test=semiprime_test(omega),
        prime_test=prime_test(omega),
        gldim=global_dim_bound(build_chain_graph(omega)),
        pbw=pbw_shape(gb),
        kbasis=normal_words(omega, min(hilbert_depth, 4)),
        graph=graph,
        hilbert_depth=hilbert_depth,
        invocation=invocation,
    )
    if graph.convention:
        report.conventions.append(f"ufnarovski-graph: {graph.convention}")
    if not gb.is_complete:
        report.conventions.append(
            f"groebner basis complete only up to degree {degree_bound}; verdicts are bounded evidence"
        )
    report.properties = {t: _evaluate(report, t) for t in Target}
    return report


def _evaluate(r: LiftReport, target: Target) -> dict[str, Verdict]:
    cert = r.certainty
    omega = r.obstructions
    zero = omega.is_zero_algebra()
    monomial = target is Target.MONOMIAL

    def v(value: Value, rule: str, detail: Any = None) -> Verdict:
        return Verdict(value, cert, rule, detail)

    def lift(flag: bool, rule: str, detail: Any = None) -> Verdict:
        # the monomial algebra's own criteria are exact; upstairs only "yes" transfers
        return v(_yes_no(flag) if monomial else _lifted(flag), rule, detail)

    out: dict[str, Verdict] = {}
    finite = r.dimension.is_finite
    out["finite_dimensional"] = v(_yes_no(finite), "dimension-equality")
    out["dimension"] = v(Value.YES, "dimension-equality",
                         r.dimension.value if finite else "infinite")
    out["hilbert_function"] = v(Value.YES, "hilbert-function-equality", list(r.hilbert.counts))
    if target is Target.QUOTIENT and not r.graded:
        out["hilbert_series"] = v(Value.UNKNOWN, "graded-hilbert-series",
                                  "ideal not N-graded; filtered Hilbert function only")
    else:
        out["hilbert_series"] = v(Value.YES, "graded-hilbert-series", str(r.series))
    out["growth"] = v(Value.YES, "hilbert-function-equality", str(r.growth))
    gk = r.growth.gk_dimension
    out["gk_dimension"] = v(Value.YES, "hilbert-function-equality",
                            gk if gk is not None else "infinite")

    nt = r.noetherian
    if monomial:
        # iff criteria for finitely presented monomial algebras
        out["noetherian_left"] = v(_yes_no(nt.left), "noetherian-lift")
        out["noetherian_right"] = v(_yes_no(nt.right), "noetherian-lift")
        out["noetherian_weak"] = v(_yes_no(nt.weak), "weak-noetherian-lift")
    else:
        out["noetherian_left"] = v(_lifted(nt.left), "noetherian-lift")
        out["noetherian_right"] = v(_lifted(nt.right), "noetherian-lift")
        out["noetherian_weak"] = v(_lifted(nt.weak), "weak-noetherian-lift")

    if zero:
        for prop in ("semiprime", "prime", "domain"):
            out[prop] = v(Value.UNKNOWN, f"{prop}-lift", "zero algebra")
    else:
        # sufficient conditions even for the monomial algebra itself
        out["semiprime"] = v(_lifted(r.semiprime_test), "semiprime-lift")
        out["prime"] = v(_lifted(r.prime_test), "prime-lift")
        # R/<Omega> is a domain exactly when every obstruction is a single letter
        mono_domain = omega.max_degree <= 1
        out["domain"] = lift(mono_domain, "domain-lift")

    # a connected graded algebra is artinian iff finite dimensional
    out["artinian"] = lift(finite, "artinian-lift",
                           "hypothesis: associated monomial algebra finite dimensional")
    if monomial or target is Target.HEAD_TERM:
        # connected graded: semisimple iff it is K itself
        out["semisimple"] = v(_yes_no(finite and r.dimension.value == 1), "semisimple-lift")
    else:
        semis = (r.semiprime_test and finite and not r.graded) or (finite and r.dimension.value == 1)
        out["semisimple"] = v(_lifted(semis), "semisimple-lift",
                              "hypothesis: semiprime test, finite dimension, non-graded ideal")
    out["simple"] = v(Value.UNKNOWN, "simple-undecided")

    if r.gldim.value is not None:
        out["gldim_bound"] = v(Value.YES, "chain-graph-gldim", r.gldim.value)
    else:
        out["gldim_bound"] = v(Value.UNKNOWN, "chain-graph-gldim", "unbounded")
    out["pbw"] = v(_yes_no(r.pbw) if target is not Target.QUOTIENT else _lifted(r.pbw), "pbw-shape")
    return out


def lift_soundness_violations(r: LiftReport) -> list[str]:
    """Verdicts on R/I that claim "no" through a lift rule (should be empty)."""
    bad = []
    for prop, verdict in r.properties[Target.QUOTIENT].items():
        rule = RULES[verdict.theorem]
        if rule.kind == "lift" and verdict.value is Value.NO:
            bad.append(prop)
    return bad
