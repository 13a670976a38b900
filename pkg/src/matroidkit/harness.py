"""Manifest-driven statement harness with deterministic reports.

Report records are `statement<TAB>pair<TAB>outcome<TAB>witness<TAB>millis`,
ordered by manifest position then statement id, followed by a `#`-prefixed
summary block with per-statement outcome counts.  Everything except the
trailing millis column is reproducible byte for byte.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

from . import catalog, theorems
from .errors import CheckTimeout, InputError, ResourceLimitError
from .formats import PairSpec
from .theorems import Deadline, PairContext, TheoremReport

# Statement ids in canonical report order.
STATEMENTS: dict[str, tuple] = {
    "T1.K1": ("independent contractible singleton at rank gap 1",
              lambda ctx, assume: theorems.check_t1(ctx, 1, assume)),
    "T1.K2": ("independent contractible pair at rank gap 2",
              lambda ctx, assume: theorems.check_t1(ctx, 2, assume)),
    "T1.K3": ("independent contractible triple at rank gap 3",
              lambda ctx, assume: theorems.check_t1(ctx, 3, assume)),
    "CW32": ("every contractible element extends to an independent triple",
             lambda ctx, assume: theorems.check_cw32(ctx, assume)),
    "T2": ("low-rank contractible sets force a triweb or biweb",
           lambda ctx, assume: theorems.check_t2(ctx, assume)),
    "T2COR": ("without a prism, a biweb bounds contractibility one level down",
              lambda ctx, assume: theorems.check_t2cor(ctx, assume)),
    "T4": ("graphs: 4-independent edge set with 3-connected contractions",
           lambda ctx, assume: theorems.check_t4(ctx, assume)),
    "L-W36": ("a contractible pair with an uncontractible point yields a configuration",
              lambda ctx, assume: theorems.check_w36(ctx, assume)),
    "L-W37A": ("all cocircuit members give isomorphic double contractions",
               lambda ctx, assume: theorems.check_w37a(ctx, assume)),
    "L-W37B": ("every cocircuit member pairs contractibly with the point",
               lambda ctx, assume: theorems.check_w37b(ctx, assume)),
    "L-W38": ("a contracted triangle inside the closure keeps si(M/x) 3-connected",
              lambda ctx, assume: theorems.check_w38(ctx, assume)),
    "L-MELO": ("triangle meets triad: the leftover element contracts safely",
               lambda ctx, assume: theorems.check_melo(ctx, assume)),
    "L-4CIRCUIT": ("cocircuit members on 4-circuits of the restriction are contractible",
                   lambda ctx, assume: theorems.check_4circuit(ctx, assume)),
    "L-COLOOP": ("the coloop of a disconnected configuration is contractible",
                 lambda ctx, assume: theorems.check_coloop(ctx, assume)),
    "L-CFGDICHOT": ("restrictions classify as connected-with-4-circuit or line+coloop",
                    lambda ctx, assume: theorems.check_cfg_dichotomy(ctx, assume)),
    "L-RANK3PAIR": ("distinct rank-3 cocircuits have distinct closures",
                    lambda ctx, assume: theorems.check_rank3pair(ctx, assume)),
    "L-SAMELINE": ("no two disconnected configurations share coloop and line",
                   lambda ctx, assume: theorems.check_same_coloop_line(ctx, assume)),
    "L-SECONDCFG": ("an uncontractible line point yields a second configuration",
                    lambda ctx, assume: theorems.check_second_cfg(ctx, assume)),
    "L-THIRDCFG": ("every uncontractible line point has a covering configuration",
                   lambda ctx, assume: theorems.check_third_cfg(ctx, assume)),
    "L-TRIANGLE": ("minimum disconnected configurations force triad partners",
                   lambda ctx, assume: theorems.check_triangle_cor(ctx, assume)),
    "L-NOVOLEMA": ("rank of the contractible set dominates the uncovered line",
                   lambda ctx, assume: theorems.check_novolema(ctx, assume)),
    "L-3FAN-A": ("a rank-3 fan pattern pins the matroid to the rank-3 whirl",
                 lambda ctx, assume: theorems.check_3fan_a(ctx, assume)),
    "L-3FAN-B": ("the shared triad element lies in no second triangle",
                 lambda ctx, assume: theorems.check_3fan_b(ctx, assume)),
    "L-3FAN-C": ("a third triad makes the edges contractible and M/T simple",
                 lambda ctx, assume: theorems.check_3fan_c(ctx, assume)),
    "L-3FAN-D": ("one contractible edge pair upgrades a fan to a biweb/triweb",
                 lambda ctx, assume: theorems.check_3fan_d(ctx, assume)),
    "C-INCL": ("critical scene: contractible elements stay inside cl(C*)",
               lambda ctx, assume: theorems.check_in_cl(ctx, assume)),
    "L-NOCIRCUIT": ("critical scene: no circuit inside C* meets the contractible set",
                    lambda ctx, assume: theorems.check_nocircuit(ctx, assume)),
    "L-MINCONN": ("critical scene: connected configurations are minimum",
                  lambda ctx, assume: theorems.check_min_connected(ctx, assume)),
    "L-DISCONN": ("critical scene, rank >= 5: all configurations disconnected",
                  lambda ctx, assume: theorems.check_disconnected(ctx, assume)),
    "L-MINIMUM": ("critical scene, rank >= 5: disconnected and minimum",
                  lambda ctx, assume: theorems.check_minimum(ctx, assume)),
    "L-PRISM": ("a fresh contractible point after contraction completes a prism",
                lambda ctx, assume: theorems.check_prism_lemma(ctx, assume)),
}

LEMMA_BLOCK = (
    "L-W36", "L-W37A", "L-W37B", "L-W38", "L-MELO", "L-4CIRCUIT", "L-COLOOP",
    "L-CFGDICHOT", "L-RANK3PAIR", "L-SAMELINE", "L-SECONDCFG", "L-THIRDCFG",
    "L-TRIANGLE", "L-NOVOLEMA", "L-3FAN-A", "L-3FAN-B", "L-3FAN-C", "L-3FAN-D",
)

SCENE_BLOCK = ("C-INCL", "L-NOCIRCUIT", "L-MINCONN", "L-DISCONN", "L-MINIMUM",
               "L-PRISM", "T2", "T2COR")

_ORDER = {sid: i for i, sid in enumerate(STATEMENTS)}


def expand_statements(tokens: Iterable[str]) -> list[str]:
    """Expand manifest tokens: exact ids plus the LEMMAS / SCENE group words."""
    out: list[str] = []
    for tok in tokens:
        if tok == "LEMMAS":
            out.extend(LEMMA_BLOCK)
        elif tok == "SCENE":
            out.extend(SCENE_BLOCK)
        elif tok in STATEMENTS:
            out.append(tok)
        else:
            raise InputError(f"unknown statement id {tok!r}; known: "
                             + ", ".join(STATEMENTS))
    seen = set()
    unique = []
    for sid in out:
        if sid not in seen:
            seen.add(sid)
            unique.append(sid)
    return sorted(unique, key=_ORDER.__getitem__)


def run_pair(spec: PairSpec, defined: dict, timeout: float | None,
             only: tuple[str, ...] | None = None) -> list[TheoremReport]:
    m = catalog.resolve(spec.m_ref, defined)
    n = catalog.resolve(spec.n_ref, defined)
    ctx = PairContext(m, n, spec.pair_name)
    statements = expand_statements(spec.statements) if spec.statements else list(STATEMENTS)
    if only:
        statements = [s for s in statements
                      if any(s.startswith(pref) for pref in only)]
    reports = []
    for sid in statements:
        ctx.deadline = Deadline(timeout)
        start = time.monotonic()
        try:
            outcome, witness = STATEMENTS[sid][1](ctx, sid in spec.assume)
        except CheckTimeout:
            outcome, witness = "timeout", "deadline-exceeded"
        except ResourceLimitError as exc:
            outcome, witness = "timeout", f"resource-limit:{exc}"
        millis = int((time.monotonic() - start) * 1000)
        reports.append(TheoremReport(sid, spec.pair_name, outcome, witness, millis))
    return reports


def run_manifest(pairs: list[PairSpec], defined: dict,
                 timeout: float | None = 60.0,
                 only: tuple[str, ...] | None = None,
                 parallel: int = 1) -> list[TheoremReport]:
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            chunks = list(pool.map(
                lambda spec: run_pair(spec, defined, timeout, only), pairs))
    else:
        chunks = [run_pair(spec, defined, timeout, only) for spec in pairs]
    return [r for chunk in chunks for r in chunk]


def summarize(reports: list[TheoremReport]) -> list[str]:
    counts: dict[str, dict[str, int]] = {}
    for r in reports:
        counts.setdefault(r.statement, {})
        counts[r.statement][r.outcome] = counts[r.statement].get(r.outcome, 0) + 1
    lines = ["# summary: statement outcome count"]
    for sid in sorted(counts, key=lambda s: _ORDER.get(s, 999)):
        for outcome in ("verified", "vacuous", "violated", "timeout"):
            k = counts[sid].get(outcome, 0)
            if k:
                lines.append(f"# {sid}\t{outcome}\t{k}")
    for sid in ("T2", "T2COR"):
        if sid in counts and counts[sid].get("verified", 0) == 0 \
                and counts[sid].get("violated", 0) == 0:
            lines.append(f"# note: {sid} hypothesis never triggered on this corpus"
                         " (extremal premise; absence at desk scale is expected"
                         " and documented)")
    return lines


def format_reports(reports: list[TheoremReport], fmt: str = "tsv") -> str:
    if fmt == "tsv":
        lines = [r.tsv() for r in reports]
        lines.extend(summarize(reports))
        return "\n".join(lines) + "\n"
    if fmt == "text":
        lines = []
        for r in reports:
            lines.append(f"[{r.outcome:>8}] {r.statement:<12} {r.pair:<24} {r.witness}")
        lines.extend(s.lstrip("# ") for s in summarize(reports)[1:])
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown report format {fmt!r} (expected tsv or text)")


def exit_code(reports: list[TheoremReport]) -> int:
    outcomes = {r.outcome for r in reports}
    if "violated" in outcomes:
        return 1
    if "timeout" in outcomes:
        return 3
    return 0


def strip_timing(report_text: str) -> str:
    """Drop the trailing millis column; used by determinism comparisons."""
    out = []
    for line in report_text.splitlines():
        if line.startswith("#") or not line:
            out.append(line)
        else:
            out.append(line.rsplit("\t", 1)[0])
    return "\n".join(out) + "\n"
