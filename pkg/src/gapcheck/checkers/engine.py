"""Checker evaluation engine: streams GapWindows, tallies outcomes, emits reports.

Evaluation is deterministic: the same (ids, range, opts, store limit) always
produce byte-identical serialized reports.  Long ranges can be split: the
engine returns a JSON-able checkpoint from which a later run continues, and
the merged result equals a single uninterrupted run.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exact import DEFAULT_LADDER
from ..primes import PrimeStore
from ..window import JCheckpoint, windows
from .types import (CheckReport, CheckerSpec, Counts, Kind, Outcome, Triple,
                    Verdict, registry)


@dataclass
class RunOpts:
    witness_cap: int | None = 32
    survey_cap: int = 10000
    ladder: tuple = DEFAULT_LADDER


@dataclass
class EvalContext:
    store: PrimeStore
    opts: RunOpts
    n_lo: int
    n_hi: int


@dataclass
class _Tally:
    counts: Counts = field(default_factory=Counts)
    witnesses: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    survey: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    state: dict = field(default_factory=dict)
    error: str | None = None

    def as_json(self) -> dict:
        return {"counts": self.counts.as_dict(), "witnesses": self.witnesses,
                "violations": self.violations, "survey": self.survey,
                "notes": self.notes, "state": self.state, "error": self.error}

    @classmethod
    def from_json(cls, d: dict) -> "_Tally":
        t = cls()
        c = d["counts"]
        t.counts = Counts(c["holds"], c["fails"], c["undecided"], c["out_of_domain"])
        t.witnesses = list(d["witnesses"])
        t.violations = list(d["violations"])
        t.survey = list(d["survey"])
        t.notes = list(d["notes"])
        t.state = dict(d["state"])
        t.error = d.get("error")
        return t


def _witness(tally: _Tally, cap, w, note):
    if cap is None or len(tally.witnesses) < cap:
        entry = w.snapshot()
        if note:
            entry["note"] = note
        tally.witnesses.append(entry)


def _apply(spec: CheckerSpec, tally: _Tally, ctx: EvalContext, tri: Triple):
    w = tri.w
    if (w.n < spec.n_min
            or (spec.needs_prev and tri.prev is None)
            or (spec.needs_next and tri.nxt is None)
            or (spec.domain is not None and not spec.domain(ctx, tri))):
        tally.counts.out_of_domain += 1
        return
    out: Outcome = spec.evaluate(ctx, tri, tally.state)
    cap = ctx.opts.witness_cap
    if out.res == "hold":
        tally.counts.holds += 1
        if spec.kind is Kind.SURVEY:
            if len(tally.survey) < ctx.opts.survey_cap:
                tally.survey.append(w.n)
            else:
                if "survey truncated" not in tally.notes:
                    tally.notes.append("survey truncated")
            _witness(tally, cap, w, out.note)
    elif out.res == "miss":
        tally.counts.fails += 1
    elif out.res == "violate":
        tally.counts.fails += 1
        tally.violations.append(w.n)
        _witness(tally, cap, w, out.note)
    elif out.res == "hard":
        tally.counts.fails += 1
        tally.notes.append(f"hard violation at n={w.n}: {out.note}")
        _witness(tally, cap, w, out.note)
        tally.error = tally.error or f"hard violation at n={w.n}"
    elif out.res == "undecided":
        tally.counts.undecided += 1
        _witness(tally, cap, w, out.note or "undecided")
    else:  # pragma: no cover
        raise ValueError(f"bad outcome {out!r} from {spec.id}")


def _verdict(spec: CheckerSpec, tally: _Tally, n_lo: int, n_hi: int) -> Verdict:
    if tally.error:
        return Verdict.FAIL
    c = tally.counts
    if spec.kind is Kind.EXCEPTION_SET:
        expected = {e for e in spec.expected_exceptions if n_lo <= e <= n_hi}
        got = set(tally.violations)
        if got - expected:
            return Verdict.FAIL
        if c.undecided:
            return Verdict.UNDECIDED_PRESENT
        if got != expected:
            return Verdict.FAIL  # an expected exception failed to materialize
        return Verdict.EXCEPTIONS_CONFIRMED
    if spec.kind in (Kind.UNIVERSAL, Kind.EQUIVALENCE):
        if c.fails:
            return Verdict.FAIL
        if c.undecided:
            return Verdict.UNDECIDED_PRESENT
        return Verdict.PASS
    if c.undecided:
        return Verdict.UNDECIDED_PRESENT
    return Verdict.SURVEY_RESULT if spec.kind is Kind.SURVEY else Verdict.TREND_RESULT


def _assemble(spec: CheckerSpec, tally: _Tally, ctx: EvalContext) -> CheckReport:
    extra: dict = {}
    if spec.finalize is not None and tally.error is None:
        try:
            spec.finalize(ctx, tally.state, extra)
        except Exception as exc:  # noqa: BLE001 - surfaced in the report
            tally.error = f"finalize error: {exc!r}"
            tally.notes.append(tally.error)
    rep = CheckReport(
        checker_id=spec.id,
        n_lo=ctx.n_lo,
        n_hi=ctx.n_hi,
        counts=tally.counts,
        verdict=_verdict(spec, tally, ctx.n_lo, ctx.n_hi),
        conjecture=spec.conjecture,
        witnesses=tally.witnesses,
        violations=sorted(set(tally.violations)),
        survey=tally.survey,
        extra=extra,
        notes=tally.notes,
    )
    return rep


def run_many(ids, store: PrimeStore, n_lo: int, n_hi: int,
             opts: RunOpts | None = None, resume: dict | None = None):
    """Evaluate several checkers in one pass over [n_lo, n_hi].

    Returns (reports: {id: CheckReport}, checkpoint: dict).  Passing a prior
    checkpoint as `resume` continues it; the final reports are identical to a
    single uninterrupted run over the union range.
    """
    opts = opts or RunOpts()
    reg = registry()
    specs = []
    for cid in ids:
        if cid not in reg:
            raise KeyError(f"unknown checker id: {cid}")
        specs.append(reg[cid])

    if resume is not None:
        if resume["store_limit"] != store.limit or sorted(resume["ids"]) != sorted(ids):
            raise ValueError("checkpoint does not match this run")
        if resume["next_n"] != n_lo:
            raise ValueError(
                f"checkpoint continues at n={resume['next_n']}, not {n_lo}")
        tallies = {cid: _Tally.from_json(resume["per"][cid]) for cid in ids}
        report_lo = resume["n_lo"]
        j_prev = resume["j_prev"]
        prev_n = resume["next_n"] - 1
    else:
        tallies = {cid: _Tally() for cid in ids}
        for cid in ids:
            spec = reg[cid]
            if spec.state_init is not None:
                tallies[cid].state = spec.state_init()
        report_lo = n_lo
        j_prev = None
        prev_n = None

    ctx = EvalContext(store=store, opts=opts, n_lo=report_lo, n_hi=n_hi)

    # stream one window before and after the range when available
    start = max(1, n_lo - 1)
    want_end = n_hi + 1
    end = want_end if want_end + 1 <= store.prime_count else n_hi
    j_origin = None
    if j_prev is not None and start == prev_n:
        j_origin = JCheckpoint(n=start, j=j_prev, store_limit=store.limit)

    stream = windows(store, start, end, j_origin=j_origin)
    prev = None
    cur = next(stream)
    if cur.n < n_lo:
        prev, cur = cur, next(stream)
    nxt = next(stream, None)

    live = [(reg[cid], tallies[cid]) for cid in ids]
    last_j_prev = None
    while True:
        tri = Triple(prev, cur, nxt)
        for spec, tally in live:
            if tally.error:
                tally.counts.out_of_domain += 1
                continue
            try:
                _apply(spec, tally, ctx, tri)
            except Exception as exc:  # noqa: BLE001 - isolate failing checker
                tally.error = f"checker error at n={cur.n}: {exc!r}"
                tally.notes.append(tally.error)
                tally.counts.undecided += 1
        last_j_prev = cur.j
        if cur.n >= n_hi or nxt is None:
            break
        prev, cur, nxt = cur, nxt, next(stream, None)

    checkpoint = {
        "n_lo": report_lo,
        "next_n": cur.n + 1,
        "j_prev": last_j_prev,
        "store_limit": store.limit,
        "ids": sorted(ids),
        "per": {cid: tallies[cid].as_json() for cid in ids},
    }
    reports = {cid: _assemble(reg[cid], tallies[cid], ctx) for cid in ids}
    return reports, checkpoint


def run_checker(checker_id: str, store: PrimeStore, n_lo: int, n_hi: int,
                opts: RunOpts | None = None, resume: dict | None = None) -> CheckReport:
    reports, _ = run_many([checker_id], store, n_lo, n_hi, opts, resume)
    return reports[checker_id]


def run_all(store: PrimeStore, n_lo: int, n_hi: int,
            opts: RunOpts | None = None) -> list[CheckReport]:
    """Run the whole catalog over the range; reports sorted by checker id."""
    ids = sorted(registry())
    reports, _ = run_many(ids, store, n_lo, n_hi, opts)
    return [reports[cid] for cid in ids]
