"""Streaming verification engine for the bounds catalog.

One forward pass walks n = 1..limit over the segmented sieve, maintains the
exact running prime sum and a double-double accumulator for theta(p_n) with a
guaranteed error radius, evaluates every selected bound on whole blocks of
consecutive indices at once, and aggregates certified verdicts:

* violations (failing n), capped at :data:`VIOLATION_CAP` with the full count
  kept separately;
* indeterminate counts (margin smaller than the tracked radius — none are
  expected at desk scale, but they are counted, never coerced);
* the minimum oriented margin and where it occurs (positive margin = claim
  holds; the orientation makes "distance to violation" comparable across
  lower and upper bounds);
* ``holds_from``: the smallest n from which the bound holds through the scan
  limit (equivalently the crossover index).

Bounds are classified from ``max(job.start, domain_min)`` upward.  Violations
below an entry's *claimed* start are faithfully reported — several catalog
entries are claimed only from very large indices and genuinely fail below
them; per-bound reports carry ``claimed_start`` so consumers can separate
"fails where nothing was claimed" from "fails inside the claimed range".

Checkpoints are written at segment boundaries of the absolute sieve grid, so
a resumed run re-enters the loop with bit-identical state and produces a
report byte-identical to an uninterrupted one.  theta is serialized as
hexadecimal float literals, the prime sum as a decimal integer string.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .bounds import (
    BoundSpec,
    CatalogError,
    classify_array,
    lookup,
    oriented_margin,
    Basis,
)
from .quantity import Quantity, render_quantity
from .sieve import DEFAULT_SEGMENT_ODDS, prime_blocks

__all__ = [
    "DEFAULT_LIMIT",
    "DEFAULT_CAPACITY",
    "CAPACITY_ENV",
    "VIOLATION_CAP",
    "INDET_SAMPLE_CAP",
    "VerifierError",
    "CapacityError",
    "CheckpointError",
    "VerificationJob",
    "BoundReport",
    "Report",
    "Halted",
    "MonotoneReport",
    "capacity",
    "run",
    "crossover",
    "monotone_check",
    "resume",
    "load_checkpoint",
]

DEFAULT_LIMIT = 10**6
DEFAULT_CAPACITY = 10**8
CAPACITY_ENV = "PRIMEMEANS_CAPACITY"
VIOLATION_CAP = 10_000
INDET_SAMPLE_CAP = 1_000
_CHECKPOINT_FORMAT = "primemeans-checkpoint/1"
_REPORT_FORMAT = "primemeans-report/1"
_CSV_COLUMNS = ("bound_id", "n_start", "n_end", "violations", "indeterminate",
                "min_margin", "min_margin_n", "crossover")


class VerifierError(Exception):
    pass


class CapacityError(VerifierError):
    """Requested limit exceeds the configured sieve capacity."""


class CheckpointError(VerifierError):
    """Checkpoint file is missing, corrupt, or belongs to a different job."""


def capacity() -> int:
    """Maximum scan limit; override with the environment variable."""
    raw = os.environ.get(CAPACITY_ENV)
    if raw is None:
        return DEFAULT_CAPACITY
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError(f"{CAPACITY_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise CapacityError(f"{CAPACITY_ENV} must be positive")
    return value


@dataclass(frozen=True)
class VerificationJob:
    """Determinism-complete description of one verification run.

    ``bounds`` must name pointwise catalog entries.  ``start`` gates which
    indices are classified; the sieve always streams from n = 1 because
    theta and the prime sum need the full prefix.  ``precision`` is the
    working float precision; only 53 (IEEE double) is supported.
    """

    bounds: Tuple[str, ...]
    start: int = 1
    limit: int = DEFAULT_LIMIT
    precision: int = 53
    segment_odds: int = DEFAULT_SEGMENT_ODDS
    checkpoint_interval: int = 0
    checkpoint_path: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "bounds", tuple(self.bounds))
        if not self.bounds:
            raise ValueError("select at least one bound")
        if len(set(self.bounds)) != len(self.bounds):
            raise ValueError("duplicate bound ids in selection")
        for bid in self.bounds:
            spec = lookup(bid)  # raises UnknownBoundError for bad ids
            if spec.kind != "pointwise":
                raise CatalogError(
                    f"{bid} is a sequence property; use the monotone scanner"
                )
        if self.start < 1:
            raise ValueError("start must be >= 1")
        if self.limit < self.start:
            raise ValueError("limit must be >= start")
        if self.precision != 53:
            raise ValueError("only precision 53 (IEEE double) is supported")
        if self.checkpoint_interval < 0:
            raise ValueError("checkpoint_interval must be >= 0")
        if self.checkpoint_interval > 0 and self.checkpoint_path is None:
            raise ValueError("checkpoint_interval needs checkpoint_path")

    def canonical(self) -> Dict:
        """Fields that determine results (paths and cadence excluded)."""
        return {
            "bounds": list(self.bounds),
            "start": self.start,
            "limit": self.limit,
            "precision": self.precision,
            "segment_odds": self.segment_odds,
        }

    def job_hash(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True,
                          separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    n_start: int            # first classified index (max(job.start, domain_min))
    n_end: int
    examined: int
    holds: int
    fails: int
    indeterminate: int
    violations: Tuple[int, ...]
    violations_truncated: bool
    indeterminate_samples: Tuple[int, ...]
    min_margin: Optional[float]
    min_margin_error: Optional[float]
    min_margin_n: Optional[int]
    holds_from: Optional[int]
    claimed_start: int
    conjectural: bool
    audit: bool

    @property
    def fails_in_claimed_range(self) -> int:
        """Retained failing indices at or past the entry's claimed start.

        A lower bound on the true count when the violation list is
        truncated; exact otherwise (samples are kept in increasing n).
        """
        if self.fails == 0:
            return 0
        return sum(1 for v in self.violations if v >= self.claimed_start)

    def to_dict(self) -> Dict:
        if self.min_margin is None:
            margin = None
        else:
            margin = {
                "value": self.min_margin,
                "error": self.min_margin_error,
                "value_hex": float(self.min_margin).hex(),
                "error_hex": float(self.min_margin_error).hex(),
            }
        return {
            "bound_id": self.bound_id,
            "n_start": self.n_start,
            "n_end": self.n_end,
            "examined": self.examined,
            "holds": self.holds,
            "fails": self.fails,
            "indeterminate": self.indeterminate,
            "violations": list(self.violations),
            "violations_truncated": self.violations_truncated,
            "indeterminate_samples": list(self.indeterminate_samples),
            "min_margin": margin,
            "min_margin_n": self.min_margin_n,
            "holds_from": self.holds_from,
            "claimed_start": self.claimed_start,
            "conjectural": self.conjectural,
            "audit": self.audit,
        }


@dataclass(frozen=True)
class Report:
    job_canonical: Dict = field(compare=True)
    job_hash: str = field(compare=True)
    bounds: Tuple[BoundReport, ...] = field(compare=True)
    wall_seconds: float = field(default=0.0, compare=False)
    ns_per_index: float = field(default=0.0, compare=False)

    def total_violations(self) -> int:
        return sum(b.fails for b in self.bounds)

    def total_indeterminate(self) -> int:
        return sum(b.indeterminate for b in self.bounds)

    # -- serialized forms (timing deliberately excluded: byte-identical
    #    reports are part of the determinism contract) ----------------------
    def to_json(self) -> str:
        doc = {
            "format": _REPORT_FORMAT,
            "job": self.job_canonical,
            "job_hash": self.job_hash,
            "bounds": [b.to_dict() for b in self.bounds],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = [",".join(_CSV_COLUMNS)]
        for b in self.bounds:
            margin = ("" if b.min_margin is None
                      else render_quantity(b.min_margin, b.min_margin_error))
            lines.append(",".join([
                b.bound_id,
                str(b.n_start),
                str(b.n_end),
                str(b.fails),
                str(b.indeterminate),
                margin,
                "" if b.min_margin_n is None else str(b.min_margin_n),
                "" if b.holds_from is None else str(b.holds_from),
            ]))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        out = []
        jc = self.job_canonical
        out.append(f"verification over n in [{jc['start']}, {jc['limit']}]  "
                   f"(precision {jc['precision']}, job {self.job_hash[:12]})")
        out.append("")
        for b in self.bounds:
            spec = lookup(b.bound_id)
            flags = "".join([
                " [conjectural]" if b.conjectural else "",
                " [audit]" if b.audit else "",
            ])
            out.append(f"{b.bound_id}{flags}: {spec.statement}")
            out.append(f"  classified n in [{b.n_start}, {b.n_end}]"
                       f"  claimed from {b.claimed_start}")
            out.append(f"  holds {b.holds}  fails {b.fails}  "
                       f"indeterminate {b.indeterminate}")
            if b.fails:
                shown = ", ".join(str(v) for v in b.violations[:12])
                more = b.fails - min(len(b.violations), 12)
                suffix = f" (+{more} more)" if more > 0 else ""
                out.append(f"  violations: {shown}{suffix}")
            if b.min_margin is not None:
                out.append("  min oriented margin "
                           f"{render_quantity(b.min_margin, b.min_margin_error)}"
                           f" at n={b.min_margin_n}")
            hf = "never within range" if b.holds_from is None else str(b.holds_from)
            out.append(f"  holds from: {hf}")
            out.append("")
        v = self.total_violations()
        i = self.total_indeterminate()
        out.append(f"TOTAL: {v} violation(s), {i} indeterminate")
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


@dataclass(frozen=True)
class Halted:
    """Returned when run() stopped early at a segment boundary."""
    checkpoint_path: str
    n: int
    next_segment: int


# ---------------------------------------------------------------------------
# theta over blocks: double-double base + per-block prefix scan
# ---------------------------------------------------------------------------

def _two_sum(a: float, b: float) -> Tuple[float, float]:
    s = a + b
    t = s - a
    err = (a - (s - t)) + (b - t)
    return s, err


class _ThetaAccumulator:
    """theta(p) as hi + lo (non-overlapping doubles) with radius `err`.

    Per block: per-element prefix via a Hillis-Steele doubling scan whose
    rounding is charged as ceil(log2(B)) spacings of the running prefix,
    while the block total is folded into the base with math.fsum (correctly
    rounded) plus an exact two-sum, so the base error grows by roughly one
    ulp of the block total per block.  Every log p term carries the
    2-ulp libm charge used throughout the package.
    """

    __slots__ = ("hi", "lo", "err")

    def __init__(self, hi: float = 0.0, lo: float = 0.0, err: float = 0.0):
        self.hi = hi
        self.lo = lo
        self.err = err

    def block_theta(self, ps: np.ndarray) -> Quantity:
        logs = np.log(ps.astype(np.float64))
        per_term = 2.0 * np.spacing(logs)
        cum_term = np.cumsum(per_term) * 1.000001  # guard on the tiny error sum

        pref = logs.copy()
        shift = 1
        levels = 0
        while shift < pref.size:
            pref[shift:] = pref[shift:] + pref[:-shift]
            shift <<= 1
            levels += 1
        scan_err = levels * np.spacing(pref)

        tmp = self.lo + pref
        vals = self.hi + tmp
        errs = (self.err + cum_term + scan_err
                + np.spacing(np.abs(tmp)) + np.spacing(np.abs(vals)))
        theta = Quantity(vals, errs)

        block_total = math.fsum(logs)
        s, e = _two_sum(self.hi, block_total)
        lo_new = self.lo + e
        hi2, lo2 = _two_sum(s, lo_new)
        self.hi = hi2
        self.lo = lo2
        self.err = (self.err + float(cum_term[-1]) + math.ulp(abs(block_total))
                    + math.ulp(abs(lo_new) + 5e-324))
        return theta

    def state_fields(self) -> Tuple[float, float, float]:
        return self.hi, self.lo, self.err


# ---------------------------------------------------------------------------
# per-bound aggregation
# ---------------------------------------------------------------------------

class _Agg:
    __slots__ = ("spec", "eff_start", "holds", "fails", "indet",
                 "violations", "ind_samples", "min_margin", "min_margin_err",
                 "min_margin_n", "max_nonhold", "bitmap_chunks")

    def __init__(self, spec: BoundSpec, eff_start: int):
        self.spec = spec
        self.eff_start = eff_start
        self.holds = 0
        self.fails = 0
        self.indet = 0
        self.violations: List[int] = []
        self.ind_samples: List[int] = []
        self.min_margin: Optional[float] = None
        self.min_margin_err: Optional[float] = None
        self.min_margin_n: Optional[int] = None
        self.max_nonhold: Optional[int] = None
        self.bitmap_chunks: List[Tuple[int, int, np.ndarray]] = []

    def absorb(self, ns: np.ndarray, margin: Quantity, codes: np.ndarray,
               collect_bitmap: bool) -> None:
        sel = ns >= self.eff_start
        if not sel.any():
            return
        mns = ns[sel]
        mcodes = codes[sel]
        mvals = np.asarray(margin.value)[sel]
        merrs = np.asarray(margin.error)[sel]

        holds_mask = mcodes == 1
        fails_mask = mcodes == -1
        indet_mask = mcodes == 0

        self.holds += int(np.count_nonzero(holds_mask))
        nfails = int(np.count_nonzero(fails_mask))
        self.fails += nfails
        nindet = int(np.count_nonzero(indet_mask))
        self.indet += nindet

        if nfails:
            room = VIOLATION_CAP - len(self.violations)
            if room > 0:
                self.violations.extend(int(x) for x in mns[fails_mask][:room])
        if nindet:
            room = INDET_SAMPLE_CAP - len(self.ind_samples)
            if room > 0:
                self.ind_samples.extend(int(x) for x in mns[indet_mask][:room])

        i = int(np.argmin(mvals))
        v = float(mvals[i])
        if self.min_margin is None or v < self.min_margin:
            self.min_margin = v
            self.min_margin_err = float(merrs[i])
            self.min_margin_n = int(mns[i])

        nonhold = mns[~holds_mask]
        if nonhold.size:
            self.max_nonhold = int(nonhold[-1])

        if collect_bitmap:
            packed = np.packbits(holds_mask)
            self.bitmap_chunks.append((int(mns[0]), int(mcodes.size), packed))

    def holds_from(self, n_end: int) -> Optional[int]:
        if self.eff_start > n_end:
            return None
        if self.max_nonhold is None:
            return self.eff_start
        if self.max_nonhold >= n_end:
            return None
        return self.max_nonhold + 1

    def to_report(self, n_end: int) -> BoundReport:
        examined = max(0, n_end - self.eff_start + 1)
        return BoundReport(
            bound_id=self.spec.id,
            n_start=self.eff_start,
            n_end=n_end,
            examined=examined,
            holds=self.holds,
            fails=self.fails,
            indeterminate=self.indet,
            violations=tuple(self.violations),
            violations_truncated=self.fails > len(self.violations),
            indeterminate_samples=tuple(self.ind_samples),
            min_margin=self.min_margin,
            min_margin_error=self.min_margin_err,
            min_margin_n=self.min_margin_n,
            holds_from=self.holds_from(n_end),
            claimed_start=self.spec.claimed_start,
            conjectural=self.spec.conjectural,
            audit=self.spec.audit,
        )

    # -- checkpoint round-trip -------------------------------------------
    def partial_dict(self) -> Dict:
        return {
            "holds": self.holds,
            "fails": self.fails,
            "indeterminate": self.indet,
            "violations": self.violations,
            "indeterminate_samples": self.ind_samples,
            "min_margin_hex": (None if self.min_margin is None
                               else float(self.min_margin).hex()),
            "min_margin_err_hex": (None if self.min_margin_err is None
                                   else float(self.min_margin_err).hex()),
            "min_margin_n": self.min_margin_n,
            "max_nonhold": self.max_nonhold,
        }

    def restore(self, d: Dict) -> None:
        try:
            self.holds = int(d["holds"])
            self.fails = int(d["fails"])
            self.indet = int(d["indeterminate"])
            self.violations = [int(x) for x in d["violations"]]
            self.ind_samples = [int(x) for x in d["indeterminate_samples"]]
            mm = d["min_margin_hex"]
            self.min_margin = None if mm is None else float.fromhex(mm)
            me = d["min_margin_err_hex"]
            self.min_margin_err = None if me is None else float.fromhex(me)
            mn = d["min_margin_n"]
            self.min_margin_n = None if mn is None else int(mn)
            mx = d["max_nonhold"]
            self.max_nonhold = None if mx is None else int(mx)
        except (KeyError, TypeError, ValueError) as exc:
            raise CheckpointError(f"corrupt per-bound aggregate: {exc}") from exc


# ---------------------------------------------------------------------------
# the forward pass
# ---------------------------------------------------------------------------

def _classify_block(ns, ps, sums, theta, aggs, collect_bitmaps):
    basis = Basis.from_arrays(ns, ps, sums, theta)
    for agg in aggs:
        spec = agg.spec
        lhs = spec.lhs(basis)
        rhs = spec.rhs(basis)
        margin = oriented_margin(spec, lhs, rhs)
        codes = classify_array(margin, spec.strict)
        agg.absorb(ns, margin, codes, collect_bitmaps)


def _finish_report(job, aggs, t0) -> Report:
    wall = time.perf_counter() - t0
    span = max(1, job.limit)
    return Report(
        job_canonical=job.canonical(),
        job_hash=job.job_hash(),
        bounds=tuple(a.to_report(job.limit) for a in aggs),
        wall_seconds=wall,
        ns_per_index=wall * 1e9 / span,
    )


def _run(job: VerificationJob, *, halt_after_n: Optional[int] = None,
         collect_bitmaps: bool = False,
         resume_from: Optional[Dict] = None):
    cap = capacity()
    if job.limit > cap:
        raise CapacityError(
            f"limit {job.limit} exceeds capacity {cap}; raise {CAPACITY_ENV} "
            "to extend the scan range")

    specs = [lookup(b) for b in job.bounds]
    aggs = [_Agg(s, max(job.start, s.domain_min)) for s in specs]
    theta_acc = _ThetaAccumulator()
    n_done = 0
    p_last = 0
    sum_last = 0
    start_segment = 0

    if resume_from is not None:
        st = resume_from["state"]
        n_done = int(st["n"])
        p_last = int(st["p"])
        sum_last = int(st["sum_primes"])
        theta_acc = _ThetaAccumulator(
            float.fromhex(st["theta_hi"]),
            float.fromhex(st["theta_lo"]),
            float.fromhex(st["theta_err"]),
        )
        start_segment = int(resume_from["next_segment"])
        partial = resume_from["partial"]
        for agg in aggs:
            if agg.spec.id not in partial:
                raise CheckpointError(
                    f"checkpoint lacks aggregate for {agg.spec.id}")
            agg.restore(partial[agg.spec.id])

    t0 = time.perf_counter()
    next_mark = None
    if job.checkpoint_interval > 0:
        k = (n_done // job.checkpoint_interval) + 1
        next_mark = k * job.checkpoint_interval

    for seg_index, primes in prime_blocks(job.limit, job.segment_odds,
                                          start_segment, n_done):
        m = len(primes)
        ns = n_done + 1 + np.arange(m, dtype=np.int64)
        ps = primes.astype(np.int64, copy=False)
        sums = np.cumsum(ps) + sum_last
        theta = theta_acc.block_theta(ps)

        _classify_block(ns, ps, sums, theta, aggs, collect_bitmaps)

        n_done = int(ns[-1])
        p_last = int(ps[-1])
        sum_last = int(sums[-1])

        if n_done >= job.limit:
            break

        at_mark = next_mark is not None and n_done >= next_mark
        at_halt = halt_after_n is not None and n_done >= halt_after_n
        if at_mark or at_halt:
            if job.checkpoint_path is None:
                raise ValueError("checkpointing requested without a path")
            _write_checkpoint(job, n_done, p_last, sum_last, theta_acc,
                              seg_index + 1, aggs)
            if at_mark:
                while next_mark is not None and n_done >= next_mark:
                    next_mark += job.checkpoint_interval
            if at_halt:
                return Halted(job.checkpoint_path, n_done, seg_index + 1), aggs

    return _finish_report(job, aggs, t0), aggs


def run(job: VerificationJob, *, halt_after_n: Optional[int] = None):
    """Execute a job.  Returns a Report, or a Halted marker when
    ``halt_after_n`` stopped the scan at a segment boundary (the checkpoint
    is then at ``job.checkpoint_path``)."""
    result, _ = _run(job, halt_after_n=halt_after_n)
    return result


# ---------------------------------------------------------------------------
# checkpointing
# ---------------------------------------------------------------------------

def _write_checkpoint(job, n, p, sum_primes, theta_acc, next_segment, aggs):
    hi, lo, err = theta_acc.state_fields()
    doc = {
        "format": _CHECKPOINT_FORMAT,
        "job": job.canonical(),
        "job_hash": job.job_hash(),
        "state": {
            "n": n,
            "p": p,
            "sum_primes": str(sum_primes),
            "theta_hi": hi.hex(),
            "theta_lo": lo.hex(),
            "theta_err": err.hex(),
        },
        "next_segment": next_segment,
        "partial": {a.spec.id: a.partial_dict() for a in aggs},
    }
    path = job.checkpoint_path
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")
    os.replace(tmp, path)


def load_checkpoint(path: str) -> Dict:
    """Parse and integrity-check a checkpoint file."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CheckpointError(f"cannot read checkpoint: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CheckpointError(f"checkpoint is not valid JSON: {exc}") from exc
    if doc.get("format") != _CHECKPOINT_FORMAT:
        raise CheckpointError(
            f"unsupported checkpoint format {doc.get('format')!r}")
    try:
        job = VerificationJob(**{
            "bounds": tuple(doc["job"]["bounds"]),
            "start": int(doc["job"]["start"]),
            "limit": int(doc["job"]["limit"]),
            "precision": int(doc["job"]["precision"]),
            "segment_odds": int(doc["job"]["segment_odds"]),
        })
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointError(f"corrupt job section: {exc}") from exc
    if job.job_hash() != doc.get("job_hash"):
        raise CheckpointError(
            "job hash mismatch: checkpoint was written by a different job "
            "configuration; refusing to resume")
    st = doc.get("state", {})
    for key in ("n", "p", "sum_primes", "theta_hi", "theta_lo", "theta_err"):
        if key not in st:
            raise CheckpointError(f"state section lacks {key!r}")
    try:
        n = int(st["n"])
        p = int(st["p"])
        s = int(st["sum_primes"])
        float.fromhex(st["theta_hi"])
        float.fromhex(st["theta_lo"])
        err = float.fromhex(st["theta_err"])
    except (TypeError, ValueError) as exc:
        raise CheckpointError(f"corrupt state section: {exc}") from exc
    if n < 1 or p < 2 or s < 2 or err < 0:
        raise CheckpointError("state section fails basic sanity checks")
    if "partial" not in doc or "next_segment" not in doc:
        raise CheckpointError("checkpoint lacks partial aggregates")
    return doc


def resume(path: str, *, checkpoint_interval: int = 0,
           halt_after_n: Optional[int] = None):
    """Continue a checkpointed run to completion; returns its Report.

    The job is reconstructed from the checkpoint itself; a hash mismatch or
    any structural damage refuses to resume.
    """
    doc = load_checkpoint(path)
    job = VerificationJob(
        bounds=tuple(doc["job"]["bounds"]),
        start=int(doc["job"]["start"]),
        limit=int(doc["job"]["limit"]),
        precision=int(doc["job"]["precision"]),
        segment_odds=int(doc["job"]["segment_odds"]),
        checkpoint_interval=checkpoint_interval,
        checkpoint_path=path,
    )
    result, _ = _run(job, halt_after_n=halt_after_n, resume_from=doc)
    return result


# ---------------------------------------------------------------------------
# crossover
# ---------------------------------------------------------------------------

def crossover(bound_id: str, limit: int, *, start: int = 1,
              segment_odds: int = DEFAULT_SEGMENT_ODDS) -> Optional[int]:
    """Smallest n* such that the bound holds for every n in [n*, limit].

    Runs the forward pass with verdict bitmaps and scans them downward from
    the limit; Indeterminate counts as non-holding.  Returns None when the
    bound does not even hold at the limit itself.
    """
    spec = lookup(bound_id)
    if spec.kind != "pointwise":
        raise CatalogError(f"{bound_id} is a sequence property")
    job = VerificationJob(bounds=(bound_id,), start=start, limit=limit,
                          segment_odds=segment_odds)
    report, aggs = _run(job, collect_bitmaps=True)
    agg = aggs[0]

    result: Optional[int] = None
    if agg.eff_start <= limit:
        last_nonhold = None
        for first_n, count, packed in reversed(agg.bitmap_chunks):
            bits = np.unpackbits(packed, count=count).view(bool)
            bad = np.flatnonzero(~bits)
            if bad.size:
                last_nonhold = first_n + int(bad[-1])
                break
        if last_nonhold is None:
            result = agg.eff_start
        elif last_nonhold < limit:
            result = last_nonhold + 1

    tracked = report.bounds[0].holds_from
    if result != tracked:
        raise VerifierError(
            f"bitmap scan ({result}) disagrees with streaming tracker "
            f"({tracked}) for {bound_id}; this is a bug")
    return result


# ---------------------------------------------------------------------------
# monotone scan of the ratio sequence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneReport:
    start: int
    limit: int
    pairs_examined: int
    violations: Tuple[int, ...]
    violations_total: int
    violations_truncated: bool
    indeterminate: Tuple[int, ...]
    indeterminate_total: int
    wall_seconds: float = field(default=0.0, compare=False)

    def to_json(self) -> str:
        doc = {
            "format": "primemeans-monotone/1",
            "start": self.start,
            "limit": self.limit,
            "pairs_examined": self.pairs_examined,
            "violations": list(self.violations),
            "violations_total": self.violations_total,
            "violations_truncated": self.violations_truncated,
            "indeterminate": list(self.indeterminate),
            "indeterminate_total": self.indeterminate_total,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["n_start,n_end,pairs,violations,indeterminate,first_violations"]
        first = ";".join(str(v) for v in self.violations[:20])
        lines.append(",".join([
            str(self.start), str(self.limit), str(self.pairs_examined),
            str(self.violations_total), str(self.indeterminate_total), first,
        ]))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        out = [
            f"ratio monotonicity scan: pairs (n, n+1) for n in "
            f"[{self.start}, {self.limit - 1}]",
            f"pairs examined: {self.pairs_examined}",
            f"non-decreasing pairs (violations): {self.violations_total}",
        ]
        if self.violations:
            shown = ", ".join(str(v) for v in self.violations[:20])
            more = self.violations_total - min(len(self.violations), 20)
            out.append(f"  at n = {shown}{f' (+{more} more)' if more > 0 else ''}")
        out.append(f"indeterminate pairs: {self.indeterminate_total}")
        if self.indeterminate:
            shown = ", ".join(str(v) for v in self.indeterminate[:20])
            out.append(f"  at n = {shown}")
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def monotone_check(limit: int, *, start: int = 1,
                   segment_odds: int = DEFAULT_SEGMENT_ODDS) -> MonotoneReport:
    """Certified scan for adjacent non-decreasing ratio pairs.

    A pair at n is a violation when A_{n+1}/G_{n+1} >= A_n/G_n with certainty
    (the strict-decrease claim fails); pairs whose comparison is smaller than
    the tracked radii are listed as indeterminate, never coerced.
    """
    cap = capacity()
    if limit > cap:
        raise CapacityError(
            f"limit {limit} exceeds capacity {cap}; raise {CAPACITY_ENV}")
    if start < 1:
        raise ValueError("start must be >= 1")

    t0 = time.perf_counter()
    theta_acc = _ThetaAccumulator()
    n_done = 0
    sum_last = 0
    carry_ratio: Optional[Quantity] = None  # ratio at n_done
    violations: List[int] = []
    v_total = 0
    indet: List[int] = []
    i_total = 0
    pairs = 0

    if limit >= 2:
        for _seg, primes in prime_blocks(limit, segment_odds):
            m = len(primes)
            ns = n_done + 1 + np.arange(m, dtype=np.int64)
            ps = primes.astype(np.int64, copy=False)
            sums = np.cumsum(ps) + sum_last
            theta = theta_acc.block_theta(ps)
            basis = Basis.from_arrays(ns, ps, sums, theta)
            ratio = basis.ratio

            # seam pair (n_done, n_done + 1) from the previous block
            if carry_ratio is not None and n_done >= start:
                margin = carry_ratio - ratio[0]
                lo, hi = float(margin.lo), float(margin.hi)
                pairs += 1
                if lo > 0.0:
                    pass
                elif hi <= 0.0:
                    v_total += 1
                    if len(violations) < VIOLATION_CAP:
                        violations.append(n_done)
                else:
                    i_total += 1
                    if len(indet) < INDET_SAMPLE_CAP:
                        indet.append(n_done)

            if m >= 2:
                margin = ratio[:-1] - ratio[1:]
                pair_ns = ns[:-1]
                sel = pair_ns >= start
                if sel.any():
                    mlo = np.asarray(margin.lo)[sel]
                    mhi = np.asarray(margin.hi)[sel]
                    mns = pair_ns[sel]
                    pairs += int(mns.size)
                    fails_mask = mhi <= 0.0
                    indet_mask = (~fails_mask) & (mlo <= 0.0)
                    nf = int(np.count_nonzero(fails_mask))
                    ni = int(np.count_nonzero(indet_mask))
                    v_total += nf
                    i_total += ni
                    if nf:
                        room = VIOLATION_CAP - len(violations)
                        if room > 0:
                            violations.extend(
                                int(x) for x in mns[fails_mask][:room])
                    if ni:
                        room = INDET_SAMPLE_CAP - len(indet)
                        if room > 0:
                            indet.extend(int(x) for x in mns[indet_mask][:room])

            carry_ratio = ratio[m - 1]
            n_done = int(ns[-1])
            sum_last = int(sums[-1])

    return MonotoneReport(
        start=start,
        limit=limit,
        pairs_examined=pairs,
        violations=tuple(violations),
        violations_total=v_total,
        violations_truncated=v_total > len(violations),
        indeterminate=tuple(indet),
        indeterminate_total=i_total,
        wall_seconds=time.perf_counter() - t0,
    )
