"""Run orchestration: generation files, the verification sieve, batch
checkpointing, and statistics.

A verification run is split into batches — one per (polyhedron,
crossing-composition) pair plus one batch of closures.  Each batch is
pure and is written to its own output file under the checkpoint
directory; a manifest ledger records completed batches with content
digests, so an interrupted run resumes exactly and the concatenated
output is byte-identical for any worker count.
"""

from __future__ import annotations

import csv
import hashlib
import json
import multiprocessing
import os
import time
from dataclasses import asdict, dataclass

from .diagrams import (
    CandidateReport,
    Closure,
    FilledDiagram,
    component_count,
    determinant,
    expand_to_pd,
    is_candidate,
)
from .polyhedra import PolyhedronRecord, enumerate_polyhedra
from .simplify import simplify
from .tangles import TangleRecord, enumerate_tangles

MANIFEST_VERSION = "1"
NODE_BUDGET = 100_000


# ---------------------------------------------------------------------
# generation files
# ---------------------------------------------------------------------

def write_polyhedra(max_vertices: int, path: str) -> dict:
    """Generate polyhedra to a JSONL file; returns counts per vertex."""
    counts = {}
    with open(path, "w") as fh:
        for rec in enumerate_polyhedra(max_vertices):
            fh.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
            counts[rec.vertex_count] = counts.get(rec.vertex_count, 0) + 1
    return counts


def read_polyhedra(path: str) -> list:
    with open(path) as fh:
        return [PolyhedronRecord.from_json(json.loads(line)) for line in fh]


def write_tangles(
    max_crossings: int, path: str, trivializable_only: bool = False
) -> dict:
    """Generate tangle classes to a JSONL file; returns counts per
    crossing number as (total, trivializable) pairs."""
    counts = {}
    with open(path, "w") as fh:
        for rec in enumerate_tangles(max_crossings):
            tot, triv = counts.get(rec.crossings, (0, 0))
            counts[rec.crossings] = (tot + 1, triv + rec.trivializable)
            if trivializable_only and not rec.trivializable:
                continue
            fh.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
    return counts


def read_tangles(path: str) -> list:
    with open(path) as fh:
        return [TangleRecord.from_json(json.loads(line)) for line in fh]


# ---------------------------------------------------------------------
# verification batches
# ---------------------------------------------------------------------

@dataclass
class StatsRow:
    crossings: int
    generated: int = 0
    knots: int = 0
    det_one: int = 0
    candidates: int = 0
    confirmed: int = 0
    unresolved: int = 0
    seconds: float = 0.0

    def merge(self, other: "StatsRow") -> None:
        self.generated += other.generated
        self.knots += other.knots
        self.det_one += other.det_one
        self.candidates += other.candidates
        self.confirmed += other.confirmed
        self.unresolved += other.unresolved
        self.seconds += other.seconds


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def plan_batches(c: int, polyhedra: list) -> list:
    """Deterministic batch list: fills per (polyhedron, composition),
    then one closure batch."""
    batches = []
    for pi, poly in enumerate(polyhedra):
        v = poly.vertex_count
        if v > c:
            continue
        for comp in _compositions(c, v):
            batches.append(("fill", pi, comp))
    batches.append(("closure",))
    return batches


def _sieve(d: FilledDiagram, stats: StatsRow, lines: list) -> None:
    stats.generated += 1
    if component_count(d) != 1:
        return
    stats.knots += 1
    if determinant(d) != 1:
        return
    stats.det_one += 1
    ok, bracket = is_candidate(d)
    if not ok:
        return
    stats.candidates += 1
    outcome = simplify(expand_to_pd(d), NODE_BUDGET)
    if outcome.status == "Confirmed":
        stats.confirmed += 1
    else:
        stats.unresolved += 1
    report = CandidateReport(
        diagram=d,
        bracket=bracket,
        det=1,
        status=outcome.status,
        moves=len(outcome.trace),
    )
    lines.append(json.dumps(report.to_json(), separators=(",", ":")))


def run_batch(c: int, batch, polyhedra, tangles) -> tuple:
    """Evaluate one batch; returns (jsonl text, stats dict)."""
    import itertools

    t0 = time.monotonic()
    stats = StatsRow(crossings=c)
    lines = []
    by_c = {}
    for rec in tangles:
        by_c.setdefault(rec.crossings, []).append(rec)
    if batch[0] == "closure":
        for rec in by_c.get(c, []):
            _sieve(FilledDiagram.closure(rec), stats, lines)
    else:
        _, pi, comp = batch
        poly = polyhedra[pi]
        pools = []
        for ci in comp:
            pool = [r for r in by_c.get(ci, []) if r.trivializable]
            if not pool:
                pools = None
                break
            pools.append(pool)
        if pools is not None:
            v = poly.vertex_count
            for recs in itertools.product(*pools):
                for orients in itertools.product((0, 90), repeat=v):
                    d = FilledDiagram.fill(poly, tuple(zip(recs, orients)))
                    _sieve(d, stats, lines)
    stats.seconds = time.monotonic() - t0
    text = "".join(line + "\n" for line in lines)
    return text, asdict(stats)


# ---------------------------------------------------------------------
# checkpointed runs
# ---------------------------------------------------------------------

def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _file_digest(path: str) -> str:
    with open(path, "rb") as fh:
        return _digest(fh.read())


def _batch_id(i: int) -> str:
    return f"batch_{i:06d}"


_WORKER_STATE = {}


def _worker_init(c, polyhedra_path, tangles_path):
    _WORKER_STATE["c"] = c
    _WORKER_STATE["polyhedra"] = read_polyhedra(polyhedra_path)
    _WORKER_STATE["tangles"] = read_tangles(tangles_path)


def _worker_run(args):
    i, batch = args
    text, stats = run_batch(
        _WORKER_STATE["c"], batch, _WORKER_STATE["polyhedra"],
        _WORKER_STATE["tangles"],
    )
    return i, text, stats


def verify(
    crossings: int,
    polyhedra_path: str,
    tangles_path: str,
    checkpoint_dir: str,
    workers: int = 1,
    out_path: str | None = None,
) -> int:
    """Run the sieve for every diagram of exactly `crossings` crossings.

    Returns the exit status: 0 when every candidate is Confirmed, 2
    when any is Unresolved.  Raises on insufficient inputs."""
    polyhedra = read_polyhedra(polyhedra_path)
    tangles = read_tangles(tangles_path)
    have = {r.crossings for r in tangles}
    missing = [ci for ci in range(1, crossings + 1) if ci not in have]
    if missing:
        raise ValueError(f"tangle pool too small: no classes at c={missing}")

    os.makedirs(checkpoint_dir, exist_ok=True)
    manifest_path = os.path.join(checkpoint_dir, "manifest.json")
    inputs = {
        "polyhedra": _file_digest(polyhedra_path),
        "tangles": _file_digest(tangles_path),
    }
    batches = plan_batches(crossings, polyhedra)
    manifest = None
    if os.path.exists(manifest_path):
        with open(manifest_path) as fh:
            manifest = json.load(fh)
        if (
            manifest.get("version") != MANIFEST_VERSION
            or manifest.get("crossings") != crossings
            or manifest.get("inputs") != inputs
        ):
            manifest = None
    if manifest is None:
        manifest = {
            "version": MANIFEST_VERSION,
            "crossings": crossings,
            "inputs": inputs,
            "batches": {},
        }

    def record_done(i, text, stats):
        bid = _batch_id(i)
        data = text.encode()
        bpath = os.path.join(checkpoint_dir, bid + ".jsonl")
        tmp = bpath + ".tmp"
        with open(tmp, "wb") as fh:
            fh.write(data)
        os.replace(tmp, bpath)
        manifest["batches"][bid] = {
            "status": "done",
            "digest": _digest(data),
            "stats": stats,
        }
        tmpm = manifest_path + ".tmp"
        with open(tmpm, "w") as fh:
            json.dump(manifest, fh, sort_keys=True)
        os.replace(tmpm, manifest_path)

    def is_done(i):
        bid = _batch_id(i)
        entry = manifest["batches"].get(bid)
        if not entry or entry.get("status") != "done":
            return False
        bpath = os.path.join(checkpoint_dir, bid + ".jsonl")
        return os.path.exists(bpath) and _file_digest(bpath) == entry["digest"]

    pending = [(i, b) for i, b in enumerate(batches) if not is_done(i)]
    if pending:
        if workers > 1:
            with multiprocessing.Pool(
                workers,
                initializer=_worker_init,
                initargs=(crossings, polyhedra_path, tangles_path),
            ) as pool:
                for i, text, stats in pool.imap(_worker_run, pending):
                    record_done(i, text, stats)
        else:
            for i, batch in pending:
                text, stats = run_batch(crossings, batch, polyhedra, tangles)
                record_done(i, text, stats)

    total = StatsRow(crossings=crossings)
    chunks = []
    for i in range(len(batches)):
        bid = _batch_id(i)
        entry = manifest["batches"][bid]
        total.merge(StatsRow(**entry["stats"]))
        with open(os.path.join(checkpoint_dir, bid + ".jsonl")) as fh:
            chunks.append(fh.read())
    if out_path:
        tmp = out_path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write("".join(chunks))
        os.replace(tmp, out_path)
    stats_path = os.path.join(checkpoint_dir, "stats.json")
    tangle_counts = {}
    for r in tangles:
        tangle_counts[r.crossings] = tangle_counts.get(r.crossings, 0) + 1
    poly_counts = {}
    for p in polyhedra:
        poly_counts[p.vertex_count] = poly_counts.get(p.vertex_count, 0) + 1
    with open(stats_path, "w") as fh:
        json.dump(
            {
                "row": asdict(total),
                "tangle_classes_by_c": tangle_counts,
                "polyhedra_by_v": poly_counts,
            },
            fh,
            sort_keys=True,
        )
    return 0 if total.unresolved == 0 else 2


# ---------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------

def growth_ratios(counts: dict, step: int = 1) -> dict:
    """Consecutive-count ratios n(k)/n(k-step) for keys present at both
    ends and nonzero at the denominator."""
    out = {}
    for k in sorted(counts):
        prev = counts.get(k - step)
        if prev:
            out[k] = counts[k] / prev
    return out


def write_stats(run_dirs: list, csv_path: str) -> list:
    """Collect StatsRows from completed run directories into a CSV,
    with growth-ratio rows appended; returns the problems found."""
    problems = []
    rows = []
    tangle_counts = {}
    poly_counts = {}
    for d in run_dirs:
        path = os.path.join(d, "stats.json")
        if not os.path.exists(path):
            problems.append(f"{d}: no stats.json")
            continue
        with open(path) as fh:
            data = json.load(fh)
        rows.append(data["row"])
        for k, n in data.get("tangle_classes_by_c", {}).items():
            tangle_counts[int(k)] = max(tangle_counts.get(int(k), 0), n)
        for k, n in data.get("polyhedra_by_v", {}).items():
            poly_counts[int(k)] = max(poly_counts.get(int(k), 0), n)
    rows.sort(key=lambda r: r["crossings"])
    fields = [
        "crossings", "generated", "knots", "det_one", "candidates",
        "confirmed", "unresolved", "seconds",
    ]
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(fields)
        for r in rows:
            w.writerow([r[f] for f in fields])
        w.writerow([])
        w.writerow(["kind", "index", "ratio"])
        for k, ratio in growth_ratios(tangle_counts).items():
            w.writerow(["tangle_classes", k, f"{ratio:.4f}"])
        # polyhedron counts alternate with vertex parity; compare two
        # steps apart
        for k, ratio in growth_ratios(poly_counts, step=2).items():
            w.writerow(["polyhedra", k, f"{ratio:.4f}"])
    return problems
