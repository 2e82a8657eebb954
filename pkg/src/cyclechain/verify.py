"""Cross-checks between formula paths and oracle paths, per instance.

Seven checks can fail the instance:

    trees          characterized enumeration == brute-force enumeration
    count          tree count == Kirchhoff determinant
    fvector        inclusion-exclusion f-vector == downset enumeration
    hilbert        series expansion == monomial-count oracle, degrees 0..10
    covers         predicted minimal covers == exhaustive transversals
    decomposition  intersection of the oracle-cover primes == facet ideal
    cm             quotient certificate succeeds and replays

Two informational notes never fail anything: the pairwise-form f-vector
drift and the nine-row intersection predictor drift.  A check whose oracle
would outgrow its cap is reported as skipped, also without failing the
instance; mismatches are the only fatal status.

Every detail payload is plain JSON data so reports can cross process
boundaries and be emitted verbatim.
"""

import itertools
import time
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

from . import hilbert, ideal, oracle, simplicial, spanning
from .chain_graph import ChainGraph, build_chain_graph, intersection_report
from .edgeset import EdgeSet
from .errors import SearchSpaceTooLarge

CHECK_NAMES = (
    "trees",
    "count",
    "fvector",
    "hilbert",
    "covers",
    "decomposition",
    "cm",
)
NOTE_NAMES = ("fvector_paper", "intersections")
HILBERT_DEGREES = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # match | mismatch | skipped
    elapsed: float
    detail: object = None


@dataclass(frozen=True)
class OracleReport:
    instance: dict
    checks: tuple[CheckResult, ...]
    notes: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "mismatch" for c in self.checks)

    def to_json(self, include_timings: bool = False) -> dict:
        def one(c: CheckResult) -> dict:
            out = {"name": c.name, "status": c.status}
            if c.detail is not None:
                out["detail"] = c.detail
            if include_timings:
                out["elapsed"] = round(c.elapsed, 6)
            return out

        return {
            "instance": self.instance,
            "ok": self.ok,
            "checks": [one(c) for c in self.checks],
            "notes": [one(c) for c in self.notes],
        }


def labels_of(g: ChainGraph, s: EdgeSet) -> list[str]:
    return [str(g.label_of(i)) for i in s]


def _set_diff_detail(g, left_name, left, right_name, right):
    """Both counts plus the smallest member counted differently."""
    only_left = sorted(left - right)
    only_right = sorted(right - left)
    witness = min(only_left + only_right)
    side = left_name if witness in set(only_left) else right_name
    return {
        left_name: len(left),
        right_name: len(right),
        "witness": labels_of(g, g.edge_set(witness)),
        "witness_only_in": side,
    }


def _check_trees(g, tree_cap, face_cap):
    mine = spanning.enumerate_trees_characterized(g).tree_masks()
    ref = set(oracle.spanning_tree_masks(g.endpoints, g.num_vertices, tree_cap))
    if mine == ref:
        return "match", None
    return "mismatch", _set_diff_detail(g, "characterized", mine, "oracle", ref)


def _check_count(g, tree_cap, face_cap):
    mine = len(spanning.enumerate_trees_characterized(g).trees)
    ref = oracle.kirchhoff_count(g.endpoints, g.num_vertices)
    if mine == ref:
        return "match", None
    return "mismatch", {"characterized": mine, "determinant": ref}


def _check_fvector(g, tree_cap, face_cap):
    mine = simplicial.f_vector_exact(g)
    ref = simplicial.f_vector_bruteforce(simplicial.spanning_complex(g), face_cap)
    if mine.f == ref.f:
        return "match", None
    bad = next(i for i, (a, b) in enumerate(zip(mine.f, ref.f)) if a != b)
    return "mismatch", {
        "exact": list(mine.f),
        "bruteforce": list(ref.f),
        "witness_index": bad,
    }


def _check_hilbert(g, tree_cap, face_cap):
    series = hilbert.hilbert_series(simplicial.f_vector_exact(g))
    got = series.expand(HILBERT_DEGREES)
    want = [
        hilbert.hilbert_function_oracle(g, j, cap=face_cap)
        for j in range(HILBERT_DEGREES + 1)
    ]
    if got == want:
        return "match", None
    bad = next(j for j in range(HILBERT_DEGREES + 1) if got[j] != want[j])
    return "mismatch", {"expansion": got, "oracle": want, "witness_degree": bad}


def _check_covers(g, tree_cap, face_cap):
    c = simplicial.spanning_complex(g)
    mine = {s.mask for s in ideal.covers_lemma41(g)}
    ref = {s.mask for s in ideal.minimal_vertex_covers_oracle(c)}
    if mine == ref:
        return "match", None
    return "mismatch", _set_diff_detail(g, "predicted", mine, "oracle", ref)


def _check_decomposition(g, tree_cap, face_cap):
    c = simplicial.spanning_complex(g)
    covers = ideal.minimal_vertex_covers_oracle(c)
    met = ideal.intersect_primes(
        (ideal.VariablePrime(s) for s in covers), g.n
    )
    direct = ideal.facet_ideal(c)
    mine = {s.mask for s in met.generators}
    ref = {s.mask for s in direct.generators}
    if mine == ref:
        return "match", None
    return "mismatch", _set_diff_detail(g, "intersection", mine, "facet_ideal", ref)


def _check_cm(g, tree_cap, face_cap):
    verdict = ideal.cohen_macaulay_verdict(g)
    if not verdict.certified:
        return "mismatch", {
            "verdict": verdict.detail,
            "step": verdict.failed_step,
            "mindeg": verdict.failed_mindeg,
        }
    fi = ideal.facet_ideal(simplicial.spanning_complex(g))
    if not ideal.replay_certificate(fi, verdict.certificate):
        return "mismatch", {"verdict": "certificate does not replay"}
    return "match", {"steps": len(verdict.certificate.ordering)}


def _note_fvector_paper(g, tree_cap, face_cap):
    cmp = simplicial.f_vector_paper(g)
    if cmp.agree:
        return "match", None
    return "mismatch", {
        "exact": list(cmp.exact.f),
        "pairwise_form": list(cmp.pairwise_form.f),
        "mismatched_indices": list(cmp.mismatched_indices),
    }


def _note_intersections(g, tree_cap, face_cap):
    bad = [p for p in intersection_report(g) if not p.agree]
    if not bad:
        return "match", None
    return "mismatch", [
        {
            "a": list(p.a),
            "b": list(p.b),
            "exact": p.exact,
            "predicted": p.predicted,
            "row": p.row,
        }
        for p in bad
    ]


_RUNNERS = {
    "trees": _check_trees,
    "count": _check_count,
    "fvector": _check_fvector,
    "hilbert": _check_hilbert,
    "covers": _check_covers,
    "decomposition": _check_decomposition,
    "cm": _check_cm,
    "fvector_paper": _note_fvector_paper,
    "intersections": _note_intersections,
}


def _run(name, g, tree_cap, face_cap) -> CheckResult:
    start = time.perf_counter()
    try:
        status, detail = _RUNNERS[name](g, tree_cap, face_cap)
    except SearchSpaceTooLarge as e:
        status, detail = "skipped", str(e)
    return CheckResult(name, status, time.perf_counter() - start, detail)


def verify_instance(
    g: ChainGraph,
    checks=None,
    tree_cap: int = 10**6,
    face_cap: int = 1 << 24,
) -> OracleReport:
    """Run the selected checks (default: all) plus both notes."""
    if checks is None:
        selected = CHECK_NAMES
    else:
        selected = tuple(checks)
        unknown = [c for c in selected if c not in CHECK_NAMES]
        if unknown:
            raise ValueError(
                f"unknown checks {unknown}; valid: {', '.join(CHECK_NAMES)}"
            )
    instance = {
        "r": g.r,
        "m": list(g.m),
        "t": g.t,
        "n": g.n,
        "attach": list(g.forest_attachments),
    }
    results = tuple(_run(c, g, tree_cap, face_cap) for c in selected)
    notes = tuple(_run(nm, g, tree_cap, face_cap) for nm in NOTE_NAMES)
    return OracleReport(instance, results, notes)


def family_instances(rmax: int, mmax: int, tmax: int):
    """All (r, m, t) with r <= rmax, 3 <= m_i <= mmax, t <= tmax, sorted."""
    if rmax < 1 or mmax < 3 or tmax < 0:
        raise ValueError(f"family bounds ({rmax},{mmax},{tmax}) out of range")
    out = []
    for r in range(1, rmax + 1):
        for m in itertools.product(range(3, mmax + 1), repeat=r):
            for t in range(tmax + 1):
                out.append((r, m, t))
    return out


def _family_worker(args):
    r, m, t, checks, tree_cap, face_cap = args
    g = build_chain_graph(r, m, t)
    return verify_instance(g, checks, tree_cap, face_cap)


def verify_family(
    rmax: int,
    mmax: int,
    tmax: int,
    checks=None,
    jobs: int = 1,
    tree_cap: int = 10**6,
    face_cap: int = 1 << 24,
) -> list[OracleReport]:
    """Verify every instance of the family, optionally across processes.

    Reports come back in the deterministic family order regardless of
    worker scheduling.
    """
    work = [
        (r, m, t, tuple(checks) if checks is not None else None, tree_cap, face_cap)
        for r, m, t in family_instances(rmax, mmax, tmax)
    ]
    if jobs <= 1:
        return [_family_worker(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_family_worker, work, chunksize=4))
