"""Per-graph theorem checks over a corpus of connected claw-free cubic graphs.

Every bound is compared with exact rationals.  A check only fails with a
concrete record attached, so a failing report always names its witness.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .builders import NECKLACE, PRISM, certify, recognize_family, tfset_clawfree, tfset_triangle_factor
from .codecs import from_graph6, to_graph6
from .errors import ForcingLabError, ParseError
from .graph import SimpleGraph, is_claw_free, is_connected, is_cubic
from .solver import SOFT_LIMIT, forcing_number, total_forcing_number
from .structure import triangle_diamond_partition

CHECKS = {
    "observation1": "F(G) <= F_t(G) <= 2F(G)",
    "theorem1": "F_t(G) <= n/2 for a triangle 2-factor, equality iff prism",
    "theorem2": "F_t(G) <= n/2, equality iff necklace or prism",
    "theorem3": "F(G) <= n/2, equality iff N_2 or prism",
    "corollary1": "F(G) < n/2 when n >= 10",
    "certificate": "constructed TF-set is valid with size <= n/2",
}


@dataclass
class GraphRecord:
    graph_id: str
    graph6: str
    n: int
    status: str  # "checked" | "skipped" | "error"
    reason: str | None = None
    F: int | None = None
    F_t: int | None = None
    certificate_size: int | None = None
    provenance: str | None = None
    family: str | None = None
    checks: dict[str, bool] = field(default_factory=dict)


@dataclass
class VerificationReport:
    records: list[GraphRecord]

    def failures(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {name: [] for name in CHECKS}
        for rec in self.records:
            for name, ok in rec.checks.items():
                if not ok:
                    out[name].append(rec.graph_id)
        return out

    @property
    def passed(self) -> bool:
        return not any(self.failures().values()) and not any(r.status == "error" for r in self.records)

    def to_json(self) -> dict:
        fails = self.failures()
        theorems = {}
        for name, statement in CHECKS.items():
            counter = [asdict(r) for r in self.records if r.graph_id in fails[name]]
            theorems[name] = {"statement": statement, "pass": not counter, "counterexamples": counter}
        return {
            "pass": self.passed,
            "theorems": theorems,
            "records": [asdict(r) for r in self.records],
        }


def check_graph(graph_id: str, G: SimpleGraph, claimed: list[int] | None = None, max_n: int = SOFT_LIMIT) -> GraphRecord:
    """Run every applicable check on one graph.

    ``claimed`` replaces the built certificate by an externally supplied set.
    """
    rec = GraphRecord(graph_id, to_graph6(G), G.n, "checked")
    if not (is_connected(G) and is_cubic(G) and is_claw_free(G)):
        rec.status, rec.reason = "skipped", "NotClawFreeCubic"
        return rec
    if G.n == 4:
        rec.status, rec.reason = "skipped", "IsK4"
        return rec
    if G.n > max_n:
        rec.status, rec.reason = "skipped", "InstanceTooLarge"
        return rec
    half = Fraction(G.n, 2)
    fam = recognize_family(G)
    rec.family = str(fam)
    F = forcing_number(G, workers=1).value
    Ft = total_forcing_number(G, workers=1).value
    rec.F, rec.F_t = F, Ft

    if claimed is None:
        cert = tfset_clawfree(G)
    else:
        cert = certify(G, claimed, "claimed")
    rec.certificate_size, rec.provenance = cert.size, cert.provenance

    extremal_t = fam.kind == PRISM or fam.kind == NECKLACE
    extremal = fam.kind == PRISM or (fam.kind == NECKLACE and fam.k == 2)
    rec.checks["observation1"] = F <= Ft <= 2 * F
    rec.checks["theorem2"] = Ft <= half and ((Ft == half) == extremal_t)
    rec.checks["theorem3"] = F <= half and ((F == half) == extremal)
    if G.n >= 10:
        rec.checks["corollary1"] = F < half
    rec.checks["certificate"] = cert.is_valid and cert.size <= half
    if not triangle_diamond_partition(G).diamonds:
        tcert = tfset_triangle_factor(G)
        rec.checks["theorem1"] = (
            tcert.is_valid and tcert.size <= half and Ft <= half and ((Ft == half) == (fam.kind == PRISM))
        )
    return rec


def _check_item(item):
    graph_id, G, claimed, max_n = item
    try:
        return check_graph(graph_id, G, claimed, max_n)
    except ForcingLabError as exc:
        rec = GraphRecord(graph_id, to_graph6(G), G.n, "error", f"{type(exc).__name__}: {exc}")
        return rec


def read_corpus(lines) -> tuple[list[tuple[str, SimpleGraph]], list[GraphRecord]]:
    """Parse graph6 lines; unparsable lines become skipped records."""
    graphs, errors = [], []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            graphs.append((f"line{lineno}", from_graph6(text)))
        except (ParseError, ForcingLabError) as exc:
            errors.append(GraphRecord(f"line{lineno}", text, 0, "skipped", f"ParseError: {exc}"))
    return graphs, errors


def verify_corpus(
    graphs: list[tuple[str, SimpleGraph]],
    claimed: dict[str, list[int]] | None = None,
    max_n: int = SOFT_LIMIT,
    workers: int = 1,
) -> VerificationReport:
    """Check every graph; records keep input order whatever the worker count."""
    claimed = claimed or {}
    items = [(gid, G, claimed.get(to_graph6(G)), max_n) for gid, G in graphs]
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_check_item, items))
    else:
        records = [_check_item(it) for it in items]
    return VerificationReport(records)
