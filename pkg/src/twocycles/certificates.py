"""Serializable certificates and an independent checker for them.

A certificate carries the graph, the target form and the patterns behind
every generator used. The checker never trusts stored forms: it re-certifies
each pattern against the graph, rebuilds its form and redoes the arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .forms import (
    Form2,
    FormError,
    SigmaMode,
    circuit_pair_form,
    is_two_cycle,
    kuratowski_form,
    pair_key,
    quad_form,
    sigma_apply,
)
from .graph import Graph, GraphError
from .intlattice import LatticeBuilder, quotient_invariants, span
from .modules import DecompositionReport, SymQuadCertificate, iter_generators
from .patterns import (
    certify_cycle,
    certify_kuratowski,
    certify_quad,
    cycle_from_dict,
    kuratowski_from_dict,
    quad_from_dict,
)

FORMAT_VERSION = 1


class CertificateError(ValueError):
    """The document is not a well-formed certificate."""


@dataclass
class CheckResult:
    ok: bool
    kind: str
    reason: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "kind": self.kind, "reason": self.reason, "details": self.details}


# -- emission -------------------------------------------------------------------------


def decomposition_certificate(g: Graph, rep: DecompositionReport) -> dict:
    """Certificate for a decomposition report, successful or not."""
    doc = {
        "format": FORMAT_VERSION,
        "graph": g.to_dict(),
        "mode": rep.mode.value,
        "families": list(rep.families),
        "target": rep.target.to_list(),
    }
    if rep.success:
        doc["kind"] = "decomposition"
        doc["terms"] = [{"coefficient": c, **gen.to_dict()} for c, gen in rep.terms]
    else:
        doc["kind"] = "non-membership"
        doc["quotient"] = None if rep.quotient is None else rep.quotient.to_dict()
    return doc


def sym_quad_document(g: Graph, cert: SymQuadCertificate) -> dict:
    return {"format": FORMAT_VERSION, "graph": g.to_dict(), **cert.to_dict()}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


# -- rebuilding generators ----------------------------------------------------------


def generator_form(g: Graph, doc: dict, mode: SigmaMode) -> Form2:
    """Rebuild a generator form from its pattern document, certifying the pattern."""
    fam = doc.get("family")
    if fam == "pairs":
        c, d = cycle_from_dict(doc["C"]), cycle_from_dict(doc["D"])
        for cyc in (c, d):
            if not certify_cycle(g, cyc):
                raise CertificateError(f"cycle {cyc.to_dict()} is not an oriented cycle of the graph")
        return sigma_apply(circuit_pair_form(g, c, d), mode)
    if fam == "kuratowski":
        if mode is SigmaMode.SKEW:
            raise CertificateError("Kuratowski generators have no skew part")
        h = kuratowski_from_dict(doc["pattern"])
        if not certify_kuratowski(g, h):
            raise CertificateError("Kuratowski pattern does not certify against the graph")
        return kuratowski_form(g, h)
    if fam == "quads":
        q = quad_from_dict(doc["pattern"])
        if not certify_quad(g, q):
            raise CertificateError("quad pattern does not certify against the graph")
        side = tuple(int(x) for x in doc["left_side"])
        return sigma_apply(quad_form(g, q, side, int(doc.get("first", 0))), mode)
    raise CertificateError(f"unknown generator family {fam!r}")


# -- checking -------------------------------------------------------------------------


def check_certificate(doc: dict) -> CheckResult:
    """Re-derive everything in ``doc`` from the graph and its patterns."""
    if not isinstance(doc, dict):
        raise CertificateError("certificate must be a JSON object")
    kind = doc.get("kind")
    try:
        g = Graph.from_dict(doc["graph"])
        if kind == "decomposition":
            return _check_decomposition(g, doc)
        if kind == "non-membership":
            return _check_non_membership(g, doc)
        if kind == "sym-quad":
            return _check_sym_quad(g, doc)
    except KeyError as exc:
        raise CertificateError(f"certificate is missing field {exc}") from None
    except (GraphError, FormError, TypeError, ValueError) as exc:
        if isinstance(exc, CertificateError):
            return CheckResult(False, str(kind), str(exc))
        return CheckResult(False, str(kind), f"could not rebuild: {exc}")
    raise CertificateError(f"unknown certificate kind {kind!r}")


def _target(g: Graph, doc: dict, mode: SigmaMode) -> Form2:
    d = Form2.from_list(doc["target"])
    check = is_two_cycle(g, d, mode)
    if not check:
        raise CertificateError(f"target is not a 2-cycle: {check.report}")
    return d


def _check_decomposition(g: Graph, doc: dict) -> CheckResult:
    mode = SigmaMode.parse(doc["mode"])
    families = set(doc.get("families", ()))
    d = _target(g, doc, mode)
    acc = Form2()
    for i, term in enumerate(doc["terms"]):
        if families and term.get("family") not in families:
            return CheckResult(False, "decomposition", f"term {i} uses family {term.get('family')!r} outside {sorted(families)}")
        c = int(term["coefficient"])
        acc = acc + c * generator_form(g, term, mode)
    if acc != d:
        diff = (acc - d).to_list()
        return CheckResult(False, "decomposition", "sum of terms differs from the target",
                           {"first_difference": diff[0] if diff else None})
    return CheckResult(True, "decomposition", "terms sum to the target exactly", {"terms": len(doc["terms"])})


def _check_non_membership(g: Graph, doc: dict) -> CheckResult:
    mode = SigmaMode.parse(doc["mode"])
    families = tuple(doc["families"])
    d = _target(g, doc, mode)
    key = pair_key(g)
    b = LatticeBuilder(len(key), key)
    for gen in iter_generators(g, families, mode):
        b.add(gen.form.to_vector(key))
    lat = b.lattice()
    target = d.to_vector(key)
    if target in lat:
        return CheckResult(False, "non-membership", "target lies in the span after all")
    q = quotient_invariants(lat, span(list(lat.basis) + [target], len(key)))
    claimed = doc.get("quotient")
    if claimed is not None and claimed != q.to_dict():
        return CheckResult(False, "non-membership", "stated quotient does not match the recomputed one",
                           {"recomputed": q.to_dict(), "claimed": claimed})
    return CheckResult(True, "non-membership", "target is outside the span", {"quotient": q.to_dict()})


def _check_sym_quad(g: Graph, doc: dict) -> CheckResult:
    q = quad_from_dict(doc["quad"])
    if not certify_quad(g, q):
        return CheckResult(False, "sym-quad", "quad pattern does not certify against the graph")
    side = tuple(int(x) for x in doc["left_side"])
    target = sigma_apply(quad_form(g, q, side, int(doc.get("first", 0))), SigmaMode.SYM)
    s1, s2 = (int(s) for s in doc["signs"])
    acc = Form2()
    for s, name in ((s1, "H1"), (s2, "H2")):
        h = kuratowski_from_dict(doc[name])
        if not certify_kuratowski(g, h):
            return CheckResult(False, "sym-quad", f"{name} does not certify against the graph")
        acc = acc + s * kuratowski_form(g, h)
    if acc != target:
        return CheckResult(False, "sym-quad", "q + T(q) differs from the signed Kuratowski sum")
    return CheckResult(True, "sym-quad", "q + T(q) is the sum of two Kuratowski forms")


def perturbations(doc: dict):
    """Copies of ``doc`` with one integer changed by one; each must be rejected."""
    kind = doc.get("kind")
    if kind == "decomposition":
        for i in range(len(doc["terms"])):
            for delta in (1, -1):
                bad = json.loads(json.dumps(doc))
                bad["terms"][i]["coefficient"] += delta
                yield bad
    elif kind == "sym-quad":
        for i in range(2):
            bad = json.loads(json.dumps(doc))
            bad["signs"][i] = -bad["signs"][i]
            yield bad
    elif kind == "non-membership" and doc.get("quotient"):
        bad = json.loads(json.dumps(doc))
        bad["quotient"]["free_rank"] += 1
        yield bad
    for i in range(len(doc.get("target", []))):
        bad = json.loads(json.dumps(doc))
        bad["target"][i][2] += 1
        yield bad


__all__ = [
    "CertificateError",
    "CheckResult",
    "check_certificate",
    "decomposition_certificate",
    "dumps",
    "generator_form",
    "perturbations",
    "sym_quad_document",
]
