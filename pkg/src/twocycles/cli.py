"""Command-line front end.

Exit codes: 0 pass, 1 mathematical failure, 2 input error, 3 inconclusive
(an enumeration cap was reached).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog as cat
from .certificates import CertificateError, check_certificate, decomposition_certificate
from .crossing import (
    DrawingError,
    is_generic,
    kr_functional,
    random_generic_drawing,
    signed_crossing,
)
from .forms import (
    Form2,
    FormError,
    SigmaMode,
    is_two_cycle,
    kuratowski_form,
    pair_key,
    quad_form,
    two_cycle_lattice,
)
from .graph import Graph, GraphError, is_kuratowski_connected
from .homology import (
    betti_numbers,
    boundary_composition_is_zero,
    build_complex,
    h2_lattice,
    planar_face_basis_check,
)
from .intlattice import LatticeBuilder, quotient_invariants
from .modules import (
    FAMILIES,
    THEOREMS,
    decompose,
    iter_generators,
    random_element,
    verify_theorem,
)
from .patterns import (
    Budget,
    EnumerationCapReached,
    enumerate_quads,
    iter_kuratowski_subdivisions,
)

EXIT = {"pass": 0, "fail": 1, "inconclusive": 3}
CAP_ENV = "TWOCYCLE_CAP_SECONDS"
RUN_ALL_DEFAULT = ("main", "main-sym", "main-skew")


class InputError(Exception):
    pass


# -- input handling -------------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_graph(spec: str) -> tuple[Graph, cat.CatalogEntry | None]:
    """``catalog:NAME``, a bare catalog name, or a path to a graph document."""
    name = spec[len("catalog:"):] if spec.startswith("catalog:") else None
    if name is None and not os.path.exists(spec):
        name = spec
    if name is not None:
        try:
            entry = cat.get(name)
        except GraphError:
            known = ", ".join(e.name for e in cat.catalog())
            raise InputError(f"no graph file or catalog entry named {name!r} (catalog: {known})") from None
        return entry.graph, entry
    doc = _read_json(spec)
    try:
        return Graph.from_dict(doc), None
    except GraphError as exc:
        raise InputError(f"{spec}: {exc}") from None


def load_graphs(spec: str):
    if spec in ("catalog:all", "all"):
        return [(e.graph, e) for e in cat.catalog()]
    return [load_graph(spec)]


def load_form(g: Graph, spec: str) -> Form2:
    """A form document (list of [e, f, value]) or a built-in: ``quad:I[:SIDE[:FIRST]]``,
    ``kuratowski:I`` or ``basis:I`` (the I-th basis row of L(G))."""
    kind, _, rest = spec.partition(":")
    if kind in ("quad", "kuratowski", "basis") and not os.path.exists(spec):
        try:
            idx = [int(x) for x in rest.split(":")] if rest else [0]
        except ValueError:
            raise InputError(f"bad form reference {spec!r}") from None
        return _builtin_form(g, kind, idx)
    doc = _read_json(spec)
    if isinstance(doc, dict):
        doc = doc.get("form", doc.get("target"))
    try:
        d = Form2.from_list(doc or [])
    except FormError as exc:
        raise InputError(f"{spec}: {exc}") from None
    bad = [ef for ef in d.entries if not all(0 <= x < g.m for x in ef)]
    if bad:
        raise InputError(f"{spec}: entry on edge pair {bad[0]} outside 0..{g.m - 1}")
    return d


def _builtin_form(g: Graph, kind: str, idx: list[int]) -> Form2:
    try:
        if kind == "quad":
            q = enumerate_quads(g)[idx[0]]
            side = q.left_sides()[idx[1] if len(idx) > 1 else 0]
            return quad_form(g, q, side, idx[2] if len(idx) > 2 else 0)
        if kind == "kuratowski":
            for i, h in enumerate(iter_kuratowski_subdivisions(g)):
                if i == idx[0]:
                    return kuratowski_form(g, h)
            raise IndexError
        lat = two_cycle_lattice(g)
        return Form2.from_vector(lat.basis[idx[0]], pair_key(g))
    except IndexError:
        raise InputError(f"graph has no {kind} number {idx}") from None


def make_budget(args) -> Budget | None:
    seconds = args.cap_time
    if seconds is None and os.environ.get(CAP_ENV):
        try:
            seconds = float(os.environ[CAP_ENV])
        except ValueError:
            raise InputError(f"{CAP_ENV} must be a number of seconds") from None
    if args.cap_cycles is None and seconds is None:
        return None
    return Budget(args.cap_cycles, seconds)


def _families(text: str) -> tuple:
    fams = tuple(f.strip() for f in text.split(",") if f.strip())
    unknown = sorted(set(fams) - set(FAMILIES))
    if unknown:
        raise InputError(f"unknown families {unknown}; choose from {','.join(FAMILIES)}")
    return tuple(f for f in FAMILIES if f in fams)


def _meta(entry) -> dict:
    if entry is None:
        return {}
    return {"planar": entry.planar, "petersen": entry.petersen_family, "linkless": entry.linkless}


# -- commands -------------------------------------------------------------------------


def cmd_rank(args) -> dict:
    g, entry = load_graph(args.graph)
    mode = SigmaMode.parse(args.mode)
    lat = two_cycle_lattice(g, mode)
    key = pair_key(g)
    return {
        "command": "rank",
        "status": "pass",
        "graph": _graph_name(args.graph, entry),
        "mode": mode.value,
        "rank": lat.rank,
        "ambient_dim": len(key),
        "basis": [Form2.from_vector(row, key).to_list() for row in lat.basis],
        "summary": [f"rank L^{mode.value}({_graph_name(args.graph, entry)}) = {lat.rank} "
                    f"in {len(key)} coordinates"],
    }


def cmd_generators(args) -> dict:
    g, entry = load_graph(args.graph)
    mode = SigmaMode.parse(args.mode)
    fams = _families(args.families)
    key = pair_key(g)
    budget = make_budget(args)
    counts, ranks = {}, {}
    total = LatticeBuilder(len(key), key)
    try:
        for fam in fams:
            b = LatticeBuilder(len(key), key)
            n = 0
            for gen in iter_generators(g, (fam,), mode, budget):
                vec = gen.form.to_vector(key)
                b.add(vec)
                total.add(vec)
                n += 1
            counts[fam], ranks[fam] = n, b.rank
    except EnumerationCapReached as exc:
        return {"command": "generators", "status": "inconclusive", "reason": str(exc),
                "summary": [f"inconclusive: {exc}"]}
    L = two_cycle_lattice(g, mode)
    q = quotient_invariants(total.lattice(), L)
    name = _graph_name(args.graph, entry)
    lines = [f"{fam}: {counts[fam]} generators, span rank {ranks[fam]}" for fam in fams]
    lines.append(f"span rank {total.rank} of rank L^{mode.value}({name}) = {L.rank}; "
                 f"quotient free rank {q.free_rank}, torsion {list(q.torsion)}")
    return {
        "command": "generators",
        "status": "pass",
        "graph": name,
        "mode": mode.value,
        "families": list(fams),
        "counts": counts,
        "family_ranks": ranks,
        "span_rank": total.rank,
        "lattice_rank": L.rank,
        "quotient": q.to_dict(),
        "spans_lattice": q.trivial,
        "summary": lines,
    }


def cmd_decompose(args) -> dict:
    g, entry = load_graph(args.graph)
    if not args.form:
        raise InputError("decompose needs --form")
    d = load_form(g, args.form)
    mode = SigmaMode.parse(args.mode)
    check = is_two_cycle(g, d, mode)
    if not check:
        raise InputError(f"form is not a 2-cycle in mode {mode.value}: {check.report}")
    fams = _families(args.families)
    rep = decompose(g, d, fams, mode, make_budget(args))
    if rep.inconclusive:
        return {"command": "decompose", "status": "inconclusive", "reason": rep.detail,
                "summary": [f"inconclusive: {rep.detail}"]}
    cert = decomposition_certificate(g, rep)
    if args.certificate_out:
        with open(args.certificate_out, "w") as fh:
            json.dump(cert, fh, sort_keys=True, indent=2)
            fh.write("\n")
    if rep.success:
        lines = [f"decomposed over {','.join(fams)} with {len(rep.terms)} terms"]
        lines += [f"  {c:+d} x {gen.family}" for c, gen in rep.terms]
    else:
        lines = [f"not in the span of {','.join(fams)}: span + <d> / span has free rank "
                 f"{rep.quotient.free_rank}, torsion {list(rep.quotient.torsion)}"]
    return {
        "command": "decompose",
        "status": "pass" if rep.success else "fail",
        "graph": _graph_name(args.graph, entry),
        "certificate": cert,
        "summary": lines,
    }


def _verify_one(name: str, g: Graph, meta: dict, theorems, cap_cycles, cap_time) -> dict:
    verdicts = []
    for th in theorems:
        budget = None if cap_cycles is None and cap_time is None else Budget(cap_cycles, cap_time)
        try:
            verdicts += [v.to_dict() for v in verify_theorem(g, th, budget, meta)]
        except EnumerationCapReached as exc:
            verdicts.append({"name": th, "status": "inconclusive", "details": {"reason": str(exc)}})
    return {"graph": name, "verdicts": verdicts, "status": _combine(v["status"] for v in verdicts)}


def _combine(statuses) -> str:
    statuses = set(statuses)
    if "fail" in statuses:
        return "fail"
    if "inconclusive" in statuses:
        return "inconclusive"
    return "pass"


def _run_suite(command: str, targets, theorems, args) -> dict:
    budget = make_budget(args)  # validates the environment variable
    cap_cycles = None if budget is None else budget.max_items
    cap_time = None
    if budget is not None and budget.deadline is not None:
        cap_time = args.cap_time if args.cap_time is not None else float(os.environ[CAP_ENV])
    jobs = [(name, g, meta, theorems, cap_cycles, cap_time) for name, g, meta in targets]
    if getattr(args, "jobs", 1) > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, *zip(*jobs)))
    else:
        results = [_verify_one(*job) for job in jobs]
    lines = []
    for res in results:
        for v in res["verdicts"]:
            lines.append(f"{res['graph']:<16} {v['name']:<28} {v['status']}")
    status = _combine(r["status"] for r in results)
    lines.append(f"overall: {status}")
    return {"command": command, "status": status, "theorems": list(theorems), "results": results,
            "summary": lines}


def _theorems(text: str | None, default) -> tuple:
    if text is None:
        return tuple(default)
    if text == "all":
        return THEOREMS
    ths = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [t for t in ths if t not in THEOREMS]
    if unknown:
        raise InputError(f"unknown theorem {unknown[0]!r}; choose from {', '.join(THEOREMS)} or all")
    return ths


def cmd_verify(args) -> dict:
    theorems = _theorems(args.theorem, ("main",))
    targets = [(_graph_name(args.graph, e), g, _meta(e)) for g, e in load_graphs(args.graph)]
    return _run_suite("verify", targets, theorems, args)


def cmd_homology(args) -> dict:
    g, entry = load_graph(args.graph)
    name = _graph_name(args.graph, entry)
    b = betti_numbers(g)
    H = h2_lattice(g)
    L = two_cycle_lattice(g)
    zero = boundary_composition_is_zero(build_complex(g))
    report = {
        "command": "homology",
        "graph": name,
        "betti": list(b),
        "h2_rank": H.rank,
        "h2_equals_two_cycle_lattice": H.basis == L.basis,
        "boundary_composition_zero": zero,
    }
    lines = [f"betti numbers of the deleted product of {name}: {b}",
             f"H2 rank {H.rank}; equals L(G): {H.basis == L.basis}; d1 d2 = 0: {zero}"]
    ok = H.basis == L.basis and zero and b[2] == L.rank
    faces = None
    if args.faces:
        faces = _read_json(args.faces)
    elif entry is not None and "faces" in entry.extra:
        faces = entry.extra["faces"]
    if faces is not None:
        try:
            fv = planar_face_basis_check(g, faces)
        except GraphError as exc:
            raise InputError(f"face list: {exc}") from None
        report["face_basis"] = fv.to_dict()
        lines.append(f"face-pair basis: {'ok' if fv.ok else 'FAILED'} ({fv.detail})")
        ok = ok and fv.ok
    report["status"] = "pass" if ok else "fail"
    report["summary"] = lines
    return report


def cmd_crossing(args) -> dict:
    g, entry = load_graph(args.graph)
    name = _graph_name(args.graph, entry)
    L = two_cycle_lattice(g)
    key = pair_key(g)
    pairs = g.nonadjacent_pairs()
    nonzero, antisym_bad = [], []
    for t in range(args.trials):
        seed = args.seed + t
        try:
            dr = random_generic_drawing(g, seed)
        except DrawingError as exc:
            raise InputError(f"{name}: {exc}") from None
        rng = random.Random(seed)
        d = Form2.from_vector(random_element(L, rng), key) if L.rank else Form2()
        val = kr_functional(g, dr, d)
        if val:
            nonzero.append({"seed": seed, "value": val, "form": d.to_list()})
        for e, f in pairs:
            if e < f and signed_crossing(g, dr, e, f) != -signed_crossing(g, dr, f, e):
                antisym_bad.append({"seed": seed, "pair": [e, f]})
    control = _negative_control(g, args.seed)
    status = "pass" if not nonzero and not antisym_bad and (control is None or control["value"] != 0) else "fail"
    lines = [f"{args.trials} drawings of {name}: kr(d) = 0 in {args.trials - len(nonzero)} trials",
             f"antisymmetry violations: {len(antisym_bad)}"]
    if control is not None:
        lines.append(f"negative control (single entry on crossing pair {control['pair']}): kr = {control['value']}")
    return {
        "command": "crossing",
        "status": status,
        "graph": name,
        "trials": args.trials,
        "seed": args.seed,
        "nonzero": nonzero,
        "antisymmetry_violations": antisym_bad,
        "negative_control": control,
        "summary": lines,
    }


def _negative_control(g: Graph, seed: int, tries: int = 50):
    """A single-entry form on a crossing pair: not a 2-cycle, kr must be nonzero."""
    for s in range(seed, seed + tries):
        dr = random_generic_drawing(g, s)
        for e, f in g.nonadjacent_pairs():
            if signed_crossing(g, dr, e, f):
                d = Form2({(e, f): 1})
                return {"seed": s, "pair": [e, f], "value": kr_functional(g, dr, d),
                        "is_two_cycle": bool(is_two_cycle(g, d)), "generic": bool(is_generic(g, dr))}
    return None


def cmd_check_certificate(args) -> dict:
    doc = _read_json(args.certificate)
    try:
        res = check_certificate(doc)
    except CertificateError as exc:
        raise InputError(f"{args.certificate}: {exc}") from None
    return {"command": "check-certificate", "status": "pass" if res.ok else "fail", "result": res.to_dict(),
            "summary": [f"{res.kind}: {'accepted' if res.ok else 'rejected'} ({res.reason})"]}


def cmd_catalog(args) -> dict:
    entries = cat.catalog()
    if args.action == "list":
        rows = []
        lines = []
        for e in entries:
            doc = e.to_dict()
            doc["kuratowski_connected"] = is_kuratowski_connected(e.graph)
            rows.append(doc)
            lines.append(f"{e.name:<16} n={e.graph.n:<3} m={e.graph.m:<3} planar={e.planar!s:<5} "
                         f"kuratowski_connected={doc['kuratowski_connected']!s:<5} {e.notes}")
        return {"command": "catalog list", "status": "pass", "entries": rows, "summary": lines}
    theorems = _theorems(args.theorem, RUN_ALL_DEFAULT)
    targets = [(e.name, e.graph, _meta(e)) for e in entries]
    return _run_suite("catalog run-all", targets, theorems, args)


def _graph_name(spec: str, entry) -> str:
    return entry.name if entry is not None else spec


# -- argument parsing -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("summary", "full", "machine"), default="summary",
                        help="summary: human lines; machine: JSON document; full: both")
    common.add_argument("--cap-cycles", type=int, default=None, help="cap on enumerated patterns")
    common.add_argument("--cap-time", type=float, default=None,
                        help=f"time cap in seconds (default from ${CAP_ENV})")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", required=True, help="graph JSON file, catalog:NAME or a catalog name")
    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--mode", choices=("plain", "sym", "skew"), default="plain")
    fams = argparse.ArgumentParser(add_help=False)
    fams.add_argument("--families", default=",".join(FAMILIES), help="comma list of pairs,kuratowski,quads")

    p = argparse.ArgumentParser(prog="twocycles", description="Exact 2-cycle lattices of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rank", parents=[common, graph, mode], help="rank and basis of L^sigma(G)")
    s.set_defaults(func=cmd_rank)
    s = sub.add_parser("generators", parents=[common, graph, mode, fams], help="generator counts and span ranks")
    s.set_defaults(func=cmd_generators)
    s = sub.add_parser("decompose", parents=[common, graph, mode, fams], help="decompose a 2-cycle")
    s.add_argument("--form", help="form file or quad:I[:SIDE[:FIRST]], kuratowski:I, basis:I")
    s.add_argument("--certificate-out", help="write the certificate to this file")
    s.set_defaults(func=cmd_decompose)
    s = sub.add_parser("verify", parents=[common], help="verify theorem statements")
    s.add_argument("--graph", required=True, help="graph file, catalog:NAME or catalog:all")
    s.add_argument("--theorem", default=None, help=f"comma list of {', '.join(THEOREMS)}, or all")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("homology", parents=[common, graph], help="deleted product homology")
    s.add_argument("--faces", help="JSON list of facial vertex cycles (planar graphs)")
    s.set_defaults(func=cmd_homology)
    s = sub.add_parser("crossing", parents=[common, graph], help="crossing functional on random drawings")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=20)
    s.set_defaults(func=cmd_crossing)
    s = sub.add_parser("check-certificate", parents=[common], help="re-check an emitted certificate")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_check_certificate)
    s = sub.add_parser("catalog", parents=[common], help="list the catalog or run a suite over it")
    s.add_argument("action", choices=("list", "run-all"))
    s.add_argument("--theorem", default=None, help="theorems for run-all (default main, main-sym, main-skew)")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_catalog)
    return p


def render(report: dict, output: str) -> str:
    lines = report.get("summary", [])
    body = {k: v for k, v in report.items() if k != "summary"}
    machine = json.dumps(body, sort_keys=True, indent=2)
    if output == "machine":
        return machine
    text = "\n".join(lines + [f"status: {report['status']}"])
    if output == "full":
        return text + "\n\n" + machine
    return text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (InputError, GraphError, FormError, DrawingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapReached as exc:
        report = {"command": args.command, "status": "inconclusive", "reason": str(exc),
                  "summary": [f"inconclusive: {exc}"]}
    print(render(report, args.output))
    return EXIT[report["status"]]


if __name__ == "__main__":
    sys.exit(main())
