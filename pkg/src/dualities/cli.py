"""Command-line surface for the library.

Exit codes: 0 on success or a verified property, 1 when a checked
property fails (an axiom check, a cross-product axiom, an invalid
matroid), 2 on usage or input errors.  ``--json`` prints one JSON object
with every report field; random trials echo their seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algebras, complexes, graphs, matroids


class InputError(ValueError):
    """Unreadable or unparsable input source."""


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    return obj


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    try:
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {value!r}: {exc}") from exc


def _looks_like_path(value: str) -> bool:
    import os

    return value == "-" or os.path.exists(value)


def _load_matroid(value: str, bound: int) -> matroids.Matroid:
    if _looks_like_path(value):
        return matroids.parse_matroid(_read_source(value), bound=bound)
    return matroids.parse_named(value)


def _load_graph(value: str) -> graphs.Multigraph:
    if _looks_like_path(value):
        return graphs.parse_graph(_read_source(value))
    return graphs.named_graph(value)


def _load_embedding(value: str) -> graphs.Embedding:
    if _looks_like_path(value):
        return graphs.parse_embedding(_read_source(value))
    return graphs.named_embedding(value)


def _load_complex(value: str) -> complexes.SimplicialComplex:
    if _looks_like_path(value):
        return complexes.parse_complex(_read_source(value))
    name, _, rest = value.partition(":")
    params = tuple(int(p) for p in rest.split(",")) if rest else ()
    if name == "genus":
        name, params = "genus_surface", params
    return complexes.named_complex(name, params)


def _parse_elements(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(t) for t in text.replace(",", " ").split())


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(t) for t in text.replace(",", " ").split())


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(_jsonable(report), sort_keys=True))
    else:
        for line in lines:
            print(line)


def _matroid_summary(m: matroids.Matroid) -> dict:
    d = m.to_json_dict()
    d["rank"] = m.rank
    d["basis_count"] = len(m.bases)
    return d


# ---------------------------------------------------------------------------
# matroid commands


def _cmd_matroid(args) -> int:
    bound = args.bound or matroids.GROUND_BOUND
    if args.action == "validate":
        try:
            m = _load_matroid(args.source, bound)
        except matroids.MatroidError as exc:
            _emit(
                args,
                {"valid": False, "error": type(exc).__name__, "message": str(exc)},
                [f"invalid: {type(exc).__name__}: {exc}"],
            )
            return 1
        rep = _matroid_summary(m)
        rep["valid"] = True
        _emit(args, rep, [f"valid matroid: {m!r}", m.to_text().rstrip()])
        return 0

    m = _load_matroid(args.source, bound)
    if args.action == "dual":
        d = m.dual()
        _emit(args, _matroid_summary(d), [d.to_text().rstrip()])
        return 0
    if args.action == "minor":
        res = m.minor(
            deletions=_parse_elements(args.delete),
            contractions=_parse_elements(args.contract),
        )
        _emit(args, _matroid_summary(res), [res.to_text().rstrip()])
        return 0
    if args.action == "classify":
        rep = matroids.classify(m, bound=args.bound or 10)
        lines = [f"{k}: {v}" for k, v in rep.to_json_dict().items() if k != "witnesses"]
        lines += [f"witness[{k}]: {v}" for k, v in rep.witnesses.items()]
        _emit(args, rep.to_json_dict(), lines)
        return 0
    if args.action == "check-duality":
        rep = matroids.check_duality_axioms(m)
        d = rep.to_json_dict()
        lines = [
            f"involution_ok: {rep.involution_ok}",
            f"ground_preserved_ok: {rep.ground_preserved_ok}",
        ]
        lines += [
            f"element {e}: delete/contract {a}, contract/delete {b}"
            for e, (a, b) in rep.delete_contract_ok.items()
        ]
        lines.append(f"all_ok: {rep.all_ok}")
        _emit(args, d, lines)
        return 0 if rep.all_ok else 1
    if args.action == "isomorphic":
        other = _load_matroid(args.target, bound)
        ok, bij = matroids.is_isomorphic(m, other)
        rep = {"isomorphic": ok, "bijection": bij}
        _emit(args, rep, [f"isomorphic: {ok}" + (f" via {bij}" if bij else "")])
        return 0
    if args.action == "has-minor":
        target = _load_matroid(args.target, bound)
        found, wit = matroids.has_minor(m, target)
        rep = {
            "has_minor": found,
            "deletions": list(wit[0]) if wit else None,
            "contractions": list(wit[1]) if wit else None,
        }
        lines = [f"has_minor: {found}"]
        if wit:
            lines.append(f"deletions: {list(wit[0])}  contractions: {list(wit[1])}")
        _emit(args, rep, lines)
        return 0
    raise InputError(f"unknown matroid action {args.action!r}")


# ---------------------------------------------------------------------------
# graph commands


def _cmd_graph(args) -> int:
    if args.action == "platonic":
        rows = graphs.platonic_solids()
        rep = {"rows": [r.to_json_dict() for r in rows]}
        lines = ["p q V E F name"] + [
            f"{r.p} {r.q} {r.vertices} {r.edges} {r.faces} {r.name}" for r in rows
        ]
        _emit(args, rep, lines)
        return 0
    if args.action == "invariants":
        g = _load_graph(args.source)
        inv = graphs.graph_invariants(g)
        _emit(
            args,
            inv.to_json_dict(),
            [f"components: {inv.components}", f"rank: {inv.rank}", f"nullity: {inv.nullity}"],
        )
        return 0
    if args.action == "euler":
        emb = _load_embedding(args.source)
        t = graphs.trace_faces(emb)
        rep = t.to_json_dict()
        rep["vertices"] = emb.graph.vertex_count
        rep["edges"] = len(emb.graph.edges)
        lines = [
            f"V: {emb.graph.vertex_count}",
            f"E: {len(emb.graph.edges)}",
            f"F: {t.face_count}",
            f"chi: {t.chi}",
            f"genus: {t.genus}",
        ]
        _emit(args, rep, lines)
        return 0
    if args.action == "dual":
        emb = _load_embedding(args.source)
        d = graphs.dual_embedding(emb)
        _emit(args, graphs.embedding_to_json_dict(d), [graphs.embedding_to_text(d).rstrip()])
        return 0
    if args.action == "planar":
        g = _load_graph(args.source)
        rep = graphs.is_planar(g, bound=args.bound or 20)
        lines = [f"planar: {rep.planar}", f"note: {rep.note}"]
        if rep.obstruction:
            lines.append(
                f"obstruction: {rep.obstruction} at deletions={list(rep.deletions)} "
                f"contractions={list(rep.contractions)}"
            )
        _emit(args, rep.to_json_dict(), lines)
        return 0
    if args.action == "blocks":
        g = _load_graph(args.source)
        bl = graphs.blocks(g)
        rep = {"blocks": [b.to_json_dict() for b in bl]}
        lines = [
            f"block {i}: vertices {list(b.vertices)} edges {list(b.edge_indices)}"
            for i, b in enumerate(bl)
        ]
        _emit(args, rep, lines)
        return 0
    if args.action == "cycle-matroid":
        g = _load_graph(args.source)
        m = graphs.cycle_matroid(g, bound=args.bound or matroids.GROUND_BOUND)
        _emit(args, _matroid_summary(m), [m.to_text().rstrip()])
        return 0
    raise InputError(f"unknown graph action {args.action!r}")


# ---------------------------------------------------------------------------
# complex commands


def _cmd_complex(args) -> int:
    if args.action == "genus-duality":
        emb = _load_embedding(args.source)
        rep = complexes.genus_duality_check(emb)
        d = rep.to_json_dict()
        lines = [f"{k}: {v}" for k, v in d.items()]
        _emit(args, d, lines)
        return 0 if rep.all_ok else 1
    k = _load_complex(args.source)
    if args.action in ("chi", "named"):
        rep = {
            "alpha": list(k.alpha),
            "dimension": k.dimension,
            "chi": complexes.euler_char_complex(k),
        }
        _emit(
            args,
            rep,
            [f"alpha: {list(k.alpha)}", f"chi: {rep['chi']}"],
        )
        return 0
    if args.action == "betti":
        b = complexes.betti_numbers(k)
        chi = complexes.euler_char_complex(k)
        alt = sum((-1) ** i * x for i, x in enumerate(b))
        rep = {"betti": list(b), "chi": chi, "betti_alternating_sum": alt, "match": alt == chi}
        _emit(args, rep, [f"betti: {list(b)}", f"chi: {chi}", f"match: {alt == chi}"])
        return 0 if alt == chi else 1
    if args.action == "index-sum":
        rep = complexes.index_sum_canonical(k)
        d = rep.to_json_dict()
        _emit(args, d, [f"{key}: {val}" for key, val in d.items()])
        return 0
    raise InputError(f"unknown complex action {args.action!r}")


# ---------------------------------------------------------------------------
# algebra commands


def _cmd_algebra(args) -> int:
    if args.action == "table":
        alg = algebras.algebra_by_name(args.algebra)
        rep = {
            "algebra": alg.name,
            "dim": alg.dim,
            "table": [
                [f"{'+' if s > 0 else '-'}e{k}" for s, k in row] for row in alg.table
            ],
        }
        lines = []
        for i, row in enumerate(alg.table):
            cells = " ".join(f"{'+' if s > 0 else '-'}e{k}" for s, k in row)
            lines.append(f"e{i}: {cells}")
        _emit(args, rep, lines)
        return 0
    if args.action == "report":
        alg = algebras.algebra_by_name(args.algebra)
        rep = algebras.division_algebra_report(alg, sample_count=args.trials, seed=args.seed)
        d = rep.to_json_dict()
        lines = [
            f"algebra: {alg.name} (dim {alg.dim})",
            f"norm_multiplicative: {rep.norm_multiplicative}",
            f"alternative: {rep.alternative}",
            f"zero_divisor: {_fmt_pair(rep.zero_divisor)}",
            f"samples: {rep.samples} (seed {rep.seed})",
        ]
        _emit(args, d, lines)
        return 0
    if args.action == "zero-divisors":
        alg = algebras.algebra_by_name(args.algebra)
        rep = algebras.division_algebra_report(alg, sample_count=0, seed=args.seed)
        d = {"algebra": alg.name, "zero_divisor": d_pair(rep.zero_divisor)}
        lines = [f"zero_divisor: {_fmt_pair(rep.zero_divisor)}"]
        _emit(args, d, lines)
        return 0
    if args.action == "cross":
        case = algebras.cross_case(args.case)
        vectors = [_parse_vector(v) for v in args.vectors]
        out = algebras.cross_product(case, vectors)
        rep = {"case": case.tag, "n": case.n, "r": case.r, "result": [str(c) for c in out]}
        _emit(args, rep, ["result: " + " ".join(str(c) for c in out)])
        return 0
    if args.action == "cross-check":
        case = algebras.cross_case(args.case)
        rep = algebras.cross_axioms_report(case, trials=args.trials, seed=args.seed)
        d = rep.to_json_dict()
        _emit(args, d, [f"{k}: {v}" for k, v in d.items()])
        return 0 if rep.all_ok else 1
    if args.action == "hodge":
        comps = {}
        for item in args.components:
            key, _, val = item.partition("=")
            idx = tuple(int(t) for t in key.replace(",", " ").split())
            comps[idx] = Fraction(val) if val else Fraction(1)
        out = algebras.hodge_dual(comps, args.n)
        rep = {
            "n": args.n,
            "result": {" ".join(str(i) for i in k): str(v) for k, v in sorted(out.items())},
        }
        lines = [
            f"{' '.join(str(i) for i in k)}: {v}" for k, v in sorted(out.items())
        ]
        _emit(args, rep, lines)
        return 0
    if args.action == "chirotope":
        points = [_parse_vector(p) for p in args.points]
        ch = algebras.chirotope_of_configuration(points)
        m = ch.support_matroid()
        rep = ch.to_json_dict()
        rep["support_matroid"] = _matroid_summary(m)
        lines = [f"n: {ch.n}", f"rank: {ch.r}"]
        lines += [f"{k}: {v}" for k, v in rep["signs"].items()]
        lines.append(f"support matroid: {m!r} (validated)")
        _emit(args, rep, lines)
        return 0
    raise InputError(f"unknown algebra action {args.action!r}")


def _fmt_pair(pair):
    if pair is None:
        return "none found (exhaustive over e_i +- e_j pairs)"
    x, y = pair
    return f"({_fmt_elem(x)}) * ({_fmt_elem(y)}) = 0"


def _fmt_elem(x) -> str:
    terms = []
    for i, c in enumerate(x):
        if c:
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            terms.append(f"{coeff}e{i}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def d_pair(pair):
    if pair is None:
        return None
    return [[str(c) for c in pair[0]], [str(c) for c in pair[1]]]


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--seed", type=int, default=0, help="seed for random trials")
    p.add_argument("--trials", type=int, default=200, help="random trial count")
    p.add_argument("--bound", type=int, default=None, help="search/size bound")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualities",
        description="Exact duality computations: matroids, embedded graphs, "
        "simplicial complexes, hypercomplex algebras.",
    )
    sub = parser.add_subparsers(dest="domain", required=True)

    matroid_src = "named id (fano, uniform:2,4, mk5), file path, or - for stdin"
    pm = sub.add_parser("matroid", help="matroid operations")
    pm_sub = pm.add_subparsers(dest="action", required=True)
    for action in ("validate", "dual", "classify", "check-duality"):
        p = pm_sub.add_parser(action)
        p.add_argument("source", help=matroid_src)
        _common(p)
    p = pm_sub.add_parser("minor")
    p.add_argument("source", help=matroid_src)
    p.add_argument("--delete", default="", help="elements to delete (comma list)")
    p.add_argument("--contract", default="", help="elements to contract (comma list)")
    _common(p)
    for action in ("isomorphic", "has-minor"):
        p = pm_sub.add_parser(action)
        p.add_argument("source", help=matroid_src)
        p.add_argument("target", help="second matroid source")
        _common(p)

    pg = sub.add_parser("graph", help="graph and embedding operations")
    pg_sub = pg.add_subparsers(dest="action", required=True)
    p = pg_sub.add_parser("platonic")
    _common(p)
    for action, src in (
        ("invariants", "graph"),
        ("euler", "embedding"),
        ("dual", "embedding"),
        ("planar", "graph"),
        ("blocks", "graph"),
        ("cycle-matroid", "graph"),
    ):
        p = pg_sub.add_parser(action)
        p.add_argument("source", help=f"named {src} (k4, cube, torus), file, or -")
        _common(p)

    pc = sub.add_parser("complex", help="simplicial-complex operations")
    pc_sub = pc.add_subparsers(dest="action", required=True)
    for action in ("chi", "betti", "named", "index-sum", "genus-duality"):
        p = pc_sub.add_parser(action)
        src = "embedding" if action == "genus-duality" else "complex (sphere:2, genus:1)"
        p.add_argument("source", help=f"named {src}, file, or -")
        _common(p)

    pa = sub.add_parser("algebra", help="hypercomplex algebra operations")
    pa_sub = pa.add_subparsers(dest="action", required=True)
    for action in ("table", "report", "zero-divisors"):
        p = pa_sub.add_parser(action)
        p.add_argument("--algebra", default="o", help="r|c|h|o|o-fano|sedenion")
        _common(p)
    for action in ("cross", "cross-check"):
        p = pa_sub.add_parser(action)
        p.add_argument("--case", default="three", help="three|seven|epsilon:<n>|j:<n>|triple8")
        if action == "cross":
            p.add_argument("vectors", nargs="+", help="vectors as comma-separated rationals")
        _common(p)
    p = pa_sub.add_parser("hodge")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("components", nargs="+", help="entries like 1,2=3/2 (coefficient defaults to 1)")
    _common(p)
    p = pa_sub.add_parser("chirotope")
    p.add_argument("points", nargs="+", help="points as comma-separated rational coordinates")
    _common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.domain == "matroid":
            return _cmd_matroid(args)
        if args.domain == "graph":
            return _cmd_graph(args)
        if args.domain == "complex":
            return _cmd_complex(args)
        if args.domain == "algebra":
            return _cmd_algebra(args)
        parser.error(f"unknown domain {args.domain!r}")
    except matroids.MatroidError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (graphs.GraphError, complexes.ComplexError, algebras.AlgebraError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (InputError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
