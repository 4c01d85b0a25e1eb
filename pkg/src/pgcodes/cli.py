"""Command-line front end.

Subcommands: construct, classify, decompose, spectrum, verify.  All
randomness flows from --seed; identical invocations produce byte-identical
output files (volatile fields such as runtimes never enter files).  Exit
codes: 0 success/verified, 1 usage or parameter errors, 2 falsified or
failed claims.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bounds as bounds_mod
from .bounds import bounds
from .classify import classify_plane, classify_space
from .code import (
    Codeword,
    is_codeword,
    linear_combination,
    pgcode_dump_path,
    pgcode_load_path,
    secant_spectrum,
)
from .construct import (
    OddParams,
    _random_plane_base,
    bagchi_codeword,
    cone_codeword,
    generalized_odd,
    random_small_weight,
)
from .decompose import decompose
from .errors import DecompositionFailed, PGCodesError
from .field import factor_prime_power
from .geometry import (
    Collineation,
    Subspace,
    complement_plane,
    flat_from_text,
    hyperplane_by_index,
    meet,
    point_table,
    random_collineation,
    random_flat,
    span,
)
from .verify import (
    check_blocking_lemma,
    lemma_suite,
    verify_appendix,
    verify_weight_theorems,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FALSIFIED = 2

BASE_TAGS = {"t0": "T0", "tq1": "Tq1", "t2q": "T2q", "t2q1": "T2q1",
             "tstar": "Tstar", "ttriangle": "Ttriangle", "todd": "Todd"}


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(obj, path: str | None) -> None:
    text = canonical_json(obj)
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _prime_power(value: str) -> int:
    q = int(value)
    factor_prime_power(q)
    return q


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    rng = np.random.default_rng(args.seed)
    recipe: dict = {"family": args.family, "seed": args.seed}
    if args.family == "bagchi":
        c = bagchi_codeword(args.p)
        recipe["p"] = args.p
    elif args.family == "generalized-odd":
        p = args.p
        tab = point_table(2, p)
        gamma = args.gamma if args.gamma is not None else int(rng.integers(1, p))
        lambdas = (
            tuple(int(x) for x in args.lambdas.split(","))
            if args.lambdas
            else tuple(int(x) for x in rng.integers(0, p, 3))
        )
        g = random_collineation(tab, rng)
        params = OddParams(p, gamma, lambdas, g)
        c = generalized_odd(params)
        recipe.update(
            {"p": p, "gamma": gamma, "lambdas": list(lambdas), "matrix": g.matrix.tolist()}
        )
    elif args.family == "hyperplane":
        tab = point_table(args.n, args.q)
        idx = int(rng.integers(tab.num_points))
        coeff = int(rng.integers(1, tab.p))
        h = hyperplane_by_index(tab, idx)
        c = linear_combination(tab, [(coeff, h)])
        recipe.update({"n": args.n, "q": args.q, "terms": [{"coeff": coeff, "dual_coords": h.dual.tolist()}]})
    elif args.family == "two-hyperplanes":
        tab = point_table(args.n, args.q)
        i, j = (int(x) for x in rng.choice(tab.num_points, size=2, replace=False))
        a = int(rng.integers(1, tab.p))
        b = (-a) % tab.p if args.difference else int(rng.integers(1, tab.p))
        h1, h2 = hyperplane_by_index(tab, i), hyperplane_by_index(tab, j)
        c = linear_combination(tab, [(a, h1), (b, h2)])
        recipe.update(
            {
                "n": args.n,
                "q": args.q,
                "terms": [
                    {"coeff": a, "dual_coords": h1.dual.tolist()},
                    {"coeff": b, "dual_coords": h2.dual.tolist()},
                ],
            }
        )
    elif args.family == "cone":
        tab = point_table(args.n, args.q)
        tag = BASE_TAGS[args.base]
        vertex = random_flat(tab, args.n - 3, rng)
        while True:
            rows = rng.integers(0, args.q, size=(3, args.n + 1), dtype=np.int16)
            pi = Subspace(tab, rows)
            if pi.dim == 2 and meet(vertex, pi).is_empty and span(vertex, pi).dim == args.n:
                break
        base = _random_plane_base(tag, args.q, rng)
        c = cone_codeword(vertex, pi, base)
        recipe.update(
            {
                "n": args.n,
                "q": args.q,
                "base": tag,
                "vertex": vertex.basis.tolist(),
                "plane": pi.basis.tolist(),
                "base_values": [int(v) for v in base.values],
            }
        )
    elif args.family == "random-small":
        c, ground = random_small_weight(args.n, args.q, args.seed)
        recipe.update({"n": args.n, "q": args.q, "ground_truth": ground.as_dict(), "base": ground.family})
    else:
        raise PGCodesError(f"unknown family {args.family}")
    recipe["weight"] = c.weight()
    pgcode_dump_path(c, args.output, sparse=args.sparse)
    sidecar = args.recipe or (str(args.output) + ".json")
    Path(sidecar).write_text(canonical_json(recipe))
    print(f"wrote {args.output} (weight {recipe['weight']}) and {sidecar}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# classify / decompose


def cmd_classify(args) -> int:
    from .code import restrict

    c = pgcode_load_path(args.input)
    target = c
    if args.flat:
        tab = c.table
        flat = flat_from_text(Path(args.flat).read_text(), tab)
        st = classify_space(c, flat)
        target = restrict(c, flat) if flat.dim < c.n else c
    else:
        st = classify_space(c) if c.n > 2 else classify_plane(c)
    bt = bounds(max(c.n, 2), c.q)
    sp = secant_spectrum(target)
    report = st.as_dict()
    report["bounds"] = bt.as_dict()
    report["spectrum"] = {str(a): int(sp.counts[a]) for a in range(c.q + 2) if sp.counts[a]}
    _emit(report, args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    c = pgcode_load_path(args.input)
    try:
        d = decompose(c)
    except DecompositionFailed as exc:
        trace = {
            "status": "failed",
            "message": str(exc),
            "diagnostics": exc.diagnostics,
            "classification": (classify_space(c) if c.n > 2 else classify_plane(c)).as_dict(),
        }
        _emit(trace, args.output)
        print("decomposition failed: candidate counterexample dumped", file=sys.stderr)
        return EXIT_FALSIFIED
    _emit(d.as_dict(), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# spectrum / verify


def cmd_spectrum(args) -> int:
    reports = verify_weight_theorems(args.n, args.q, budget=args.budget, threads=args.threads)
    payload = {
        "n": args.n,
        "q": args.q,
        "claims": [r.as_dict() for r in reports],
    }
    hist_rep = reports[0]
    payload["min_weight"] = hist_rep.evidence["min_weight"]
    payload["histogram"] = hist_rep.evidence.get("histogram", {})
    _emit(payload, args.output)
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FALSIFIED


def cmd_verify(args) -> int:
    if args.claim == "appendix":
        reports = [verify_appendix(args.q, args.n)]
    elif args.claim == "weights":
        reports = verify_weight_theorems(args.n, args.q, budget=args.budget, threads=args.threads)
    elif args.claim == "lemmas":
        if not args.input:
            raise PGCodesError("the lemmas claim needs --input <file.pgcode>")
        c = pgcode_load_path(args.input)
        reports = lemma_suite(c)
    elif args.claim == "blocking":
        tab = point_table(args.n, args.q)
        rng = np.random.default_rng(args.seed)
        if args.family == "two-hyperplanes":
            i, j = (int(x) for x in rng.choice(tab.num_points, size=2, replace=False))
            pts = np.union1d(
                hyperplane_by_index(tab, i).point_indices(),
                hyperplane_by_index(tab, j).point_indices(),
            )
        elif args.family == "hyperplane":
            pts = hyperplane_by_index(tab, int(rng.integers(tab.num_points))).point_indices()
        else:  # complement
            flat = random_flat(tab, args.n - 2, rng)
            pts = np.setdiff1d(np.arange(tab.num_points), flat.point_indices())
        rep = check_blocking_lemma(pts, args.n, args.q)
        payload = {
            "claim_id": "blocking-dichotomy",
            "parameters": {"n": args.n, "q": args.q, "family": args.family, "seed": args.seed},
            "status": "falsified" if rep.status == "falsified" else "verified",
            "evidence": {"outcome": rep.status, "size": rep.size, "bound": rep.bound},
        }
        _emit(payload, args.output)
        return EXIT_OK if payload["status"] == "verified" else EXIT_FALSIFIED
    else:
        raise PGCodesError(f"unknown claim {args.claim}")
    payload = [r.as_dict() for r in reports]
    _emit(payload if len(payload) > 1 else payload[0], args.output)
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FALSIFIED


# ---------------------------------------------------------------------------


def build_parser() -> Parser:
    parser = Parser(prog="pgcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="generate a named codeword family")
    pc.add_argument(
        "family",
        choices=["hyperplane", "two-hyperplanes", "bagchi", "generalized-odd", "cone", "random-small"],
    )
    pc.add_argument("--n", type=int, default=3)
    pc.add_argument("--q", type=_prime_power, default=7)
    pc.add_argument("--p", type=int, default=5, help="characteristic for bagchi / generalized-odd")
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--base", choices=sorted(BASE_TAGS), default="t2q", help="cone base family")
    pc.add_argument("--gamma", type=int, default=None)
    pc.add_argument("--lambdas", type=str, default=None, help="comma-separated triple")
    pc.add_argument("--difference", action="store_true", help="force coefficient sum zero")
    pc.add_argument("--sparse", action="store_true", help="write PGCODE-SPARSE")
    pc.add_argument("-o", "--output", required=True)
    pc.add_argument("--recipe", help="sidecar JSON path (default <output>.json)")
    pc.set_defaults(func=cmd_construct)

    pl = sub.add_parser("classify", help="classify a codeword file")
    pl.add_argument("input")
    pl.add_argument("--flat", help="restrict to the flat in this text file first")
    pl.add_argument("-o", "--output")
    pl.set_defaults(func=cmd_classify)

    pd = sub.add_parser("decompose", help="vertex/plane decomposition of a codeword file")
    pd.add_argument("input")
    pd.add_argument("-o", "--output")
    pd.set_defaults(func=cmd_decompose)

    ps = sub.add_parser("spectrum", help="exhaustive weight spectrum of a tiny code")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--q", type=_prime_power, required=True)
    ps.add_argument("--budget", type=int, default=10_000_000)
    ps.add_argument("--threads", type=int, default=1)
    ps.add_argument("-o", "--output")
    ps.set_defaults(func=cmd_spectrum)

    pv = sub.add_parser("verify", help="machine-check a claim")
    pv.add_argument("claim", choices=["appendix", "weights", "lemmas", "blocking"])
    pv.add_argument("--q", type=_prime_power, default=23)
    pv.add_argument("--n", type=int, default=3)
    pv.add_argument("--budget", type=int, default=10_000_000)
    pv.add_argument("--threads", type=int, default=1)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--family", choices=["two-hyperplanes", "hyperplane", "complement"], default="two-hyperplanes")
    pv.add_argument("--input", help="PGCODE file for the lemmas claim")
    pv.add_argument("-o", "--output")
    pv.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PGCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
