"""Command-line front end; every subcommand prints one JSON document.

Exit status: 0 on success, 1 on a mathematical error or an ``--expect``
mismatch, 2 on a usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, dynsys, ffverify, hilbert, interp, schur
from .algebra.domains import GF, QQ, DomainError, PrimeField


class UsageError(Exception):
    pass


def parse_field(text, seed=0):
    """q | fp:<p> | fq:<p>:<k> (the GF(p^k) modulus is drawn from the seed)."""
    parts = text.lower().split(":")
    try:
        if parts == ["q"]:
            return QQ
        if parts[0] == "fp" and len(parts) == 2:
            return PrimeField(int(parts[1]))
        if parts[0] == "fq" and len(parts) == 3:
            return GF(int(parts[1]), int(parts[2]), seed=seed)
    except (ValueError, DomainError) as exc:
        raise UsageError(f"bad field {text!r}: {exc}") from exc
    raise UsageError(f"bad field {text!r}; use q, fp:<p> or fq:<p>:<k>")


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _coeff_list(text):
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from exc


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _correspondence(args):
    if args.input:
        return dynsys.Correspondence.from_json(_load(args.input))
    if args.num is None:
        raise UsageError("give --input or --num (and optionally --den)")
    K = parse_field(args.field, args.seed)
    num = _coeff_list(args.num)
    den = _coeff_list(args.den) if args.den else [Fraction(1)]
    return dynsys.Correspondence.graph(num, den, K)


def _randomized(K):
    return getattr(K, "degree", 1) > 1


# ----------------------------------------------------------------------
# subcommands

def cmd_nu(args):
    return {"n": args.n, "poly": dynsys.nu_str(args.n), "coefficients": dynsys.nu(args.n)}


def cmd_iterate(args):
    c = _correspondence(args)
    out = {"n": args.n, "correspondence": dynsys.iterate(c, args.n).to_json()}
    if _randomized(c.K):
        out["seed"] = args.seed
    return out


def cmd_perstar(args):
    c = _correspondence(args)
    out = {"n": args.n, "per": dynsys.per_form(c, args.n).to_json(),
           "per_star": dynsys.per_star_form(c, args.n).to_json(),
           "degrees": dynsys.degree_formulas(c.d, c.e, args.n)}
    if _randomized(c.K):
        out["seed"] = args.seed
    return out


def cmd_spectrum(args):
    c = _correspondence(args)
    s = dynsys.multiplier_spectrum(c, args.n)
    out = {"n": args.n, "spectrum": s.to_json()}
    if args.root:
        out["orbit_spectrum"] = dynsys.nth_root_form(s, args.n).to_json()
    if args.multipliers:
        K = c.K
        out["multipliers"] = [m if m == dynsys.INFINITY else K.to_str(m)
                              for m in dynsys.multiplier_multiset(s)]
    if _randomized(c.K):
        out["seed"] = args.seed
    return out


def cmd_covariants(args):
    c = _correspondence(args)
    cv = dynsys.cubic_covariants(c)
    K = c.K
    dr = dynsys.discriminant_resultants(cv, route=args.route)
    out = {"covariants": cv.to_json(),
           "sigma": {str(r): K.to_str(v) for r, v in dr["sigma"].items()},
           "t1_coefficient": K.to_str(dr["t1_coefficient"]),
           "Sigma_plus": K.to_str(dr["Sigma_plus"]),
           "Sigma_minus": K.to_str(dr["Sigma_minus"]), "route": args.route}
    if _randomized(K):
        out["seed"] = args.seed
    return out


def cmd_schur(args):
    shape = _int_list(args.shape)
    values = _int_list(args.values)
    out = {"shape": list(schur.partition(shape)), "values": values,
           "kostka": str(schur.schur_eval_kostka(shape, values)),
           "jacobi_trudi": str(schur.schur_eval_jacobi_trudi(shape, values))}
    if len(set(values)) == len(values):
        out["bialternant"] = str(schur.schur_eval_bialternant(shape, values))
    return out


def cmd_hilbert(args):
    if args.input:
        H = hilbert.HilbertSeries.from_json(_load(args.input))
    elif args.numerator and args.exponents:
        H = hilbert.HilbertSeries(_int_list(args.numerator), _int_list(args.exponents))
    else:
        raise UsageError("give --input or both --numerator and --exponents")
    out = {"series": H.to_json(), "text": H.to_str(), "volume": H.volume_report().to_json(),
           "coefficients": hilbert.series_coefficients(H, args.terms)}
    if args.veronese:
        V = hilbert.veronese_section(H, args.veronese)
        out["veronese"] = {"n": args.veronese, "series": V.to_json(), "text": V.to_str(),
                           "volume": V.volume_report().to_json()}
    return out


def cmd_bound(args):
    if args.corollary is not None:
        return bounds.corollary_bound_morphism(args.corollary).to_json()
    if args.d is None or args.e is None:
        raise UsageError("give --d and --e (or --corollary)")
    rep = bounds.main_bound(args.d, args.e, args.p).to_json()
    rep["fiber_dimension"] = {k: str(v) if isinstance(v, Fraction) else v
                              for k, v in bounds.fiber_dim_lower(args.d, args.e).items()}
    return rep


def cmd_verify_cubic(args):
    fam = ffverify.build_family(args.p, args.l0, args.l1, args.l8)
    modulus = _int_list(args.modulus) if args.modulus else None
    cert = ffverify.injectivity_report(fam, args.lam, args.seed, args.k_cap, modulus)
    return cert.to_json()


def cmd_interp_demo(args):
    out = interp.demo(args.seed)
    if args.k > 2:
        prob = interp.power_sum_problem(args.k)
        sol = interp.run_interpolation(prob, args.seed)
        expected = interp.newton_expected(args.k)
        out = {"problem": f"p{args.k} from e1..e{args.k} in {args.k} variables",
               "support": [list(d) for d in prob.support],
               "complexity": interp.complexity_report(prob),
               "solution": sol.to_json(),
               "matches_newton": sol.nonzero() == expected}
    out["seed"] = args.seed
    return out


# ----------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--field", default="q", help="q | fp:<p> | fq:<p>:<k>")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", help="JSON input document")
    p.add_argument("--expect", help="JSON fixture; keys present must match")
    p.add_argument("--pretty", action="store_true")


def _add_map(p):
    p.add_argument("--num", help="numerator coefficients, low degree first")
    p.add_argument("--den", help="denominator coefficients (default 1)")


def build_parser():
    parser = argparse.ArgumentParser(prog="mulspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nu", help="Moebius-inverted point count polynomial")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_nu)

    for name, func, helptext in (("iterate", cmd_iterate, "n-th iterate of a correspondence"),
                                 ("perstar", cmd_perstar, "formal period-n divisor")):
        p = sub.add_parser(name, help=helptext)
        _add_map(p)
        p.add_argument("--n", type=int, default=2)
        p.set_defaults(func=func)

    p = sub.add_parser("spectrum", help="period-n multiplier spectrum form")
    _add_map(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--root", action="store_true", help="also take the n-th root")
    p.add_argument("--multipliers", action="store_true", help="also list the multipliers")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("covariants", help="cubic covariants and discriminant-resultants")
    _add_map(p)
    p.add_argument("--route", choices=["expand", "interpolate"], default="expand")
    p.set_defaults(func=cmd_covariants)

    p = sub.add_parser("schur", help="Schur polynomial evaluation")
    p.add_argument("--shape", required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("hilbert", help="volume, saturator and Veronese sections")
    p.add_argument("--numerator")
    p.add_argument("--exponents")
    p.add_argument("--veronese", type=int)
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("bound", help="degree bound for the multiplier map")
    p.add_argument("--d", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--corollary", type=int, help="closed form for morphisms of degree d")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify-cubic", help="finite-field fiber certificate")
    p.add_argument("--p", type=int, default=101)
    p.add_argument("--l0", type=int, default=3)
    p.add_argument("--l1", type=int, default=2)
    p.add_argument("--l8", type=int, default=4)
    p.add_argument("--lambda", dest="lam", type=int, default=-5)
    p.add_argument("--k-cap", type=int, default=8)
    p.add_argument("--modulus", help="defining polynomial of the working field, low first")
    p.set_defaults(func=cmd_verify_cubic)

    p = sub.add_parser("interp-demo", help="recover a power sum from elementary ones")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_interp_demo)

    for p in sub.choices.values():
        _add_common(p)
    return parser


def _matches(expected, actual):
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(
            k in actual and _matches(v, actual[k]) for k, v in expected.items())
    return expected == actual


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
        expected = _load(args.expect) if args.expect else None
    except UsageError as exc:
        print(f"mulspec: error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, ValueError) as exc:
        print(json.dumps({"error": str(exc), "type": type(exc).__name__}), file=sys.stderr)
        return 1
    text = json.dumps(out, sort_keys=True, indent=2 if args.pretty else None, default=str)
    print(text)
    if expected is not None:
        # round-trip through JSON so tuples and ints compare as printed
        if not _matches(expected, json.loads(text)):
            print("mulspec: output does not match --expect fixture", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
