"""Command-line front end.  Every command prints one JSON report.

Exit status: 0 when all checks hold, 1 when a check fails, 2 on bad input.
"""
import argparse
import json
import sys

from . import __version__
from .bilform import dim_f, gram, quotient
from .canbasis import (a2_basis, all_a2_degrees, cb_verify, coproduct_positivity,
                       near_orthonormality, product_positivity)
from .cartan import InvalidOmega, validate, violations
from .deform import PreconditionError, cocycle_twist, forms_agree_check, specialize_t1
from .freealg import FreeElem, bar_coproduct_check, coassoc_check, words_of_degree
from .hwmod import HWData, module_table
from .ring import ParseError, parse_coeff
from .serre import radical_equals_serre_ideal, serre_derivation_check, serre_elem, serre_in_radical


class InputError(Exception):
    pass


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def _raw_omega(path):
    data = _load_json(path)
    om = data.get("omega") if isinstance(data, dict) else data
    if not isinstance(om, list) or not all(isinstance(r, list) for r in om):
        raise InputError(f"{path}: expected {{\"omega\": [[...], ...]}}")
    return om


def _cartan(args):
    try:
        return validate(_raw_omega(args.omega))
    except InvalidOmega as e:
        raise InputError(str(e)) from None


def _elements(args, c):
    if not args.elements:
        raise InputError("--elements is required")
    data = _load_json(args.elements)
    items = data.get("elements") if isinstance(data, dict) else data
    if not isinstance(items, list):
        raise InputError(f"{args.elements}: expected a list of elements")
    try:
        return [FreeElem.from_json(c, item) for item in items]
    except (KeyError, TypeError, ValueError, ParseError, ZeroDivisionError) as e:
        raise InputError(f"bad element: {e}") from None


def _check_deg(c, deg):
    if deg is None:
        raise InputError("--deg is required")
    if len(deg) != c.n or any(x < 0 for x in deg):
        raise InputError(f"--deg needs {c.n} nonnegative entries")
    return deg


def _words_up_to(c, max_tr):
    out = []
    for s in range(max_tr + 1):
        for nu in _compositions(s, c.n):
            out.extend(words_of_degree(nu))
    return out


def _compositions(s, n):
    if n == 1:
        yield (s,)
        return
    for a in range(s + 1):
        for rest in _compositions(s - a, n - 1):
            yield (a,) + rest


# -- commands ---------------------------------------------------------------------

def cmd_validate_omega(args):
    om = _raw_omega(args.omega)
    try:
        bad = violations([[int(x) for x in row] for row in om])
    except (TypeError, ValueError):
        bad = ["matrix entries must be integers"]
    res = {"valid": not bad, "violations": bad}
    if not bad:
        c = validate(om)
        n = c.n
        res["angle"] = [[c.angle(i, j) for j in range(n)] for i in range(n)]
        res["bracket"] = [[c.bracket(i, j) for j in range(n)] for i in range(n)]
        res["dot"] = [[c.dot(i, j) for j in range(n)] for i in range(n)]
    return res, not bad


def cmd_dim(args):
    c = _cartan(args)
    nu = _check_deg(c, args.deg)
    return {"degree": list(nu), "dim_free": len(words_of_degree(nu)), "dim_f": dim_f(c, nu)}, True


def cmd_gram(args):
    c = _cartan(args)
    nu = _check_deg(c, args.deg)
    g = gram(c, nu)
    res = g.to_json()
    res["rank"] = quotient(c, nu).rank
    return res, True


def cmd_serre_check(args):
    c = _cartan(args)
    rows = []
    ok = True
    for i in range(c.n):
        for j in range(c.n):
            if i == j:
                continue
            s = serre_elem(c, i, j)
            entry = {"i": i, "j": j, "N": s.N,
                     "deriv_r_zero": serre_derivation_check(s, left=False),
                     "deriv_l_zero": serre_derivation_check(s, left=True),
                     "in_radical": serre_in_radical(s)}
            if args.max_tr is not None and c.n == 2:
                entry["radical_equals_ideal"] = all(
                    radical_equals_serre_ideal(c, nu, args.max_tr)
                    for s_ in range(args.max_tr + 1) for nu in _compositions(s_, 2))
            ok &= all(v for k, v in entry.items() if isinstance(v, bool))
            rows.append(entry)
    return {"serre": rows, "all_true": ok}, ok


def cmd_coassoc_check(args):
    c = _cartan(args)
    bad = [list(w) for w in _words_up_to(c, args.max_tr)
           if not coassoc_check(FreeElem.word(c, w))]
    return {"max_tr": args.max_tr, "failures": bad, "all_true": not bad}, not bad


def cmd_bar_check(args):
    c = _cartan(args)
    bad = [list(w) for w in _words_up_to(c, args.max_tr)
           if not bar_coproduct_check(FreeElem.word(c, w))]
    return {"max_tr": args.max_tr, "failures": bad, "all_true": not bad}, not bad


def _a2_cartan(args):
    c = _cartan(args)
    try:
        a2_basis(c, (0, 0))
    except ValueError as e:
        raise InputError(str(e)) from None
    return c


def cmd_canbasis_a2(args):
    c = _a2_cartan(args)
    out = []
    ok = True
    for nu in all_a2_degrees(args.max_tr):
        basis = a2_basis(c, nu)
        items = []
        for b in basis:
            rep = cb_verify(b.element, args.series_order)
            ok &= rep.all_ok()
            items.append({"label": list(b.label[1:]), "name": b.name(),
                          "element": b.element.to_json(), "verify": rep.to_json()})
        near = near_orthonormality(basis, args.series_order)
        rank = dim_f(c, nu)
        ok &= near and rank == len(basis)
        out.append({"degree": list(nu), "rank": rank, "count": len(basis),
                    "near_orthonormal": near, "elements": items})
    return {"degrees": out, "all_true": ok}, ok


def cmd_cb_verify(args):
    c = _cartan(args)
    out = []
    ok = True
    for x in _elements(args, c):
        if not x.is_homogeneous():
            raise InputError("cb-verify needs homogeneous elements")
        rep = cb_verify(x, args.series_order)
        ok &= rep.all_ok()
        out.append({"element": x.to_json(), "verify": rep.to_json()})
    return {"elements": out, "all_true": ok}, ok


def _const_json(consts):
    return [{"label": [list(k[1:]) for k in key] if isinstance(key[0], tuple) else list(key[1:]),
             "coeff": str(v)} for key, v in sorted(consts.items(), key=lambda kv: str(kv[0]))]


def cmd_positivity(args):
    c = _a2_cartan(args)
    degs = all_a2_degrees(args.max_tr)
    prods = []
    ok = True
    for n1 in degs:
        for n2 in degs:
            if sum(n1) + sum(n2) > args.max_tr:
                continue
            for b1 in a2_basis(c, n1):
                for b2 in a2_basis(c, n2):
                    good, consts = product_positivity(b1, b2)
                    ok &= good
                    prods.append({"left": b1.name(), "right": b2.name(), "positive": good,
                                  "constants": _const_json(consts)})
    coprods = []
    for nu in degs:
        for b in a2_basis(c, nu):
            good, consts = coproduct_positivity(b)
            ok &= good
            coprods.append({"element": b.name(), "positive": good,
                            "constants": _const_json(consts)})
    return {"products": prods, "coproducts": coprods, "all_true": ok}, ok


def cmd_specialize(args):
    c = _cartan(args)
    out = []
    for x in _elements(args, c):
        try:
            out.append(specialize_t1(x).to_json())
        except ZeroDivisionError as e:
            raise InputError(str(e)) from None
    return {"elements": out}, True


def cmd_twist(args):
    c = _cartan(args)
    return {"direction": args.direction,
            "elements": [cocycle_twist(x, args.direction).to_json() for x in _elements(args, c)]}, True


def cmd_forms_agree(args):
    c = _cartan(args)
    xs = _elements(args, c)
    out = []
    ok = True
    for a in range(len(xs)):
        for b in range(a, len(xs)):
            try:
                agree = forms_agree_check(xs[a], xs[b])
            except PreconditionError as e:
                raise InputError(f"pair ({a}, {b}): {e}") from None
            ok &= agree
            out.append({"pair": [a, b], "agree": agree})
    return {"pairs": out, "all_true": ok}, ok


def cmd_module(args):
    c = _cartan(args)
    if args.lam is None:
        raise InputError("--lambda is required")
    eps = None
    if args.eps:
        try:
            eps = tuple(parse_coeff(e) for e in args.eps.split(","))
        except (ParseError, ZeroDivisionError) as e:
            raise InputError(f"bad --eps: {e}") from None
    try:
        h = HWData(c, args.lam, eps, args.depth)
    except ValueError as e:
        raise InputError(str(e)) from None
    res = module_table(h)
    res["lambda"] = list(h.lam)
    res["eps"] = [str(e) for e in h.eps]
    return res, True


COMMANDS = {
    "validate-omega": (cmd_validate_omega, "check the validity conditions on Omega"),
    "dim": (cmd_dim, "dimension of the free algebra and of f at a degree"),
    "gram": (cmd_gram, "Gram matrix of the bilinear form at a degree"),
    "serre-check": (cmd_serre_check, "Serre elements are killed by all derivations"),
    "coassoc-check": (cmd_coassoc_check, "coassociativity of the twisted coproduct on words"),
    "bar-check": (cmd_bar_check, "bar involution against the coproduct on words"),
    "canbasis-a2": (cmd_canbasis_a2, "list and verify the A2 canonical basis"),
    "cb-verify": (cmd_cb_verify, "verify user-supplied canonical basis candidates"),
    "positivity": (cmd_positivity, "structure and coproduct constants of the A2 basis"),
    "specialize": (cmd_specialize, "substitute t = 1"),
    "twist": (cmd_twist, "apply the t-cocycle twist"),
    "forms-agree": (cmd_forms_agree, "compare the form with the twisted one-parameter form"),
    "module": (cmd_module, "weight spaces and actions of a highest-weight module"),
}


def build_parser():
    p = argparse.ArgumentParser(prog="twoparam", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--omega", required=True, metavar="PATH")
        if name in ("dim", "gram"):
            sp.add_argument("--deg", type=_int_list, required=True, metavar="LIST")
        if name in ("coassoc-check", "bar-check"):
            sp.add_argument("--max-tr", type=int, default=4, metavar="N")
        if name == "serre-check":
            sp.add_argument("--max-tr", type=int, default=None, metavar="N",
                            help="also compare the radical with the Serre ideal up to this total degree")
        if name in ("canbasis-a2", "positivity"):
            sp.add_argument("--max-tr", type=int, default=6, metavar="N")
        if name in ("canbasis-a2", "cb-verify"):
            sp.add_argument("--series-order", type=int, default=20, metavar="K")
        if name in ("cb-verify", "specialize", "twist", "forms-agree"):
            sp.add_argument("--elements", required=True, metavar="PATH")
        if name == "twist":
            sp.add_argument("--direction", choices=["to_f", "from_f"], default="to_f")
        if name == "module":
            sp.add_argument("--lambda", dest="lam", type=_int_list, required=True, metavar="LIST")
            sp.add_argument("--eps", default=None, metavar="LIST")
            sp.add_argument("--depth", type=int, default=8, metavar="N")
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        result, ok = func(args)
        omega = _raw_omega(args.omega)
        try:
            omega = [[int(x) for x in row] for row in omega]
        except (TypeError, ValueError):
            pass
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = {"command": args.command, "omega": omega, "result": result, "version": __version__}
    out.write(json.dumps(report, indent=2) + "\n")
    return 0 if ok else 1


def main(argv=None):
    try:
        return run(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
