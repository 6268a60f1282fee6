"""Command-line front end.

Payload goes to stdout, diagnostics to stderr.  Exit codes: 0 success /
all checks pass, 1 a verification or audit failed, 2 invalid input
(bad flags, non-prime p, parse or type errors, non-unit e).
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import motcoh, rostchow, steenrod
from .corresp import Corr
from .endalg import EndTuple
from .exprlang import evaluate, parse, to_source, value_type
from .splitring import ChowClass, make_params
from .verify import run_suite

FORMATS = ("text", "json", "csv")


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(str(err))


def build_parser():
    top = argparse.ArgumentParser(
        prog="rostcalc",
        description="Exact split-model calculus for norm-variety motives.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, with_e=True):
        sp.add_argument("-p", type=int, required=True, help="prime")
        sp.add_argument("-n", type=int, required=True, help="symbol length")
        if with_e:
            sp.add_argument("-e", type=_fraction, default=Fraction(1),
                            help="degree of the top power (p-unit)")

    def fmt(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")

    sp = sub.add_parser("params", help="derived numerical parameters")
    common(sp)
    fmt(sp)

    sp = sub.add_parser("chow", help="Chow-group table of the motive")
    common(sp, with_e=False)
    sp.add_argument("--method", choices=("closed", "recurrence", "both"),
                    default="closed")
    sp.add_argument("--trace", action="store_true",
                    help="include the derivation note for each degree")
    fmt(sp)

    sp = sub.add_parser("motcoh", help="motivic-cohomology monomial bases")
    common(sp, with_e=False)
    sp.add_argument("--row", choices=("even", "odd"),
                    help="row family H^{2j,j} or H^{2j+1,j}")
    sp.add_argument("--j", type=int, help="weight of the row")
    sp.add_argument("--bidegree", type=int, nargs=2, metavar=("I", "J"),
                    help="a single bidegree (i, j)")
    fmt(sp)

    sp = sub.add_parser("verify", help="run a named identity suite")
    common(sp)
    sp.add_argument("--suite", required=True,
                    choices=("correspondences", "symmpow", "endalg",
                             "motcoh", "steenrod", "all"))

    sp = sub.add_parser("eval", help="evaluate an expression")
    common(sp)
    sp.add_argument("expr", help="expression, e.g. 'sigma @ sigma^2'")
    fmt(sp)

    sp = sub.add_parser("audit", help="p-divisibility audit")
    common(sp, with_e=False)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--rationality", action="store_true",
                      help="audit deg(b_i x b_j * S^s(sigma^(p-1)) * ...)")
    mode.add_argument("--generators", action="store_true",
                      help="audit the order of deg(bY_i * S(sigma^r))")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("-s", type=int, help="total Steenrod degree (rationality)")
    sp.add_argument("-r", type=int, help="sigma power (generators)")
    fmt(sp)
    return top


# --- serialization helpers ---------------------------------------------------


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(doc):
    return json.dumps(doc, indent=2) + "\n"


def _param_doc(params):
    return {"p": params.p, "n": params.n, "b": params.b, "c": params.c,
            "d": params.d, "e": str(params.e)}


def _emit(text):
    sys.stdout.write(text)


# --- subcommands -------------------------------------------------------------


def cmd_params(ns, params):
    doc = _param_doc(params)
    if ns.format == "json":
        _emit(_json_text(doc))
    elif ns.format == "csv":
        _emit(_csv_text(list(doc), [[doc[k] for k in doc]]))
    else:
        _emit("".join(f"{k} = {v}\n" for k, v in doc.items()))
    return 0


def _provenance(desc, params):
    if desc.kind == "p_free":
        return f"j = b*{desc.k}"
    if desc.kind == "cyclic_p":
        return f"j = b*{desc.k} - p^{desc.i} + 1"
    return None


def cmd_chow(ns, params):
    if ns.method == "both":
        agree, diffs = rostchow.compare(params)
        if not agree:
            for j, left, right in diffs:
                print(f"disagreement at j={j}: closed {left} vs "
                      f"recurrence {right}", file=sys.stderr)
            return 1
        table = rostchow.closed_form(params)
        trace = {j: f"closed: {table.trace[j]}; recurrence: {t}"
                 for j, t in rostchow.recurrence(params).trace.items()}
    elif ns.method == "recurrence":
        table = rostchow.recurrence(params)
        trace = table.trace
    else:
        table = rostchow.closed_form(params)
        trace = table.trace

    groups = []
    for j in range(params.d + 1):
        desc = table.entries[j]
        entry = {"j": j, "kind": desc.kind}
        prov = _provenance(desc, params)
        if prov:
            entry["provenance"] = prov
        groups.append(entry)

    if ns.format == "json":
        doc = _param_doc(params)
        doc["method"] = ns.method
        doc["groups"] = groups
        if ns.trace:
            doc["trace"] = {str(j): trace[j] for j in range(params.d + 1)}
        _emit(_json_text(doc))
    elif ns.format == "csv":
        _emit(_csv_text(["j", "kind"],
                        [[g["j"], g["kind"]] for g in groups]))
    else:
        lines = [f"Chow groups, p={params.p} n={params.n} "
                 f"(method {ns.method})"]
        for g in groups:
            line = f"j={g['j']}: {g['kind']}"
            if "provenance" in g:
                line += f"  [{g['provenance']}]"
            if ns.trace:
                line += f"  -- {trace[g['j']]}"
            lines.append(line)
        _emit("\n".join(lines) + "\n")
    return 0


def _monomial_doc(mono, params):
    if mono == motcoh.CONSTANT_CLASS:
        return {"m": None, "k": None, "eps": None, "text": "1"}
    return {"m": mono.m, "k": mono.k, "eps": list(mono.eps),
            "text": motcoh.render_monomial(mono, params)}


def _monomial_row(doc):
    eps = "" if doc["eps"] is None else "".join(str(b) for b in doc["eps"])
    blank = lambda v: "" if v is None else v
    return [blank(doc["m"]), blank(doc["k"]), eps, doc["text"]]


def cmd_motcoh(ns, params):
    row_mode = ns.row is not None or ns.j is not None
    if row_mode == (ns.bidegree is not None):
        raise ValueError(
            "specify either --row even|odd with --j J, or --bidegree I J")
    doc = _param_doc(params)
    if row_mode:
        if ns.row is None or ns.j is None:
            raise ValueError("--row and --j must be given together")
        group = (motcoh.even_row if ns.row == "even" else motcoh.odd_row)(
            ns.j, params)
        monos = [_monomial_doc(mo, params) for mo in group.monomials]
        doc.update({"row": ns.row, "j": ns.j, "label": group.label,
                    "monomials": monos})
        head = (f"H^(2j{'+1' if ns.row == 'odd' else ''},j) at j={ns.j}: "
                f"{motcoh.render_group(group, params)}")
    else:
        i, j = ns.bidegree
        monos = [_monomial_doc(mo, params)
                 for mo in motcoh.enumerate_monomials(i, j, params)]
        doc.update({"i": i, "j": j, "monomials": monos})
        head = f"H^({i},{j}): {len(monos)} monomial(s)"

    if ns.format == "json":
        _emit(_json_text(doc))
    elif ns.format == "csv":
        _emit(_csv_text(["m", "k", "eps", "text"],
                        [_monomial_row(mo) for mo in doc["monomials"]]))
    else:
        lines = [head]
        lines += [f"  {mo['text']}  (m={mo['m']}, k={mo['k']}, "
                  f"eps={mo['eps']})" for mo in doc["monomials"]]
        _emit("\n".join(lines) + "\n")
    return 0


def cmd_verify(ns, params):
    reports = run_suite(ns.suite, params)
    lines = []
    failed = 0
    total = 0
    for report in reports:
        lines.extend(report.lines())
        failed += len(report.failures())
        total += len(report.checks)
    lines.append(f"{total - failed}/{total} checks passed")
    _emit("\n".join(lines) + "\n")
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


def _eval_value_doc(result):
    if isinstance(result, Corr):
        return [{"i": i, "j": j, "coeff": str(v)}
                for (i, j), v in result.items()]
    if isinstance(result, ChowClass):
        return [{"k": k, "coeff": str(v)} for k, v in result.items()]
    if isinstance(result, EndTuple):
        return [str(x) for x in result.entries]
    if isinstance(result, bool):
        return result
    return str(result)


def _eval_csv(result):
    if isinstance(result, Corr):
        return _csv_text(["i", "j", "coeff"],
                         [[i, j, str(v)] for (i, j), v in result.items()])
    if isinstance(result, ChowClass):
        return _csv_text(["k", "coeff"],
                         [[k, str(v)] for k, v in result.items()])
    if isinstance(result, EndTuple):
        return _csv_text(["index", "entry"],
                         [[i, str(x)] for i, x in enumerate(result.entries)])
    if isinstance(result, bool):
        return _csv_text(["value"], [["true" if result else "false"]])
    return _csv_text(["value"], [[str(result)]])


def cmd_eval(ns, params):
    ast = parse(ns.expr)
    result = evaluate(ast, params)
    if ns.format == "json":
        doc = _param_doc(params)
        doc.update({"expr": to_source(ast), "type": value_type(result),
                    "value": _eval_value_doc(result)})
        _emit(_json_text(doc))
    elif ns.format == "csv":
        _emit(_eval_csv(result))
    else:
        if isinstance(result, bool):
            _emit("true\n" if result else "false\n")
        else:
            _emit(f"{result}\n")
    return 0


def cmd_audit(ns, params):
    if ns.rationality:
        if ns.s is None or ns.r is not None:
            raise ValueError("--rationality takes -m M and -s S")
        report = steenrod.audit_rationality(params, ns.m, ns.s)
        arg_key, arg_val = "s", ns.s
    else:
        if ns.r is None or ns.s is not None:
            raise ValueError("--generators takes -m M and -r R")
        report = steenrod.audit_generators(params, ns.m, ns.r)
        arg_key, arg_val = "r", ns.r

    counts = report.counts()
    leading = report.leading
    if ns.format == "json":
        doc = _param_doc(params)
        doc.update({
            "kind": report.kind,
            "m": ns.m,
            arg_key: arg_val,
            "premises": list(report.premises),
            "support": [{"name": name, "ok": ok, "detail": detail}
                        for name, ok, detail in report.support],
            "cases": len(report.cases),
            "verdicts": counts,
            "leading": leading.describe() if leading else None,
            "conclusion": report.conclusion,
            "passed": report.passed,
        })
        _emit(_json_text(doc))
    elif ns.format == "csv":
        rows = [["kind", report.kind], ["m", ns.m], [arg_key, arg_val],
                ["cases", len(report.cases)],
                ["zero", counts["zero"]], ["at-least", counts["at-least"]],
                ["exact", counts["exact"]],
                ["passed", "true" if report.passed else "false"]]
        _emit(_csv_text(["key", "value"], rows))
    else:
        lines = report.header_lines()
        lines.append(f"cases: {len(report.cases)} (zero={counts['zero']}, "
                     f"at-least={counts['at-least']}, "
                     f"exact={counts['exact']})")
        if leading:
            lines.append(f"leading {leading.describe()}")
        lines.append(report.conclusion)
        _emit("\n".join(lines) + "\n")
    return 0 if report.passed else 1


COMMANDS = {
    "params": cmd_params,
    "chow": cmd_chow,
    "motcoh": cmd_motcoh,
    "verify": cmd_verify,
    "eval": cmd_eval,
    "audit": cmd_audit,
}


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        params = make_params(ns.p, ns.n, e=getattr(ns, "e", Fraction(1)))
        return COMMANDS[ns.command](ns, params)
    except ValueError as err:
        print(err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
