"""Named verification suites: batteries of exact identity checks, one
CheckReport per suite.  These back the command-line `verify` subcommand."""

import random
from fractions import Fraction

from . import motcoh, rostchow, steenrod, sympow
from .arith import val
from .corresp import (
    basis,
    comp_power,
    diag_pullback,
    mult,
    rho,
    rost_projector,
    sigma,
    to_tuple,
    transpose,
)
from .endalg import EndTuple, identity, invert, is_rational
from .reporting import CheckReport


def suite_correspondences(params):
    p, e = params.p, params.e
    report = CheckReport(f"correspondences p={p} n={params.n}")
    sg = sigma(params)
    rh = rho(params)
    pi = rost_projector(params)

    report.add("transpose(sigma) = -sigma", transpose(sg) == sg.scale(-1))
    report.add("rho = sigma^(p-1)", rh == sg ** (p - 1))

    anti = basis(params, 0, p - 1)
    for i in range(1, p):
        anti = anti + basis(params, i, p - 1 - i)
    congruent = all(
        val(rh.coeff(i, p - 1 - i) - anti.coeff(i, p - 1 - i), p) >= 1
        for i in range(p))
    report.add("sigma^(p-1) = sum_i E(i,p-1-i) mod p", congruent)

    want = basis(params, 0, 1).scale(e) + basis(params, 1, 0).scale(e * (p - 1))
    report.add("sigma o rho = e*(E(0,1) + (p-1)*E(1,0))", sg @ rh == want)

    report.add("pi o pi = pi", pi @ pi == pi)
    report.add("transpose(pi) = pi", transpose(pi) == pi)
    report.add("mult(pi) = 1", mult(pi) == 1)
    report.add("deg(diag(pi)) = p", diag_pullback(pi).degree() == p)
    report.add("pi^(o3) = pi", comp_power(pi, 3) == pi)

    hom = to_tuple(pi @ rh) == to_tuple(pi) * to_tuple(rh)
    report.add("to_tuple is a composition homomorphism", hom)
    report.add("pi absorbs rho", pi @ rh == rh and rh @ pi == rh)
    return report


def suite_symmpow(params):
    report = CheckReport(f"symmpow p={params.p} n={params.n}")
    for sub in (sympow.verify_somesome(params),
                sympow.verify_manyi_ccom(params),
                sympow.verify_triangles(params)):
        for name, ok, detail in sub.checks:
            report.add(f"{sub.title}: {name}", ok, detail)
    return report


def _random_rational_tuple(rng, p):
    """A tuple in the image of the rational endomorphisms: a common integer
    residue plus p times something of nonnegative valuation."""
    residue = rng.randrange(p)
    denoms = [q for q in range(1, 10) if q % p != 0]
    entries = tuple(
        residue + p * Fraction(rng.randrange(-9, 10), rng.choice(denoms))
        for _ in range(p))
    return EndTuple(p, entries)


def suite_endalg(params, samples=200, seed=None):
    p = params.p
    if seed is None:
        seed = 1009 * p + params.n
    rng = random.Random(seed)
    report = CheckReport(f"endalg p={p} n={params.n}")

    closed_add = closed_mul = closed_pow = closed_scale = True
    for _ in range(samples):
        t1 = _random_rational_tuple(rng, p)
        t2 = _random_rational_tuple(rng, p)
        closed_add &= is_rational(t1) and is_rational(t1 + t2)
        closed_mul &= is_rational(t1 * t2)
        closed_pow &= is_rational(t1 ** rng.randrange(5))
        unit = Fraction(rng.choice([u for u in range(1, 10) if u % p != 0]))
        closed_scale &= is_rational(t1.scale(unit * p) + t2)
    note = f"{samples} samples, seed {seed}"
    report.add("closure under +", closed_add, note)
    report.add("closure under *", closed_mul, note)
    report.add("closure under powers", closed_pow, note)
    report.add("closure under p-unit rescaling mod p", closed_scale, note)

    inv_ok = True
    for _ in range(samples):
        entries = tuple(
            Fraction(rng.randrange(1, p) + p * rng.randrange(-5, 6))
            for _ in range(p))
        u = EndTuple(p, entries)
        inv_ok &= invert(u) * u == identity(p)
    report.add("units invert back to the identity", inv_ok, note)

    try:
        invert(EndTuple(p, (Fraction(p),) * p))
        report.add("non-unit rejected by invert", False)
    except ValueError:
        report.add("non-unit rejected by invert", True)

    good = EndTuple(p, tuple(Fraction(1 + p * k) for k in range(p)))
    bad = EndTuple(p, (Fraction(1), Fraction(2)) + (Fraction(1),) * (p - 2))
    report.add("congruent unit tuple is rational", is_rational(good))
    report.add("incongruent tuple is not rational", not is_rational(bad))
    return report


def suite_motcoh(params):
    report = CheckReport(f"motcoh p={params.p} n={params.n}")
    agree, diffs = rostchow.compare(params)
    report.add("closed form matches recurrence",
               agree, f"{len(diffs)} disagreement(s)" if diffs else "")

    table = rostchow.closed_form(params)
    report.add("free rank one at j=0", table.entries[0].kind == "free")
    pfree_ok = all(
        table.entries[params.b * k].kind == "p_free"
        for k in range(1, params.p) if params.b * k <= params.d)
    report.add("index-p free parts at j = b*k", pfree_ok)

    labels_ok = True
    constraint_ok = True
    for j in range(params.d + 1):
        for row in (motcoh.even_row(j, params), motcoh.odd_row(j, params)):
            if row.label not in ("0", "Z", f"Z/{params.p}") and \
                    not row.label.startswith("K_"):
                labels_ok = False
            for mono in row.monomials:
                if mono == motcoh.CONSTANT_CLASS:
                    continue
                if mono.k != 0 or mono.eps[-1] != 0:
                    constraint_ok = False
    report.add("row labels well formed", labels_ok)
    report.add("rows with j <= d satisfy k=0 and eps_n=0", constraint_ok)

    z_only_origin = all(
        motcoh.even_row(j, params).label != "Z" for j in range(1, params.d + 1))
    report.add("integral row only at j=0", z_only_origin)
    return report


def _steenrod_args(params):
    """Full audit grid for small d; otherwise a cheap sample.  The cost of
    one audit grows with the number of Steenrod factors s/(p-1), so the
    sample sticks to the smallest valid s per chosen m."""
    gen = steenrod.generators_arguments(params)
    if params.d <= 10:
        return steenrod.rationality_arguments(params), gen
    by_m = {}
    for m, s in steenrod.rationality_arguments(params):
        by_m.setdefault(m, []).append(s)
    rat = [(0, s) for s in sorted(by_m.get(0, ()))[:2]]
    rat += [(1, s) for s in sorted(by_m.get(1, ()))[:1]]
    return rat, gen


def suite_steenrod(params):
    report = CheckReport(f"steenrod p={params.p} n={params.n}")
    rat, gen = _steenrod_args(params)
    first_rat = first_gen = None
    for m, s in rat:
        rep = steenrod.audit_rationality(params, m, s)
        first_rat = first_rat or rep
        report.add(f"rationality m={m} s={s}", rep.passed, rep.conclusion)
    for m, r in gen:
        rep = steenrod.audit_generators(params, m, r)
        first_gen = first_gen or rep
        report.add(f"generators m={m} r={r}", rep.passed, rep.conclusion)
    if first_rat is not None:
        report.add("trace replay (rationality)",
                   steenrod.replay(first_rat).passed)
    if first_gen is not None:
        report.add("trace replay (generators)",
                   steenrod.replay(first_gen).passed)
    return report


SUITES = {
    "correspondences": suite_correspondences,
    "symmpow": suite_symmpow,
    "endalg": suite_endalg,
    "motcoh": suite_motcoh,
    "steenrod": suite_steenrod,
}


def run_suite(name, params):
    """Return a list of CheckReports for the named suite ('all' runs them
    all in declaration order)."""
    if name == "all":
        return [fn(params) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return [SUITES[name](params)]
