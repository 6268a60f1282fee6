"""Exact p-divisibility audits for total Steenrod powers in the split model.

The engine never computes a Steenrod action.  It enumerates every term that
appears when S^s is pushed through a pairing of Chern classes against powers
of the special correspondence sigma = 1 x H - H x 1, expanding S^l(sigma^r)
by the Cartan formula and each S^a(sigma) into

    S^a(sigma) = p*theta_a + 1 x S^a(H) - S^a(H) x 1,

and returns one verdict per term:

* ``Zero(reason)``    -- the term vanishes on the nose;
* ``ValExactly(1)``   -- the single leading term, valuation exactly 1,
                         resting on declared degree premises;
* ``ValAtLeast(2)``   -- the term lies in the ideal p^2*CH + p*(rational
                         classes), certified by a trace of rule applications.

Every rule application names the atoms it uses, and ``replay`` re-checks all
premises independently, so a report can be audited without trusting the case
split that produced it.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .arith import multinomial, val
from .corresp import (
    action_on_class,
    basis,
    compose,
    ring_power,
    rho,
    rost_projector,
    sigma,
    transpose,
)
from .reporting import CheckReport
from .splitring import SymbolParams, h_power


ATOM_KINDS = ("sigma", "theta", "second", "third", "chern_x", "chern_y",
              "h_power", "decomp_x")
_RATIONAL = frozenset({"second", "third", "chern_x", "chern_y"})


@dataclass(frozen=True)
class SteenAtom:
    """One factor of an expansion term.

    kinds: sigma (an unexpanded sigma factor), theta / second / third (the
    three pieces of the sigma decomposition, second = 1 x S^j(H) and
    third = S^j(H) x 1), chern_x / chern_y (Chern classes of the negative
    tangent bundles, the _y ones pushed forward from the subvariety),
    h_power, decomp_x (the H^r x x_r summand of the point-splitting of x).
    """

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ATOM_KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")

    @property
    def rational(self):
        return self.kind in _RATIONAL

    @property
    def poscodim(self):
        # chern_y sits in the ambient variety with codimension
        # (d - dim Y) + index > 0 at every index; second/third carry a
        # positive Steenrod index on a positive-codimension class.
        if self.kind == "chern_x":
            return self.index > 0
        return self.kind in ("chern_y", "second", "third")

    def __str__(self):
        names = {"sigma": "sigma", "theta": "theta_%d", "second": "1xS^%d(H)",
                 "third": "S^%d(H)x1", "chern_x": "b_%d", "chern_y": "bY_%d",
                 "h_power": "H^%d", "decomp_x": "x_%d"}
        pat = names[self.kind]
        return pat % self.index if "%" in pat else pat


@dataclass(frozen=True)
class PairingContext:
    """What an expansion term is paired against, and the index budget.

    kind "rationality": deg(b_i x b_j * <term> * (1 x S^k(x))) with the
    budget i + j + k + l = d + s over the sigma-power r = p-1.
    kind "generators": deg(bY_i * <term>) against sigma^r pushed from a
    dim-(p^m - 1) subvariety, budget i + j = p^m - 1.
    kind "plain": a bare split pairing of the chern slots against H-powers.
    """

    kind: str
    params: SymbolParams
    m: int
    s: int
    r: int
    i: int
    j: int
    k: int
    l: int
    chern: tuple


@dataclass(frozen=True)
class SteenProduct:
    atoms: tuple
    scalar: int
    context: PairingContext = None

    def classify(self):
        counts = {"sigma": 0, "theta": 0, "second": 0, "third": 0}
        for a in self.atoms:
            if a.kind in counts:
                counts[a.kind] += 1
        return counts

    def composition(self):
        """The Cartan composition this term came from (ascending)."""
        parts = [0] * self.classify()["sigma"]
        parts += [a.index for a in self.atoms
                  if a.kind in ("theta", "second", "third")]
        return tuple(sorted(parts))

    def __str__(self):
        atoms = "*".join(str(a) for a in self.atoms) or "1"
        return f"{self.scalar}*{atoms}" if self.scalar != 1 else atoms


# --- verdicts ----------------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    reason: str


@dataclass(frozen=True)
class ValExactly:
    value: int
    premises: tuple = ()
    note: str = ""


@dataclass(frozen=True)
class RuleApp:
    rule: str
    atoms: tuple = ()
    note: str = ""


@dataclass(frozen=True)
class ValAtLeast:
    value: int
    rules: tuple = ()


def verdict_str(v):
    if isinstance(v, Zero):
        return f"zero[{v.reason}]"
    if isinstance(v, ValExactly):
        return f"val={v.value} exactly [{'+'.join(v.premises)}]"
    return f"val>={v.value} via {'+'.join(r.rule for r in v.rules)}"


# --- rule and premise registries ---------------------------------------------

RULE_FACTORS = {
    # the sigma decomposition carries an explicit p on every theta
    "theta-carries-p": 1,
    # pairing a rational positive-codimension class against anything over
    # the splitting field has p-divisible degree
    "rational-pairing": 1,
    # a split pairing with rational positive-codimension classes in both
    # slots has p^2-divisible degree
    "split-pairing": 2,
    # every summand of the point-splitting of x dies: the base component
    # needs k = s, the twisted ones exceed the top Steenrod index
    "x-decomp-vanishes": 1,
}

ZERO_REASONS = {
    "chern-index-overflow":
        "Chern index beyond the dimension: the group is zero",
    "steenrod-index-invalid":
        "S^k = 0 when k is negative or not a multiple of p-1",
    "cartan-empty":
        "no composition into Steenrod-valid parts",
    "rho-pairing-zero":
        "pairing against sigma^(p-1) needs a Chern index divisible by b",
    "proj1-sigma-power-zero":
        "first-projection pushforward of a sub-top sigma power vanishes",
}

PREMISES = {
    "top-chern-degree":
        "val(deg b_d) = 1 for the top Chern class of the negative tangent "
        "bundle (model premise)",
    "top-chern-y-degree":
        "val(deg bY_{dim Y}) = 1 at the top index of the subvariety "
        "(model premise)",
    "unit-pairing-degree":
        "val(e) = 0 for e = deg(H^{p-1}) (checked)",
    "degree-p-closed-point":
        "a degree-p closed point makes p kill the kernel of the splitting-"
        "field restriction (model premise)",
}


# --- index bookkeeping and expansion ------------------------------------------


def steen_index_valid(i, p):
    """S^i is the zero operation unless i >= 0 and (p-1) | i."""
    return i >= 0 and i % (p - 1) == 0


@lru_cache(maxsize=None)
def _cartan_expand_cached(r, l, p):
    step = p - 1
    if r < 0 or l < 0 or l % step:
        return ()
    out = []

    def rec(slots, rem, lo, acc):
        if slots == 0:
            if rem == 0:
                counts = {}
                for v in acc:
                    counts[v] = counts.get(v, 0) + 1
                out.append((tuple(acc), multinomial(counts.values())))
            return
        v = lo
        while v <= rem:
            acc.append(v)
            rec(slots - 1, rem - v, v, acc)
            acc.pop()
            v += step

    rec(r, l, 0, [])
    return tuple(out)


def cartan_expand(r, l, p):
    """Unordered Cartan compositions of S^l over an r-fold product.

    Returns [(parts, multiplicity)] with parts an ascending r-tuple of
    Steenrod-valid indices summing to l and multiplicity the number of
    ordered compositions collecting to it.  Empty when (p-1) does not
    divide l.
    """
    return list(_cartan_expand_cached(r, l, p))


def substitute_dcmp(expansion, context=None):
    """Expand every positive part of every Cartan composition through the
    three-term sigma decomposition, keeping signs and multiplicities exact.

    Zero parts stay as sigma factors.  Each returned product's scalar is
    multiplicity * (-1)^(#third); the explicit p on each theta stays on the
    atom itself.
    """
    products = []
    for parts, multiplicity in expansion:
        positive = [a for a in parts if a]
        n_sigma = len(parts) - len(positive)
        sigmas = (SteenAtom("sigma"),) * n_sigma
        if not positive:
            products.append(SteenProduct(sigmas, multiplicity, context))
            continue
        for choice in iter_product(("theta", "second", "third"),
                                   repeat=len(positive)):
            atoms = sigmas + tuple(SteenAtom(kind, a)
                                   for kind, a in zip(choice, positive))
            n_third = sum(1 for c in choice if c == "third")
            scalar = multiplicity * (-1) ** n_third
            products.append(SteenProduct(atoms, scalar, context))
    return products


# --- the rule engine -----------------------------------------------------------


def _xdecomp_rule(ctx):
    notes = []
    if ctx.k < ctx.s:
        notes.append("base component: pairing underflow (k < s)")
    elif ctx.k > ctx.s:
        notes.append("base component: S^(k-s) of the unit class is zero")
    for rr in range(1, ctx.params.p):
        lhs = ctx.s + rr * ctx.params.b
        rhs = (ctx.m - rr * ctx.params.b) * (ctx.params.p - 1)
        if lhs <= rhs:
            notes.append(f"component {rr} NOT bounded: {lhs} <= {rhs}")
    return RuleApp("x-decomp-vanishes", (), "; ".join(notes))


def valuation_bound(prod):
    """Verdict for one expansion term, strongest first: structural zeros,
    then valuation rules with their trace."""
    ctx = prod.context
    if ctx is None:
        raise ValueError("cannot audit: product has no pairing context")
    p, b, d = ctx.params.p, ctx.params.b, ctx.params.d
    counts = prod.classify()
    n_theta, n_second, n_third = (counts["theta"], counts["second"],
                                  counts["third"])

    if ctx.kind == "plain":
        rational = [a for a in ctx.chern if a.rational and a.poscodim]
        if len(rational) >= 2:
            return ValAtLeast(2, (RuleApp("split-pairing",
                                          tuple(rational[:2])),))
        if len(rational) == 1:
            return ValAtLeast(1, (RuleApp("rational-pairing",
                                          (rational[0],)),))
        return ValAtLeast(0, ())

    if ctx.kind == "generators":
        chern = ctx.chern[0]
        if n_theta >= 1:
            theta = next(a for a in prod.atoms if a.kind == "theta")
            return ValAtLeast(2, (RuleApp("theta-carries-p", (theta,)),
                                  RuleApp("rational-pairing", (chern,))))
        if n_second >= 1:
            second = next(a for a in prod.atoms if a.kind == "second")
            return ValAtLeast(2, (RuleApp("split-pairing", (chern, second)),))
        if n_third >= 1:
            return Zero("proj1-sigma-power-zero")
        return ValExactly(1, ("top-chern-y-degree", "unit-pairing-degree"),
                          note="leading term deg(bY_%d)*e" % ctx.i)

    if ctx.kind != "rationality":
        raise ValueError(f"cannot audit: unknown pairing kind {ctx.kind!r}")

    chern_i, chern_j = ctx.chern
    # structural zeros first
    if ctx.i > d or ctx.j > d:
        return Zero("chern-index-overflow")
    if not steen_index_valid(ctx.k, p):
        return Zero("steenrod-index-invalid")

    if ctx.l == 0:
        if ctx.i == d and ctx.j == 0:
            return ValExactly(
                1, ("top-chern-degree", "unit-pairing-degree"),
                note=f"leading term deg(b_{d})*S^{ctx.s}(x_0); "
                     "pairing coefficient binom(p-1,0) = 1")
        if ctx.i % b:
            return Zero("rho-pairing-zero")
        rules = [RuleApp("rational-pairing", (chern_i,))]
        if ctx.j > 0:
            rules.append(RuleApp("rational-pairing", (chern_j,)))
        else:
            rules.append(_xdecomp_rule(ctx))
        return ValAtLeast(2, tuple(rules))

    # l > 0: the term carries an actual sigma expansion
    thetas = [a for a in prod.atoms if a.kind == "theta"]
    if n_theta >= 2:
        return ValAtLeast(2, (RuleApp("theta-carries-p", (thetas[0],)),
                              RuleApp("theta-carries-p", (thetas[1],))))
    if n_theta == 1:
        first = RuleApp("theta-carries-p", (thetas[0],))
        if ctx.k != ctx.s:
            return ValAtLeast(2, (first, _xdecomp_rule(ctx)))
        if ctx.j > 0:
            return ValAtLeast(2, (first,
                                  RuleApp("rational-pairing", (chern_j,))))
        return ValAtLeast(2, (first,
                              RuleApp("rational-pairing", (chern_i,))))
    # no theta
    if ctx.k != ctx.s:
        return ValAtLeast(2, (RuleApp("rational-pairing", (chern_i,)),
                              _xdecomp_rule(ctx)))
    if ctx.j > 0:
        return ValAtLeast(2, (RuleApp("split-pairing", (chern_i, chern_j)),))
    if n_second >= 1:
        second = next(a for a in prod.atoms if a.kind == "second")
        return ValAtLeast(2, (RuleApp("split-pairing", (chern_i, second)),))
    return Zero("proj1-sigma-power-zero")


# --- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class AuditCase:
    index: tuple
    product: SteenProduct
    verdict: object
    leading: bool = False

    def describe(self):
        prod = str(self.product) if self.product is not None else "unexpanded"
        lead = " (leading)" if self.leading else ""
        return f"{self.index}: {prod} -> {verdict_str(self.verdict)}{lead}"


@dataclass(frozen=True)
class AuditReport:
    kind: str
    params: SymbolParams
    args: tuple
    premises: tuple
    support: tuple
    cases: tuple
    conclusion: str
    passed: bool

    @property
    def title(self):
        arg_text = " ".join(f"{k}={v}" for k, v in self.args)
        return (f"{self.kind} audit p={self.params.p} n={self.params.n} "
                f"{arg_text}")

    @property
    def leading(self):
        for case in self.cases:
            if case.leading:
                return case
        return None

    def counts(self):
        out = {"zero": 0, "at-least": 0, "exact": 0}
        for case in self.cases:
            if isinstance(case.verdict, Zero):
                out["zero"] += 1
            elif isinstance(case.verdict, ValAtLeast):
                out["at-least"] += 1
            else:
                out["exact"] += 1
        return out

    def header_lines(self):
        lines = [self.title]
        for pid in self.premises:
            lines.append(f"premise {pid}: {PREMISES[pid]}")
        for name, ok, detail in self.support:
            tag = "ok" if ok else "FAIL"
            lines.append(f"support {tag}: {name}" + (f" -- {detail}" if detail else ""))
        return lines


def _conclude(cases, support, pass_text, fail_text):
    leading = [c for c in cases if c.leading]
    ok = len(leading) == 1 and isinstance(leading[0].verdict, ValExactly) \
        and leading[0].verdict.value == 1
    for case in cases:
        if case.leading:
            continue
        v = case.verdict
        if isinstance(v, Zero):
            ok = ok and v.reason in ZERO_REASONS
        elif isinstance(v, ValAtLeast):
            ok = ok and v.value >= 2
        else:
            ok = False
    ok = ok and all(flag for _, flag, _ in support)
    return ok, (pass_text if ok else fail_text)


# --- the two audits --------------------------------------------------------------


def rationality_arguments(params):
    """All (m, s) the rationality audit claims: 0 <= m <= d, s a Steenrod-
    valid index with (m - b)(p-1) < s <= d."""
    p, b, d = params.p, params.b, params.d
    return [(m, s)
            for m in range(d + 1)
            for s in range(0, d + 1, p - 1)
            if s > (m - b) * (p - 1)]


def generators_arguments(params):
    return [(m, r)
            for m in range(1, params.n)
            for r in range(1, params.p)]


_RAT_PREMISES = ("top-chern-degree", "unit-pairing-degree")
_GEN_PREMISES = ("top-chern-y-degree", "unit-pairing-degree",
                 "degree-p-closed-point")


def _proj1_push(corr):
    """Pushforward along the first projection as a class on the first factor."""
    return action_on_class(transpose(corr), 0)


def _rationality_support(params):
    p = params.p
    ev = val(params.e, p)
    rho_top = rho(params).coeff(0, p - 1)
    subtop = all(_proj1_push(ring_power(sigma(params), r)).is_zero()
                 for r in range(1, p - 1))
    return (
        ("unit-pairing-degree", ev == 0, f"val(e) = {ev}"),
        ("rho-top-coefficient", rho_top == 1,
         f"E(0,{p - 1}) coefficient of sigma^{p - 1} is {rho_top}"),
        ("proj1-subtop-sigma-vanishing", subtop,
         "pr1 pushforward of sigma^r is 0 for 0 < r < p-1"),
    )


def audit_rationality(params, m, s):
    """Audit that S^s of the base component of a dimension-m class is
    rational modulo the ideal p^2*CH + p*(rational classes).

    Enumerates the budget i + j + k + l = d + s with i >= 1, expands the
    sigma-power factor, and classifies every term.  Passes iff the single
    leading term (i = d, j = l = 0, k = s) has valuation exactly 1 and every
    other term is Zero or ValAtLeast(2).
    """
    p, b, d = params.p, params.b, params.d
    args = (("m", m), ("s", s))
    if not steen_index_valid(s, p):
        return AuditReport(
            "rationality", params, args, _RAT_PREMISES, (), (),
            conclusion=f"trivial: S^{s} = 0 since {p - 1} does not divide "
                       f"{s} (nothing to audit)",
            passed=True)
    if s <= (m - b) * (p - 1):
        raise ValueError(
            f"bound not satisfied: need s > (m-b)(p-1) = {(m - b) * (p - 1)}"
            f", got s = {s}; nothing is claimed below the bound")
    if not 0 <= m <= d:
        raise ValueError(f"cycle dimension m = {m} outside [0, {d}]")

    support = _rationality_support(params)
    total = d + s
    cases = []
    for i in range(1, total + 1):
        for j in range(total - i + 1):
            budget = total - i - j
            for l in range(budget + 1):
                k = budget - l
                if i > d or j > d:
                    cases.append(AuditCase((i, j, k, l), None,
                                           Zero("chern-index-overflow")))
                    continue
                if not steen_index_valid(k, p):
                    cases.append(AuditCase((i, j, k, l), None,
                                           Zero("steenrod-index-invalid")))
                    continue
                expansion = cartan_expand(p - 1, l, p)
                if not expansion:
                    cases.append(AuditCase((i, j, k, l), None,
                                           Zero("cartan-empty")))
                    continue
                ctx = PairingContext(
                    "rationality", params, m, s, p - 1, i, j, k, l,
                    (SteenAtom("chern_x", i), SteenAtom("chern_x", j)))
                leading = l == 0 and i == d and j == 0
                for prod in substitute_dcmp(expansion, ctx):
                    cases.append(AuditCase((i, j, k, l), prod,
                                           valuation_bound(prod), leading))

    ok, conclusion = _conclude(
        cases, support,
        pass_text=f"pass: leading term deg(b_{d})*S^{s}(x_0) has valuation "
                  "exactly 1; all other terms are zero or in the ideal",
        fail_text="fail: a non-leading term escaped the ideal")
    return AuditReport("rationality", params, args, _RAT_PREMISES, support,
                       tuple(cases), conclusion, ok)


def audit_generators(params, m, r):
    """Audit that the class pushed from a dimension-(p^m - 1) subvariety
    through sigma^r and the split projector has order exactly p.

    Part (a): its splitting-field restriction vanishes degreewise, so p
    kills it.  Part (b): the degree pairing's j = 0 term has valuation
    exactly 1 and every j > 0 term is zero or p^2-divisible, so it is not
    itself p-divisible.
    """
    p, b, n, d = params.p, params.b, params.n, params.d
    if not 1 <= m <= n - 1:
        raise ValueError(f"subvariety exponent m = {m} outside [1, {n - 1}]")
    if not 1 <= r <= p - 1:
        raise ValueError(f"sigma exponent r = {r} outside [1, {p - 1}]")
    dim_y = p ** m - 1
    args = (("m", m), ("r", r))

    sigma_r = ring_power(sigma(params), r)
    witness = _proj1_push(sigma_r * basis(params, 0, p - 1 - r))
    expected = h_power(params, 0).scale(params.e)
    absorbed = compose(rost_projector(params), sigma_r) == sigma_r
    ev = val(params.e, p)
    support = (
        ("dim-y-positive", dim_y > 0, f"dim Y = {dim_y}"),
        ("dim-y-below-free-range", dim_y < p ** (n - 1) <= b,
         f"{dim_y} < {p ** (n - 1)} <= {b}"),
        ("dim-y-avoids-split-degrees",
         all(dim_y != b * t for t in range(r + 1)),
         "no split component for the restriction to land on: p*class = 0"),
        ("degree-p-closed-point", True, PREMISES["degree-p-closed-point"]),
        ("unit-pairing-degree", ev == 0, f"val(e) = {ev}"),
        ("proj1-top-sigma-pairing", witness == expected,
         f"pr1 pushforward of sigma^{r}*(1 x H^{p - 1 - r}) equals e*1"),
        ("projector-absorbs-sigma-power", absorbed,
         f"compose(projector, sigma^{r}) = sigma^{r}"),
    )

    cases = []
    for j in range(dim_y + 1):
        i = dim_y - j
        ctx = PairingContext("generators", params, m, j, r, i, j, 0, j,
                             (SteenAtom("chern_y", i),))
        if j == 0:
            prod = SteenProduct((SteenAtom("sigma"),) * r, 1, ctx)
            cases.append(AuditCase((i, j), prod, valuation_bound(prod), True))
            continue
        expansion = cartan_expand(r, j, p)
        if not expansion:
            cases.append(AuditCase((i, j), None, Zero("cartan-empty")))
            continue
        for prod in substitute_dcmp(expansion, ctx):
            cases.append(AuditCase((i, j), prod, valuation_bound(prod)))

    ok, conclusion = _conclude(
        cases, support,
        pass_text=f"pass: order exactly {p} (killed by p, degree pairing "
                  "has valuation exactly 1)",
        fail_text="fail: could not certify order exactly p")
    return AuditReport("generators", params, args, _GEN_PREMISES, support,
                       tuple(cases), conclusion, ok)


# --- trace replay -----------------------------------------------------------------


def _check_zero(case, report):
    reason = case.verdict.reason
    params = report.params
    p, b, d = params.p, params.b, params.d
    if report.kind == "rationality":
        i, j, k, l = case.index
        if reason == "chern-index-overflow":
            return i > d or j > d
        if reason == "steenrod-index-invalid":
            return not steen_index_valid(k, p)
        if reason == "cartan-empty":
            return l > 0 and not cartan_expand(p - 1, l, p)
        if reason == "rho-pairing-zero":
            return l == 0 and i % b != 0
        if reason == "proj1-sigma-power-zero":
            c = case.product.classify()
            s = dict(report.args)["s"]
            return (c["theta"] == 0 and c["second"] == 0 and c["third"] >= 1
                    and k == s and j == 0)
        return False
    i, j = case.index
    r = dict(report.args)["r"]
    if reason == "cartan-empty":
        return j > 0 and not cartan_expand(r, j, p)
    if reason == "proj1-sigma-power-zero":
        c = case.product.classify()
        return c["theta"] == 0 and c["second"] == 0 and c["third"] >= 1
    return False


def _check_rule(app, case, report):
    ctx = case.product.context if case.product is not None else None
    visible = set()
    if case.product is not None:
        visible.update(case.product.atoms)
        visible.update(ctx.chern)
    if app.rule == "theta-carries-p":
        return (len(app.atoms) == 1 and app.atoms[0].kind == "theta"
                and app.atoms[0] in visible)
    if app.rule == "rational-pairing":
        return (len(app.atoms) == 1 and app.atoms[0].rational
                and app.atoms[0].poscodim and app.atoms[0] in visible)
    if app.rule == "split-pairing":
        return (len(app.atoms) == 2
                and all(a.rational and a.poscodim and a in visible
                        for a in app.atoms))
    if app.rule == "x-decomp-vanishes":
        if ctx is None or ctx.kind != "rationality":
            return False
        if ctx.k == ctx.s:
            return False
        return all(ctx.s + rr * ctx.params.b
                   > (ctx.m - rr * ctx.params.b) * (ctx.params.p - 1)
                   for rr in range(1, ctx.params.p))
    return False


def replay(report):
    """Re-check every verdict's premises independently of the enumeration."""
    out = CheckReport(f"replay: {report.title}")
    if not report.cases:
        out.add("trivial report", report.conclusion.startswith("trivial"),
                report.conclusion)
        return out
    leading = [c for c in report.cases if c.leading]
    out.add("exactly one leading case", len(leading) == 1)
    bad_zero = bad_rules = bad_exact = 0
    for case in report.cases:
        v = case.verdict
        if isinstance(v, Zero):
            if v.reason not in ZERO_REASONS or not _check_zero(case, report):
                bad_zero += 1
        elif isinstance(v, ValAtLeast):
            factors = sum(RULE_FACTORS[a.rule] for a in v.rules)
            if factors < v.value or not all(_check_rule(a, case, report)
                                            for a in v.rules):
                bad_rules += 1
        elif isinstance(v, ValExactly):
            if (not case.leading or v.value != 1
                    or not all(pid in PREMISES for pid in v.premises)):
                bad_exact += 1
    out.add("zero reasons justified", bad_zero == 0, f"{bad_zero} bad")
    out.add("rule premises satisfied", bad_rules == 0, f"{bad_rules} bad")
    out.add("exact verdicts are the declared leading premise", bad_exact == 0)
    out.add("support checks hold", all(ok for _, ok, _ in report.support))
    return out
