"""Correspondences on X x X restricted to the split span of H^i x H^j.

E(i, j) denotes H^i x H^j with 0 <= i, j <= p-1.  Composition encodes the
push-pull through the triple product: the middle factors pair to a point
only when their exponents sum to p-1, contributing a factor of
e = deg(H^{p-1}):

    compose(beta, alpha)_{il} = sum_{j+k=p-1} e * alpha_{ij} * beta_{kl}.

The span has no composition identity (the diagonal of X is not in it); the
Rost projector pi is the identity only on the sub-span it cuts out.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import as_local, binom, val
from .endalg import EndTuple
from .splitring import ChowClass, SymbolParams, _check_same_params


class Corr:
    """A correspondence in span{E(i,j) : 0 <= i, j <= p-1}."""

    __slots__ = ("params", "_coeffs")

    def __init__(self, params: SymbolParams, coeffs=None):
        self.params = params
        top = params.p - 1
        clean = {}
        for (i, j), v in (coeffs or {}).items():
            if not (0 <= i <= top and 0 <= j <= top):
                raise ValueError("basis index (%r, %r) outside [0, %d]^2" % (i, j, top))
            v = as_local(v)
            if v != 0:
                clean[(i, j)] = v
        self._coeffs = clean

    def coeff(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, Corr):
            return NotImplemented
        return self.params == other.params and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.params, tuple(self.items())))

    def __add__(self, other):
        if not isinstance(other, Corr):
            return NotImplemented
        _check_same_params(self, other)
        out = dict(self._coeffs)
        for ij, v in other._coeffs.items():
            out[ij] = out.get(ij, Fraction(0)) + v
        return Corr(self.params, out)

    def __neg__(self):
        return Corr(self.params, {ij: -v for ij, v in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Corr):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "Corr":
        s = as_local(scalar)
        return Corr(self.params, {ij: s * v for ij, v in self._coeffs.items()})

    def __mul__(self, other):
        """Intersection product: E(i,j)*E(k,l) = E(i+k, j+l), truncated."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Corr):
            return NotImplemented
        _check_same_params(self, other)
        top = self.params.p - 1
        out = {}
        for (i, j), u in self._coeffs.items():
            for (k, l), v in other._coeffs.items():
                if i + k <= top and j + l <= top:
                    key = (i + k, j + l)
                    out[key] = out.get(key, Fraction(0)) + u * v
        return Corr(self.params, out)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __pow__(self, r: int):
        if not isinstance(r, int) or r < 0:
            raise ValueError("nonnegative integer power required")
        out = basis(self.params, 0, 0)
        for _ in range(r):
            out = out * self
        return out

    def __matmul__(self, other):
        """beta @ alpha = compose(beta, alpha): alpha applied first."""
        if not isinstance(other, Corr):
            return NotImplemented
        return compose(self, other)

    def t(self) -> "Corr":
        return transpose(self)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (i, j), v in self.items():
            term = "E(%d,%d)" % (i, j)
            parts.append(term if v == 1 else "%s*%s" % (v, term))
        return " + ".join(parts)

    def __repr__(self):
        return "Corr(p=%d, %s)" % (self.params.p, self)


def zero_corr(params: SymbolParams) -> Corr:
    return Corr(params, {})


def basis(params: SymbolParams, i: int, j: int) -> Corr:
    """The basis correspondence E(i, j) = H^i x H^j."""
    return Corr(params, {(i, j): 1})


def compose(beta: Corr, alpha: Corr) -> Corr:
    """Composition (alpha first): middle exponents pair iff they sum to p-1."""
    _check_same_params(beta, alpha)
    params = beta.params
    top = params.p - 1
    out = {}
    for (i, j), u in alpha._coeffs.items():
        k = top - j
        for (k2, l), v in beta._coeffs.items():
            if k2 == k:
                key = (i, l)
                out[key] = out.get(key, Fraction(0)) + params.e * u * v
    return Corr(params, out)


def transpose(alpha: Corr) -> Corr:
    return Corr(alpha.params, {(j, i): v for (i, j), v in alpha._coeffs.items()})


def ring_power(alpha: Corr, r: int) -> Corr:
    """r-fold intersection power (sigma**(p-1) is how rho is built)."""
    return alpha**r


def comp_power(alpha: Corr, r: int) -> Corr:
    """r-fold composition power, r >= 1 (the span has no identity)."""
    if not isinstance(r, int) or r < 1:
        raise ValueError("composition power requires an integer exponent >= 1")
    out = alpha
    for _ in range(r - 1):
        out = compose(out, alpha)
    return out


def mult(alpha: Corr) -> Fraction:
    """Multiplicity: e times the E(0, p-1) coefficient (the coefficient of
    [X] in the first-projection push-forward)."""
    return alpha.params.e * alpha.coeff(0, alpha.params.p - 1)


def diag_pullback(alpha: Corr) -> ChowClass:
    """Pull back along the diagonal: E(i,j) -> H^{i+j}, truncated."""
    params = alpha.params
    top = params.p - 1
    out = {}
    for (i, j), v in alpha._coeffs.items():
        if i + j <= top:
            out[i + j] = out.get(i + j, Fraction(0)) + v
    return ChowClass(params, out)


def action_on_class(alpha: Corr, k: int) -> ChowClass:
    """Push-pull action on H^k: alpha_*(H^k) = sum_j e*alpha_{(p-1-k) j} H^j."""
    params = alpha.params
    top = params.p - 1
    if not 0 <= k <= top:
        raise ValueError("H-exponent %r outside [0, %d]" % (k, top))
    out = {}
    for (i, j), v in alpha._coeffs.items():
        if i == top - k:
            out[j] = out.get(j, Fraction(0)) + params.e * v
    return ChowClass(params, out)


def to_tuple(alpha: Corr) -> EndTuple:
    """Diagonal action on the graded pieces; defined on the anti-diagonal
    span only.  entry_i = e*coeff(i, p-1-i); compose becomes entrywise
    product."""
    params = alpha.params
    top = params.p - 1
    if any(i + j != top for (i, j) in alpha._coeffs):
        raise ValueError("not an endomorphism of the split motive: "
                         "support off the anti-diagonal")
    return EndTuple(params.p,
                    tuple(params.e * alpha.coeff(i, top - i) for i in range(params.p)))


def from_tuple(params: SymbolParams, t: EndTuple) -> Corr:
    top = params.p - 1
    return Corr(params, {(i, top - i): x / params.e for i, x in enumerate(t.entries)})


def sigma(params: SymbolParams) -> Corr:
    """The special correspondence 1 x H - H x 1 (anti-symmetric)."""
    return Corr(params, {(0, 1): 1, (1, 0): -1})


def rho(params: SymbolParams) -> Corr:
    """rho = sigma^{p-1} (intersection power); congruent mod p to the
    alternating sum of the E(i, p-1-i)."""
    return ring_power(sigma(params), params.p - 1)


def rost_projector(params: SymbolParams) -> Corr:
    """pi = (1/e) * sum_i E(i, p-1-i): symmetric idempotent of multiplicity 1
    whose diagonal pullback has degree p."""
    top = params.p - 1
    inv_e = 1 / params.e
    return Corr(params, {(i, top - i): inv_e for i in range(params.p)})


def check_rhosigma(params: SymbolParams):
    """Check compose(sigma, sigma^{p-1})/e == 1 x H + (p-1)*H x 1.

    Returns (ok, witness) with witness the computed left side.
    """
    witness = compose(sigma(params), rho(params)).scale(1 / params.e)
    expected = basis(params, 0, 1) + basis(params, 1, 0).scale(params.p - 1)
    return witness == expected, witness


def projector_iterate(params: SymbolParams, r: int):
    """Form rho' = ((1/e)rho) o ((1/e)rho), raise it to composition power
    p^r, and return (correspondence, min over i of val_p(entry_i - 1)).

    The tuple of rho' is (binom(p-1, i)^2)_i, all entries 1 mod p, so the
    minimum offset valuation is >= r+1 (1-unit power growth); it is +inf
    when every entry is exactly 1 (as happens for p = 2).
    """
    if not isinstance(r, int) or r < 0:
        raise ValueError("nonnegative iteration exponent required")
    p = params.p
    rho1 = rho(params).scale(1 / params.e)
    rho_prime = compose(rho1, rho1)
    t = to_tuple(rho_prime) ** (p**r)
    min_offset = min(val(x - 1, p) for x in t.entries)
    return from_tuple(params, t), min_offset
