"""Symbol parameters and the truncated Chow ring of the split Rost motive.

The split model is the span of 1, H, ..., H^{p-1}; products truncate past
H^{p-1} (the codimension would exceed d), and the degree functional reads
off e times the top coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import as_local, check_prime, require_unit


@dataclass(frozen=True)
class SymbolParams:
    """Parameters (p, n) of the symbol with the derived b, c, d and the
    degree unit e = deg(H^{p-1})."""

    p: int
    n: int
    b: int
    c: int
    d: int
    e: Fraction


def make_params(p: int, n: int, e=1) -> SymbolParams:
    """Build SymbolParams, failing loudly on any broken invariant.

    >>> make_params(3, 2).b, make_params(3, 2).c, make_params(3, 2).d
    (4, 13, 8)
    """
    check_prime(p)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer, got %r" % (n,))
    e = require_unit(as_local(e), p)
    b = (p**n - 1) // (p - 1)
    c = (p ** (n + 1) - 1) // (p - 1)
    d = p**n - 1
    # cross-checked identities
    assert c == b * p + 1 == b + p**n
    assert d == b * (p - 1) == c - b - 1
    return SymbolParams(p=p, n=n, b=b, c=c, d=d, e=e)


def _check_same_params(x, y):
    if x.params != y.params:
        raise ValueError("mismatched parameters: %r vs %r" % (x.params, y.params))


class ChowClass:
    """An element of span(1, H, ..., H^{p-1}) with Z_(p) coefficients."""

    __slots__ = ("params", "_coeffs")

    def __init__(self, params: SymbolParams, coeffs=None):
        self.params = params
        clean = {}
        for k, v in (coeffs or {}).items():
            if not 0 <= k <= params.p - 1:
                raise ValueError("H-exponent %r outside [0, %d]" % (k, params.p - 1))
            v = as_local(v)
            if v != 0:
                clean[k] = v
        self._coeffs = clean

    def coeff(self, k: int) -> Fraction:
        return self._coeffs.get(k, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.params == other.params and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.params, tuple(self.items())))

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        _check_same_params(self, other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ChowClass(self.params, out)

    def __neg__(self):
        return ChowClass(self.params, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "ChowClass":
        s = as_local(scalar)
        return ChowClass(self.params, {k: s * v for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        _check_same_params(self, other)
        top = self.params.p - 1
        out = {}
        for i, u in self._coeffs.items():
            for j, v in other._coeffs.items():
                if i + j <= top:  # truncation: codim of H^{i+j} would exceed d
                    out[i + j] = out.get(i + j, Fraction(0)) + u * v
        return ChowClass(self.params, out)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __pow__(self, r: int):
        if not isinstance(r, int) or r < 0:
            raise ValueError("nonnegative integer power required")
        out = h_power(self.params, 0)
        for _ in range(r):
            out = out * self
        return out

    def degree(self) -> Fraction:
        """e times the H^{p-1} coefficient (push-forward to a point)."""
        return self.params.e * self.coeff(self.params.p - 1)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, v in self.items():
            name = "1" if k == 0 else ("H" if k == 1 else "H^%d" % k)
            if v == 1 and k > 0:
                parts.append(name)
            elif k == 0:
                parts.append(str(v))
            else:
                parts.append("%s*%s" % (v, name))
        return " + ".join(parts)

    def __repr__(self):
        return "ChowClass(p=%d, %s)" % (self.params.p, self)


def zero_class(params: SymbolParams) -> ChowClass:
    return ChowClass(params, {})


def h_power(params: SymbolParams, k: int) -> ChowClass:
    """The basis class H^k, 0 <= k <= p-1."""
    return ChowClass(params, {k: 1})
