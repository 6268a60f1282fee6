"""Monomial bases for the graded pieces H^{i,j} attached to a symbol.

Monomials are triples (m, k, eps): a Milnor K-degree m of the symbolic
coefficient, an exponent k of the weight-(c-1) class gamma, and a bit
vector eps selecting which of the n degree-raising operations Q_1..Q_n
are applied to the base class delta.  Bidegrees follow

    j = m + (c-1)*k + sum_t eps_t*(p^t - 1) + n
    w = m - 2k - |eps| + (n - 2),   i = 2j - w.
"""

from dataclasses import dataclass
from itertools import product

from .splitring import SymbolParams

#: marker for the constant class occupying the (0, 0) spot
CONSTANT_CLASS = "1"


@dataclass(frozen=True)
class Bidegree:
    i: int
    j: int


@dataclass(frozen=True)
class MCMonomial:
    m: int
    k: int
    eps: tuple

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(int(b) for b in self.eps))


@dataclass(frozen=True)
class MCGroup:
    monomials: tuple
    label: str

    @property
    def is_zero(self):
        return self.label == "0"


def delta(params):
    return MCMonomial(0, 0, (0,) * params.n)


def mu(params):
    # all of Q_1..Q_{n-1} applied to delta; for n = 1 this is delta itself
    return MCMonomial(0, 0, tuple(1 if t < params.n - 1 else 0 for t in range(params.n)))


def gamma(params):
    return MCMonomial(0, 0, (1,) * params.n)


def qtilde(i, params):
    """Composition of Q_1..Q_{n-1} with the i-th factor omitted."""
    if not 1 <= i <= params.n - 1:
        raise ValueError(f"qtilde index {i} out of range [1, {params.n - 1}]")
    eps = tuple(1 if (t + 1) <= params.n - 1 and (t + 1) != i else 0 for t in range(params.n))
    return MCMonomial(0, 0, eps)


def bidegree_of(mono, params):
    if len(mono.eps) != params.n:
        raise ValueError(f"eps has {len(mono.eps)} bits, expected {params.n}")
    p, n, c = params.p, params.n, params.c
    j = mono.m + (c - 1) * mono.k + sum(b * (p ** (t + 1) - 1) for t, b in enumerate(mono.eps)) + n
    w = mono.m - 2 * mono.k - sum(mono.eps) + (n - 2)
    return Bidegree(2 * j - w, j)


def enumerate_monomials(i, j, params):
    """All (m, k, eps) landing in bidegree (i, j); (0, 0) is the constant spot."""
    if (i, j) == (0, 0):
        return [CONSTANT_CLASS]
    if i <= j:
        raise ValueError(f"bidegree ({i}, {j}) outside classification range")
    found = []
    # every term in the j-formula is nonnegative, so m <= j and k <= j/(c-1);
    # within those bounds m is pinned by the j-formula, leaving a finite scan
    p, n = params.p, params.n
    w = 2 * j - i
    for k in range(j // (params.c - 1) + 1):
        for eps in product((0, 1), repeat=n):
            m = j - (params.c - 1) * k - sum(b * (p ** (t + 1) - 1) for t, b in enumerate(eps)) - n
            if m < 0 or m - 2 * k - sum(eps) + (n - 2) != w:
                continue
            mono = MCMonomial(m, k, eps)
            assert bidegree_of(mono, params) == Bidegree(i, j)
            if j <= params.d:
                assert mono.k == 0 and mono.eps[-1] == 0, (
                    f"monomial {mono} violates the k=0, eps_n=0 constraint at j={j}"
                )
            found.append(mono)
    found.sort(key=lambda mo: (mo.m, mo.k, mo.eps))
    return found


def _group_from(monos, params):
    if not monos:
        return MCGroup((), "0")
    assert len(monos) == 1, f"expected at most one monomial family per row, got {monos}"
    mono = monos[0]
    label = f"Z/{params.p}" if mono.m == 0 else f"K_{mono.m}^s"
    return MCGroup(tuple(monos), label)


def even_row(j, params):
    """The row H^{2j,j} for 0 <= j <= d."""
    if not 0 <= j <= params.d:
        raise ValueError(f"row index {j} outside [0, {params.d}]")
    if j == 0:
        return MCGroup((CONSTANT_CLASS,), "Z")
    return _group_from(enumerate_monomials(2 * j, j, params), params)


def odd_row(j, params):
    """The row H^{2j+1,j} for 0 <= j <= d."""
    if not 0 <= j <= params.d:
        raise ValueError(f"row index {j} outside [0, {params.d}]")
    return _group_from(enumerate_monomials(2 * j + 1, j, params), params)


def render_monomial(mono, params):
    if mono == CONSTANT_CLASS:
        return "1"
    if mono.eps == delta(params).eps:
        core = "delta"
    elif mono.eps == mu(params).eps:
        core = "mu"
    elif mono.eps == gamma(params).eps:
        core = "gamma"
    else:
        qs = "".join(f"Q{t + 1}" for t, b in enumerate(mono.eps) if b)
        core = f"{qs}(delta)"
    if mono.k:
        prefix = "gamma" if mono.k == 1 else f"gamma^{mono.k}"
        core = f"{prefix}*{core}"
    return core


def render_group(group, params):
    if group.is_zero:
        return "0"
    body = ",".join(render_monomial(mo, params) for mo in group.monomials)
    return f"{group.label}*{body}"
