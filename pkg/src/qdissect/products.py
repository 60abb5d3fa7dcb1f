"""Expansion of q-Pochhammer products and the named series built from them.

A ``QProduct`` is a finite list of factors (s*q^j; q^m)^e with s = +-1.
Expansion never convolves full series: each (1 - s*q^d) is applied with a
single O(N) in-place pass, so a product costs O(N^2/m) integer additions.

The named functions come in pairs on purpose: the sum-side expansions
(``G_sum``, ``H_sum``, ``phi``, ``psi``) are independent of the product
machinery and act as internal oracles for it.
"""

from dataclasses import dataclass
from math import comb

from . import _kernels
from .series import Series


@dataclass(frozen=True)
class PochFactor:
    """One factor (sign*q^offset; q^modulus)^power."""

    sign: int
    offset: int
    modulus: int
    power: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if self.offset < 0:
            raise ValueError("offset must be nonnegative")
        if self.offset == 0:
            # (q^0;q^m) vanishes and (-q^0;q^m) has the non-unit constant 2;
            # no valid product needs either, so reject typos loudly.
            raise ValueError("offset 0 would make a zero or non-unit factor")


@dataclass(frozen=True)
class QProduct:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def inverse(self):
        return self.scale_powers(-1)

    def scale_powers(self, k):
        return QProduct(
            tuple(
                PochFactor(f.sign, f.offset, f.modulus, f.power * k)
                for f in self.factors
            )
        )

    def combine(self, other):
        return QProduct(self.factors + other.factors)

    def exponent_pattern(self, m):
        """Aggregate factor exponents by residue class mod m.

        Returns (eta, eta_plus): eta[r] is the net power of (1-q^n) over
        n = r (mod m) coming from plus-sign factors, eta_plus[r] the net
        power of (1+q^n) from minus-sign factors.  Requires every factor
        modulus to divide m.
        """
        eta = {}
        plus = {}
        for f in self.factors:
            if m % f.modulus:
                raise ValueError(f"period {m} not a multiple of modulus {f.modulus}")
            target = eta if f.sign == 1 else plus
            for r in range(f.offset % f.modulus, m, f.modulus):
                target[r] = target.get(r, 0) + f.power
        eta = {r: e for r, e in sorted(eta.items()) if e}
        plus = {r: e for r, e in sorted(plus.items()) if e}
        return eta, plus


def _apply_factor(c, d, s, e, n):
    """Multiply the coefficient list c by (1 - s*q^d)^e in place.

    Small |e| uses one O(n) pass per power; large |e| (prodmake output can
    carry necklace-sized exponents) expands the binomial series of the
    factor power and does a single convolution instead.
    """
    if abs(e) <= 8:
        for _ in range(abs(e)):
            if e > 0:
                for i in range(n - 1, d - 1, -1):
                    c[i] -= s * c[i - d]
            else:
                for i in range(d, n):
                    c[i] += s * c[i - d]
        return
    fc = [0] * n
    for k in range(0, (n - 1) // d + 1):
        if e > 0:
            if k > e:
                break
            fc[k * d] = comb(e, k) * (-s) ** k
        else:
            fc[k * d] = comb(-e - 1 + k, k) * s**k
    c[:] = _kernels.conv(c, fc, n)


def _expand_factors(factors, n):
    c = [0] * n
    c[0] = 1
    for f in factors:
        for d in range(f.offset, n, f.modulus):
            _apply_factor(c, d, f.sign, f.power, n)
    return Series(0, c, n)


def poch_expand(f, n):
    """Expansion of a single Pochhammer factor to order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return _expand_factors([f], n)


def product_expand(p, n):
    """Expansion of a QProduct to order n (empty product gives 1)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return _expand_factors(p.factors, n)


# ---------------------------------------------------------------------------
# Rogers-Ramanujan functions and friends
# ---------------------------------------------------------------------------

G_PRODUCT = QProduct((PochFactor(1, 1, 5, -1), PochFactor(1, 4, 5, -1)))
H_PRODUCT = QProduct((PochFactor(1, 2, 5, -1), PochFactor(1, 3, 5, -1)))
R_PRODUCT = QProduct(
    (
        PochFactor(1, 1, 5, 1),
        PochFactor(1, 4, 5, 1),
        PochFactor(1, 2, 5, -1),
        PochFactor(1, 3, 5, -1),
    )
)


def G_product(n):
    return product_expand(G_PRODUCT, n)


def H_product(n):
    return product_expand(H_PRODUCT, n)


def _rr_sum(n, step_bump):
    # terms t_k = q^(k^2 + bump*k) / (q;q)_k, built incrementally:
    # t_k = t_{k-1} * q^(2k-1+bump) / (1 - q^k)
    out = [0] * n
    t = [0] * n
    t[0] = 1
    out[0] = 1
    k = 0
    shift_total = 0
    while True:
        k += 1
        shift_total += 2 * k - 1 + step_bump
        if shift_total >= n:
            break
        t = [0] * (2 * k - 1 + step_bump) + t[: n - (2 * k - 1 + step_bump)]
        _apply_factor(t, k, 1, -1, n)
        for i in range(shift_total, n):
            out[i] += t[i]
    return Series(0, out, n)


def G_sum(n):
    """Sum side of the first Rogers-Ramanujan identity (exponents k^2)."""
    return _rr_sum(n, 0)


def H_sum(n):
    """Sum side of the second Rogers-Ramanujan identity (exponents k^2+k)."""
    return _rr_sum(n, 1)


def R(n):
    """The Rogers-Ramanujan continued fraction H/G as a product expansion."""
    return product_expand(R_PRODUCT, n)


def R_inv(n):
    return product_expand(R_PRODUCT.inverse(), n)


def phi(sign, n):
    """Theta series phi(sign*q) = sum over all integers of (sign*q)^(k^2)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = [0] * n
    c[0] = 1
    k = 1
    while k * k < n:
        c[k * k] = 2 * (sign if k % 2 else 1)
        k += 1
    return Series(0, c, n)


def psi(n):
    """Theta series psi(q) = sum of q^(k(k+1)/2)."""
    c = [0] * n
    k = 0
    while k * (k + 1) // 2 < n:
        c[k * (k + 1) // 2] = 1
        k += 1
    return Series(0, c, n)


def ramanujan_k(n):
    """q * R(q) * R(q^2)^2, the parameter tying the modular equations together."""
    r = R(n)
    r2 = R((n + 1) // 2).substitute_power(2)
    return r.mul(r2.mul(r2)).shift(1).truncate(n)
