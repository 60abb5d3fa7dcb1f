"""Exact truncated Laurent series over arbitrary-precision integers.

A series is a triple (valuation, coeffs, order): ``coeffs[i]`` is the
coefficient of q**(valuation+i), and coefficients are trusted only for
exponents strictly below ``order``.  Every operation propagates the order
pessimistically (min rule), so a trusted coefficient is never fabricated.

Values are immutable after construction and all operations are pure, so
series can be shared freely across threads.
"""

from . import _kernels
from .errors import NonUnitLeadingCoefficient, OrderExceeded


class Series:
    __slots__ = ("val", "coeffs", "order")

    def __init__(self, val, coeffs, order):
        # normalize: no leading/trailing zeros, nothing at or past order
        i = 0
        n = len(coeffs)
        while i < n and coeffs[i] == 0:
            i += 1
        if i == n:
            val, coeffs = order, []
        else:
            if val + n > order:
                n = order - val
            j = n
            while j > i and coeffs[j - 1] == 0:
                j -= 1
            coeffs = list(coeffs[i:j])
            val += i
            if not coeffs:
                val = order
        if coeffs and order <= val:
            raise ValueError("order must exceed valuation of a nonzero series")
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def make(cls, coeff_pairs, order):
        """Build a series from (exponent, coefficient) pairs.

        Exponents must be distinct and below ``order``.
        """
        seen = {}
        for e, c in coeff_pairs:
            if e in seen:
                raise ValueError(f"duplicate exponent {e}")
            if e >= order:
                raise ValueError(f"exponent {e} not below order {order}")
            seen[e] = c
        if not seen:
            return cls(order, [], order)
        lo = min(seen)
        hi = max(seen)
        coeffs = [0] * (hi - lo + 1)
        for e, c in seen.items():
            coeffs[e - lo] = c
        return cls(lo, coeffs, order)

    @classmethod
    def zero(cls, order):
        return cls(order, [], order)

    @classmethod
    def one(cls, order):
        return cls(0, [1], order)

    @classmethod
    def monomial(cls, c, e, order):
        return cls(e, [c], order)

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, n):
        """Exact coefficient of q**n; raises OrderExceeded for n >= order."""
        if n >= self.order:
            raise OrderExceeded(f"coefficient {n} beyond trusted order {self.order}")
        i = n - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coefficients(self, lo, hi):
        """Coefficients of q**lo .. q**(hi-1) as a list."""
        return [self.coefficient(n) for n in range(lo, hi)]

    def leading_coefficient(self):
        if not self.coeffs:
            return 0
        return self.coeffs[0]

    # -- ring operations ---------------------------------------------------

    def add(self, other):
        other = _promote(other, self.order)
        order = min(self.order, other.order)
        if self.is_zero():
            return other.truncate(order)
        if other.is_zero():
            return self.truncate(order)
        lo = min(self.val, other.val)
        hi = min(max(self.val + len(self.coeffs), other.val + len(other.coeffs)), order)
        out = [0] * max(hi - lo, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.val + i
                if e < order:
                    out[e - lo] += c
        return Series(lo, out, order)

    def negate(self):
        return Series(self.val, [-c for c in self.coeffs], self.order)

    def sub(self, other):
        other = _promote(other, self.order)
        return self.add(other.negate())

    def mul(self, other):
        other = _promote(other, self.order)
        order = min(self.order + other.val, other.order + self.val)
        if self.is_zero() or other.is_zero():
            return Series(order, [], order)
        val = self.val + other.val
        out = _kernels.conv(self.coeffs, other.coeffs, order - val)
        return Series(val, out, order)

    def scalar_mul(self, c):
        if c == 0:
            return Series(self.order, [], self.order)
        return Series(self.val, [c * x for x in self.coeffs], self.order)

    def exact_scalar_div(self, c):
        """Divide by a nonzero integer, requiring exact divisibility."""
        out = []
        for x in self.coeffs:
            d, r = divmod(x, c)
            if r:
                raise ValueError(f"coefficient {x} not divisible by {c}")
            out.append(d)
        return Series(self.val, out, self.order)

    def invert(self):
        """Multiplicative inverse, requiring leading coefficient +-1.

        Newton iteration w <- w*(2 - u*w) doubles the correct prefix each
        round, so inversion costs a few convolutions of the working length.
        """
        if self.is_zero():
            raise NonUnitLeadingCoefficient("cannot invert the zero series")
        lc = self.coeffs[0]
        if lc not in (1, -1):
            raise NonUnitLeadingCoefficient(
                f"leading coefficient {lc} is not a unit in the integers"
            )
        u = self.coeffs
        m = self.order - self.val
        w = [lc]
        k = 1
        while k < m:
            k = min(2 * k, m)
            t = _kernels.conv(u[: min(len(u), k)], w, k)
            e = [2 - t[0]] + [-x for x in t[1:]]
            w = _kernels.conv(w, e, k)
        return Series(-self.val, w, self.order - 2 * self.val)

    def div(self, other):
        other = _promote(other, self.order)
        return self.mul(other.invert())

    def pow(self, n):
        if n < 0:
            return self.invert().pow(-n)
        if n == 0:
            return Series.one(self.order)
        base = self
        acc = None
        while n:
            if n & 1:
                acc = base if acc is None else acc.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return acc

    # -- structural operations ----------------------------------------------

    def substitute_power(self, m):
        """q -> q**m.  Trusted below m * order."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1 or self.is_zero():
            return Series(self.val * m, self.coeffs, self.order * m)
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Series(self.val * m, out, self.order * m)

    def shift(self, k):
        """Multiply by q**k (k may be negative)."""
        return Series(self.val + k, self.coeffs, self.order + k)

    def q_derivative(self):
        """q * d/dq: the coefficient of q**n becomes n times itself."""
        return Series(
            self.val, [(self.val + i) * c for i, c in enumerate(self.coeffs)], self.order
        )

    def truncate(self, m):
        order = min(self.order, m)
        return Series(self.val, self.coeffs[: max(order - self.val, 0)], order)

    # -- comparison / presentation -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.val == other.val
            and self.coeffs == other.coeffs
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.val, tuple(self.coeffs), self.order))

    def agrees_with(self, other, n):
        """True when both series have the same coefficients below n."""
        if n > min(self.order, other.order):
            raise OrderExceeded(f"cannot compare to order {n}")
        lo = min(self.val, other.val, n)
        return self.coefficients(lo, n) == other.coefficients(lo, n)

    def first_difference(self, other):
        """Smallest trusted exponent where the two differ, or None."""
        n = min(self.order, other.order)
        lo = min(self.val, other.val, n)
        for e in range(lo, n):
            if self.coefficient(e) != other.coefficient(e):
                return e
        return None

    def to_json(self):
        return {
            "valuation": self.val,
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in exponent order."""
        return [(self.val + i, c) for i, c in enumerate(self.coeffs) if c]

    def __str__(self):
        parts = []
        for e, c in self.terms()[:12]:
            mag = abs(c)
            if e == 0:
                t = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                t = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + t)
        body = " ".join(parts).lstrip("+ ") if parts else "0"
        if body.startswith("- "):
            body = "-" + body[2:]
        if len(self.terms()) > 12:
            body += " + ..."
        return f"{body} + O(q^{self.order})"

    def __repr__(self):
        return f"Series({self})"

    # operator sugar

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = negate
    __pow__ = pow

    def __radd__(self, other):
        return _promote(other, self.order).add(self)

    def __rsub__(self, other):
        return _promote(other, self.order).sub(self)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def __truediv__(self, other):
        return self.div(other)

    def __rtruediv__(self, other):
        return _promote(other, self.order).div(self)


def _promote(x, order):
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return Series(0, [x], order)
    raise TypeError(f"cannot treat {type(x).__name__} as a series")


# module-level aliases matching the operation names used elsewhere

def make(coeff_pairs, order):
    return Series.make(coeff_pairs, order)


def add(a, b):
    return a.add(b)


def sub(a, b):
    return a.sub(b)


def negate(a):
    return a.negate()


def mul(a, b):
    return a.mul(b)


def invert(a):
    return a.invert()


def substitute_power(a, m):
    return a.substitute_power(m)


def shift(a, k):
    return a.shift(k)


def q_derivative(a):
    return a.q_derivative()


def coefficient(a, n):
    return a.coefficient(n)
