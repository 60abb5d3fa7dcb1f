"""Coefficient sign scanning for the four dissected series.

alpha, beta, gamma, delta are the coefficient sequences of

    R(q)*R(q^2)^2,  1/(R(q)*R(q^2)^2),  R(q)^2/R(q^2),  R(q^2)/R(q)^2.

Each has a strict sign determined by the index's residue class, with three
exceptional zeros in total: alpha(4), beta(5), delta(2).
"""

import csv
from dataclasses import dataclass, field

from . import products

SERIES_NAMES = ("alpha", "beta", "gamma", "delta")


@dataclass(frozen=True)
class SignRule:
    modulus: int
    positive: frozenset
    negative: frozenset
    exceptions: frozenset = field(default_factory=frozenset)  # indices forced to 0

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        object.__setattr__(self, "exceptions", frozenset(self.exceptions))
        residues = set(range(self.modulus))
        if self.positive | self.negative != residues or self.positive & self.negative:
            raise ValueError("positive/negative residues must partition 0..modulus-1")

    def expected(self, n):
        """'zero', 'positive' or 'negative' for index n."""
        if n in self.exceptions:
            return "zero"
        return "positive" if n % self.modulus in self.positive else "negative"

    def to_json(self):
        return {
            "modulus": self.modulus,
            "positive": sorted(self.positive),
            "negative": sorted(self.negative),
            "exceptions": [[n, 0] for n in sorted(self.exceptions)],
        }


# The residue classes follow directly from the dissection theorems: each
# residue mod 5 is covered by a single product term, whose expansion fixes
# the signs.  In particular alpha(9) = +1 and alpha(14) = -3, so among the
# indices = 4 (mod 5) the positive class is 9 (mod 10) and the negative
# class is 4 (mod 10).
DEFAULT_RULES = {
    "alpha": SignRule(10, {0, 3, 6, 7, 9}, {1, 2, 4, 5, 8}, {4}),
    "beta": SignRule(10, {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {5}),
    "gamma": SignRule(5, {0, 2, 4}, {1, 3}),
    "delta": SignRule(5, {0, 1}, {2, 3, 4}, {2}),
}


def series_for(name, n):
    """Expansion of the named sequence to order n."""
    if name == "alpha" or name == "gamma":
        r = products.R(n)
    else:
        r = products.R_inv(n)
    if name in ("alpha", "beta"):
        other = (products.R if name == "alpha" else products.R_inv)((n + 1) // 2)
        return r.mul(other.substitute_power(2).pow(2)).truncate(n)
    other = (products.R_inv if name == "gamma" else products.R)((n + 1) // 2)
    return r.pow(2).mul(other.substitute_power(2)).truncate(n)


@dataclass(frozen=True)
class Violation:
    n: int
    coefficient: int
    residue: int
    expected: str

    def to_json(self):
        return {
            "n": self.n,
            "coefficient": str(self.coefficient),
            "residue": self.residue,
            "expected": self.expected,
        }


@dataclass(frozen=True)
class ScanReport:
    name: str
    order: int
    rule: SignRule
    violations: tuple
    zeros: tuple  # all indices with a zero coefficient, exceptional or not

    @property
    def passed(self):
        return not self.violations

    def to_json(self):
        return {
            "series": self.name,
            "order": self.order,
            "rule": self.rule.to_json(),
            "passed": self.passed,
            "violations": [v.to_json() for v in self.violations],
            "zeros": list(self.zeros),
        }


def scan(name, rule=None, n=1000, series=None):
    """Check every coefficient below n against the sign rule.

    Violations are returned as data, never raised: an unexpected zero, a
    wrong strict sign, or a nonzero value at a declared exceptional index
    all land in the report.
    """
    if rule is None:
        rule = DEFAULT_RULES[name]
    f = series if series is not None else series_for(name, n)
    violations = []
    zeros = []
    for i in range(n):
        c = f.coefficient(i)
        want = rule.expected(i)
        if c == 0:
            zeros.append(i)
        if want == "zero":
            ok = c == 0
        elif want == "positive":
            ok = c > 0
        else:
            ok = c < 0
        if not ok:
            violations.append(Violation(i, c, i % rule.modulus, want))
    return ScanReport(name, n, rule, tuple(violations), tuple(zeros))


def scan_rows(report, series):
    """(n, coefficient, residue, verdict) rows for CSV output."""
    rows = []
    for i in range(report.order):
        c = series.coefficient(i)
        want = report.rule.expected(i)
        if want == "zero":
            ok = c == 0
        elif want == "positive":
            ok = c > 0
        else:
            ok = c < 0
        rows.append((i, c, i % report.rule.modulus, "ok" if ok else "violation"))
    return rows


def write_csv(fh, report, series):
    w = csv.writer(fh)
    w.writerow(["n", "coefficient", "residue", "verdict"])
    for row in scan_rows(report, series):
        w.writerow(row)
