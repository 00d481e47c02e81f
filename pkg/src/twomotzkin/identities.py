"""Closed-form counting formulas and exact verifiers for the identities
relating Narayana polynomials, Catalan numbers, and weighted path sums.

Every verifier expands both sides of one identity as canonical-form
polynomials (or exact integers) and reports structural equality; nothing is
ever checked by numeric sampling. With the oracle enabled, the report also
carries the brute-force enumeration value of the quantity the identity
counts, so the closed forms are grounded in actual object counts.

Verifier ids (also the CLI vocabulary):

* eq1:  sum_k N(n,k) 4^(n-k) = sum_k C_k C(n-1,2k) 4^k 5^(n-2k-1), integers
* eq3:  sum_k N(n,k) t^(n-k) = sum_k C_k C(n-1,2k) t^k (1+t)^(n-2k-1)
* thm1: sum_k N(n,k) x^(k-1) = sum_k C_k C(n-1,2k) x^k (1+x)^(n-2k-1)
* thm2: sum_k N(n,k) x^(2k-2) (1+x)^(2n-2k) = sum_k C_(k+1) C(n-1,k) x^k (1+x)^k
* eq2:  x^2 times thm2, i.e. the run-count polynomial of multiple Dyck paths
* eq7:  run-count polynomial equals x^2 times the alternating expansion at -x

where N(n,k) = C(n,k) C(n,k-1) / n and C_n is the n-th Catalan number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import multiple_dyck_paths, plane_trees
from .poly import ONE, Poly, X, ZERO, binomial, homogeneous_substitution
from .weights import (theorem1_edge_weights, theorem2_edge_weights,
                      total_tree_weight)

ONE_PLUS_X = ONE + X


def catalan(n: int) -> int:
    """Number of plane trees with n edges, C(2n,n)/(n+1), exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return binomial(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Number of plane trees with n edges and k leaves; 0 outside 1<=k<=n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 1 or k > n:
        return 0
    product = binomial(n, k) * binomial(n, k - 1)
    quotient, remainder = divmod(product, n)
    assert remainder == 0, "the Narayana division is always exact"
    return quotient


def narayana_poly(n: int) -> Poly:
    """Generating polynomial sum_k narayana(n,k) * t^(n-k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    coeffs = [0] * n
    for k in range(1, n + 1):
        coeffs[n - k] = narayana(n, k)
    return Poly(tuple(coeffs))


def multiple_dyck_count(n: int) -> int:
    """Closed-form count of multiple Dyck paths of semilength n; it equals
    the Narayana generating polynomial evaluated at 4."""
    if n == 0:
        return 1
    return narayana_poly(n)(4)


def run_count_poly(n: int) -> Poly:
    """Generating polynomial of multiple Dyck paths of semilength n by
    number of runs: sum_k narayana(n,k) x^(2k) (1+x)^(2n-2k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    total = ZERO
    for k in range(1, n + 1):
        total = total + narayana(n, k) * X ** (2 * k) * ONE_PLUS_X ** (2 * (n - k))
    return total


def run_count_poly_enumerated(n: int) -> Poly:
    """Enumeration oracle for run_count_poly: x^(number of runs) summed
    over the actual objects."""
    counts = [0] * (2 * n + 1)
    for path in multiple_dyck_paths(n):
        counts[path.run_count] += 1
    return Poly(tuple(counts))


def run_count_poly_substituted(n: int) -> Poly:
    """run_count_poly via substituting (1+x)^2 / x^2 into the Narayana
    generating polynomial and clearing x^(2n)."""
    return homogeneous_substitution(narayana_poly(n), ONE_PLUS_X ** 2, X ** 2, n)


def run_count_table(n: int) -> dict[int, int]:
    """Number of multiple Dyck paths of semilength n with j runs, for
    j = 2 .. 2n; the values sum to multiple_dyck_count(n)."""
    poly = run_count_poly(n)
    return {j: poly.coefficient(j) for j in range(2, 2 * n + 1)}


def alternating_catalan_poly(n: int) -> Poly:
    """sum_k (-1)^k C_(k+1) C(n-1,k) x^k (1-x)^k for k = 0 .. n-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    total = ZERO
    for k in range(n):
        sign = -1 if k & 1 else 1
        total = total + (sign * catalan(k + 1) * binomial(n - 1, k)
                         * X ** k * (ONE - X) ** k)
    return total


def leaf_census(n: int) -> dict[int, int]:
    """Exhaustive count of n-edge trees by leaf count (oracle for narayana)."""
    census: dict[int, int] = {}
    for tree in plane_trees(n):
        k = tree.leaf_count()
        census[k] = census.get(k, 0) + 1
    return census


def leaf_census_poly(n: int) -> Poly:
    """Enumeration oracle for the Narayana generating polynomial:
    t^(n - leaf count) summed over all n-edge trees."""
    coeffs = [0] * n
    for tree in plane_trees(n):
        coeffs[n - tree.leaf_count()] += 1
    return Poly(tuple(coeffs))


def eval_quarter_cleared(p: Poly, n: int) -> int:
    """4^(n-1) * p(1/4) as an exact integer; needs p.degree <= n-1."""
    if p.degree > n - 1:
        raise ValueError("polynomial degree exceeds the clearing power")
    return sum(c * 4 ** (n - 1 - j) for j, c in enumerate(p.coeffs))


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one identity at one n, plus optional oracle value."""

    identity: str
    n: int
    lhs: Poly | int
    rhs: Poly | int
    equal: bool
    oracle: Poly | int | None = None
    oracle_equal: bool | None = None
    var: str = "x"

    def to_json_dict(self) -> dict:
        def fmt(value):
            return value.to_text(self.var) if isinstance(value, Poly) else str(value)

        data = {"identity": self.identity, "n": self.n, "lhs": fmt(self.lhs),
                "rhs": fmt(self.rhs), "equal": self.equal}
        if self.oracle is not None:
            data["oracle"] = fmt(self.oracle)
            data["oracle_equal"] = self.oracle_equal
        return data


def first_coefficient_difference(lhs, rhs):
    """(exponent, lhs coefficient, rhs coefficient) at the lowest exponent
    where the sides differ, or None when equal; ints act as constants."""
    if isinstance(lhs, int):
        lhs = Poly((lhs,))
    if isinstance(rhs, int):
        rhs = Poly((rhs,))
    for j in range(max(lhs.degree, rhs.degree) + 1):
        if lhs.coefficient(j) != rhs.coefficient(j):
            return j, lhs.coefficient(j), rhs.coefficient(j)
    return None


def _report(identity: str, n: int, lhs, rhs, oracle=None,
            var: str = "x") -> IdentityReport:
    oracle_equal = None if oracle is None else oracle == lhs
    return IdentityReport(identity=identity, n=n, lhs=lhs, rhs=rhs,
                          equal=lhs == rhs, oracle=oracle,
                          oracle_equal=oracle_equal, var=var)


def _dyck_position_sum(n: int) -> Poly:
    """sum_k C_k C(n-1,2k) x^k (1+x)^(n-2k-1) for k = 0 .. (n-1)//2."""
    total = ZERO
    for k in range((n - 1) // 2 + 1):
        total = total + (catalan(k) * binomial(n - 1, 2 * k)
                         * X ** k * ONE_PLUS_X ** (n - 2 * k - 1))
    return total


def _paired_level_sum(n: int) -> Poly:
    """sum_k C_(k+1) C(n-1,k) x^k (1+x)^k for k = 0 .. n-1."""
    total = ZERO
    for k in range(n):
        total = total + (catalan(k + 1) * binomial(n - 1, k)
                         * X ** k * ONE_PLUS_X ** k)
    return total


def verify_eq1(n: int, with_oracle: bool = False) -> IdentityReport:
    """Integer identity: sum_k N(n,k) 4^(n-k) equals
    sum_k C_k C(n-1,2k) 4^k 5^(n-2k-1); both count multiple Dyck paths."""
    lhs = sum(narayana(n, k) * 4 ** (n - k) for k in range(1, n + 1))
    assert lhs == narayana_poly(n)(4)
    rhs = sum(catalan(k) * binomial(n - 1, 2 * k) * 4 ** k * 5 ** (n - 2 * k - 1)
              for k in range((n - 1) // 2 + 1))
    oracle = sum(1 for _ in multiple_dyck_paths(n)) if with_oracle else None
    return _report("eq1", n, lhs, rhs, oracle)


def verify_eq3(n: int, with_oracle: bool = False) -> IdentityReport:
    """Polynomial identity behind eq1, in the variable t."""
    lhs = narayana_poly(n)
    rhs = _dyck_position_sum(n)
    oracle = leaf_census_poly(n) if with_oracle else None
    return _report("eq3", n, lhs, rhs, oracle, var="t")


def verify_theorem1(n: int, with_oracle: bool = False) -> IdentityReport:
    """sum_k N(n,k) x^(k-1) = sum_k C_k C(n-1,2k) x^k (1+x)^(n-2k-1); the
    oracle is the total tree weight under the leaf-marking weights."""
    lhs = Poly(tuple(narayana(n, k) for k in range(1, n + 1)))
    rhs = _dyck_position_sum(n)
    oracle = total_tree_weight(n, theorem1_edge_weights()) if with_oracle else None
    return _report("thm1", n, lhs, rhs, oracle)


def verify_theorem2(n: int, with_oracle: bool = False) -> IdentityReport:
    """sum_k N(n,k) x^(2k-2) (1+x)^(2n-2k) = sum_k C_(k+1) C(n-1,k) x^k (1+x)^k;
    the oracle is the total tree weight under the squared weights."""
    lhs = ZERO
    for k in range(1, n + 1):
        lhs = lhs + (narayana(n, k) * X ** (2 * (k - 1))
                     * ONE_PLUS_X ** (2 * (n - k)))
    rhs = _paired_level_sum(n)
    oracle = total_tree_weight(n, theorem2_edge_weights()) if with_oracle else None
    return _report("thm2", n, lhs, rhs, oracle)


def verify_eq2(n: int, with_oracle: bool = False) -> IdentityReport:
    """The x^2-prefactor form of thm2: the run-count polynomial equals
    x^2 sum_k C_(k+1) C(n-1,k) x^k (1+x)^k."""
    lhs = run_count_poly(n)
    rhs = X ** 2 * _paired_level_sum(n)
    oracle = run_count_poly_enumerated(n) if with_oracle else None
    return _report("eq2", n, lhs, rhs, oracle)


def verify_eq7(n: int, with_oracle: bool = False) -> IdentityReport:
    """run_count_poly(n) = x^2 * alternating_catalan_poly(n) at -x."""
    lhs = run_count_poly(n)
    rhs = X ** 2 * alternating_catalan_poly(n).reflected()
    oracle = run_count_poly_enumerated(n) if with_oracle else None
    return _report("eq7", n, lhs, rhs, oracle)


VERIFIERS = {
    "eq1": verify_eq1,
    "eq3": verify_eq3,
    "thm1": verify_theorem1,
    "thm2": verify_theorem2,
    "eq2": verify_eq2,
    "eq7": verify_eq7,
}

# Largest n at which each verifier's enumeration oracle stays cheap.
DEFAULT_ORACLE_MAX = {
    "eq1": 7,
    "eq3": 8,
    "thm1": 8,
    "thm2": 8,
    "eq2": 6,
    "eq7": 6,
}
