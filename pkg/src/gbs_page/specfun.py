"""Special functions behind the entropy averages.

The moment polynomials

    G_i(r) = r - r^{i+1} C_i 2F1(1-i, i, 2+i, r),
    H_i(r) = 4^{i-1} (r (1-r))^i,

(C_i the i-th Catalan number) carry the partition dependence of every
average; both are symmetric about r = 1/2 and satisfy
0 <= G_i(r) <= min(r, 1-r).

``G`` is evaluated through the identity

    G_i(r) = r - 2 r I_r(i, i) + I_r(i+1, i),

where I_x(a, b) is the regularized incomplete beta function. The identity
follows by differentiating the defining polynomial (dG_i/dr = 1 - 2 I_r(i, i))
and integrating back. The direct Catalan/2F1 form is an alternating sum whose
cancellation grows like 4^i, so it loses all float64 accuracy beyond i ~ 15;
the incomplete-beta form has no cancellation and is accurate for any i. The
two routes are checked against each other (in exact rational arithmetic) in
the test suite.

``hyp2f1_vn`` sums the Gauss series

    2F1(3/2, 1+i, 5/2, x) = 3 sum_{m>=0} binom(m+i, m) x^m / (2m+3),

whose terms are all positive. It is the hypergeometric factor of the von
Neumann average coefficients; note that its value grows like (1-x)^{-i}, so
for large i it can exceed float range even though the coefficient that uses
it stays small (the fast evaluation path for that combination lives in
``pagecurve.vn_series_coefficients``).
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import betainc

__all__ = ["SeriesResult", "catalan", "hyp2f1_terminating", "hyp2f1_vn", "G", "H"]

_OVERFLOW_GUARD = 1e280
_BLOCK = 512


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series with an a-posteriori tail bound.

    ``tail_estimate`` bounds the truncation error under the geometric-tail
    assumption: at the stopping index the term ratio q is below one and
    non-increasing, so the tail is at most term / (1 - q).
    """

    value: float
    terms_used: int
    tail_estimate: float


def catalan(i: int) -> int:
    """i-th Catalan number C_i = binom(2i, i) / (i+1), exact.

    Uses the recurrence C_{i+1} = C_i * 2(2i+1) / (i+2) in arbitrary-precision
    integer arithmetic, so there is no overflow threshold.
    """
    if i < 0:
        raise ValueError(f"Catalan index must be >= 0, got {i}")
    c = 1
    for j in range(i):
        c = c * (2 * (2 * j + 1)) // (j + 2)
    return c


def hyp2f1_terminating(i: int, r: float) -> float:
    """Terminating Gauss series 2F1(1-i, i, 2+i, r), a degree i-1 polynomial.

    Summed by the stable term recurrence
    t_{m+1} = t_m * (1-i+m)(i+m) / ((2+i+m)(m+1)) * r.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    total = 0.0
    term = 1.0
    for m in range(i - 1):
        total += term
        term *= (1 - i + m) * (i + m) / ((2 + i + m) * (m + 1)) * r
    return total + term


def hyp2f1_vn(i: int, x: float, tol: float = 1e-12, term_cap: int = 10_000_000) -> SeriesResult:
    """2F1(3/2, 1+i, 5/2, x) for integer i >= 1 and 0 <= x < 1.

    Positive-term series summed in blocks until the running term falls below
    ``tol`` times the partial sum with the term ratio already below one.

    Raises:
        ValueError: for x outside [0, 1) (the series diverges at x = 1 since
            c - a - b = -i) or i < 1.
        OverflowError: when a term exceeds float range; happens for large i
            at moderate x, where only the tanh^{2i}-damped combination is
            representable.
        RuntimeError: if the tolerance is not reached within ``term_cap``.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if not 0.0 <= x < 1.0:
        raise ValueError(f"argument must lie in [0, 1), got {x!r}")
    if x == 0.0:
        return SeriesResult(value=1.0, terms_used=1, tail_estimate=0.0)

    total = 1.0 / 3.0  # m = 0 term of the reduced series
    b = 1.0  # running binom(m+i, m) x^m
    m = 0
    while m < term_cap:
        ms = np.arange(m + 1, m + 1 + _BLOCK, dtype=float)
        factors = (ms + i) / ms * x
        with np.errstate(over="ignore"):  # guarded right below
            bs = b * np.cumprod(factors)
        if bs[-1] > _OVERFLOW_GUARD:
            raise OverflowError(
                f"2F1(3/2, {1 + i}, 5/2, {x}) exceeds float64 range"
            )
        total += float(np.sum(bs / (2.0 * ms + 3.0)))
        b = float(bs[-1])
        m += _BLOCK
        q = float(factors[-1])
        term = b / (2.0 * m + 3.0)
        if q < 1.0 and term < tol * total:
            return SeriesResult(
                value=3.0 * total,
                terms_used=m + 1,
                tail_estimate=3.0 * term / (1.0 - q),
            )
    raise RuntimeError(f"series did not converge to tol={tol} within {term_cap} terms")


def G(i, r: float):
    """Moment polynomial G_i(r); vectorized over the index i.

    Evaluated as r - 2 r I_r(i, i) + I_r(i+1, i) with the regularized
    incomplete beta function I.
    """
    i_arr = np.asarray(i, dtype=float)
    if i_arr.size and i_arr.min() < 1:
        raise ValueError("index must be >= 1")
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"partition ratio must lie in [0, 1], got {r!r}")
    out = r - 2.0 * r * betainc(i_arr, i_arr, r) + betainc(i_arr + 1.0, i_arr, r)
    return out if out.ndim else float(out)


def H(i, r: float):
    """Moment weight H_i(r) = 4^{i-1} (r(1-r))^i; vectorized over the index i.

    Computed as exp((i-1) ln 4 + i ln(r(1-r))), bounded by 1/4 for every i.
    """
    i_arr = np.asarray(i, dtype=float)
    if i_arr.size and i_arr.min() < 1:
        raise ValueError("index must be >= 1")
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"partition ratio must lie in [0, 1], got {r!r}")
    v = r * (1.0 - r)
    if v == 0.0:
        out = np.zeros_like(i_arr)
    else:
        out = 0.25 * np.exp(i_arr * np.log(4.0 * v))
    return out if out.ndim else float(out)
