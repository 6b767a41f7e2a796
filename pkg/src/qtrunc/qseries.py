"""Truncated formal power series over arbitrary-precision integers.

An IntSeries represents a power series known exactly up to an explicit
order N: coefficients of q^0 .. q^N are authoritative, everything above is
unknown. Arithmetic propagates validity honestly (the result order of a
binary operation is the minimum of the operand orders) and reading a
coefficient beyond the order raises instead of returning 0. That contract
is what makes every ``is this coefficient nonnegative`` verdict in the
package sound.

Coefficients are stored sparsely (theta-type series have O(sqrt N) terms);
multiplication and inversion run over dense scratch lists internally.
"""

from __future__ import annotations

import json


class IntSeries:
    """A power series with integer coefficients, exact to a fixed order.

    Instances are treated as immutable: no public operation mutates
    ``coeffs``, so series may be shared freely (memo caches rely on this).
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[int, int], order: int):
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        kept = {}
        for d, c in coeffs.items():
            if d < 0:
                raise ValueError(f"negative degree {d} in coefficient map")
            if c and d <= order:
                kept[d] = c
        self.coeffs = kept
        self.order = order

    @classmethod
    def from_dense(cls, dense: list[int], order: int | None = None) -> IntSeries:
        if order is None:
            order = len(dense) - 1
        return cls({d: c for d, c in enumerate(dense)}, order)

    @classmethod
    def one(cls, order: int) -> IntSeries:
        return cls({0: 1}, order)

    @classmethod
    def zero(cls, order: int) -> IntSeries:
        return cls({}, order)

    def dense(self, upto: int | None = None) -> list[int]:
        """Coefficients of q^0..q^upto as a fresh list (upto defaults to order)."""
        if upto is None:
            upto = self.order
        if upto > self.order:
            raise ValueError(f"coefficients beyond order {self.order} are unknown")
        out = [0] * (upto + 1)
        for d, c in self.coeffs.items():
            if d <= upto:
                out[d] = c
        return out

    def coeff(self, n: int) -> int:
        """Exact coefficient of q^n. Beyond the order it is unknown, not zero."""
        if n < 0:
            raise ValueError(f"degree must be nonnegative, got {n}")
        if n > self.order:
            raise ValueError(
                f"coefficient of q^{n} requested but series is only valid to order {self.order}"
            )
        return self.coeffs.get(n, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        terms = sorted(self.coeffs.items())[:6]
        shown = " ".join(f"{c:+d}q^{d}" for d, c in terms) or "0"
        suffix = " ..." if len(self.coeffs) > 6 else ""
        return f"IntSeries({shown}{suffix}, order={self.order})"

    def __add__(self, other: IntSeries) -> IntSeries:
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return IntSeries(out, n)

    def __sub__(self, other: IntSeries) -> IntSeries:
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) - c
        return IntSeries(out, n)

    def __neg__(self) -> IntSeries:
        return self.scale(-1)

    def scale(self, c: int) -> IntSeries:
        return IntSeries({d: c * v for d, v in self.coeffs.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = min(self.order, other.order)
        # iterate the sparser operand over a dense copy of the other
        a, b = self, other
        if len(b.coeffs) < len(a.coeffs):
            a, b = b, a
        bd = b.dense(n)
        out = [0] * (n + 1)
        for da, ca in a.coeffs.items():
            if da > n:
                continue
            for db in range(n - da + 1):
                cb = bd[db]
                if cb:
                    out[da + db] += ca * cb
        return IntSeries.from_dense(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntSeries:
        if e < 0:
            raise ValueError("negative powers are not supported; use invert")
        result = IntSeries.one(self.order)
        for _ in range(e):
            result = result * self
        return result

    def invert(self) -> IntSeries:
        """Multiplicative inverse; requires constant coefficient 1 or -1."""
        c0 = self.coeffs.get(0, 0)
        if c0 not in (1, -1):
            raise ValueError(f"cannot invert series with constant coefficient {c0}")
        n = self.order
        a = self.dense()
        nz = sorted(d for d in self.coeffs if d >= 1)
        b = [0] * (n + 1)
        b[0] = c0
        for m in range(1, n + 1):
            acc = 0
            for i in nz:
                if i > m:
                    break
                acc += a[i] * b[m - i]
            b[m] = -c0 * acc
        return IntSeries.from_dense(b)

    def shifted(self, e: int) -> IntSeries:
        """Multiply by q^e (e >= 0) or divide by q^|e| (e < 0).

        The validity window moves with the coefficients: the result order is
        order + e in both directions. A downward shift requires every
        coefficient below q^|e| to vanish.
        """
        if e >= 0:
            return IntSeries({d + e: c for d, c in self.coeffs.items()},
                             self.order + e)
        drop = -e
        if drop > self.order:
            raise ValueError(f"cannot shift down by {drop}: order is {self.order}")
        for d, c in self.coeffs.items():
            if d < drop and c:
                raise ValueError(
                    f"cannot divide by q^{drop}: nonzero coefficient at q^{d}"
                )
        return IntSeries({d - drop: c for d, c in self.coeffs.items() if d >= drop},
                         self.order - drop)

    def truncate(self, order: int) -> IntSeries:
        if order > self.order:
            raise ValueError(f"cannot extend validity from {self.order} to {order}")
        return IntSeries(self.coeffs, order)

    def times_one_minus(self, e: int) -> IntSeries:
        """Multiply by (1 - q^e) in O(order) time."""
        if e < 1:
            raise ValueError(f"exponent must be positive, got {e}")
        out = self.dense()
        for d in range(self.order, e - 1, -1):
            out[d] -= out[d - e]
        return IntSeries.from_dense(out)

    def div_one_minus(self, e: int) -> IntSeries:
        """Divide by (1 - q^e), i.e. multiply by the geometric series in q^e."""
        if e < 1:
            raise ValueError(f"exponent must be positive, got {e}")
        out = self.dense()
        for d in range(e, self.order + 1):
            out[d] += out[d - e]
        return IntSeries.from_dense(out)

    def to_json(self) -> str:
        """JSON array of decimal-string coefficients [c0, ..., cN]."""
        return json.dumps([str(c) for c in self.dense()])


def pochhammer(a: int, step: int, order: int) -> IntSeries:
    """(q^a; q^step)_infinity truncated: product of (1 - q^(a + i*step)).

    Factors whose exponent exceeds the order contribute nothing and are
    skipped, so a > order gives the constant series 1.
    """
    if a < 1 or step < 1:
        raise ValueError(f"a and step must be positive, got a={a}, step={step}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    dense = [0] * (order + 1)
    dense[0] = 1
    for e in range(a, order + 1, step):
        for d in range(order, e - 1, -1):
            dense[d] -= dense[d - e]
    return IntSeries.from_dense(dense)


def triple_product(R: int, S: int, order: int) -> IntSeries:
    """(q^S, q^(R-S), q^R; q^R)_infinity truncated to the given order."""
    if not 1 <= S < R:
        raise ValueError(f"need 1 <= S < R, got R={R}, S={S}")
    dense = [0] * (order + 1)
    dense[0] = 1
    for base in (S, R - S, R):
        for e in range(base, order + 1, R):
            for d in range(order, e - 1, -1):
                dense[d] -= dense[d - e]
    return IntSeries.from_dense(dense)


def bilateral_theta(R: int, S: int, order: int) -> IntSeries:
    """Sum over all integers j of (-1)^j q^(R*j(j+1)/2 - S*j).

    The constraint 1 <= S < R keeps every exponent nonnegative. Exponents
    from the two tails may coincide (R = 2S); contributions accumulate.
    """
    if not 1 <= S < R:
        raise ValueError(f"need 1 <= S < R, got R={R}, S={S}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs: dict[int, int] = {}
    j = 0
    while True:
        e = R * j * (j + 1) // 2 - S * j
        if e > order:
            break
        coeffs[e] = coeffs.get(e, 0) + (1 if j % 2 == 0 else -1)
        j += 1
    j = -1
    while True:
        e = R * j * (j + 1) // 2 - S * j
        if e > order:
            break
        coeffs[e] = coeffs.get(e, 0) + (1 if j % 2 == 0 else -1)
        j -= 1
    return IntSeries(coeffs, order)


def lambert_diff(R: int, S: int, order: int) -> IntSeries:
    """Series whose q^m coefficient counts divisors of m that are S mod R
    minus those that are (R-S) mod R."""
    if not 1 <= S < R:
        raise ValueError(f"need 1 <= S < R, got R={R}, S={S}")
    dense = [0] * (order + 1)
    for d in range(S, order + 1, R):
        for mult in range(d, order + 1, d):
            dense[mult] += 1
    for d in range(R - S, order + 1, R):
        for mult in range(d, order + 1, d):
            dense[mult] -= 1
    return IntSeries.from_dense(dense)


def nonneg_from(series: IntSeries, n0: int):
    """Report whether every coefficient of q^n for n0 <= n <= order is >= 0.

    The first offending degree (if any) is recorded as the violation.
    """
    from .report import CheckReport

    report = CheckReport("nonneg_from", {"n0": n0, "order": series.order})
    for n in range(n0, series.order + 1):
        c = series.coeffs.get(n, 0)
        if c < 0:
            report.add(n, ">= 0", c)
            break
    return report
