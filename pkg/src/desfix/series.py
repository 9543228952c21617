"""Rational functions with structured denominators and truncated series.

The generating-function computations in this package never need general
rational-function arithmetic: every denominator that can appear is a
product of powers of a handful of declared polynomial factors (for
example s, s-1, or 1-s*q).  A RatFn is therefore an exact integer
polynomial numerator together with an exponent vector over such a
declared FactorBasis.  Cancellation is lazy exact division against the
basis factors; needing a division outside the basis raises instead of
falling back to a general GCD.

TruncSeries is a truncated power series in one distinguished variable u
with RatFn coefficients, in either the ordinary flavor (c_n multiplies
u^n) or the exponential flavor (c_n multiplies u^n/n!).  The flavors
never mix: multiplication is Cauchy convolution for ordinary series and
binomial convolution for exponential ones.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .poly import MPoly


class FactorBasis:
    """An ordered list of polynomial factors allowed in denominators."""

    def __init__(self, vars: tuple[str, ...], factors: Sequence[MPoly]):
        self.vars = tuple(vars)
        self.factors = tuple(f.with_vars(self.vars) for f in factors)
        for f in self.factors:
            if f.is_zero:
                raise ValueError("zero factor in denominator basis")

    def one(self) -> "RatFn":
        return RatFn(MPoly.const(1, self.vars), (0,) * len(self.factors), self)

    def zero(self) -> "RatFn":
        return RatFn(MPoly.const(0, self.vars), (0,) * len(self.factors), self)

    def lift(self, p: MPoly | int) -> "RatFn":
        if isinstance(p, int):
            p = MPoly.const(p, self.vars)
        return RatFn(p.with_vars(self.vars), (0,) * len(self.factors), self)


class RatFn:
    """numerator / product(basis_factor_i ** den_i), exact and lazily reduced."""

    __slots__ = ("num", "den", "basis")

    def __init__(self, num: MPoly, den: tuple[int, ...], basis: FactorBasis):
        if len(den) != len(basis.factors):
            raise ValueError("denominator exponent arity mismatch")
        if any(e < 0 for e in den):
            raise ValueError("negative denominator exponent")
        self.num = num
        self.den = tuple(den)
        self.basis = basis
        self._reduce()

    def _reduce(self) -> None:
        if self.num.is_zero:
            self.den = (0,) * len(self.den)
            return
        den = list(self.den)
        for i, f in enumerate(self.basis.factors):
            while den[i] > 0:
                q = self.num.exact_div(f)
                if q is None:
                    break
                self.num = q
                den[i] -= 1
        self.den = tuple(den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_polynomial(self) -> bool:
        return all(e == 0 for e in self.den)

    def as_poly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: denominator exponents {self.den}")
        return self.num

    def _scale_to(self, den: tuple[int, ...]) -> MPoly:
        """Numerator rescaled to the common denominator exponents ``den``."""
        num = self.num
        for i, (have, want) in enumerate(zip(self.den, den)):
            if want > have:
                num = num * self.basis.factors[i] ** (want - have)
        return num

    def _coerce(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            if other.basis is not self.basis:
                raise ValueError("mixing factor bases")
            return other
        if isinstance(other, (int, MPoly)):
            return self.basis.lift(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        return RatFn(self._scale_to(den) + other._scale_to(den), den, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, self.basis)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den = tuple(a + b for a, b in zip(self.den, other.den))
        return RatFn(self.num * other.num, den, self.basis)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFn":
        """1/self; the numerator must factor over the basis up to sign."""
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        rem = self.num
        exps = [0] * len(self.basis.factors)
        for i, f in enumerate(self.basis.factors):
            while True:
                q = rem.exact_div(f)
                if q is None:
                    break
                rem = q
                exps[i] += 1
        unit = rem.constant_term()
        if rem != unit or unit not in (1, -1):
            raise ValueError(
                f"numerator does not factor over the denominator basis: residual {rem}"
            )
        num = MPoly.const(unit, self.basis.vars)
        for i, e in enumerate(self.den):
            if e:
                num = num * self.basis.factors[i] ** e
        return RatFn(num, tuple(exps), self.basis)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __eq__(self, other):
        if isinstance(other, (int, MPoly)):
            other = self.basis.lift(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        return self._scale_to(den) == other._scale_to(den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        parts = []
        for f, e in zip(self.basis.factors, self.den):
            if e == 1:
                parts.append(f"({f})")
            elif e > 1:
                parts.append(f"({f})^{e}")
        return f"({self.num}) / {'*'.join(parts)}"

    def __repr__(self):
        return f"RatFn({self.num!r}, {self.den!r})"


class TruncSeries:
    """Truncated series in u: coefficients c_0..c_N, ordinary or exponential."""

    __slots__ = ("flavor", "order", "coeffs", "basis")

    def __init__(self, flavor: str, coeffs: Sequence[RatFn], basis: FactorBasis):
        if flavor not in ("ordinary", "exponential"):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        self.coeffs = list(coeffs)
        self.order = len(self.coeffs) - 1
        self.basis = basis
        if self.order < 0:
            raise ValueError("series needs at least the constant coefficient")

    @classmethod
    def from_polys(cls, flavor: str, polys: Sequence[MPoly | int], basis: FactorBasis) -> "TruncSeries":
        return cls(flavor, [basis.lift(p) for p in polys], basis)

    def _check_compatible(self, other: "TruncSeries") -> None:
        if self.flavor != other.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} vs {other.flavor}")
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        if self.basis is not other.basis:
            raise ValueError("mixing factor bases")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compatible(other)
        return TruncSeries(self.flavor, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.basis)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compatible(other)
        return TruncSeries(self.flavor, [a - b for a, b in zip(self.coeffs, other.coeffs)], self.basis)

    def __mul__(self, other):
        if isinstance(other, (int, MPoly, RatFn)):
            w = other if isinstance(other, RatFn) else self.basis.lift(other)
            return TruncSeries(self.flavor, [c * w for c in self.coeffs], self.basis)
        self._check_compatible(other)
        out = []
        for n in range(self.order + 1):
            acc = self.basis.zero()
            for k in range(n + 1):
                term = self.coeffs[k] * other.coeffs[n - k]
                if self.flavor == "exponential":
                    term = term * comb(n, k)
                acc = acc + term
            out.append(acc)
        return TruncSeries(self.flavor, out, self.basis)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncSeries":
        """Multiplicative inverse up to the truncation order."""
        c0 = self.coeffs[0]
        if c0.is_zero:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        b0 = c0.reciprocal()
        out = [b0]
        for n in range(1, self.order + 1):
            acc = self.basis.zero()
            for k in range(1, n + 1):
                term = self.coeffs[k] * out[n - k]
                if self.flavor == "exponential":
                    term = term * comb(n, k)
                acc = acc + term
            out.append(-(b0 * acc))
        return TruncSeries(self.flavor, out, self.basis)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.flavor == other.flavor
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __repr__(self):
        return f"TruncSeries({self.flavor!r}, order={self.order})"


def q_pochhammer(z: MPoly, q: MPoly, m: int) -> MPoly:
    """(z; q)_m = (1 - z)(1 - z*q)...(1 - z*q^(m-1)), exact.

    >>> from desfix.poly import MPoly
    >>> t = MPoly.var("t", ("t", "q")); q = MPoly.var("q", ("t", "q"))
    >>> print(q_pochhammer(t, q, 2))
    t^2*q - t*q - t + 1
    """
    if m < 0:
        raise ValueError("negative length")
    vars = z.vars
    q = q.with_vars(vars)
    out = MPoly.const(1, vars)
    zq = z
    for _ in range(m):
        out = out * (MPoly.const(1, vars) - zq)
        zq = zq * q
    return out


def linear_factor_series(
    c: RatFn, q: MPoly, r: int, order: int, flavor: str = "ordinary"
) -> TruncSeries:
    """The series of (u*c; q)_r = prod_{i<r} (1 - u*c*q^i) in u.

    The result is an exact polynomial in u of degree r, truncated (or
    zero padded) to the requested order.
    """
    basis = c.basis
    qr = basis.lift(q)
    coeffs = [basis.one()] + [basis.zero() for _ in range(order)]
    scale = c
    for _ in range(r):
        # multiply by (1 - u*scale) in place, highest coefficient first
        for n in range(order, 0, -1):
            coeffs[n] = coeffs[n] - scale * coeffs[n - 1]
        scale = scale * qr
    return TruncSeries(flavor, coeffs, basis)


def trunc_multi_mul(
    a: dict[tuple[int, ...], int],
    b: dict[tuple[int, ...], int],
    bounds: tuple[int, ...],
) -> dict[tuple[int, ...], int]:
    """Multiply exponent-dict polynomials, dropping terms over the bounds."""
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            exp = tuple(x + y for x, y in zip(e1, e2))
            if any(e > m for e, m in zip(exp, bounds)):
                continue
            c = out.get(exp, 0) + c1 * c2
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
    return out


def geometric_expand(
    factors: Sequence[dict[tuple[int, ...], int]],
    bounds: tuple[int, ...],
) -> dict[tuple[int, ...], int]:
    """Expand 1/prod(factors) as a truncated multivariate series.

    Each factor must have constant term +1 or -1.  The reciprocal of a
    single factor 1 + g (g with no constant term) is the geometric sum
    1 - g + g^2 - ... which stabilizes under the degree bounds.
    """
    k = len(bounds)
    one = {(0,) * k: 1}
    out = dict(one)
    for f in factors:
        c0 = f.get((0,) * k, 0)
        if c0 not in (1, -1):
            raise ValueError(f"factor constant term must be +1 or -1, got {c0}")
        g = {e: c0 * c for e, c in f.items() if any(e)}  # normalized tail
        inv = dict(one)
        power = dict(one)
        total = sum(bounds)
        sign = -1
        for _ in range(total):
            power = trunc_multi_mul(power, g, bounds)
            if not power:
                break
            for e, c in power.items():
                cc = inv.get(e, 0) + sign * c
                if cc:
                    inv[e] = cc
                else:
                    inv.pop(e, None)
            sign = -sign
        if c0 == -1:
            inv = {e: -c for e, c in inv.items()}
        out = trunc_multi_mul(out, inv, bounds)
    return out
