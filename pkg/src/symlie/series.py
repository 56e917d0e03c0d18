"""Truncated graded series of symmetric functions.

A GradedSeries holds components[d] for 0 <= d <= max_degree, each a
homogeneous SymFunc of degree d.  Arithmetic on two series truncates to the
minimum of the two bounds, so no result ever claims more precision than its
inputs.  compose_scalar() substitutes a zero-constant-term series into a
univariate Taylor series with exact rational coefficients; exp, log(1+x),
tan, tanh, arctan and arctanh wrappers are provided.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, List

from .symfunc import SymFunc, omega


class NonUnitConstantError(ValueError):
    """Raised when inverting or dividing by a series whose constant term is zero."""


class GradedSeries:
    __slots__ = ("max_degree", "components")

    def __init__(self, max_degree: int, components=None):
        if max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        comps: List[SymFunc] = [SymFunc.zero()] * (max_degree + 1)
        if components is not None:
            if isinstance(components, dict):
                items = components.items()
            else:
                items = enumerate(components)
            for d, part in items:
                if d > max_degree:
                    continue
                if isinstance(part, (int, Fraction)):
                    part = SymFunc.constant(part) if d == 0 else SymFunc.zero()
                if part.degrees() - {d}:
                    raise ValueError(f"component {d} is not homogeneous of degree {d}")
                comps[d] = part
        self.max_degree = max_degree
        self.components = comps

    @staticmethod
    def constant(c, max_degree: int) -> "GradedSeries":
        return GradedSeries(max_degree, {0: SymFunc.constant(c)})

    @staticmethod
    def from_symfunc(f: SymFunc, max_degree: int) -> "GradedSeries":
        """Split an (in)homogeneous SymFunc by degree; degrees above the bound drop."""
        out = GradedSeries(max_degree)
        for lam, coeff in f.terms.items():
            d = sum(lam)
            if d <= max_degree:
                out.components[d] = out.components[d] + SymFunc({lam: coeff})
        return out

    def component(self, d: int) -> SymFunc:
        return self.components[d]

    def constant_term(self) -> Fraction:
        return self.components[0].coefficient(())

    def truncate(self, max_degree: int) -> "GradedSeries":
        n = min(max_degree, self.max_degree)
        out = GradedSeries(n)
        out.components = list(self.components[: n + 1])
        return out

    def map_components(self, fn: Callable[[SymFunc], SymFunc]) -> "GradedSeries":
        out = GradedSeries(self.max_degree)
        out.components = [fn(part) for part in self.components]
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedSeries)
            and self.max_degree == other.max_degree
            and self.components == other.components
        )

    def __bool__(self) -> bool:
        return any(self.components)

    def __add__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            other = GradedSeries.constant(other, self.max_degree)
        n = min(self.max_degree, other.max_degree)
        out = GradedSeries(n)
        out.components = [
            self.components[d] + other.components[d] for d in range(n + 1)
        ]
        return out

    __radd__ = __add__

    def __neg__(self) -> "GradedSeries":
        return self.map_components(lambda part: -part)

    def __sub__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            other = GradedSeries.constant(other, self.max_degree)
        return self + (-other)

    def __rsub__(self, other) -> "GradedSeries":
        return (-self) + other

    def __mul__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return self.map_components(lambda part: part * scalar)
        n = min(self.max_degree, other.max_degree)
        out = GradedSeries(n)
        for d in range(n + 1):
            acc = SymFunc.zero()
            for a in range(d + 1):
                fa = self.components[a]
                gb = other.components[d - a]
                if fa and gb:
                    acc = acc + fa * gb
            out.components[d] = acc
        return out

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return series_div(self, other)

    def __repr__(self):
        parts = ", ".join(f"{d}: {part!r}" for d, part in enumerate(self.components) if part)
        return f"GradedSeries(N={self.max_degree}, {{{parts}}})"


def series_mul(f: GradedSeries, g: GradedSeries) -> GradedSeries:
    return f * g


def series_inverse(f: GradedSeries) -> GradedSeries:
    """Multiplicative inverse of a series with invertible (nonzero rational)
    constant term; the constant is divided out first so 1/c leads."""
    c0 = f.components[0]
    if c0.terms and set(c0.terms) != {()}:
        raise NonUnitConstantError("constant component is not a scalar")
    c = f.constant_term()
    if not c:
        raise NonUnitConstantError("cannot invert a series with zero constant term")
    n = f.max_degree
    inv_c = Fraction(1) / c
    out = GradedSeries(n)
    out.components[0] = SymFunc.constant(inv_c)
    for d in range(1, n + 1):
        acc = SymFunc.zero()
        for j in range(1, d + 1):
            fj = f.components[j]
            rk = out.components[d - j]
            if fj and rk:
                acc = acc + fj * rk
        out.components[d] = acc * (-inv_c)
    return out


def series_div(f: GradedSeries, g: GradedSeries) -> GradedSeries:
    return f * series_inverse(g)


def parity_split(f: GradedSeries, parity: str, alternating: bool = False) -> GradedSeries:
    """Keep only odd- or even-degree components; with alternating=True the
    degree-(2k+1) (odd) or degree-2k (even) component is scaled by (-1)^k."""
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    want = 1 if parity == "odd" else 0
    out = GradedSeries(f.max_degree)
    for d in range(f.max_degree + 1):
        if d % 2 != want:
            continue
        part = f.components[d]
        if alternating and (d // 2) % 2:
            part = -part
        out.components[d] = part
    return out


def omega_series(f: GradedSeries) -> GradedSeries:
    return f.map_components(omega)


def compose_scalar(coeffs, g: GradedSeries) -> GradedSeries:
    """sum_{m>=1} c_m g^m truncated at g's bound; g must have zero constant term.

    coeffs is a sequence or callable giving the exact rational c_m (m >= 1).
    """
    if g.components[0]:
        raise NonUnitConstantError("composition requires zero constant term")
    n = g.max_degree
    if callable(coeffs):
        cs = [Fraction(coeffs(m)) for m in range(1, n + 1)]
    else:
        cs = [Fraction(c) for c in list(coeffs)[:n]]
        cs += [Fraction(0)] * (n - len(cs))
    out = GradedSeries(n)
    power = GradedSeries.constant(1, n)
    for m in range(1, n + 1):
        power = power * g
        if not power:
            break
        if cs[m - 1]:
            out = out + power * cs[m - 1]
    return out


# Exact Taylor coefficients for the named wrappers.


def _exp_coeff(m: int) -> Fraction:
    return Fraction(1, factorial(m))


def _log1p_coeff(m: int) -> Fraction:
    return Fraction((-1) ** (m - 1), m)


def _arctan_coeff(m: int) -> Fraction:
    if m % 2 == 0:
        return Fraction(0)
    return Fraction((-1) ** ((m - 1) // 2), m)


def _arctanh_coeff(m: int) -> Fraction:
    if m % 2 == 0:
        return Fraction(0)
    return Fraction(1, m)


@lru_cache(maxsize=None)
def _tan_like_coeffs(n: int, hyperbolic: bool) -> tuple:
    # tan = sin/cos and tanh = sinh/cosh as univariate series, solved from
    # t * cos = sin term by term.
    def sin_c(j):
        if j % 2 == 0:
            return Fraction(0)
        sign = 1 if hyperbolic else (-1) ** ((j - 1) // 2)
        return Fraction(sign, factorial(j))

    def cos_c(j):
        if j % 2 == 1:
            return Fraction(0)
        sign = 1 if hyperbolic else (-1) ** (j // 2)
        return Fraction(sign, factorial(j))

    t = [Fraction(0)] * (n + 1)
    for j in range(1, n + 1):
        t[j] = sin_c(j) - sum(t[i] * cos_c(j - i) for i in range(1, j))
    return tuple(t)


def tan_coeff(m: int) -> Fraction:
    return _tan_like_coeffs(m, False)[m]


def tanh_coeff(m: int) -> Fraction:
    return _tan_like_coeffs(m, True)[m]


def exp_series(g: GradedSeries) -> GradedSeries:
    """exp(g) = 1 + sum_{m>=1} g^m / m! for g with zero constant term."""
    return compose_scalar(_exp_coeff, g) + 1


def log1p_series(g: GradedSeries) -> GradedSeries:
    return compose_scalar(_log1p_coeff, g)


def tan_series(g: GradedSeries) -> GradedSeries:
    return compose_scalar(tan_coeff, g)


def tanh_series(g: GradedSeries) -> GradedSeries:
    return compose_scalar(tanh_coeff, g)


def arctan_series(g: GradedSeries) -> GradedSeries:
    return compose_scalar(_arctan_coeff, g)


def arctanh_series(g: GradedSeries) -> GradedSeries:
    return compose_scalar(_arctanh_coeff, g)
