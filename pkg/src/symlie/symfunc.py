"""The graded ring of symmetric functions over exact rationals.

Everything is stored in the power-sum basis: a SymFunc is a sparse map
partition -> Fraction meaning sum_lam c_lam * p_lam.  The constructors
h(), e() and schur() expand into this basis, so the involution omega, the
Hall inner product and plethysm all act monomial-by-monomial.  Coefficients
are exact Fractions throughout; any rounding would be a correctness bug.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .partitions import Partition, format_partition, partitions_of, z_of

Coefficient = Fraction


class HomogeneityError(ValueError):
    """Raised when an operation requiring homogeneous input gets a mixed one."""


def _merge_parts(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class SymFunc:
    """A symmetric function expanded in the power-sum basis.

    terms maps partitions to nonzero Fractions; the empty partition carries
    the constant term.  Instances are treated as immutable values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: Dict[Partition, Fraction] = {}
        if terms:
            for lam, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[tuple(lam)] = coeff
        self.terms = clean

    @staticmethod
    def zero() -> "SymFunc":
        return SymFunc()

    @staticmethod
    def constant(c) -> "SymFunc":
        return SymFunc({(): Fraction(c)})

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def degree(self) -> int:
        """Maximal degree among stored terms (0 for the zero function)."""
        return max((sum(lam) for lam in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(lam) for lam in self.terms}
        return len(degrees) <= 1

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc({lam: c for lam, c in self.terms.items() if sum(lam) == d})

    def degrees(self) -> set:
        return {sum(lam) for lam in self.terms}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFunc):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SymFunc.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            other = SymFunc.constant(other)
        out = dict(self.terms)
        for lam, coeff in other.terms.items():
            new = out.get(lam, 0) + coeff
            if new:
                out[lam] = new
            else:
                out.pop(lam, None)
        result = SymFunc.__new__(SymFunc)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        result = SymFunc.__new__(SymFunc)
        result.terms = {lam: -c for lam, c in self.terms.items()}
        return result

    def __sub__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            other = SymFunc.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "SymFunc":
        return (-self) + other

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            if not scalar:
                return SymFunc.zero()
            result = SymFunc.__new__(SymFunc)
            result.terms = {lam: c * scalar for lam, c in self.terms.items()}
            return result
        out: Dict[Partition, Fraction] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                key = _merge_parts(lam, mu)
                new = out.get(key, 0) + a * b
                if new:
                    out[key] = new
                else:
                    del out[key]
        result = SymFunc.__new__(SymFunc)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __repr__(self):
        return f"SymFunc({render(self)})"


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    return f + g


def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


def p(k: int) -> SymFunc:
    """The power sum p_k, k >= 1."""
    if k < 1:
        raise ValueError("p_k requires k >= 1")
    return SymFunc({(k,): 1})


def p_of(lam) -> SymFunc:
    """The product p_lam for a partition lam."""
    return SymFunc({tuple(lam): 1})


@lru_cache(maxsize=None)
def h(n: int) -> SymFunc:
    """Complete homogeneous h_n = sum_{lam |- n} p_lam / z_lam; h(0) = 1."""
    if n < 0:
        raise ValueError("h_n requires n >= 0")
    return SymFunc({lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def e(n: int) -> SymFunc:
    """Elementary e_n: like h_n but with the sign (-1)^{n - length}; e(0) = 1."""
    if n < 0:
        raise ValueError("e_n requires n >= 0")
    return SymFunc(
        {
            lam: Fraction((-1) ** (n - len(lam)), z_of(lam))
            for lam in partitions_of(n)
        }
    )


def omega(f: SymFunc) -> SymFunc:
    """The involution exchanging h_n and e_n: p_lam -> (-1)^{|lam|-len(lam)} p_lam."""
    return SymFunc(
        {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in f.terms.items()}
    )


def _partition_from_betas(betas: List[int]) -> Partition:
    betas = sorted(betas, reverse=True)
    m = len(betas)
    lam = [betas[i] - (m - 1 - i) for i in range(m)]
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi^lam(mu) by border-strip removal on beta numbers.

    Removing a strip of size k replaces a beta number b by b-k; the sign is
    (-1)^{number of beta numbers strictly between them}.
    """
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    m = len(lam)
    betas = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_betas = [c for c in betas if c != b] + [nb]
        total += (-1) ** height * character(_partition_from_betas(new_betas), rest)
    return total


@lru_cache(maxsize=None)
def schur(lam) -> SymFunc:
    """Schur function s_lam = sum_{mu |- n} chi^lam(mu) p_mu / z_mu."""
    lam = tuple(lam)
    n = sum(lam)
    terms = {}
    for mu in partitions_of(n):
        chi = character(lam, mu)
        if chi:
            terms[mu] = Fraction(chi, z_of(mu))
    return SymFunc(terms)


def inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product: <p_lam, p_mu> = z_lam delta_{lam,mu}."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    total = Fraction(0)
    for lam, a in f.terms.items():
        b = g.terms.get(lam)
        if b is not None:
            total += a * b * z_of(lam)
    return total


def schur_expand(f: SymFunc) -> Dict[Partition, Fraction]:
    """Schur coefficients of a homogeneous f: lam -> <f, s_lam>.

    Since <p_mu, s_lam> = chi^lam(mu), the coefficient is
    sum_mu f_mu chi^lam(mu) with no divisions.
    """
    if not f.is_homogeneous():
        raise HomogeneityError("schur_expand requires homogeneous input")
    if not f:
        return {}
    n = f.degree()
    out = {}
    for lam in partitions_of(n):
        coeff = sum((c * character(lam, mu) for mu, c in f.terms.items()), Fraction(0))
        if coeff:
            out[lam] = coeff
    return out


def dimension(f: SymFunc) -> Fraction:
    """n! times the coefficient of p_{1^n}: the dimension of the representation
    with Frobenius characteristic f."""
    if not f.is_homogeneous():
        raise HomogeneityError("dimension requires homogeneous input")
    if not f:
        return Fraction(0)
    n = f.degree()
    return factorial(n) * f.coefficient((1,) * n)


# --- expansions into the other classical bases -------------------------------


@lru_cache(maxsize=None)
def _basis_elements(basis: str, d: int) -> Tuple[Tuple[Partition, SymFunc], ...]:
    build = h if basis == "h" else e
    out = []
    for lam in partitions_of(d):
        prod = SymFunc.constant(1)
        for part in lam:
            prod = prod * build(part)
        out.append((lam, prod))
    return tuple(out)


def _solve_in_basis(f: SymFunc, basis: str, d: int) -> Dict[Partition, Fraction]:
    # Gaussian elimination over Fractions: express the degree-d part of f on
    # the products h_lam (resp. e_lam).  The matrix is square, one row and
    # column per partition of d.
    elements = _basis_elements(basis, d)
    keys = list(partitions_of(d))
    matrix = [[vec.terms.get(mu, Fraction(0)) for _, vec in elements] for mu in keys]
    rhs = [f.terms.get(mu, Fraction(0)) for mu in keys]
    size = len(keys)
    for col in range(size):
        pivot = next(r for r in range(col, size) if matrix[r][col])
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / matrix[col][col]
        matrix[col] = [v * inv for v in matrix[col]]
        rhs[col] = rhs[col] * inv
        for r in range(size):
            if r != col and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [v - factor * w for v, w in zip(matrix[r], matrix[col])]
                rhs[r] = rhs[r] - factor * rhs[col]
    coords = {}
    for idx, (lam, _) in enumerate(elements):
        if rhs[idx]:
            coords[lam] = rhs[idx]
    return coords


def expand_in_basis(f: SymFunc, basis: str) -> Dict[Partition, Fraction]:
    """Coefficients of f on the chosen basis: p (identity), s, h or e.

    Inhomogeneous input is handled degree by degree.
    """
    if basis == "p":
        return dict(f.terms)
    out: Dict[Partition, Fraction] = {}
    for d in sorted(f.degrees()):
        part = f.homogeneous_part(d)
        if basis == "s":
            out.update(schur_expand(part))
        elif basis in ("h", "e"):
            g = omega(part) if basis == "e" else part
            for lam, c in _solve_in_basis(g, "h", d).items():
                out[lam] = c
        else:
            raise ValueError(f"unknown basis {basis!r}")
    return out


# --- rendering ----------------------------------------------------------------


def _term_sort_key(lam: Partition):
    # degree first, then ascending lexicographic within a degree, matching the
    # documented text form (p[1,1] before p[2]).
    return (sum(lam), lam)


def render(f: SymFunc, symbol: str = "p", terms: Dict[Partition, Fraction] = None) -> str:
    """Canonical text form, e.g. '1/2*p[1,1] - 1/2*p[2]'; zero renders as '0'."""
    if terms is None:
        terms = f.terms
    if not terms:
        return "0"
    pieces = []
    for lam in sorted(terms, key=_term_sort_key):
        coeff = terms[lam]
        mag = abs(coeff)
        if not lam:
            body = str(mag)
        elif mag == 1:
            body = f"{symbol}{format_partition(lam)}"
        else:
            body = f"{mag}*{symbol}{format_partition(lam)}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def to_records(f: SymFunc) -> List[dict]:
    """Structured form: [{partition, numerator, denominator}, ...], stable order."""
    return [
        {
            "partition": list(lam),
            "numerator": f.terms[lam].numerator,
            "denominator": f.terms[lam].denominator,
        }
        for lam in sorted(f.terms, key=_term_sort_key)
    ]
