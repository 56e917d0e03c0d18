"""Independent brute-force computations used to validate the algebraic engine.

Nothing in here goes through the plethysm substitution or the Moebius
formula: plethysm is replayed on explicit monomial alphabets, the free Lie
character comes from rewriting actual bracketings, and the Euler/tangent
numbers are obtained by enumerating alternating permutations one at a time.

Monomial polynomials are dicts mapping exponent vectors (one int per
variable) to coefficients.  For the large oracle sweeps there are
_collected variants that return one coefficient per sorted exponent vector
(i.e. per orbit of the variable permutations), which is the same symmetric
polynomial stored without the exponential blowup.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Dict, List, Tuple

from .partitions import Partition, partitions_of, z_of
from .symfunc import SymFunc

ExponentVector = Tuple[int, ...]
MonomialPoly = Dict[ExponentVector, Fraction]


# --- plain monomial expansion ---------------------------------------------------


def _poly_mul(a: MonomialPoly, b: MonomialPoly) -> MonomialPoly:
    out: MonomialPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            new = out.get(key, 0) + ca * cb
            if new:
                out[key] = new
            else:
                del out[key]
    return out


def _power_sum_poly(k: int, m: int) -> MonomialPoly:
    out: MonomialPoly = {}
    for i in range(m):
        exponents = [0] * m
        exponents[i] = k
        out[tuple(exponents)] = Fraction(1)
    return out


def specialize(f: SymFunc, m: int) -> MonomialPoly:
    """The polynomial f(x_1, ..., x_m, 0, 0, ...): p_k maps to x_1^k + ... + x_m^k."""
    if m < 1:
        raise ValueError("need at least one variable")
    out: MonomialPoly = {}
    cache: Dict[Partition, MonomialPoly] = {(): {(0,) * m: Fraction(1)}}

    def product(lam: Partition) -> MonomialPoly:
        cached = cache.get(lam)
        if cached is None:
            cached = _poly_mul(product(lam[:-1]), _power_sum_poly(lam[-1], m))
            cache[lam] = cached
        return cached

    for lam, coeff in f.terms.items():
        for exponents, value in product(lam).items():
            new = out.get(exponents, 0) + coeff * value
            if new:
                out[exponents] = new
            else:
                del out[exponents]
    return out


def monomial_pleth(f: SymFunc, g: SymFunc, m: int) -> MonomialPoly:
    """f evaluated on the alphabet of monomials of g (with multiplicities).

    Each monomial of specialize(g, m) with coefficient c counts as c letters,
    so p_k picks up sum_j c_j * (monomial_j)^k.  Requires the expansion of g
    to have nonnegative integer coefficients.
    """
    alphabet = []
    for exponents, coeff in specialize(g, m).items():
        if coeff.denominator != 1 or coeff < 0:
            raise ValueError(
                "alphabet requires nonnegative integer monomial coefficients"
            )
        alphabet.append((exponents, int(coeff)))

    def alphabet_power(k: int) -> MonomialPoly:
        out: MonomialPoly = {}
        for exponents, mult in alphabet:
            key = tuple(x * k for x in exponents)
            out[key] = out.get(key, 0) + Fraction(mult)
        return out

    result: MonomialPoly = {}
    cache: Dict[Partition, MonomialPoly] = {(): {(0,) * m: Fraction(1)}}

    def product(lam: Partition) -> MonomialPoly:
        cached = cache.get(lam)
        if cached is None:
            cached = _poly_mul(product(lam[:-1]), alphabet_power(lam[-1]))
            cache[lam] = cached
        return cached

    for lam, coeff in f.terms.items():
        for exponents, value in product(lam).items():
            new = result.get(exponents, 0) + coeff * value
            if new:
                result[exponents] = new
            else:
                del result[exponents]
    return result


# --- orbit-collected symmetric polynomials --------------------------------------
#
# A symmetric polynomial in m variables is stored as {sorted exponent vector
# (trailing zeros stripped) -> coefficient of any one monomial in the orbit}.
# Multiplication only ever enumerates arrangements of the *smaller* factor:
# for dominant gamma, the number of monomial pairs from orbit(mu) x orbit(nu)
# landing on x^gamma is   #perms(mu) * #{beta in perms(nu): sort(mu + beta) = gamma}
#                         / #perms(gamma).

CollectedPoly = Dict[Partition, Fraction]


@lru_cache(maxsize=None)
def _perm_count(lam: Partition, m: int) -> int:
    # distinct arrangements of lam among m slots (zeros fill the rest)
    mults: Dict[int, int] = {}
    for part in lam:
        mults[part] = mults.get(part, 0) + 1
    count = factorial(m) // factorial(m - len(lam))
    for mult in mults.values():
        count //= factorial(mult)
    return count


@lru_cache(maxsize=None)
def _placements(nu: Partition, m: int) -> Tuple[ExponentVector, ...]:
    # every distinct way to place the parts of nu among m slots
    values = sorted(set(nu), reverse=True)
    out: List[ExponentVector] = []

    def place(value_index: int, free: Tuple[int, ...], vec: List[int]):
        if value_index == len(values):
            out.append(tuple(vec))
            return
        value = values[value_index]
        count = sum(1 for part in nu if part == value)
        for chosen in combinations(free, count):
            for slot in chosen:
                vec[slot] = value
            remaining = tuple(s for s in free if s not in chosen)
            place(value_index + 1, remaining, vec)
            for slot in chosen:
                vec[slot] = 0

    place(0, tuple(range(m)), [0] * m)
    return tuple(out)


def _collected_mul_term(
    mu: Partition, nu: Partition, m: int
) -> Dict[Partition, Fraction]:
    """m_mu * m_nu in m variables, as {gamma: integer multiplicity}."""
    if len(mu) > m or len(nu) > m:
        return {}
    padded = list(mu) + [0] * (m - len(mu))
    hits: Dict[Partition, int] = {}
    for beta in _placements(nu, m):
        summed = sorted((x + y for x, y in zip(padded, beta)), reverse=True)
        while summed and summed[-1] == 0:
            summed.pop()
        gamma = tuple(summed)
        hits[gamma] = hits.get(gamma, 0) + 1
    mu_count = _perm_count(mu, m)
    out: Dict[Partition, Fraction] = {}
    for gamma, cnt in hits.items():
        out[gamma] = Fraction(mu_count * cnt, _perm_count(gamma, m))
    return out


def collected_mul(a: CollectedPoly, b: CollectedPoly, m: int) -> CollectedPoly:
    """Product of two symmetric polynomials in collected (orbit) form."""
    out: CollectedPoly = {}
    for mu, ca in a.items():
        for nu, cb in b.items():
            if _perm_count(nu, m) <= _perm_count(mu, m):
                big, small = mu, nu
            else:
                big, small = nu, mu
            for gamma, mult in _collected_mul_term(big, small, m).items():
                new = out.get(gamma, 0) + ca * cb * mult
                if new:
                    out[gamma] = new
                else:
                    del out[gamma]
    return out


def collected_expand(a: CollectedPoly, m: int) -> MonomialPoly:
    """Inflate a collected polynomial back to the full monomial dict."""
    out: MonomialPoly = {}
    for lam, coeff in a.items():
        for vec in _placements(lam, m):
            out[vec] = coeff
    return out


@lru_cache(maxsize=None)
def _p_product_collected(lam: Partition, m: int) -> tuple:
    # p_lam(x_1..x_m) in collected form, shared across all callers
    if not lam:
        return (((), Fraction(1)),)
    prev = dict(_p_product_collected(lam[:-1], m))
    return tuple(collected_mul(prev, {(lam[-1],): Fraction(1)}, m).items())


def specialize_collected(f: SymFunc, m: int) -> CollectedPoly:
    """Same polynomial as specialize(f, m), in collected form."""
    if m < 1:
        raise ValueError("need at least one variable")
    out: CollectedPoly = {}
    for lam, coeff in f.terms.items():
        for gamma, value in _p_product_collected(lam, m):
            new = out.get(gamma, 0) + coeff * value
            if new:
                out[gamma] = new
            else:
                del out[gamma]
    return out


@lru_cache(maxsize=None)
def _alphabet_power_collected(g: SymFunc, m: int, k: int) -> tuple:
    alphabet = specialize_collected(g, m)
    for coeff in alphabet.values():
        if coeff.denominator != 1 or coeff < 0:
            raise ValueError(
                "alphabet requires nonnegative integer monomial coefficients"
            )
    out: CollectedPoly = {}
    for gamma, mult in alphabet.items():
        key = tuple(x * k for x in gamma)
        out[key] = out.get(key, 0) + mult
    return tuple(out.items())


@lru_cache(maxsize=None)
def _alphabet_product_collected(g: SymFunc, m: int, lam: Partition) -> tuple:
    if not lam:
        return (((), Fraction(1)),)
    prev = dict(_alphabet_product_collected(g, m, lam[:-1]))
    power = dict(_alphabet_power_collected(g, m, lam[-1]))
    return tuple(collected_mul(prev, power, m).items())


def monomial_pleth_collected(f: SymFunc, g: SymFunc, m: int) -> CollectedPoly:
    """Same polynomial as monomial_pleth(f, g, m), in collected form.

    Per-alphabet power products are cached module-wide, so sweeping many f
    against one g costs one set of products."""
    result: CollectedPoly = {}
    for lam, coeff in f.terms.items():
        for gamma, value in _alphabet_product_collected(g, m, lam):
            new = result.get(gamma, 0) + coeff * value
            if new:
                result[gamma] = new
            else:
                del result[gamma]
    return result


# --- free Lie algebra character --------------------------------------------------


def _left_normed_expansion(letters: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """Associative expansion of the left-normed bracket [[..[l1,l2],..],lk]."""
    words = {letters[:1]: 1}
    for x in letters[1:]:
        new: Dict[Tuple[int, ...], int] = {}
        for word, coeff in words.items():
            right = word + (x,)
            new[right] = new.get(right, 0) + coeff
            left = (x,) + word
            new[left] = new.get(left, 0) - coeff
        words = new
    return words


def _cycle_type_permutation(lam: Partition) -> Dict[int, int]:
    # one permutation per class: disjoint cycles on consecutive blocks
    perm = {}
    start = 1
    for part in lam:
        block = list(range(start, start + part))
        for i, value in enumerate(block):
            perm[value] = block[(i + 1) % part]
        start += part
    return perm


def lie_bracket_basis(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Letter sequences of the multilinear bracket basis, (n-1)! of them.

    Each sequence (1, s(2), ..., s(n)) stands for the left-normed bracket
    [[..[1, s(2)], ..], s(n)]; these words are exactly the multilinear
    Lyndon words on 1..n, since a word starting with its smallest letter
    precedes all of its proper suffixes."""
    if not 1 <= n <= 7:
        raise ValueError("bracket basis supported for 1 <= n <= 7")
    return tuple((1,) + sigma for sigma in permutations(range(2, n + 1)))


def lie_character(n: int) -> SymFunc:
    """Frobenius characteristic of the multilinear free Lie module, by traces.

    Basis: left-normed brackets [[..[1, s(2)], ..], s(n)] over permutations s
    of {2..n}.  The expansion of such a bracket contains exactly one word
    starting with 1, namely (1, s(2), ..., s(n)) with coefficient 1, so the
    diagonal matrix entry of a permuted bracket is read off as that word's
    coefficient.  Traces over one representative per cycle type give the
    character; the result must equal the Moebius-formula construction.
    """
    if not 1 <= n <= 7:
        raise ValueError("lie_character supports 1 <= n <= 7")
    basis = lie_bracket_basis(n)
    terms = {}
    for lam in partitions_of(n):
        perm = _cycle_type_permutation(lam)
        trace = 0
        for letters in basis:
            moved = tuple(perm[x] for x in letters)
            trace += _left_normed_expansion(moved).get(letters, 0)
        if trace:
            terms[lam] = Fraction(trace, z_of(lam))
    return SymFunc(terms)


# --- enumeration oracles ----------------------------------------------------------


@lru_cache(maxsize=None)
def alternating_count(n: int) -> int:
    """Number of down-up alternating permutations of {1..n}, by backtracking.

    Every alternating permutation is built value by value (prefixes that
    break the pattern are abandoned immediately), so this enumerates the
    objects themselves rather than using any closed formula.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 12:
        raise ValueError("enumeration capped at n = 12")
    if n <= 1:
        return 1

    values = list(range(1, n + 1))
    count = 0

    def extend(position: int, prev: int, used: int):
        nonlocal count
        if position > n:
            count += 1
            return
        descending = position % 2 == 0
        for value in values:
            bit = 1 << value
            if used & bit:
                continue
            if descending == (value < prev):
                extend(position + 1, value, used | bit)

    for first in values:
        extend(2, first, 1 << first)
    return count


def syt_count(outer, inner=()) -> int:
    """Standard Young tableaux of the skew shape outer/inner, by backtracking.

    Rows fill left to right; a cell is placeable once the cell above it is
    filled (or absent), which means each row's fill count must stay strictly
    below the previous row's frontier.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))
    if len(inner) > rows:
        raise ValueError("inner shape does not fit inside outer shape")
    for r in range(rows):
        if inner[r] > outer[r]:
            raise ValueError("inner shape does not fit inside outer shape")
    cells = sum(outer) - sum(inner)
    if cells > 13:
        raise ValueError("enumeration capped at 13 cells")
    if cells == 0:
        return 1

    frontier = list(inner)
    count = 0

    def place(remaining: int):
        nonlocal count
        if remaining == 0:
            count += 1
            return
        for r in range(rows):
            if frontier[r] >= outer[r]:
                continue
            if r > 0 and frontier[r] >= frontier[r - 1]:
                continue
            frontier[r] += 1
            place(remaining - 1)
            frontier[r] -= 1

    place(cells)
    return count
