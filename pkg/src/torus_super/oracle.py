"""Brute-force symmetric-function oracle for the closed-form ingredients.

Everything here is deliberately independent of the factored closed forms it
validates: Macdonald polynomials are built from scratch by Gram-Schmidt
orthogonalization of the monomial basis (ordered by dominance) with respect
to the (q, t) power-sum inner product

    <p_lam, p_mu> = delta * z_lam * prod_i (1 - q^lam_i) / (1 - t^lam_i),

with basis conversions through explicit polynomial expansions and an exact
rational linear solve.  Desk scale only: degrees up to 5.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .algebra import (
    MACD,
    Alphabet,
    Coeff,
    FactoredRational,
    LaurentPolynomial,
    Monomial,
    NonDivisibleError,
    SubstitutionMap,
    exact_divide,
    monomial_inverse,
    monomial_mul,
    unit_monomial,
)
from .macdonald import cauchy_norm, macdonald_dimension, power_sum_coefficient
from .partitions import (
    Partition,
    check_partition,
    dominance_leq,
    enumerate_partitions,
    size,
)

QT: Alphabet = ("q", "t")

MAX_DEGREE = 5


# -- bivariate gcd (used only to keep oracle fractions reduced) -----------------
#
# Dense univariate polynomials over Q are plain lists of Fractions (index =
# exponent, no trailing zeros).  A bivariate polynomial becomes a list of
# those, indexed by the main variable's exponent.  The gcd evaluates the
# coefficient variable at integers, takes monic univariate gcds, interpolates
# the result back (scaled by the gcd of the leading coefficients, which the
# true leading coefficient divides), and certifies by exact division.
# Coprime inputs, the common case, exit after a single evaluation.


def _p1_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _p1_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _p1_trim(out)


def _p1_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(rem) >= len(b):
        c = rem[-1] * inv_lead
        shift = len(rem) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        _p1_trim(rem)
        if len(rem) >= len(b) and not rem[-1]:
            _p1_trim(rem)
    return _p1_trim(quot), rem


def _p1_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _p1_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    inv = 1 / a[-1]
    return [c * inv for c in a]


def _p1_exact_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    q, r = _p1_divmod(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def _p1_eval(a: list[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _p2_content(f: list[list[Fraction]]) -> list[Fraction]:
    g: list[Fraction] = []
    for coeff in f:
        if coeff:
            g = _p1_gcd(g, coeff) if g else [c / coeff[-1] for c in coeff]
            if len(g) == 1:
                break
    return g or []


def _p2_primitive(f: list[list[Fraction]]) -> list[list[Fraction]]:
    cont = _p2_content(f)
    if not cont or len(cont) == 1:
        return f
    return [_p1_exact_div(c, cont) if c else [] for c in f]


def _p2_trim(f: list[list[Fraction]]) -> list[list[Fraction]]:
    while f and not f[-1]:
        f.pop()
    return f


def _interpolate(points: list[tuple[int, list[Fraction]]], width: int) -> list[list[Fraction]]:
    """Newton interpolation of each main-variable coefficient through points."""
    xs = [Fraction(x) for x, _ in points]
    count = len(points)
    out: list[list[Fraction]] = []
    for j in range(width):
        dd = [vals[j] if j < len(vals) else Fraction(0) for _, vals in points]
        for k in range(1, count):
            for i in range(count - 1, k - 1, -1):
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k])
        poly = [dd[count - 1]]
        for i in range(count - 2, -1, -1):
            shifted = [Fraction(0)] + poly
            for k, c in enumerate(poly):
                shifted[k] -= xs[i] * c
            shifted[0] += dd[i]
            poly = shifted
        out.append(_p1_trim(poly))
    return out


def _gcd_terms(
    fa: dict[Monomial, Coeff], fb: dict[Monomial, Coeff]
) -> dict[Monomial, Fraction]:
    """Gcd of two ordinary (q, t) polynomials given as exponent dicts."""
    deg_q = max(max(e[0] for e in fa), max(e[0] for e in fb))
    deg_t = max(max(e[1] for e in fa), max(e[1] for e in fb))
    main = 0 if deg_q <= deg_t else 1  # univariate gcds along the sparser axis

    def pack(terms: dict[Monomial, Coeff]) -> list[list[Fraction]]:
        md = max(e[main] for e in terms)
        od = max(e[1 - main] for e in terms)
        out: list[list[Fraction]] = [[Fraction(0)] * (od + 1) for _ in range(md + 1)]
        for e, c in terms.items():
            out[e[main]][e[1 - main]] += Fraction(c)
        return _p2_trim([_p1_trim(c) for c in out])

    def unpack(f: list[list[Fraction]]) -> dict[Monomial, Fraction]:
        out: dict[Monomial, Fraction] = {}
        for em, coeff in enumerate(f):
            for eo, c in enumerate(coeff):
                if c:
                    out[(em, eo) if main == 0 else (eo, em)] = c
        return out

    f, g = pack(fa), pack(fb)
    cont = _p1_gcd(_p2_content(f), _p2_content(g))
    f, g = _p2_primitive(f), _p2_primitive(g)
    if len(f) == 1 or len(g) == 1:
        return unpack([cont])

    lead_f, lead_g = f[-1], g[-1]
    gamma = _p1_gcd(lead_f, lead_g)
    need = len(gamma) + min(max(len(c) for c in f), max(len(c) for c in g)) - 1
    limit = max(len(c) for c in f) + max(len(c) for c in g) + len(gamma)

    points: list[tuple[int, list[Fraction]]] = []
    best: int | None = None
    for x in itertools.count():
        if x > 4 * limit + 16:
            raise ArithmeticError("bivariate gcd ran out of evaluation points")
        if _p1_eval(lead_f, x) == 0 or _p1_eval(lead_g, x) == 0:
            continue
        h = _p1_gcd(
            _p1_trim([_p1_eval(c, x) for c in f]),
            _p1_trim([_p1_eval(c, x) for c in g]),
        )
        if len(h) == 1:
            return unpack([cont])
        if best is None or len(h) < best:
            best, points = len(h), []
        elif len(h) > best:
            continue
        scale = _p1_eval(gamma, x)
        points.append((x, [c * scale for c in h]))
        if len(points) < need:
            continue
        candidate = _p2_primitive(_interpolate(points, best))
        full = [_p1_mul(c, cont) for c in candidate] if len(cont) > 1 else candidate
        probe = LaurentPolynomial(QT, unpack(full))
        try:
            exact_divide(LaurentPolynomial(QT, dict(fa)), probe)
            exact_divide(LaurentPolynomial(QT, dict(fb)), probe)
        except NonDivisibleError:
            need = limit  # unlucky sample set; widen once, then give up above
            continue
        return unpack(full)
    raise AssertionError("unreachable")


def _reduce_fraction(
    num: LaurentPolynomial, den: LaurentPolynomial
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Cancel the polynomial gcd of a (q, t) fraction, contents aside."""
    num_ord = num.shifted(monomial_inverse(num.content()))
    den_ord = den.shifted(monomial_inverse(den.content()))
    g = _gcd_terms(num_ord.terms, den_ord.terms)
    if len(g) <= 1:
        return num, den
    gpoly = LaurentPolynomial(QT, g)
    return exact_divide(num, gpoly), exact_divide(den, gpoly)


class RationalFunction:
    """Quotient of two exact (q, t) Laurent polynomials; no gcd reduction.

    A shared monomial content is stripped and the denominator's leading sign
    is normalized, which keeps sizes tame at desk scale.  Equality goes
    through cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None):
        if den is None:
            den = LaurentPolynomial.one(num.alphabet)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.alphabet != den.alphabet:
            raise ValueError("numerator and denominator over different alphabets")
        if num.is_zero():
            den = LaurentPolynomial.one(num.alphabet)
        elif num == den:
            num = LaurentPolynomial.one(num.alphabet)
            den = LaurentPolynomial.one(num.alphabet)
        elif den.term_count == 1:
            # Monomial denominators are units: absorb them into the numerator.
            exps, c = next(iter(den.terms.items()))
            num = num.shifted(tuple(-x for x in exps), Fraction(1, 1) / c)
            den = LaurentPolynomial.one(num.alphabet)
        else:
            c_num = num.content()
            c_den = den.content()
            common = tuple(min(a, b) for a, b in zip(c_num, c_den))
            if any(common):
                inv = tuple(-x for x in common)
                num = num.shifted(inv)
                den = den.shifted(inv)
            if len(num.alphabet) == 2:
                num, den = _reduce_fraction(num, den)
                if den.term_count == 1:
                    exps, c = next(iter(den.terms.items()))
                    num = num.shifted(tuple(-x for x in exps), Fraction(1, 1) / c)
                    den = LaurentPolynomial.one(num.alphabet)
        lead = max(den.terms) if den.terms else None
        if lead is not None and den.terms[lead] < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, value: Coeff, alphabet: Alphabet = QT) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(alphabet, value))

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> "RationalFunction":
        return cls(p)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other, self.num.alphabet)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction.const(0, self.num.alphabet)
        # Diagonal cancellations keep Gram-Schmidt products from snowballing.
        if self.num == other.den:
            return RationalFunction(other.num, self.den)
        if other.num == self.den:
            return RationalFunction(self.num, other.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFunction(other.den, other.num)

    def scale(self, value: Coeff) -> "RationalFunction":
        return RationalFunction(self.num * value, self.den)

    def substitute(self, sub: SubstitutionMap) -> "RationalFunction":
        return RationalFunction(self.num.substitute(sub), self.den.substitute(sub))

    def __repr__(self) -> str:
        return f"({self.num}) / ({self.den})"


RF_ZERO = RationalFunction.const(0)
RF_ONE = RationalFunction.const(1)


def _qt_of_macd(p: LaurentPolynomial) -> LaurentPolynomial:
    """Drop the A coordinate of an (q, t, A) polynomial that never uses it."""
    terms = {}
    for (eq, et, ea), c in p.terms.items():
        if ea:
            raise ValueError("polynomial genuinely involves A")
        terms[(eq, et)] = c
    return LaurentPolynomial(QT, terms)


def rational_of_factored(fr) -> RationalFunction:
    """Expand a factored (q, t)-only rational into a RationalFunction."""
    num, den = fr.expand()
    return RationalFunction(_qt_of_macd(num), _qt_of_macd(den))


# -- concrete symmetric polynomials over x variables ---------------------------


def x_alphabet(count: int, prefix: str = "x") -> Alphabet:
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def monomial_symmetric(alphabet: Alphabet, mu: Partition) -> LaurentPolynomial:
    """m_mu: sum of all distinct permutations of the padded exponent vector."""
    n = len(alphabet)
    if len(mu) > n:
        return LaurentPolynomial.zero(alphabet)
    padded = tuple(mu) + (0,) * (n - len(mu))
    terms = {perm: 1 for perm in set(itertools.permutations(padded))}
    return LaurentPolynomial(alphabet, terms)


def power_sum(alphabet: Alphabet, k: int) -> LaurentPolynomial:
    terms = {}
    for i in range(len(alphabet)):
        e = [0] * len(alphabet)
        e[i] = k
        terms[tuple(e)] = 1
    return LaurentPolynomial(alphabet, terms)


def power_sum_product(alphabet: Alphabet, lam: Partition) -> LaurentPolynomial:
    out = LaurentPolynomial.one(alphabet)
    for part in lam:
        out = out * power_sum(alphabet, part)
    return out


def complete_homogeneous(alphabet: Alphabet, k: int) -> LaurentPolynomial:
    terms: dict[Monomial, int] = {}
    for combo in itertools.combinations_with_replacement(range(len(alphabet)), k):
        e = [0] * len(alphabet)
        for i in combo:
            e[i] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPolynomial(alphabet, terms)


def coefficient_of_msym(p: LaurentPolynomial, mu: Partition) -> Coeff:
    """Coefficient of m_mu inside a symmetric polynomial (its sorted exponent)."""
    n = len(p.alphabet)
    exps = tuple(mu) + (0,) * (n - len(mu))
    return p.coefficient(exps)


# -- exact linear algebra -------------------------------------------------------


def invert_fraction_matrix(rows: Sequence[Sequence[Coeff]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _power_to_monomial_matrix(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Rows lam, columns mu: coefficient of m_mu in p_lam, at n variables."""
    plist = tuple(enumerate_partitions(n))
    alphabet = x_alphabet(n)
    matrix = []
    for lam in plist:
        concrete = power_sum_product(alphabet, lam)
        matrix.append(tuple(int(coefficient_of_msym(concrete, mu)) for mu in plist))
    return plist, tuple(matrix)


@lru_cache(maxsize=None)
def _monomial_to_power_inverse(n: int) -> tuple[tuple[Fraction, ...], ...]:
    plist, pm = _power_to_monomial_matrix(n)
    transposed = [[pm[j][i] for j in range(len(plist))] for i in range(len(plist))]
    inv = invert_fraction_matrix(transposed)
    return tuple(tuple(row) for row in inv)


def m_vector_to_p_vector(n: int, coeffs: Sequence[RationalFunction]) -> list[RationalFunction]:
    inv = _monomial_to_power_inverse(n)
    out = []
    for row in inv:
        total = RationalFunction.const(0)
        for scalar, rf in zip(row, coeffs):
            if scalar and not rf.is_zero():
                total = total + rf.scale(scalar)
        out.append(total)
    return out


def z_factor(lam: Partition) -> int:
    z = 1
    for part in set(lam):
        mult = lam.count(part)
        z *= part**mult * factorial(mult)
    return z


@lru_cache(maxsize=None)
def _power_sum_weight(lam: Partition) -> RationalFunction:
    """z_lam * prod (1 - q^lam_i) / (1 - t^lam_i)."""
    num = LaurentPolynomial.constant(QT, z_factor(lam))
    den = LaurentPolynomial.one(QT)
    for part in lam:
        num = num * LaurentPolynomial(QT, {(0, 0): 1, (part, 0): -1})
        den = den * LaurentPolynomial(QT, {(0, 0): 1, (0, part): -1})
    return RationalFunction(num, den)


def inner_product_p(
    n: int, fp: Sequence[RationalFunction], gp: Sequence[RationalFunction]
) -> RationalFunction:
    plist, _ = _power_to_monomial_matrix(n)
    total = RationalFunction.const(0)
    for lam, a, b in zip(plist, fp, gp):
        if a.is_zero() or b.is_zero():
            continue
        total = total + a * b * _power_sum_weight(lam)
    return total


def inner_product(
    n: int,
    f: Mapping[Partition, RationalFunction],
    g: Mapping[Partition, RationalFunction],
) -> RationalFunction:
    """Macdonald inner product of two degree-n functions given in the m-basis."""
    plist, _ = _power_to_monomial_matrix(n)
    fv = [f.get(mu, RF_ZERO) for mu in plist]
    gv = [g.get(mu, RF_ZERO) for mu in plist]
    return inner_product_p(n, m_vector_to_p_vector(n, fv), m_vector_to_p_vector(n, gv))


# -- Macdonald polynomials by Gram-Schmidt ---------------------------------------


@lru_cache(maxsize=None)
def _macdonald_family(n: int):
    """All P_y of degree n: m-basis dicts, p-basis vectors, and norms.

    Partitions are processed along a linear extension of dominance from the
    bottom; triangularity and monicity of the outcome are asserted rather
    than assumed.
    """
    if n > MAX_DEGREE:
        raise ValueError(f"oracle capped at degree {MAX_DEGREE}")
    plist, _ = _power_to_monomial_matrix(n)
    ascending = list(reversed(plist))

    built_p: dict[Partition, list[RationalFunction]] = {}
    built_m: dict[Partition, dict[Partition, RationalFunction]] = {}
    norms: dict[Partition, RationalFunction] = {}

    for y in ascending:
        mvec = [RF_ONE if mu == y else RF_ZERO for mu in plist]
        pvec = m_vector_to_p_vector(n, mvec)
        mdict: dict[Partition, RationalFunction] = {y: RF_ONE}
        for prev in built_p:
            coeff = inner_product_p(n, pvec, built_p[prev]) / norms[prev]
            if coeff.is_zero():
                continue
            prev_p = built_p[prev]
            pvec = [a - coeff * b for a, b in zip(pvec, prev_p)]
            for mu, c in built_m[prev].items():
                mdict[mu] = mdict.get(mu, RF_ZERO) - coeff * c
        mdict = {mu: c for mu, c in mdict.items() if not c.is_zero()}
        if mdict.get(y) != RF_ONE:
            raise AssertionError(f"P_{y} failed monicity")
        for mu in mdict:
            if not dominance_leq(mu, y):
                raise AssertionError(f"P_{y} has a coefficient above dominance at {mu}")
        built_p[y] = pvec
        built_m[y] = mdict
        norms[y] = inner_product_p(n, pvec, pvec)
        if norms[y].is_zero():
            raise AssertionError(f"P_{y} has vanishing norm")
    return plist, built_m, built_p, norms


def macdonald_P_mbasis(y: Partition) -> dict[Partition, RationalFunction]:
    """P_y as monomial-basis coefficients over Q(q, t); monic at m_y."""
    y = check_partition(y)
    _, built_m, _, _ = _macdonald_family(size(y))
    return built_m[y]


def macdonald_P(y: Partition, num_vars: int) -> dict[Monomial, RationalFunction]:
    """P_y expanded into monomials of x_1 .. x_num_vars."""
    y = check_partition(y)
    if num_vars > 6:
        raise ValueError("oracle capped at 6 variables")
    alphabet = x_alphabet(num_vars)
    out: dict[Monomial, RationalFunction] = {}
    for mu, c in macdonald_P_mbasis(y).items():
        concrete = monomial_symmetric(alphabet, mu)
        for exps, msign in concrete.terms.items():
            add = c.scale(msign)
            prev = out.get(exps)
            out[exps] = add if prev is None else prev + add
    return {e: c for e, c in out.items() if not c.is_zero()}


def macdonald_norm(y: Partition) -> RationalFunction:
    y = check_partition(y)
    _, _, _, norms = _macdonald_family(size(y))
    return norms[y]


# -- verification routines ---------------------------------------------------------


def principal_value(y: Partition, num_vars: int) -> RationalFunction:
    """P_y at x_i = t^(i-1) for i = 1 .. num_vars, computed from the m-basis."""
    y = check_partition(y)
    total = RationalFunction.const(0)
    for mu, c in macdonald_P_mbasis(y).items():
        if len(mu) > num_vars:
            continue
        padded = tuple(mu) + (0,) * (num_vars - len(mu))
        spec: dict[Monomial, int] = {}
        for perm in set(itertools.permutations(padded)):
            e = sum((i - 1) * p for i, p in enumerate(perm, start=1))
            spec[(0, e)] = spec.get((0, e), 0) + 1
        total = total + c * RationalFunction(LaurentPolynomial(QT, spec))
    return total


def _dimension_closed_form(y: Partition, num_vars: int) -> RationalFunction:
    num, den = macdonald_dimension(y).expand()
    to_qt = SubstitutionMap(
        MACD, QT, {"q": (1, (1, 0)), "t": (1, (0, 1)), "A": (1, (0, num_vars))}
    )
    return RationalFunction(num.substitute(to_qt), den.substitute(to_qt))


def verify_dimension(y: Partition, num_vars: int) -> bool:
    """Brute-force principal specialization against the hook-style closed form."""
    return principal_value(y, num_vars) == _dimension_closed_form(y, num_vars)


def verify_orthogonality(n: int) -> bool:
    """All distinct pairs at degree n pair to zero under the inner product."""
    plist, _, built_p, _ = _macdonald_family(n)
    for i, a in enumerate(plist):
        for b in plist[i + 1:]:
            if not inner_product_p(n, built_p[a], built_p[b]).is_zero():
                return False
    return True


def verify_power_sum_expansion(n: int) -> bool:
    """Solve p_n = sum_y c_y P_y triangularly; compare with the closed form."""
    plist, built_m, _, _ = _macdonald_family(n)
    alphabet = x_alphabet(n)
    concrete = power_sum(alphabet, n)
    residual: dict[Partition, RationalFunction] = {}
    for mu in plist:
        c = coefficient_of_msym(concrete, mu)
        if c:
            residual[mu] = RationalFunction.const(c)
    solved: dict[Partition, RationalFunction] = {}
    for y in plist:  # dominance-descending linear extension
        c = residual.get(y, RF_ZERO)
        solved[y] = c
        if c.is_zero():
            continue
        for mu, pc in built_m[y].items():
            residual[mu] = residual.get(mu, RF_ZERO) - c * pc
    if any(not v.is_zero() for v in residual.values()):
        return False
    for y in plist:
        closed = rational_of_factored(power_sum_coefficient(y))
        if solved[y] != closed:
            return False
    return True


def _exp_series_coefficients(
    order: int, factors: dict[int, RationalFunction], tensor: dict[int, LaurentPolynomial]
) -> list[dict[Monomial, RationalFunction]]:
    """Coefficients of Lambda^0..Lambda^order in exp(sum_k a_k Lambda^k) where
    a_k = factors[k] * tensor[k]; grouped by partition instead of expanding exp."""
    out: list[dict[Monomial, RationalFunction]] = [dict() for _ in range(order + 1)]
    alphabet = tensor[1].alphabet if 1 in tensor else None
    for j in range(order + 1):
        acc: dict[Monomial, RationalFunction] = {}
        for lam in enumerate_partitions(j):
            scalar = RationalFunction.const(Fraction(1, z_factor(lam)))
            for part in lam:
                scalar = scalar * factors[part]
            poly = None
            for part in lam:
                poly = tensor[part] if poly is None else poly * tensor[part]
            if poly is None:
                poly = LaurentPolynomial.one(alphabet) if alphabet else None
            if poly is None:
                acc[()] = scalar
                continue
            for exps, c in poly.terms.items():
                add = scalar.scale(c)
                prev = acc.get(exps)
                acc[exps] = add if prev is None else prev + add
        out[j] = {e: v for e, v in acc.items() if not v.is_zero()}
    return out


def verify_cauchy(order: int, nx: int, ny: int, principal_l: int | None = None) -> bool:
    """Kernel identity to order Lambda^order, expanded over explicit variables.

    With ``principal_l`` set, the y side is specialized to (1, t, ..,
    t^(L-1)), replaying the finite-L step of the expansion-coefficient
    derivation before its limit.
    """
    if order > 3:
        raise ValueError("kernel check capped at order 3")
    xs = x_alphabet(nx)
    if principal_l is None:
        ys = x_alphabet(ny, prefix="y")
        joint = xs + ys
        lift_x = {v: (1, tuple(int(joint[i] == v) for i in range(len(joint)))) for v in xs}
        lift_y = {v: (1, tuple(int(joint[i] == v) for i in range(len(joint)))) for v in ys}
        sub_x = SubstitutionMap(xs, joint, lift_x)
        sub_y = SubstitutionMap(ys, joint, lift_y)
    else:
        joint = xs
        sub_x = None
        sub_y = None

    # Left side: sum over |Y| <= order of b_Y * M_Y(x) * M_Y(y).
    lhs: list[dict[Monomial, RationalFunction]] = [dict() for _ in range(order + 1)]
    lhs[0][unit_monomial(joint)] = RF_ONE
    for j in range(1, order + 1):
        acc: dict[Monomial, RationalFunction] = {}
        for y in enumerate_partitions(j):
            b = rational_of_factored(cauchy_norm(y))
            mx = macdonald_P(y, nx)
            if principal_l is None:
                my = macdonald_P(y, ny)
                pairs = (
                    (monomial_mul(sub_x.image(ex)[1], sub_y.image(ey)[1]), cx * cy)
                    for ex, cx in mx.items()
                    for ey, cy in my.items()
                )
            else:
                pv = principal_value(y, principal_l)
                pairs = ((ex, cx * pv) for ex, cx in mx.items())
            for exps, c in pairs:
                v = b * c
                prev = acc.get(exps)
                acc[exps] = v if prev is None else prev + v
        lhs[j] = {e: v for e, v in acc.items() if not v.is_zero()}

    # Right side: exp(sum_k Lambda^k / k * (1-t^k)/(1-q^k) * p_k(x) p_k(y)).
    factors: dict[int, RationalFunction] = {}
    tensor: dict[int, LaurentPolynomial] = {}
    for k in range(1, order + 1):
        if principal_l is None:
            factors[k] = RationalFunction(
                LaurentPolynomial(QT, {(0, 0): 1, (0, k): -1}),
                LaurentPolynomial(QT, {(0, 0): 1, (k, 0): -1}),
            )
            px = power_sum(xs, k).substitute(sub_x)
            py = power_sum(ys, k).substitute(sub_y)
            tensor[k] = px * py
        else:
            factors[k] = RationalFunction(
                LaurentPolynomial(QT, {(0, 0): 1, (0, k * principal_l): -1}),
                LaurentPolynomial(QT, {(0, 0): 1, (k, 0): -1}),
            )
            tensor[k] = power_sum(xs, k)
    rhs = _exp_series_coefficients(order, factors, tensor)

    for j in range(order + 1):
        keys = set(lhs[j]) | set(rhs[j])
        for key in keys:
            if lhs[j].get(key, RF_ZERO) != rhs[j].get(key, RF_ZERO):
                return False
    return True


def verify_expansion_limit(y: Partition) -> bool:
    """The A -> 1 limit identity: C_y = (1 - q^n) m_y [dim_y / (1 - A)] at A = 1."""
    y = check_partition(y)
    n = size(y)
    dim = macdonald_dimension(y)
    trimmed_factors = dict(dim.factors)
    corner = (0, 0, 1)  # the (1,1) cell contributes exactly 1 - A
    if trimmed_factors.get(corner, 0) < 1:
        raise AssertionError("dimension lost its corner factor")
    trimmed_factors[corner] -= 1
    trimmed = FactoredRational(
        MACD, coeff=dim.coeff, prefactor=dim.prefactor, factors=trimmed_factors
    )
    num, den = trimmed.expand()
    drop_a = SubstitutionMap(MACD, QT, {"q": (1, (1, 0)), "t": (1, (0, 1)), "A": (1, (0, 0))})
    limit = RationalFunction(num.substitute(drop_a), den.substitute(drop_a))

    one_minus_qn = RationalFunction(LaurentPolynomial(QT, {(0, 0): 1, (n, 0): -1}))
    lhs = rational_of_factored(power_sum_coefficient(y))
    rhs = one_minus_qn * rational_of_factored(cauchy_norm(y)) * limit
    return lhs == rhs


# -- Schur degeneration --------------------------------------------------------


def schur_mbasis(y: Partition) -> dict[Partition, Fraction]:
    """Schur s_y in the m-basis via the Jacobi-Trudi determinant."""
    y = check_partition(y)
    n = size(y)
    alphabet = x_alphabet(n)
    rows = len(y)
    h_cache: dict[int, LaurentPolynomial] = {}

    def h(k: int) -> LaurentPolynomial:
        if k < 0:
            return LaurentPolynomial.zero(alphabet)
        if k not in h_cache:
            h_cache[k] = complete_homogeneous(alphabet, k)
        return h_cache[k]

    det = LaurentPolynomial.zero(alphabet)
    for perm in itertools.permutations(range(rows)):
        sign = 1
        seen = list(perm)
        for i in range(rows):
            for j in range(i + 1, rows):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = LaurentPolynomial.one(alphabet)
        for i, pj in enumerate(perm):
            prod = prod * h(y[i] - (i + 1) + (pj + 1))
        det = det + (prod * sign if sign < 0 else prod)
    out: dict[Partition, Fraction] = {}
    for mu in enumerate_partitions(n):
        c = coefficient_of_msym(det, mu)
        if c:
            out[mu] = Fraction(c)
    return out


def verify_schur_degeneration(y: Partition) -> bool:
    """P_y at q = t equals the Schur polynomial (Jacobi-Trudi, independent)."""
    y = check_partition(y)
    merge = SubstitutionMap(QT, ("t",), {"q": (1, (1,)), "t": (1, (1,))})
    schur = schur_mbasis(y)
    pm = macdonald_P_mbasis(y)
    for mu in set(schur) | set(pm):
        val = pm.get(mu, RF_ZERO).substitute(merge)
        want = schur.get(mu, Fraction(0))
        if val != RationalFunction.const(want, ("t",)):
            return False
    return True
