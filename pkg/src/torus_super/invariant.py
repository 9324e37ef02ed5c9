"""Torus-knot invariants assembled from the closed-form Macdonald data.

The (n, m) invariant is a sum over partitions of n.  Each summand is a
factored rational in (q, t, A) times an elementary-symmetric cofactor; the
sum goes over a common factored denominator, is pushed through the bold
variable substitution into (a, q, t), divided exactly, and finally
normalized by its monomial content so the lowest term is +1.

Everything m-dependent in a summand is a single monomial, so the expensive
expansions are cached per n and reused across the whole (n, m) family.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from time import perf_counter
from typing import Union

from .algebra import (
    KNOT,
    MACD,
    FactoredRational,
    LaurentPolynomial,
    Monomial,
    NonDivisibleError,
    SubstitutionMap,
    exact_divide,
    expand_binomial_product,
    monomial_div,
    monomial_inverse,
    unit_monomial,
)
from .macdonald import (
    cell_elementary,
    framing_factor,
    macdonald_dimension,
    power_sum_coefficient,
)
from .partitions import Partition, enumerate_partitions

# Bold substitution into knot variables (a, q, t):
#   q -> q^2 t^2,  t -> q^2,  A -> -a^2 t.
MACD_TO_KNOT = SubstitutionMap(
    MACD,
    KNOT,
    {
        "q": (1, (0, 2, 2)),
        "t": (1, (0, 2, 0)),
        "A": (-1, (2, 0, 1)),
    },
)

HOMFLY_VARS = ("a", "q")
SINGLE_VAR = ("q",)

# t -> -1 keeps (a, q).
_TO_HOMFLY = SubstitutionMap(
    KNOT, HOMFLY_VARS, {"a": (1, (1, 0)), "q": (1, (0, 1)), "t": (-1, (0, 0))}
)
# a -> q^2 on top of t -> -1.
_TO_JONES = SubstitutionMap(HOMFLY_VARS, SINGLE_VAR, {"a": (1, (2,)), "q": (1, (1,))})
# a -> 1 on top of t -> -1.
_TO_ALEXANDER = SubstitutionMap(HOMFLY_VARS, SINGLE_VAR, {"a": (1, (0,)), "q": (1, (1,))})


class IntegrityError(RuntimeError):
    """An internal consistency assertion failed; carries diagnostics."""


class CalibrationError(RuntimeError):
    """A generating-function normalization could not be established."""


@dataclass(frozen=True)
class KnotRequest:
    """A validated (n, m) torus-knot index; n strands, m windings."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise TypeError("n and m must be integers")
        if self.n < 1 or self.m < 1:
            raise ValueError(f"n and m must be positive, got ({self.n}, {self.m})")

    @property
    def quotient(self) -> int:
        return self.m // self.n

    @property
    def remainder(self) -> int:
        return self.m % self.n

    @property
    def gcd(self) -> int:
        return math.gcd(self.n, self.m)


@dataclass(frozen=True)
class PropertyFlags:
    polynomial: bool
    integral: bool
    positive: bool
    normalized: bool

    @property
    def all_true(self) -> bool:
        return self.polynomial and self.integral and self.positive and self.normalized


@dataclass(frozen=True)
class Superpolynomial:
    """Normalized invariant in (a, q, t) plus the monomial content removed."""

    n: int
    m: int
    terms: LaurentPolynomial
    content: Monomial
    flags: PropertyFlags


@dataclass(frozen=True)
class NonPolynomial:
    """Outcome for inputs where the summed rational fails exact division."""

    n: int
    m: int
    gcd: int
    reason: str = "exact division left a remainder"


def _exponent_of_winding(n: int, r: int) -> int:
    return r * n + r * (r - 1) // 2 - n * (n - 1) // 2


@dataclass(frozen=True)
class _FamilyCore:
    """m-independent data shared by every invariant of strand count n."""

    partitions: tuple[Partition, ...]
    framings: tuple[Monomial, ...]
    base_numerators: tuple[LaurentPolynomial, ...]
    denominator: tuple[tuple[Monomial, int], ...]


@lru_cache(maxsize=None)
def _family_core(n: int) -> _FamilyCore:
    ys = enumerate_partitions(n)
    unknot_dim_inverse = macdonald_dimension((1,)).reciprocal()
    # (1 - q) / (1 - q^n); the n = 1 case cancels to 1 on its own.
    const = FactoredRational(MACD, factors=[((1, 0, 0), 1), ((n, 0, 0), -1)])
    bases = [
        power_sum_coefficient(y) * macdonald_dimension(y) * unknot_dim_inverse * const
        for y in ys
    ]

    need: dict[Monomial, int] = {}
    for b in bases:
        for mono, mult in b.factors.items():
            if mult < 0:
                need[mono] = max(need.get(mono, 0), -mult)

    numerators = []
    for b in bases:
        completion = dict(need)
        for mono, mult in b.factors.items():
            total = completion.get(mono, 0) + mult
            if total < 0:
                raise AssertionError("denominator lcm missed a factor")
            completion[mono] = total
        numerators.append(
            expand_binomial_product(MACD, b.coeff, b.prefactor, sorted(completion.items()))
        )

    return _FamilyCore(
        partitions=tuple(ys),
        framings=tuple(framing_factor(y) for y in ys),
        base_numerators=tuple(numerators),
        denominator=tuple(sorted(need.items())),
    )


@lru_cache(maxsize=None)
def _weighted_numerators(n: int, r: int) -> tuple[LaurentPolynomial, ...]:
    core = _family_core(n)
    return tuple(
        base * cell_elementary(y, r)
        for y, base in zip(core.partitions, core.base_numerators)
    )


@lru_cache(maxsize=None)
def _bold_denominator(n: int) -> tuple[tuple[LaurentPolynomial, int], ...]:
    core = _family_core(n)
    out = []
    for mono, mult in core.denominator:
        sign, image = MACD_TO_KNOT.image(mono)
        binomial = LaurentPolynomial(
            KNOT, {unit_monomial(KNOT): 1, image: -1 if sign > 0 else 1}
        )
        out.append((binomial, mult))
    return tuple(out)


def _assemble_numerator(req: KnotRequest, parallel: bool = False) -> LaurentPolynomial:
    n, m = req.n, req.m
    k, r = req.quotient, req.remainder
    e = _exponent_of_winding(n, r)
    core = _family_core(n)
    weighted = _weighted_numerators(n, r)

    def shifted_summand(idx: int) -> LaurentPolynomial:
        t_q, t_t, _ = core.framings[idx]
        shift = (e + k * t_q, m + k * t_t, 0)
        return weighted[idx].shifted(shift)

    indices = range(len(core.partitions))
    if parallel:
        with ThreadPoolExecutor() as pool:
            parts = list(pool.map(shifted_summand, indices))
    else:
        parts = [shifted_summand(i) for i in indices]

    total = LaurentPolynomial.zero(MACD)
    for part in parts:
        total = total + part
    return total


def _flags_of(p: LaurentPolynomial) -> PropertyFlags:
    integral = all(isinstance(c, int) for c in p.terms.values())
    positive = bool(p.terms) and all(c > 0 for c in p.terms.values())
    normalized = (
        bool(p.terms)
        and all(x >= 0 for x in p.content())
        and p.constant_term == 1
    )
    return PropertyFlags(polynomial=True, integral=integral, positive=positive, normalized=normalized)


def verify_properties(result: Union[Superpolynomial, LaurentPolynomial]) -> PropertyFlags:
    """Recompute integrality/positivity/normalization flags from the terms."""
    p = result.terms if isinstance(result, Superpolynomial) else result
    return _flags_of(p)


@lru_cache(maxsize=None)
def compute(n: int, m: int, *, parallel: bool = False) -> Union[Superpolynomial, NonPolynomial]:
    """The normalized (n, m) torus-knot invariant, or NonPolynomial.

    Exact division by the common denominator succeeds exactly when
    gcd(n, m) = 1; the quotient is then stripped of its monomial content and
    must start with constant term +1.  Results are immutable and memoized.
    """
    req = KnotRequest(n, m)
    numerator = _assemble_numerator(req, parallel=parallel)
    bold = numerator.substitute(MACD_TO_KNOT)
    try:
        for binomial, mult in _bold_denominator(n):
            for _ in range(mult):
                bold = exact_divide(bold, binomial)
    except NonDivisibleError as err:
        return NonPolynomial(n=n, m=m, gcd=req.gcd, reason=str(err))
    if bold.is_zero():
        raise IntegrityError(f"({n},{m}): invariant vanished identically")
    content, normalized = bold.divide_content()
    if normalized.constant_term != 1:
        raise IntegrityError(
            f"({n},{m}): lowest term is {normalized.constant_term}, expected +1; "
            f"content {content}"
        )
    return Superpolynomial(
        n=n, m=m, terms=normalized, content=content, flags=_flags_of(normalized)
    )


def specialize(result: Union[Superpolynomial, LaurentPolynomial], target: str) -> LaurentPolynomial:
    """Classical reductions: 'homfly' (t -> -1), then 'jones' (a -> q^2) or
    'alexander' (a -> 1)."""
    p = result.terms if isinstance(result, Superpolynomial) else result
    if p.alphabet != KNOT:
        raise ValueError("specialization expects an (a, q, t) polynomial")
    homfly = p.substitute(_TO_HOMFLY)
    if target == "homfly":
        return homfly
    if target == "jones":
        return homfly.substitute(_TO_JONES)
    if target == "alexander":
        return homfly.substitute(_TO_ALEXANDER)
    raise ValueError(f"unknown specialization {target!r}")


# -- generating functions ----------------------------------------------------


@dataclass(frozen=True)
class GeneratingFunction:
    """Closed form sum_k P(n, nk+r) z^k = numerator / prod (1 - z*pole)."""

    n: int
    r: int
    numerator: tuple[tuple[int, LaurentPolynomial], ...]  # (z power, coefficient)
    poles: tuple[Monomial, ...]  # denominator factors 1 - z * monomial

    def series(self, k_max: int) -> list[LaurentPolynomial]:
        """Taylor coefficients in z up to order k_max, exactly."""
        # Complete homogeneous sums of the poles via the one-variable-at-a-time
        # recurrence, then convolve with the numerator.
        h: list[LaurentPolynomial] = [LaurentPolynomial.one(KNOT)]
        h += [LaurentPolynomial.zero(KNOT) for _ in range(k_max)]
        for pole in self.poles:
            for d in range(1, k_max + 1):
                h[d] = h[d] + h[d - 1].shifted(pole)
        out = []
        num = dict(self.numerator)
        for k in range(k_max + 1):
            total = LaurentPolynomial.zero(KNOT)
            for j, coeff in num.items():
                if j <= k:
                    total = total + coeff * h[k - j]
            out.append(total)
        return out


def generating_function(n: int, r: int, k_check: int = 3) -> GeneratingFunction:
    """Closed form for the winding family m = nk + r, calibrated and checked.

    The per-step content ratio nu must be k-independent over k = 0..3
    (CalibrationError otherwise); poles are the substituted framing monomials
    divided by nu.  The result is validated against compute() for k <= k_check.
    """
    if n < 1 or r < 1 or r >= n:
        raise ValueError("need 1 <= r < n")
    if math.gcd(n, r) != 1:
        raise ValueError(f"family (n={n}, r={r}) hits non-coprime windings")

    probes = max(3, k_check)
    results = []
    for k in range(probes + 1):
        res = compute(n, n * k + r)
        if isinstance(res, NonPolynomial):
            raise CalibrationError(f"({n},{n * k + r}) is not polynomial")
        results.append(res)

    steps = {
        monomial_div(results[k + 1].content, results[k].content) for k in range(3)
    }
    if len(steps) != 1:
        raise CalibrationError(f"content ratio not constant over k = 0..3: {steps}")
    nu = steps.pop()
    mu = results[0].content

    core = _family_core(n)
    poles = []
    for t_q, t_t, _ in core.framings:
        _, image = MACD_TO_KNOT.image((t_q, t_t + n, 0))
        poles.append(monomial_div(image, nu))
    if len(set(poles)) != len(poles):
        raise CalibrationError("coincident poles; partial-fraction form degenerates")

    weighted = _weighted_numerators(n, r)
    e = _exponent_of_winding(n, r)
    bold_parts = [
        w.shifted((e, r, 0)).substitute(MACD_TO_KNOT) for w in weighted
    ]

    # Numerator of the partial-fraction sum over the full pole product:
    # N_j = sum_Y bold_Y * (-1)^j e_j(poles without Y).
    count = len(poles)
    num_z: dict[int, LaurentPolynomial] = {}
    for idx, part in enumerate(bold_parts):
        others = [p for i, p in enumerate(poles) if i != idx]
        elem: list[LaurentPolynomial] = [LaurentPolynomial.one(KNOT)]
        for pole in others:
            nxt = []
            for d in range(len(elem) + 1):
                term = LaurentPolynomial.zero(KNOT)
                if d < len(elem):
                    term = term + elem[d]
                if d > 0:
                    term = term - elem[d - 1].shifted(pole)
                nxt.append(term)
            elem = nxt
        for j, cofactor in enumerate(elem):
            if cofactor.is_zero():
                continue
            prev = num_z.get(j, LaurentPolynomial.zero(KNOT))
            num_z[j] = prev + part * cofactor

    denominator = _bold_denominator(n)
    numerator = []
    for j in sorted(num_z):
        coeff = num_z[j]
        if coeff.is_zero():
            continue
        try:
            for binomial, mult in denominator:
                for _ in range(mult):
                    coeff = exact_divide(coeff, binomial)
        except NonDivisibleError as err:
            raise CalibrationError(f"z^{j} numerator not divisible: {err}") from err
        coeff = coeff.shifted(monomial_inverse(mu))
        if not coeff.is_zero():
            numerator.append((j, coeff))

    gf = GeneratingFunction(
        n=n, r=r, numerator=tuple(numerator), poles=tuple(sorted(poles))
    )

    series = gf.series(k_check)
    for k in range(k_check + 1):
        expected = results[k] if k <= probes else compute(n, n * k + r)
        if isinstance(expected, NonPolynomial) or series[k] != expected.terms:
            raise CalibrationError(f"series order z^{k} disagrees with compute({n},{n * k + r})")
    return gf


# -- scanning ------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    n: int
    m: int
    gcd: int
    status: str
    a_max: int | None
    q_max: int | None
    t_max: int | None
    term_count: int | None
    millis: int


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]

    @property
    def all_expected(self) -> bool:
        return all(row.status in ("ok", "nonpolynomial") for row in self.rows)

    def to_csv(self) -> str:
        lines = ["n,m,gcd,status,a_max,q_max,t_max,term_count,millis"]
        for row in self.rows:
            degree_fields = [
                "" if v is None else str(v)
                for v in (row.a_max, row.q_max, row.t_max, row.term_count)
            ]
            lines.append(
                f"{row.n},{row.m},{row.gcd},{row.status},"
                + ",".join(degree_fields)
                + f",{row.millis}"
            )
        return "\n".join(lines) + "\n"


def _scan_one(pair: tuple[int, int]) -> ScanRow:
    n, m = pair
    start = perf_counter()
    outcome: str
    a_max = q_max = t_max = term_count = None
    g = math.gcd(n, m)
    try:
        result = compute(n, m)
    except Exception as err:  # integrity failures must land in the report
        outcome = f"error:{type(err).__name__}"
    else:
        if isinstance(result, NonPolynomial):
            outcome = "nonpolynomial" if g > 1 else "fail:unexpected-nonpolynomial"
        elif g > 1:
            outcome = "fail:unexpected-polynomial"
        elif not result.flags.all_true:
            outcome = "fail:flags"
        else:
            outcome = "ok"
            highs = result.terms.max_exponents()
            a_max, q_max, t_max = highs
            term_count = result.terms.term_count
    millis = int(round((perf_counter() - start) * 1000))
    return ScanRow(
        n=n, m=m, gcd=g, status=outcome,
        a_max=a_max, q_max=q_max, t_max=t_max, term_count=term_count, millis=millis,
    )


def scan(n_max: int, m_max: int, workers: int | None = None) -> ScanReport:
    """Sweep 2 <= n <= n_max, n < m <= m_max; coprime pairs must verify all
    flags, the rest must come back NonPolynomial."""
    pairs = [(n, m) for n in range(2, n_max + 1) for m in range(n + 1, m_max + 1)]
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_one, pairs))
    else:
        rows = [_scan_one(p) for p in pairs]
    return ScanReport(rows=tuple(rows))


# -- canonical JSON ------------------------------------------------------------


def superpolynomial_to_json(sp: Superpolynomial) -> str:
    """Canonical one-line JSON; terms ascending lex over (a, q, t) exponents."""
    terms = [
        [e[0], e[1], e[2], str(c)] for e, c in sp.terms.sorted_terms()
    ]
    payload = {"n": sp.n, "m": sp.m, "normalized": True, "terms": terms}
    return json.dumps(payload, separators=(",", ":"))


def superpolynomial_from_json(text: str) -> Superpolynomial:
    data = json.loads(text)
    terms = [
        ((int(a), int(q), int(t)), Fraction(c)) for a, q, t, c in data["terms"]
    ]
    poly = LaurentPolynomial(KNOT, terms)
    if not data.get("normalized", False):
        raise ValueError("only normalized invariants are serialized")
    content = unit_monomial(KNOT)
    return Superpolynomial(
        n=int(data["n"]),
        m=int(data["m"]),
        terms=poly,
        content=content,
        flags=_flags_of(poly),
    )


def generating_function_to_json(gf: GeneratingFunction) -> str:
    numerator = [
        [j, [[e[0], e[1], e[2], str(c)] for e, c in coeff.sorted_terms()]]
        for j, coeff in gf.numerator
    ]
    payload = {
        "n": gf.n,
        "r": gf.r,
        "numerator": numerator,
        "denominator": [list(p) for p in gf.poles],
    }
    return json.dumps(payload, separators=(",", ":"))


def generating_function_from_json(text: str) -> GeneratingFunction:
    data = json.loads(text)
    numerator = tuple(
        (
            int(j),
            LaurentPolynomial(
                KNOT, [((int(a), int(q), int(t)), Fraction(c)) for a, q, t, c in terms]
            ),
        )
        for j, terms in data["numerator"]
    )
    poles = tuple(tuple(int(x) for x in p) for p in data["denominator"])
    return GeneratingFunction(n=int(data["n"]), r=int(data["r"]), numerator=numerator, poles=poles)
