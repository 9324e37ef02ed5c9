"""Exact sparse Laurent-polynomial arithmetic and factored binomial products.

A Laurent polynomial is a dict mapping exponent vectors (one signed integer
per variable of a fixed alphabet) to nonzero rational coefficients.
Coefficients stay exact throughout: integers where possible, ``Fraction``
otherwise; the two mix transparently.  All values are immutable by
convention; every operation returns a new object.

Rational functions whose denominators are products of binomials
``1 - monomial`` are kept factored (:class:`FactoredRational`) so that the
large structural cancellations cost nothing; only a final sum is expanded.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Alphabet = tuple[str, ...]
Monomial = tuple[int, ...]
Coeff = Union[int, Fraction]

MACD: Alphabet = ("q", "t", "A")
KNOT: Alphabet = ("a", "q", "t")

# Fixed Mersenne prime used for modular spot checks of exact identities.
PRIME_61: int = (1 << 61) - 1


class AlphabetMismatchError(ValueError):
    """Operands live over different variable alphabets."""


class NonDivisibleError(ArithmeticError):
    """Exact division failed: the quotient is not a Laurent polynomial."""


def as_coeff(value: Coeff) -> Coeff:
    """Normalize an exact rational; integral Fractions collapse to int."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"not an exact rational: {value!r}")


def unit_monomial(alphabet: Alphabet) -> Monomial:
    return (0,) * len(alphabet)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_pow(m: Monomial, k: int) -> Monomial:
    return tuple(x * k for x in m)


def monomial_inverse(m: Monomial) -> Monomial:
    return tuple(-x for x in m)


def _check_same_alphabet(a: "LaurentPolynomial", b: "LaurentPolynomial") -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"{a.alphabet} vs {b.alphabet}")


class LaurentPolynomial:
    """Sparse exact Laurent polynomial over a fixed alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(
        self,
        alphabet: Alphabet,
        terms: Union[Mapping[Monomial, Coeff], Iterable[tuple[Monomial, Coeff]]] = (),
    ):
        alphabet = tuple(alphabet)
        arity = len(alphabet)
        clean: dict[Monomial, Coeff] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != arity:
                raise AlphabetMismatchError(
                    f"exponent vector {exps} has arity {len(exps)}, alphabet needs {arity}"
                )
            c = as_coeff(coeff)
            if exps in clean:
                c = as_coeff(clean[exps] + c)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.alphabet = alphabet
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "LaurentPolynomial":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "LaurentPolynomial":
        return cls(alphabet, {unit_monomial(alphabet): 1})

    @classmethod
    def constant(cls, alphabet: Alphabet, value: Coeff) -> "LaurentPolynomial":
        return cls(alphabet, {unit_monomial(alphabet): value})

    @classmethod
    def monomial(cls, alphabet: Alphabet, exps: Monomial, coeff: Coeff = 1) -> "LaurentPolynomial":
        return cls(alphabet, {tuple(exps): coeff})

    @classmethod
    def variable(cls, alphabet: Alphabet, name: str, power: int = 1) -> "LaurentPolynomial":
        idx = alphabet.index(name)
        exps = [0] * len(alphabet)
        exps[idx] = power
        return cls(alphabet, {tuple(exps): 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def coefficient(self, exps: Monomial) -> Coeff:
        return self.terms.get(tuple(exps), 0)

    @property
    def constant_term(self) -> Coeff:
        return self.terms.get(unit_monomial(self.alphabet), 0)

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in ascending lexicographic order of exponent vectors."""
        return sorted(self.terms.items())

    def min_exponents(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        return tuple(max(col) for col in zip(*self.terms))

    def content(self) -> Monomial:
        """Largest monomial dividing every term (componentwise min exponent)."""
        return self.min_exponents()

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "LaurentPolynomial":
        out = LaurentPolynomial.zero(self.alphabet)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        _check_same_alphabet(self, other)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            total = merged.get(e, 0) + c
            if total:
                merged[e] = as_coeff(total)
            else:
                merged.pop(e, None)
        out = LaurentPolynomial.zero(self.alphabet)
        out.terms = merged
        return out

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["LaurentPolynomial", Coeff]) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            scale = as_coeff(other)
            out = LaurentPolynomial.zero(self.alphabet)
            if scale:
                out.terms = {e: as_coeff(c * scale) for e, c in self.terms.items()}
            return out
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        _check_same_alphabet(self, other)
        if len(self.terms) < len(other.terms):
            shorter, longer = self.terms, other.terms
        else:
            shorter, longer = other.terms, self.terms
        acc: dict[Monomial, Coeff] = {}
        for e1, c1 in shorter.items():
            for e2, c2 in longer.items():
                e = monomial_mul(e1, e2)
                total = acc.get(e, 0) + c1 * c2
                if total:
                    acc[e] = total
                else:
                    acc.pop(e, None)
        out = LaurentPolynomial.zero(self.alphabet)
        out.terms = {e: as_coeff(c) for e, c in acc.items()}
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = LaurentPolynomial.one(self.alphabet)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shifted(self, mono: Monomial, coeff: Coeff = 1) -> "LaurentPolynomial":
        """Multiply by ``coeff * x^mono`` (a fast exponent translation)."""
        mono = tuple(mono)
        scale = as_coeff(coeff)
        out = LaurentPolynomial.zero(self.alphabet)
        if scale:
            out.terms = {
                monomial_mul(e, mono): as_coeff(c * scale) for e, c in self.terms.items()
            }
        return out

    def divide_content(self) -> tuple[Monomial, "LaurentPolynomial"]:
        """Split off the monomial content: returns ``(content, self / content)``."""
        c = self.content()
        return c, self.shifted(monomial_inverse(c))

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, sub: "SubstitutionMap") -> "LaurentPolynomial":
        if sub.source != self.alphabet:
            raise AlphabetMismatchError(
                f"substitution covers {sub.source}, polynomial over {self.alphabet}"
            )
        acc: dict[Monomial, Coeff] = {}
        for exps, c in self.terms.items():
            sign, image = sub.image(exps)
            total = acc.get(image, 0) + (c if sign > 0 else -c)
            if total:
                acc[image] = total
            else:
                acc.pop(image, None)
        out = LaurentPolynomial.zero(sub.target)
        out.terms = {e: as_coeff(c) for e, c in acc.items()}
        return out

    def eval_mod(self, point: Mapping[str, int], prime: int = PRIME_61) -> int:
        """Evaluate at integer values modulo a fixed 61-bit prime.

        Negative exponents use modular inverses, so every assigned value must
        be nonzero mod the prime.
        """
        values = []
        for name in self.alphabet:
            if name not in point:
                raise KeyError(f"no value for variable {name!r}")
            v = point[name] % prime
            if v == 0:
                raise ZeroDivisionError(f"value for {name!r} vanishes mod prime")
            values.append(v)
        total = 0
        for exps, c in self.terms.items():
            m = 1
            for v, e in zip(values, exps):
                if e:
                    m = m * pow(v, e, prime) % prime
            if isinstance(c, int):
                total = (total + c * m) % prime
            else:
                inv = pow(c.denominator % prime, -1, prime)
                total = (total + c.numerator * inv * m) % prime
        return total

    # -- serialization -------------------------------------------------------

    def canonical_text(self) -> str:
        """One term per line, ascending lex: ``<exp_1> ... <exp_k> <coeff>``."""
        lines = []
        for exps, c in self.sorted_terms():
            lines.append(" ".join(str(e) for e in exps) + f" {c}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.alphabet!r}, {self.terms!r})"


def parse_polynomial(alphabet: Alphabet, text: str) -> LaurentPolynomial:
    """Inverse of :meth:`LaurentPolynomial.canonical_text`."""
    alphabet = tuple(alphabet)
    arity = len(alphabet)
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != arity + 1:
            raise ValueError(f"line {lineno}: expected {arity} exponents and a coefficient")
        exps = tuple(int(f) for f in fields[:arity])
        coeff = Fraction(fields[arity])
        terms.append((exps, coeff))
    return LaurentPolynomial(alphabet, terms)


def format_polynomial(p: LaurentPolynomial, mul: str = "*") -> str:
    """Human-readable form, terms in ascending lex order."""
    if p.is_zero():
        return "0"
    chunks = []
    for exps, c in p.sorted_terms():
        atoms = []
        for name, e in zip(p.alphabet, exps):
            if e == 1:
                atoms.append(name)
            elif e:
                atoms.append(f"{name}^{e}")
        mono = mul.join(atoms)
        if not mono:
            body = str(abs(c) if isinstance(c, int) else abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mul}{mono}"
        sign = "-" if c < 0 else "+"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def exact_divide(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient ``f / g``; raises :class:`NonDivisibleError` otherwise.

    Standard sparse reduction in lexicographic order after shifting both
    operands to ordinary polynomials.  For exact division every intermediate
    remainder stays a multiple of ``g``, so the first leading term not
    divisible by ``g``'s leading term proves non-divisibility and aborts.
    """
    _check_same_alphabet(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return LaurentPolynomial.zero(f.alphabet)

    content_f = f.content()
    content_g = g.content()
    rem = {monomial_div(e, content_f): c for e, c in f.terms.items()}
    gshift = {monomial_div(e, content_g): c for e, c in g.terms.items()}

    lead_g = max(gshift)
    lead_coeff = gshift[lead_g]
    tail = [(e, c) for e, c in gshift.items() if e != lead_g]

    heap = [monomial_inverse(e) for e in rem]
    heapq.heapify(heap)
    quotient: dict[Monomial, Coeff] = {}

    while heap:
        e = monomial_inverse(heapq.heappop(heap))
        c = rem.pop(e, 0)
        if not c:
            continue
        qe = monomial_div(e, lead_g)
        if any(x < 0 for x in qe):
            raise NonDivisibleError(f"leading term {e} not reducible by {lead_g}")
        if isinstance(c, int) and isinstance(lead_coeff, int) and c % lead_coeff == 0:
            qc: Coeff = c // lead_coeff
        else:
            qc = as_coeff(Fraction(c) / lead_coeff)
        quotient[qe] = qc
        for ge, gc in tail:
            ne = monomial_mul(qe, ge)
            prev = rem.get(ne, 0)
            total = prev - qc * gc
            if total:
                if not prev:
                    heapq.heappush(heap, monomial_inverse(ne))
                rem[ne] = total
            else:
                rem.pop(ne, None)

    if rem:
        raise NonDivisibleError("nonzero remainder")
    shift = monomial_div(content_f, content_g)
    out = LaurentPolynomial.zero(f.alphabet)
    out.terms = {monomial_mul(e, shift): as_coeff(c) for e, c in quotient.items()}
    return out


class SubstitutionMap:
    """Per-variable map ``x -> sign * monomial`` extended to a ring hom.

    Signs are +1 or -1; each image is an exponent vector over the target
    alphabet.  Monomials map to signed monomials, so polynomials map
    term by term.
    """

    __slots__ = ("source", "target", "images")

    def __init__(
        self,
        source: Alphabet,
        target: Alphabet,
        images: Mapping[str, tuple[int, Monomial]],
    ):
        source = tuple(source)
        target = tuple(target)
        ordered = []
        for name in source:
            if name not in images:
                raise ValueError(f"no image for source variable {name!r}")
            sign, exps = images[name]
            if sign not in (1, -1):
                raise ValueError("sign must be +1 or -1")
            exps = tuple(exps)
            if len(exps) != len(target):
                raise AlphabetMismatchError(
                    f"image of {name!r} has arity {len(exps)}, target needs {len(target)}"
                )
            ordered.append((sign, exps))
        self.source = source
        self.target = target
        self.images = tuple(ordered)

    def image(self, exps: Monomial) -> tuple[int, Monomial]:
        """Signed image of a source monomial."""
        sign = 1
        out = [0] * len(self.target)
        for e, (s, img) in zip(exps, self.images):
            if not e:
                continue
            if s < 0 and e % 2:
                sign = -sign
            for i, ie in enumerate(img):
                if ie:
                    out[i] += ie * e
        return sign, tuple(out)


class FactoredRational:
    """``coeff * x^prefactor * prod (1 - x^b)^mult`` with signed multiplicities.

    Binomials are canonicalized so the first nonzero exponent of ``b`` is
    positive, using ``1 - m == (-m) * (1 - 1/m)``; identical binomials then
    merge and cancel exactly without any polynomial gcd.
    """

    __slots__ = ("alphabet", "coeff", "prefactor", "factors")

    def __init__(
        self,
        alphabet: Alphabet,
        coeff: Coeff = 1,
        prefactor: Monomial | None = None,
        factors: Union[Mapping[Monomial, int], Iterable[tuple[Monomial, int]]] = (),
    ):
        alphabet = tuple(alphabet)
        coeff = as_coeff(coeff)
        if not coeff:
            raise ValueError("zero has no factored form")
        pre = list(prefactor) if prefactor is not None else [0] * len(alphabet)
        if len(pre) != len(alphabet):
            raise AlphabetMismatchError("prefactor arity mismatch")
        merged: dict[Monomial, int] = {}
        items = factors.items() if isinstance(factors, Mapping) else factors
        for b, mult in items:
            if not mult:
                continue
            b = tuple(b)
            if len(b) != len(alphabet):
                raise AlphabetMismatchError("binomial arity mismatch")
            if not any(b):
                raise ZeroDivisionError("binomial 1 - 1 vanishes")
            first = next(x for x in b if x)
            if first < 0:
                if mult % 2:
                    coeff = -coeff
                pre = [p + e * mult for p, e in zip(pre, b)]
                b = monomial_inverse(b)
            total = merged.get(b, 0) + mult
            if total:
                merged[b] = total
            else:
                merged.pop(b, None)
        self.alphabet = alphabet
        self.coeff = as_coeff(coeff)
        self.prefactor = tuple(pre)
        self.factors = merged

    @classmethod
    def one(cls, alphabet: Alphabet) -> "FactoredRational":
        return cls(alphabet)

    @classmethod
    def from_monomial(cls, alphabet: Alphabet, exps: Monomial, coeff: Coeff = 1) -> "FactoredRational":
        return cls(alphabet, coeff=coeff, prefactor=tuple(exps))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.coeff == other.coeff
            and self.prefactor == other.prefactor
            and self.factors == other.factors
        )

    __hash__ = None  # type: ignore[assignment]

    def __mul__(self, other: "FactoredRational") -> "FactoredRational":
        if not isinstance(other, FactoredRational):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet} vs {other.alphabet}")
        merged = dict(self.factors)
        for b, mult in other.factors.items():
            total = merged.get(b, 0) + mult
            if total:
                merged[b] = total
            else:
                merged.pop(b, None)
        out = FactoredRational(self.alphabet, coeff=as_coeff(self.coeff * other.coeff))
        out.prefactor = monomial_mul(self.prefactor, other.prefactor)
        out.factors = merged
        return out

    def reciprocal(self) -> "FactoredRational":
        out = FactoredRational(self.alphabet, coeff=as_coeff(Fraction(1, 1) / self.coeff))
        out.prefactor = monomial_inverse(self.prefactor)
        out.factors = {b: -m for b, m in self.factors.items()}
        return out

    def scaled(self, coeff: Coeff = 1, monomial: Monomial | None = None) -> "FactoredRational":
        out = FactoredRational(self.alphabet, coeff=as_coeff(self.coeff * coeff))
        out.prefactor = (
            monomial_mul(self.prefactor, tuple(monomial)) if monomial is not None else self.prefactor
        )
        out.factors = dict(self.factors)
        return out

    def expand(self) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Expanded ``(numerator, denominator)``; numerator carries coeff and prefactor."""
        num_factors = [(b, m) for b, m in self.factors.items() if m > 0]
        den_factors = [(b, -m) for b, m in self.factors.items() if m < 0]
        num = expand_binomial_product(self.alphabet, self.coeff, self.prefactor, num_factors)
        den = expand_binomial_product(
            self.alphabet, 1, unit_monomial(self.alphabet), den_factors
        )
        return num, den

    def __repr__(self) -> str:
        return (
            f"FactoredRational({self.alphabet!r}, coeff={self.coeff!r}, "
            f"prefactor={self.prefactor!r}, factors={self.factors!r})"
        )


def expand_binomial_product(
    alphabet: Alphabet,
    coeff: Coeff,
    prefactor: Monomial,
    factors: Iterable[tuple[Monomial, int]],
) -> LaurentPolynomial:
    """Expand ``coeff * x^prefactor * prod (1 - x^b)^e`` with all ``e >= 0``."""
    acc: dict[Monomial, Coeff] = {tuple(prefactor): as_coeff(coeff)}
    for b, e in sorted(factors):
        if e < 0:
            raise ValueError("negative multiplicity in product expansion")
        b = tuple(b)
        for _ in range(e):
            nxt: dict[Monomial, Coeff] = dict(acc)
            for exps, c in acc.items():
                shifted = monomial_mul(exps, b)
                total = nxt.get(shifted, 0) - c
                if total:
                    nxt[shifted] = total
                else:
                    nxt.pop(shifted, None)
            acc = nxt
    out = LaurentPolynomial.zero(tuple(alphabet))
    out.terms = {e: as_coeff(c) for e, c in acc.items()}
    return out


def sum_rationals(
    rationals: Iterable[FactoredRational],
    weights: Iterable[LaurentPolynomial] | None = None,
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Sum factored rationals over their least common factored denominator.

    Returns ``(numerator, denominator)`` with the numerator expanded exactly
    and the denominator the binomial-wise max of the negative multiplicities.
    Optional ``weights`` multiply the corresponding summands' numerators
    (used for polynomial cofactors that have no factored form).
    """
    rs = list(rationals)
    if not rs:
        raise ValueError("empty sum")
    alphabet = rs[0].alphabet
    ws: list[LaurentPolynomial | None]
    if weights is None:
        ws = [None] * len(rs)
    else:
        ws = list(weights)
        if len(ws) != len(rs):
            raise ValueError("one weight per summand")
    for r in rs:
        if r.alphabet != alphabet:
            raise AlphabetMismatchError("summands over different alphabets")

    need: dict[Monomial, int] = {}
    for r in rs:
        for b, mult in r.factors.items():
            if mult < 0:
                need[b] = max(need.get(b, 0), -mult)

    numerator = LaurentPolynomial.zero(alphabet)
    for r, w in zip(rs, ws):
        completion = dict(need)
        for b, mult in r.factors.items():
            total = completion.get(b, 0) + mult
            if total < 0:
                raise AssertionError("completion left a negative multiplicity")
            completion[b] = total
        part = expand_binomial_product(
            alphabet, r.coeff, r.prefactor, completion.items()
        )
        if w is not None:
            part = part * w
        numerator = numerator + part

    denominator = expand_binomial_product(
        alphabet, 1, unit_monomial(alphabet), sorted(need.items())
    )
    return numerator, denominator
