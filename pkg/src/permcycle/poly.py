"""Sparse univariate polynomials over a :class:`~permcycle.field.FieldSpec`.

Exponents are kept exactly as constructed (never reduced mod q-1), so the
printed degree of a construction is the degree it was built with.

Text grammar (whitespace ignored)::

    poly  := term ('+' term)*
    term  := coeff ['*'] 'x' ['^' exponent] | coeff | 'x' ['^' exponent]
    coeff := element text, see FieldSpec.parse_element (g^e excluded)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import FieldMismatch, NegativeExponent, PolynomialSyntaxError
from .field import FieldElement, FieldSpec

__all__ = ["SparsePolynomial", "canonicalize", "parse_poly"]

Term = tuple[int, FieldElement]


@dataclass(frozen=True)
class SparsePolynomial:
    """Canonical sparse polynomial: nonzero coefficients, strictly decreasing exponents."""

    field: FieldSpec
    terms: tuple[Term, ...]

    @classmethod
    def from_terms(cls, field: FieldSpec, raw: Iterable[tuple[int, FieldElement | int]]) -> SparsePolynomial:
        return canonicalize(field, raw)

    @classmethod
    def monomial(cls, field: FieldSpec, exponent: int, coeff: FieldElement | int = 1) -> SparsePolynomial:
        return canonicalize(field, [(exponent, coeff)])

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.terms[0][0] if self.terms else -1

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exponent: int) -> FieldElement:
        for e, c in self.terms:
            if e == exponent:
                return c
        return self.field.zero

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __call__(self, x: FieldElement | int) -> FieldElement:
        return evaluate(self, x)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"SparsePolynomial({format_poly(self)!r}, q={self.field.q})"

    def to_json(self) -> dict:
        return {"terms": [[e, c.value] for e, c in self.terms]}

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> SparsePolynomial:
        return canonicalize(field, [(int(e), field(int(c))) for e, c in obj["terms"]])


def canonicalize(field: FieldSpec, raw: Iterable[tuple[int, FieldElement | int]]) -> SparsePolynomial:
    """Merge duplicate exponents, drop zero coefficients, sort descending.

    Integer coefficients are read as multiples of 1.
    """
    acc: dict[int, FieldElement] = {}
    for e, c in raw:
        if e < 0:
            raise NegativeExponent(f"negative exponent {e}")
        if isinstance(c, FieldElement):
            if c.field is not field and c.field != field:
                raise FieldMismatch(f"coefficient {c!r} is not in {field!r}")
        else:
            c = field.scalar(c)
        prev = acc.get(e)
        acc[e] = c if prev is None else prev + c
    terms = tuple((e, acc[e]) for e in sorted(acc, reverse=True) if acc[e].value)
    return SparsePolynomial(field, terms)


def evaluate(f: SparsePolynomial, x: FieldElement | int) -> FieldElement:
    """Sum of c * x^e over the terms, each power by square-and-multiply."""
    F = f.field
    if isinstance(x, FieldElement):
        if x.field is not F and x.field != F:
            raise FieldMismatch(f"{x!r} is not in {F!r}")
    else:
        x = F(x)
    if F.k == 1:
        p, xv = F.p, x.value
        return FieldElement(F, sum(c.value * pow(xv, e, p) for e, c in f.terms) % p)
    total = F.zero
    for e, c in f.terms:
        total = total + c * x**e
    return total


def format_poly(f: SparsePolynomial) -> str:
    if not f.terms:
        return "0"
    F = f.field
    out = []
    for e, c in f.terms:
        ctext = F.format_element(c)
        if e == 0:
            out.append(ctext)
            continue
        mono = "x" if e == 1 else f"x^{e}"
        if c.value == 1:
            out.append(mono)
        elif ctext.isdigit():
            out.append(ctext + mono)
        else:
            out.append(f"{ctext}*{mono}")
    return "+".join(out)


_COEFF = re.compile(r"\[[\d,]*\]|enc:\d+|\d+(?:,\d+)*")
_EXP = re.compile(r"\^(\d+)")


def parse_poly(text: str, field: FieldSpec) -> SparsePolynomial:
    """Parse polynomial text; raises PolynomialSyntaxError with the offending position."""
    # whitespace is insignificant; keep a map back to original offsets for errors
    keep = [i for i, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[i] for i in keep)

    def where(pos: int) -> int:
        return keep[pos] if pos < len(keep) else len(text)

    if not s:
        raise PolynomialSyntaxError("empty polynomial", 0)
    raw: list[tuple[int, FieldElement]] = []
    pos = 0
    while True:
        coeff = field.one
        have_coeff = False
        m = _COEFF.match(s, pos)
        if m:
            try:
                coeff = field.parse_element(m.group(0))
            except PolynomialSyntaxError as exc:
                raise PolynomialSyntaxError(str(exc).rsplit(" at position", 1)[0], where(pos)) from None
            have_coeff = True
            pos = m.end()
            if s.startswith("*", pos):
                pos += 1
                if not s.startswith("x", pos):
                    raise PolynomialSyntaxError("expected 'x' after '*'", where(pos))
        exponent = 0
        if s.startswith("x", pos):
            pos += 1
            exponent = 1
            m = _EXP.match(s, pos)
            if m:
                exponent = int(m.group(1))
                pos = m.end()
            elif s.startswith("^", pos):
                raise PolynomialSyntaxError("expected exponent after '^'", where(pos + 1))
        elif not have_coeff:
            raise PolynomialSyntaxError("expected a term", where(pos))
        raw.append((exponent, coeff))
        if pos == len(s):
            break
        if s[pos] != "+":
            raise PolynomialSyntaxError(f"unexpected {s[pos]!r}", where(pos))
        pos += 1
    return canonicalize(field, raw)
