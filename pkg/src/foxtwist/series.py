"""Truncated power series in noncommuting variables X_1 .. X_n.

A series lives in the quotient of the free associative Q-algebra on
X_1 .. X_n by the ideal of terms of degree >= cap, so ``cap`` is the
first discarded degree.  Monomials are tuples of generator indices
(1-based); coefficients are exact Fractions.

These series model truncated completions of group algebras where
X_i = x_i - 1; the embedding itself lives in ``completion``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction

from .errors import DomainError, NotInvertible
from .linalg import mat_inverse


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _int_split(terms):
    """Rewrite {monomial: Fraction} as ({monomial: int}, denominator)."""
    den = 1
    for c in terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {m: int(c * den) for m, c in terms.items()}, den


def _mul_terms(aterms, bterms, cap):
    """Concatenation product of two term dicts, dropping degree >= cap.

    Coefficients are pulled apart into integers over a common
    denominator so the inner loop is pure int arithmetic.
    """
    if not aterms or not bterms:
        return {}
    ia, da = _int_split(aterms)
    ib, db = _int_split(bterms)
    by_len = defaultdict(list)
    for mb, cb in ib.items():
        by_len[len(mb)].append((mb, cb))
    out = {}
    for ma, ca in ia.items():
        room = cap - len(ma)
        for lb, entries in by_len.items():
            if lb >= room:
                continue
            for mb, cb in entries:
                key = ma + mb
                out[key] = out.get(key, 0) + ca * cb
    den = da * db
    return {m: Fraction(n, den) for m, n in out.items() if n}


class TruncatedSeries:
    __slots__ = ("rank", "cap", "terms")

    def __init__(self, rank, cap, terms=None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError("rank must be a positive integer")
        if not isinstance(cap, int) or cap < 1:
            raise ValueError("degree cap must be a positive integer")
        clean = {}
        for monomial, coeff in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) >= cap:
                continue
            if any(not isinstance(i, int) or not 1 <= i <= rank for i in monomial):
                raise ValueError(f"monomial {monomial} has letters outside 1..{rank}")
            coeff = _as_fraction(coeff)
            if coeff:
                clean[monomial] = clean.get(monomial, Fraction(0)) + coeff
                if not clean[monomial]:
                    del clean[monomial]
        self.rank = rank
        self.cap = cap
        self.terms = clean

    @classmethod
    def _raw(cls, rank, cap, terms):
        # Internal constructor: terms must already be clean.
        self = object.__new__(cls)
        self.rank = rank
        self.cap = cap
        self.terms = terms
        return self

    @classmethod
    def zero(cls, rank, cap):
        return cls._raw(rank, cap, {})

    @classmethod
    def one(cls, rank, cap):
        return cls._raw(rank, cap, {(): Fraction(1)})

    @classmethod
    def scalar(cls, rank, cap, value):
        value = _as_fraction(value)
        return cls._raw(rank, cap, {(): value} if value else {})

    @classmethod
    def variable(cls, rank, cap, index):
        if not 1 <= index <= rank:
            raise ValueError(f"variable index {index} outside 1..{rank}")
        if cap < 2:
            return cls.zero(rank, cap)
        return cls._raw(rank, cap, {(index,): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), Fraction(0))

    def items(self):
        return self.terms.items()

    def filtration_degree(self):
        """Smallest degree carrying a term; cap when the series is zero."""
        if not self.terms:
            return self.cap
        return min(len(m) for m in self.terms)

    def degree_part(self, degree):
        kept = {m: c for m, c in self.terms.items() if len(m) == degree}
        return TruncatedSeries._raw(self.rank, self.cap, kept)

    def truncate(self, new_cap):
        if new_cap > self.cap:
            raise ValueError("cannot raise a degree cap; missing terms are unknown")
        kept = {m: c for m, c in self.terms.items() if len(m) < new_cap}
        return TruncatedSeries._raw(self.rank, new_cap, kept)

    def _check_compatible(self, other):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        if self.cap != other.cap:
            raise ValueError(f"degree cap mismatch: {self.cap} vs {other.cap}")

    def _coerce(self, value):
        if isinstance(value, TruncatedSeries):
            self._check_compatible(value)
            return value
        if isinstance(value, (int, Fraction)):
            return TruncatedSeries.scalar(self.rank, self.cap, value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TruncatedSeries._raw(self.rank, self.cap, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(self.rank, self.cap,
                                    {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        value = _as_fraction(value)
        if not value:
            return TruncatedSeries.zero(self.rank, self.cap)
        return TruncatedSeries._raw(self.rank, self.cap,
                                    {m: c * value for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, TruncatedSeries):
            self._check_compatible(other)
            return TruncatedSeries._raw(
                self.rank, self.cap, _mul_terms(self.terms, other.terms, self.cap))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.rank, self.cap)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.scalar(self.rank, self.cap, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.rank == other.rank and self.cap == other.cap
                and self.terms == other.terms)

    def inverse(self):
        """Multiplicative inverse; needs an invertible constant term."""
        c = self.constant_term()
        if not c:
            raise NotInvertible("series with zero constant term has no inverse")
        # self = c * (1 - r) with r of positive filtration degree
        r = (TruncatedSeries.one(self.rank, self.cap) - self.scale(1 / c))
        out = TruncatedSeries.one(self.rank, self.cap)
        power = r
        while not power.is_zero():
            out = out + power
            power = power * r
        return out.scale(1 / c)

    def log(self):
        """log of a series with constant term 1."""
        if self.constant_term() != 1:
            raise DomainError("log needs constant term exactly 1")
        z = self - 1
        out = TruncatedSeries.zero(self.rank, self.cap)
        power = z
        k = 1
        while not power.is_zero():
            out = out + power.scale(Fraction((-1) ** (k + 1), k))
            power = power * z
            k += 1
        return out

    def exp(self):
        """exp of a series with constant term 0."""
        if self.constant_term():
            raise DomainError("exp needs constant term exactly 0")
        out = TruncatedSeries.one(self.rank, self.cap)
        power = self
        k = 1
        while not power.is_zero():
            out = out + power.scale(Fraction(1, math.factorial(k)))
            power = power * self
            k += 1
        return out

    def __repr__(self):
        if not self.terms:
            return f"<series 0 (cap {self.cap})>"
        bits = []
        for m, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            if not m:
                bits.append(str(c))
                continue
            factors = [f"X{i}" if n == 1 else f"X{i}^{n}"
                       for i, group in itertools.groupby(m)
                       for n in (len(tuple(group)),)]
            mono = "*".join(factors)
            bits.append(mono if c == 1 else f"{c}*{mono}")
        return f"<series {' + '.join(bits)} (cap {self.cap})>"


def commutator(a, b):
    return a * b - b * a


def series_matrix_inverse(matrix):
    """Inverse of a square matrix of TruncatedSeries entries.

    Splits off the constant-term matrix, inverts it over Q, and runs a
    Neumann sum on the rest; NotInvertible if the constant part is
    singular.
    """
    n = len(matrix)
    sample = matrix[0][0]
    rank, cap = sample.rank, sample.cap
    head = [[entry.constant_term() for entry in row] for row in matrix]
    head_inv = mat_inverse(head)

    def lift(q):
        return [[TruncatedSeries.scalar(rank, cap, q[i][j]) for j in range(n)]
                for i in range(n)]

    def smat_mul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(n)),
                     TruncatedSeries.zero(rank, cap))
                 for j in range(n)] for i in range(n)]

    head_inv_s = lift(head_inv)
    reduced = smat_mul(head_inv_s, matrix)
    # reduced = I - E with E of positive filtration degree
    one = TruncatedSeries.one(rank, cap)
    residual = [[(one if i == j else TruncatedSeries.zero(rank, cap)) - reduced[i][j]
                 for j in range(n)] for i in range(n)]
    total = lift([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    power = residual
    while any(not entry.is_zero() for row in power for entry in row):
        total = [[total[i][j] + power[i][j] for j in range(n)] for i in range(n)]
        power = smat_mul(power, residual)
    return smat_mul(total, head_inv_s)
