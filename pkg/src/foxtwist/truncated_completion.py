"""Truncated completion of a free-group algebra and its Hopf structure.

The completion map sends x_i to 1 + X_i and x_i^-1 to the geometric
series sum (-1)^k X_i^k, then cuts at the degree cap.  Because the
degree filtration of a free-group algebra is faithful, an element lies
in the m-th power of the augmentation ideal exactly when its image at
cap m vanishes; that gives an exact membership test.

Tensors here are truncated by total degree: a monomial pair (m1, m2)
survives when len(m1) + len(m2) < cap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .group_algebra import GroupAlgebraElement
from .series import TruncatedSeries, _int_split, commutator, series_matrix_inverse

# Re-exported so that callers get the whole truncated layer from one place.
__all__ = [
    "TruncatedSeries",
    "TruncatedTensor",
    "commutator",
    "series_matrix_inverse",
    "embed",
    "counit",
    "fundamental_power_contains",
    "coproduct",
    "antipode",
    "antipode_coproduct",
    "tensor_outer",
    "sandwich",
    "conjugation_sum_series",
    "is_group_like",
    "is_primitive",
    "fox_left_series",
    "fox_right_series",
    "strip_first",
    "strip_last",
]


@lru_cache(maxsize=None)
def _letter_series(rank, cap, letter):
    if letter > 0:
        return TruncatedSeries(rank, cap, {(): 1, (letter,): 1})
    i = -letter
    terms = {(i,) * k: Fraction((-1) ** k) for k in range(cap)}
    return TruncatedSeries(rank, cap, terms)


@lru_cache(maxsize=None)
def _word_series(rank, cap, letters):
    if not letters:
        return TruncatedSeries.one(rank, cap)
    head = _word_series(rank, cap, letters[:-1])
    return head * _letter_series(rank, cap, letters[-1])


def embed(element: GroupAlgebraElement, cap: int) -> TruncatedSeries:
    """Image of a group-algebra element in the cap-truncated completion."""
    out = TruncatedSeries.zero(element.rank, cap)
    for word, coeff in element.words():
        out = out + _word_series(element.rank, cap, word.letters).scale(coeff)
    return out


def counit(series: TruncatedSeries) -> Fraction:
    return series.constant_term()


def fundamental_power_contains(element: GroupAlgebraElement, m: int) -> bool:
    """Whether the element lies in the m-th power of the augmentation ideal."""
    if m <= 0:
        return True
    return embed(element, m).is_zero()


class TruncatedTensor:
    """Element of the completed tensor square, cut by total degree."""

    __slots__ = ("rank", "cap", "terms")

    def __init__(self, rank, cap, terms=None):
        clean = {}
        for (left, right), coeff in (terms or {}).items():
            left, right = tuple(left), tuple(right)
            if len(left) + len(right) >= cap:
                continue
            coeff = Fraction(coeff)
            if coeff:
                key = (left, right)
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if not clean[key]:
                    del clean[key]
        self.rank = rank
        self.cap = cap
        self.terms = clean

    @classmethod
    def _raw(cls, rank, cap, terms):
        self = object.__new__(cls)
        self.rank = rank
        self.cap = cap
        self.terms = terms
        return self

    @classmethod
    def zero(cls, rank, cap):
        return cls._raw(rank, cap, {})

    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def coefficient(self, left, right):
        return self.terms.get((tuple(left), tuple(right)), Fraction(0))

    def _check_compatible(self, other):
        if self.rank != other.rank or self.cap != other.cap:
            raise ValueError("tensor rank or degree cap mismatch")

    def __add__(self, other):
        if not isinstance(other, TruncatedTensor):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return TruncatedTensor._raw(self.rank, self.cap, out)

    def __neg__(self):
        return TruncatedTensor._raw(self.rank, self.cap,
                                    {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedTensor):
            return NotImplemented
        return self + (-other)

    def scale(self, value):
        value = Fraction(value)
        if not value:
            return TruncatedTensor.zero(self.rank, self.cap)
        return TruncatedTensor._raw(self.rank, self.cap,
                                    {k: c * value for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedTensor):
            return NotImplemented
        self._check_compatible(other)
        out = {}
        for (al, ar), ca in self.terms.items():
            for (bl, br), cb in other.terms.items():
                if len(al) + len(ar) + len(bl) + len(br) >= self.cap:
                    continue
                key = (al + bl, ar + br)
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return TruncatedTensor._raw(self.rank, self.cap, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedTensor):
            return NotImplemented
        return (self.rank == other.rank and self.cap == other.cap
                and self.terms == other.terms)

    def __repr__(self):
        n = len(self.terms)
        return f"<tensor with {n} term{'s' if n != 1 else ''} (cap {self.cap})>"


def tensor_outer(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedTensor:
    if a.rank != b.rank or a.cap != b.cap:
        raise ValueError("tensor factors need matching rank and degree cap")
    out = {}
    for ma, ca in a.terms.items():
        room = a.cap - len(ma)
        for mb, cb in b.terms.items():
            if len(mb) >= room:
                continue
            out[(ma, mb)] = ca * cb
    return TruncatedTensor._raw(a.rank, a.cap, out)


@lru_cache(maxsize=None)
def _coproduct_monomial(cap, monomial):
    # Delta(X_i) = X_i x 1 + 1 x X_i + X_i x X_i, extended multiplicatively.
    pairs = {((), ()): 1}
    for letter in monomial:
        grown = {}
        for (left, right), c in pairs.items():
            for dl, dr in (((letter,), ()), ((), (letter,)), ((letter,), (letter,))):
                nl, nr = left + dl, right + dr
                if len(nl) + len(nr) >= cap:
                    continue
                key = (nl, nr)
                grown[key] = grown.get(key, 0) + c
        pairs = grown
    return pairs


def coproduct(series: TruncatedSeries) -> TruncatedTensor:
    out = {}
    for monomial, coeff in series.terms.items():
        for key, mult in _coproduct_monomial(series.cap, monomial).items():
            s = out.get(key, Fraction(0)) + coeff * mult
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return TruncatedTensor._raw(series.rank, series.cap, out)


@lru_cache(maxsize=None)
def _antipode_monomial(rank, cap, monomial):
    if not monomial:
        return TruncatedSeries.one(rank, cap)
    # Antipode is an anti-automorphism: S(m' X_i) = S(X_i) S(m').
    i = monomial[-1]
    letter = TruncatedSeries(rank, cap,
                             {(i,) * k: Fraction((-1) ** k) for k in range(1, cap)})
    return letter * _antipode_monomial(rank, cap, monomial[:-1])


def antipode(series: TruncatedSeries) -> TruncatedSeries:
    out = TruncatedSeries.zero(series.rank, series.cap)
    for monomial, coeff in series.terms.items():
        out = out + _antipode_monomial(series.rank, series.cap, monomial).scale(coeff)
    return out


@lru_cache(maxsize=None)
def _antipode_coproduct_monomial(rank, cap, monomial):
    out = {}
    for (left, right), mult in _coproduct_monomial(cap, monomial).items():
        s_left = _antipode_monomial(rank, cap, left)
        room = cap - len(right)
        for ms, cs in s_left.terms.items():
            if len(ms) >= room:
                continue
            key = (ms, right)
            c = out.get(key, Fraction(0)) + cs * mult
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return TruncatedTensor._raw(rank, cap, out)


def antipode_coproduct(series: TruncatedSeries) -> TruncatedTensor:
    """(S x id) applied to the coproduct of the series."""
    out = TruncatedTensor.zero(series.rank, series.cap)
    for monomial, coeff in series.terms.items():
        out = out + _antipode_coproduct_monomial(
            series.rank, series.cap, monomial).scale(coeff)
    return out


def sandwich(tensor: TruncatedTensor, filling: TruncatedSeries) -> TruncatedSeries:
    """Contract a tensor around a series: sum of left * filling * right."""
    if tensor.rank != filling.rank or tensor.cap != filling.cap:
        raise ValueError("sandwich needs matching rank and degree cap")
    cap = tensor.cap
    if not tensor.terms or not filling.terms:
        return TruncatedSeries.zero(filling.rank, cap)
    it, dt = _int_split(tensor.terms)
    ifl, dfl = _int_split(filling.terms)
    # Bucket the filling by degree so each frame only sees terms it can hold.
    buckets = [[] for _ in range(cap)]
    for mf, cf in ifl.items():
        buckets[len(mf)].append((mf, cf))
    out = {}
    for (left, right), ct in it.items():
        room = cap - len(left) - len(right)
        for degree in range(room):
            for mf, cf in buckets[degree]:
                key = left + mf + right
                out[key] = out.get(key, 0) + ct * cf
    den = dt * dfl
    return TruncatedSeries._raw(
        filling.rank, cap,
        {m: Fraction(n, den) for m, n in out.items() if n})


def conjugation_sum_series(v: TruncatedSeries, u: TruncatedSeries) -> TruncatedSeries:
    """Truncated conjugation sum: contract (S x id) of the coproduct of u
    around v."""
    return sandwich(antipode_coproduct(u), v)


def is_group_like(series: TruncatedSeries) -> bool:
    if series.constant_term() != 1:
        return False
    return coproduct(series) == tensor_outer(series, series)


def is_primitive(series: TruncatedSeries) -> bool:
    one = TruncatedSeries.one(series.rank, series.cap)
    expected = tensor_outer(series, one) + tensor_outer(one, series)
    return coproduct(series) == expected


def fox_left_series(series: TruncatedSeries, index: int) -> TruncatedSeries:
    """Left Fox derivative in the completion: the part of the series whose
    monomials end with X_index, with that last letter removed.  The result
    is only trustworthy one degree lower, so the cap drops by one."""
    kept = {m[:-1]: c for m, c in series.terms.items() if m and m[-1] == index}
    return TruncatedSeries(series.rank, series.cap - 1, kept)


def fox_right_series(series: TruncatedSeries, index: int) -> TruncatedSeries:
    """Right Fox derivative in the completion: strip a leading X_index."""
    kept = {m[1:]: c for m, c in series.terms.items() if m and m[0] == index}
    return TruncatedSeries(series.rank, series.cap - 1, kept)


def strip_last(series: TruncatedSeries, index: int) -> TruncatedSeries:
    """Like fox_left_series but keeps the cap; for callers that know the
    stripped degrees are still complete."""
    kept = {m[:-1]: c for m, c in series.terms.items() if m and m[-1] == index}
    return TruncatedSeries._raw(series.rank, series.cap, kept)


def strip_first(series: TruncatedSeries, index: int) -> TruncatedSeries:
    kept = {m[1:]: c for m, c in series.terms.items() if m and m[0] == index}
    return TruncatedSeries._raw(series.rank, series.cap, kept)
