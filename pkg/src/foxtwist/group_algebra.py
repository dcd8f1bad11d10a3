"""The rational group algebra of a free group, with exact arithmetic.

Elements are finite linear combinations of reduced words with Fraction
coefficients.  On top of the ring structure this module provides the
augmentation, the bar involution (reverse and invert every word), left
and right Fox derivatives, conjugation sums, and the projection onto
conjugacy classes.

Conventions used throughout the package:

* left Fox derivative:   d(ab) = d(a) aug(b) + a d(b),  d_i(x_j) = delta_ij,
  so an element expands as  a = aug(a) + sum_i d_i(a) (x_i - 1);
* right Fox derivative:  d(ab) = d(a) b + aug(a) d(b),  giving
  a = aug(a) + sum_i (x_i - 1) d^i(a);
* conjugation sum:       v^u = sum_x k_x x^-1 v x  for u = sum_x k_x x.
"""

from __future__ import annotations

from fractions import Fraction

from .words import GroupWord, _free_reduce


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an int, str or Fraction, got {type(value).__name__}")


class GroupAlgebraElement:
    """A finite Q-linear combination of free-group words of a fixed rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = as_fraction(coeff)
            if not coeff:
                continue
            mono = _free_reduce(mono)
            for x in mono:
                if x == 0 or abs(x) > rank:
                    raise ValueError(f"letter {x} out of range for rank {rank}")
            new = clean.get(mono, 0) + coeff
            if new:
                clean[mono] = new
            else:
                clean.pop(mono, None)
        self.rank = rank
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "GroupAlgebraElement":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "GroupAlgebraElement":
        return cls(rank, {(): Fraction(1)})

    @classmethod
    def from_word(cls, word: GroupWord, coeff=1) -> "GroupAlgebraElement":
        return cls(word.rank, {word.letters: as_fraction(coeff)})

    @classmethod
    def generator(cls, rank: int, i: int, sign: int = 1) -> "GroupAlgebraElement":
        return cls.from_word(GroupWord.generator(rank, i, sign))

    # -- structure ---------------------------------------------------------

    def words(self):
        """Iterate over (GroupWord, coefficient) pairs."""
        for mono, coeff in self.terms.items():
            yield GroupWord(self.rank, mono), coeff

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def bar(self) -> "GroupAlgebraElement":
        """The involution sending every word to its inverse."""
        out = {}
        for mono, coeff in self.terms.items():
            out[tuple(-x for x in reversed(mono))] = coeff
        return GroupAlgebraElement(self.rank, out)

    # -- ring operations ---------------------------------------------------

    def _check_rank(self, other: "GroupAlgebraElement"):
        if self.rank != other.rank:
            raise ValueError("rank mismatch between group algebra elements")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement(self.rank, {(): as_fraction(other)})
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check_rank(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return GroupAlgebraElement(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElement(self.rank, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-as_fraction(other))
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k) -> "GroupAlgebraElement":
        k = as_fraction(k)
        return GroupAlgebraElement(self.rank, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check_rank(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = _free_reduce(ma + mb)
                new = out.get(mono, 0) + ca * cb
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        return GroupAlgebraElement(self.rank, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement(self.rank, {(): as_fraction(other)})
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "<0>"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            coeff = self.terms[mono]
            word = ".".join(f"x{x}" if x > 0 else f"x{-x}'" for x in mono) or "1"
            parts.append(f"{coeff}*{word}")
        return "<" + " + ".join(parts) + ">"


def fox_derivative_left(a: GroupAlgebraElement, i: int) -> GroupAlgebraElement:
    """Left Fox derivative: d(ab) = d(a) aug(b) + a d(b), d_i(x_j) = delta_ij."""
    out = {}
    for mono, coeff in a.terms.items():
        for p, x in enumerate(mono):
            if x == i:
                key, c = mono[:p], coeff
            elif x == -i:
                key, c = mono[: p + 1], -coeff
            else:
                continue
            new = out.get(key, 0) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return GroupAlgebraElement(a.rank, out)


def fox_derivative_right(a: GroupAlgebraElement, i: int) -> GroupAlgebraElement:
    """Right Fox derivative: d(ab) = d(a) b + aug(a) d(b)."""
    out = {}
    for mono, coeff in a.terms.items():
        for p, x in enumerate(mono):
            if x == i:
                key, c = mono[p + 1 :], coeff
            elif x == -i:
                key, c = mono[p:], -coeff
            else:
                continue
            new = out.get(key, 0) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return GroupAlgebraElement(a.rank, out)


def fox_derivative(side: str, i: int, a: GroupAlgebraElement) -> GroupAlgebraElement:
    if side == "left":
        return fox_derivative_left(a, i)
    if side == "right":
        return fox_derivative_right(a, i)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def conjugation_sum(v: GroupAlgebraElement, u: GroupAlgebraElement) -> GroupAlgebraElement:
    """v^u = sum_x k_x x^-1 v x, where u = sum_x k_x x.  Linear in both."""
    v._check_rank(u)
    out = GroupAlgebraElement.zero(v.rank)
    for mono, coeff in u.terms.items():
        inv = tuple(-x for x in reversed(mono))
        conj = {}
        for mv, cv in v.terms.items():
            key = _free_reduce(inv + mv + mono)
            conj[key] = conj.get(key, 0) + cv * coeff
        out = out + GroupAlgebraElement(v.rank, conj)
    return out


def cyclic_projection(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Replace every word by the canonical representative of its conjugacy class."""
    out = {}
    for mono, coeff in a.terms.items():
        key = GroupWord(a.rank, mono).cyclic_normal_form().letters
        new = out.get(key, 0) + coeff
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return GroupAlgebraElement(a.rank, out)
