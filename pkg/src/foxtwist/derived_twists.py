"""Derived forms of Fox pairings and the twist automorphisms they generate.

The derived form sigma of a pairing rho sends group elements (a, b) to
b * a^rho(a,b) and extends bilinearly.  In the truncated completion it is
computed by a coproduct-based composite that never needs group-word
preimages; for a fixed first argument sigma(u, -) is a derivation, so one
pass produces the n generator values and everything else follows by the
Leibniz rule.  Twists are exponentials exp(sigma(k log^2(alpha), -)),
defined when alpha pairs to zero with itself homologically.

Degree bookkeeping: sigma can drop filtration degree by two, so a result
wanted at cap M is computed from inputs at cap M + 2 and truncated.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import DomainError, IsotropyError, NilpotencyCapExceeded
from .fox_pairings import TRUNCATED, FoxPairing
from .group_algebra import GroupAlgebraElement, as_fraction, conjugation_sum
from .series import TruncatedSeries
from .truncated_completion import (
    _antipode_coproduct_monomial,
    _coproduct_monomial,
    antipode_coproduct,
    conjugation_sum_series,
    embed,
    is_group_like,
    sandwich,
)
from .words import GroupWord


def derived_form_exact(pairing: FoxPairing, a: GroupAlgebraElement,
                       b: GroupAlgebraElement, left: bool = False) -> GroupAlgebraElement:
    """sigma(a, b) = b * a^rho(a,b), extended bilinearly over word pairs.

    With left=True returns the companion form b^bar(rho(a,b)) * a, which
    is the plain derived form of the transposed pairing at (b, a).
    """
    if pairing.representation != "exact":
        raise ValueError("derived_form_exact needs an exact pairing")
    if left:
        return derived_form_exact(pairing.transpose(), b, a)
    total = GroupAlgebraElement.zero(pairing.rank)
    for wa, ca in a.words():
        ea = GroupAlgebraElement.from_word(wa)
        for wb, cb in b.words():
            eb = GroupAlgebraElement.from_word(wb)
            value = pairing.evaluate(ea, eb)
            if value.is_zero():
                continue
            total = total + (eb * conjugation_sum(ea, value)).scale(ca * cb)
    return total


def derived_generator_values(pairing: FoxPairing, u: TruncatedSeries) -> list:
    """Values sigma(u, 1 + X_j) for j = 1..n, all at the working cap.

    For group-like second argument b the composite collapses to
    b * sum over coproduct legs (u1, u2) of u1^rho(u2, b).  Legs are
    grouped by the trailing letter r of u2, which reduces the whole
    computation to n conjugation kernels G_r followed by one sandwich
    per matrix entry.
    """
    if pairing.representation != TRUNCATED:
        raise ValueError("derived_generator_values needs a truncated pairing")
    if u.rank != pairing.rank:
        raise ValueError("rank mismatch")
    n = pairing.rank
    cap = min(u.cap, pairing.cap)
    work = u.truncate(cap)

    # G_r = sum of u1 conjugated by the stripped leg u2[:-1], over legs
    # ending in r.  Splits are enumerated one degree above the cap since
    # the strip refunds a degree.
    g_terms = [dict() for _ in range(n)]
    for monomial, coeff in work.terms.items():
        for (m1, m2), mult in _coproduct_monomial(cap + 1, monomial).items():
            if not m2 or len(m1) + len(m2) - 1 >= cap:
                continue
            weight = coeff * mult
            bucket = g_terms[m2[-1] - 1]
            kernel = _antipode_coproduct_monomial(n, cap, m2[:-1])
            room = cap - len(m1)
            for (s1, s2), cs in kernel.terms.items():
                if len(s1) + len(s2) >= room:
                    continue
                key = s1 + m1 + s2
                c = bucket.get(key, 0) + weight * cs
                if c:
                    bucket[key] = c
                else:
                    bucket.pop(key, None)
    kernels = [TruncatedSeries._raw(n, cap, terms) for terms in g_terms]

    values = []
    for j in range(n):
        acc = TruncatedSeries.zero(n, cap)
        for r in range(n):
            if kernels[r].is_zero():
                continue
            entry = pairing.entry(r + 1, j + 1).truncate(cap)
            if entry.is_zero():
                continue
            acc = acc + sandwich(antipode_coproduct(entry), kernels[r])
        values.append((1 + TruncatedSeries.variable(n, cap, j + 1)) * acc)
    return values


def apply_derivation(values: list, series: TruncatedSeries) -> TruncatedSeries:
    """Extend generator values to a derivation and apply it.

    values[i] is the image of X_{i+1}.  Result degrees are only complete
    as far as the values are; with values of filtration degree >= 1 the
    full cap is trustworthy.
    """
    n = len(values)
    if series.rank != n:
        raise ValueError("rank mismatch")
    cap = min(series.cap, min((v.cap for v in values), default=series.cap))
    out = {}
    # Value terms bucketed by degree: a slot of degree d only accepts
    # replacements keeping the total below the cap.
    tables = []
    for v in values:
        buckets = [[] for _ in range(cap)]
        for dm, dc in v.truncate(cap).terms.items():
            buckets[len(dm)].append((dm, dc))
        tables.append(buckets)
    for monomial, coeff in series.truncate(cap).terms.items():
        room = cap - (len(monomial) - 1)
        for p, letter in enumerate(monomial):
            head, tail = monomial[:p], monomial[p + 1:]
            buckets = tables[letter - 1]
            for degree in range(min(room, cap)):
                for dm, dc in buckets[degree]:
                    key = head + dm + tail
                    c = out.get(key, 0) + coeff * dc
                    if c:
                        out[key] = c
                    else:
                        out.pop(key, None)
    return TruncatedSeries._raw(n, cap, out)


def derived_form_truncated(pairing: FoxPairing, u: TruncatedSeries,
                           v: TruncatedSeries) -> TruncatedSeries:
    """sigma(u, v) in the truncation, via generator values and the
    Leibniz rule.  Inputs complete at cap W give a result complete at
    W - 2."""
    values = derived_generator_values(pairing, u)
    cap = min(v.cap, values[0].cap)
    return apply_derivation([x.truncate(cap) for x in values], v.truncate(cap))


def sigma_log_squared(k, a: TruncatedSeries, b: TruncatedSeries, rho_ab) -> TruncatedSeries:
    """sigma(k log^2(a), b) = 2k * b * (log a)^rho(a,b) for group-like a, b.

    rho_ab may be a group-algebra element (conjugation word by word) or a
    truncated series (coproduct route); this supports pairings known only
    at the pair (a, b).
    """
    if not is_group_like(a) or not is_group_like(b):
        raise DomainError("sigma_log_squared needs group-like arguments")
    k = as_fraction(k)
    log_a = a.log()
    if isinstance(rho_ab, GroupAlgebraElement):
        conjugated = TruncatedSeries.zero(a.rank, a.cap)
        for word, coeff in rho_ab.words():
            left = embed(GroupAlgebraElement.from_word(word.inverse()), a.cap)
            right = embed(GroupAlgebraElement.from_word(word), a.cap)
            conjugated = conjugated + (left * log_a * right).scale(coeff)
    elif isinstance(rho_ab, TruncatedSeries):
        conjugated = conjugation_sum_series(log_a, rho_ab.truncate(a.cap))
    else:
        raise TypeError("rho_ab must be exact or truncated")
    return (b * conjugated).scale(2 * k)


def exp_derivation(values: list):
    """The algebra map exp(d) for the derivation d with the given
    generator values, as a callable on truncated series.

    Values must lie in filtration degree >= 1; termination is detected by
    cap vanishing, with a safety bound that flags derivations that are
    not weakly nilpotent.
    """
    for v in values:
        if v.constant_term() != 0:
            raise DomainError("derivation values must have no constant term")
    bound = (max((v.cap for v in values), default=2) + 1) ** 2

    def apply(series: TruncatedSeries) -> TruncatedSeries:
        total = series
        term = series
        j = 0
        while not term.is_zero():
            j += 1
            if j > bound:
                raise NilpotencyCapExceeded(
                    "exp did not stabilize within %d iterations" % bound)
            term = apply_derivation(values, term).scale(Fraction(1, j))
            total = total + term
        return total

    return apply


class TwistAutomorphism:
    """A filtered algebra automorphism stored by its generator images."""

    __slots__ = ("rank", "cap", "images", "_prefix_cache", "_inverse_images")

    def __init__(self, rank: int, cap: int, images):
        images = tuple(images)
        if len(images) != rank:
            raise ValueError("need one image per generator")
        for im in images:
            if im.rank != rank or im.cap != cap:
                raise ValueError("image rank/cap mismatch")
            if im.constant_term() != 1:
                raise ValueError("generator images must have constant term 1")
        self.rank = rank
        self.cap = cap
        self.images = images
        self._prefix_cache = {(): TruncatedSeries.one(rank, cap)}
        self._inverse_images = {}

    @classmethod
    def identity(cls, rank: int, cap: int) -> "TwistAutomorphism":
        return cls(rank, cap,
                   [1 + TruncatedSeries.variable(rank, cap, i + 1) for i in range(rank)])

    def _monomial_image(self, monomial) -> TruncatedSeries:
        cached = self._prefix_cache.get(monomial)
        if cached is None:
            head = self._monomial_image(monomial[:-1])
            cached = head * (self.images[monomial[-1] - 1] - 1)
            self._prefix_cache[monomial] = cached
        return cached

    def apply(self, series: TruncatedSeries) -> TruncatedSeries:
        """Substitute generator images multiplicatively."""
        if series.rank != self.rank:
            raise ValueError("rank mismatch")
        cap = min(series.cap, self.cap)
        out = TruncatedSeries.zero(self.rank, cap)
        for monomial, coeff in series.terms.items():
            if len(monomial) >= cap:
                continue
            out = out + self._monomial_image(monomial).truncate(cap).scale(coeff)
        return out

    def apply_word(self, word: GroupWord) -> TruncatedSeries:
        """Image of the embedded group word; negative letters go through
        series inversion of the corresponding image."""
        if word.rank != self.rank:
            raise ValueError("rank mismatch")
        out = TruncatedSeries.one(self.rank, self.cap)
        for letter in word.letters:
            if letter > 0:
                out = out * self.images[letter - 1]
            else:
                inv = self._inverse_images.get(-letter)
                if inv is None:
                    inv = self.images[-letter - 1].inverse()
                    self._inverse_images[-letter] = inv
                out = out * inv
        return out

    def compose(self, other: "TwistAutomorphism") -> "TwistAutomorphism":
        """self after other."""
        self._check_compatible(other)
        return TwistAutomorphism(self.rank, self.cap,
                                 [self.apply(im) for im in other.images])

    def power(self, m: int) -> "TwistAutomorphism":
        if m < 0:
            return self.inverse().power(-m)
        result = TwistAutomorphism.identity(self.rank, self.cap)
        for _ in range(m):
            result = self.compose(result)
        return result

    def inverse(self) -> "TwistAutomorphism":
        """Solve for preimages of the generators degree by degree.

        The degree-preserving part of the substitution is the
        multiplicative extension of the homology matrix, so each new
        degree is fixed by one application of its inverse.
        """
        linear = TwistAutomorphism._linear(self.rank, self.cap,
                                           linalg.mat_inverse(self.homology_matrix()))
        preimages = []
        for i in range(self.rank):
            target = 1 + TruncatedSeries.variable(self.rank, self.cap, i + 1)
            candidate = TruncatedSeries.one(self.rank, self.cap)
            for degree in range(1, self.cap):
                defect = (target - self.apply(candidate)).degree_part(degree)
                if not defect.is_zero():
                    candidate = candidate + linear.apply(defect)
            if self.apply(candidate) != target:
                raise ValueError("automorphism is not invertible at this cap")
            preimages.append(candidate)
        return TwistAutomorphism(self.rank, self.cap, preimages)

    @classmethod
    def _linear(cls, rank, cap, matrix) -> "TwistAutomorphism":
        images = []
        for i in range(rank):
            im = TruncatedSeries.one(rank, cap)
            for j in range(rank):
                if matrix[j][i]:
                    im = im + TruncatedSeries.variable(rank, cap, j + 1).scale(matrix[j][i])
            images.append(im)
        return cls(rank, cap, images)

    def homology_matrix(self) -> list:
        """Degree-one action: column i holds the image of generator i."""
        return [
            [self.images[i].coefficient((j + 1,)) for i in range(self.rank)]
            for j in range(self.rank)
        ]

    def is_hopf(self) -> bool:
        """Coproduct compatibility on generators: group-like images."""
        return all(is_group_like(im) for im in self.images)

    def preserves_pairing(self, pairing: FoxPairing) -> bool:
        """rho(T a, T b) = T rho(a, b) on generator pairs, one degree
        below the working cap."""
        cap = min(self.cap, pairing.cap) - 1
        for i in range(self.rank):
            for j in range(self.rank):
                lhs = pairing.evaluate(self.images[i], self.images[j]).truncate(cap)
                rhs = self.apply(pairing.entry(i + 1, j + 1)).truncate(cap)
                if lhs != rhs:
                    return False
        return True

    def fixes(self, series: TruncatedSeries) -> bool:
        cap = min(self.cap, series.cap)
        return self.apply(series.truncate(cap)) == series.truncate(cap)

    def truncate(self, new_cap: int) -> "TwistAutomorphism":
        return TwistAutomorphism(self.rank, new_cap,
                                 [im.truncate(new_cap) for im in self.images])

    def _check_compatible(self, other: "TwistAutomorphism"):
        if self.rank != other.rank or self.cap != other.cap:
            raise ValueError("automorphism rank/cap mismatch")

    def __eq__(self, other):
        if not isinstance(other, TwistAutomorphism):
            return NotImplemented
        return (self.rank, self.cap, self.images) == (other.rank, other.cap, other.images)

    def __repr__(self):
        return "TwistAutomorphism(rank=%d, cap=%d)" % (self.rank, self.cap)


def homological_self_pairing(pairing: FoxPairing, word: GroupWord) -> Fraction:
    """The homological pairing of a word's class with itself."""
    column = [Fraction(s) for s in word.exponent_sums()]
    image = linalg.mat_vec(pairing.homological_form(), column)
    return sum((column[i] * image[i] for i in range(len(column))), Fraction(0))


def twist(pairing: FoxPairing, k, alpha: GroupWord) -> TwistAutomorphism:
    """The automorphism exp(sigma(k log^2 iota(alpha), -)).

    Requires the homological self-pairing of alpha to vanish; otherwise
    the exponent is not weakly nilpotent and no automorphism exists at
    any cap.  The result carries the pairing cap minus two, the degrees
    the derived-form pipeline determines completely, so every stored
    coefficient of the images is exact.
    """
    if pairing.representation != TRUNCATED:
        raise ValueError("twists are built from truncated pairings")
    if alpha.rank != pairing.rank:
        raise ValueError("rank mismatch")
    if pairing.cap < 3:
        raise ValueError("twists need a pairing cap of at least 3")
    self_pairing = homological_self_pairing(pairing, alpha)
    if self_pairing != 0:
        raise IsotropyError("curve pairs with itself to %s, not 0" % self_pairing)
    k = as_fraction(k)
    cap = pairing.cap
    log_alpha = embed(GroupAlgebraElement.from_word(alpha), cap).log()
    exponent = (log_alpha * log_alpha).scale(k)
    values = derived_generator_values(pairing, exponent)
    mapper = exp_derivation(values)
    images = [mapper(1 + TruncatedSeries.variable(pairing.rank, cap, i + 1))
              for i in range(pairing.rank)]
    return TwistAutomorphism(pairing.rank, cap, images).truncate(cap - 2)
