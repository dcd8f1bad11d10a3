"""Completed tensor algebra over H with the symplectic pairing machinery.

H is the degree-1 homology of a genus g surface with basis written
a1, b1, ..., ag, bg; the completed tensor algebra reuses the sparse
truncated-series representation, with letter i naming the i-th basis
vector of H rather than a shifted group generator.  The coproduct here
is the one making every letter primitive, which is why this module has
its own group-like and primitivity tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .derived_twists import derived_form_truncated
from .errors import DomainError, SolverError
from .group_algebra import GroupAlgebraElement
from .series import TruncatedSeries
from .surfaces import (
    SurfaceSpec,
    first_difference,
    intersection_form,
    surface_pairing,
)
from .truncated_completion import TruncatedTensor, embed, tensor_outer
from .words import GroupWord

TensorSeries = TruncatedSeries

# s(z) = 1/(e^{-z} - 1) + 1/z, coefficients of z^0 .. z^5.  Caps up to 8
# only ever consume the first few; the recurrence s(z)(e^{-z} - 1) =
# 1 + (e^{-z} - 1)/z pins them and is asserted in the test suite.
S_COEFFICIENTS = (
    Fraction(-1, 2),
    Fraction(-1, 12),
    Fraction(0),
    Fraction(1, 720),
    Fraction(0),
    Fraction(-1, 30240),
)


def _genus_of_rank(rank: int) -> int:
    if rank % 2:
        raise ValueError("H must be even-dimensional")
    return rank // 2


def basis_names(genus: int) -> list:
    out = []
    for i in range(1, genus + 1):
        out.append(f"a{i}")
        out.append(f"b{i}")
    return out


def basis_vector(genus: int, index: int, cap: int) -> TensorSeries:
    return TruncatedSeries.variable(2 * genus, cap, index)


def intersection_number(genus: int, h: int, k: int) -> Fraction:
    """Homological h . k for basis indices, from the symplectic matrix."""
    return intersection_form(genus)[h - 1][k - 1]


def omega(genus: int, cap: int) -> TensorSeries:
    """The degree-2 dual of the intersection form: sum of b_i a_i - a_i b_i."""
    if cap < 3:
        raise ValueError("omega needs cap at least 3")
    terms = {}
    for i in range(genus):
        a = 2 * i + 1
        b = 2 * i + 2
        terms[(b, a)] = Fraction(1)
        terms[(a, b)] = Fraction(-1)
    return TruncatedSeries._raw(2 * genus, cap, terms)


@lru_cache(maxsize=None)
def _primitive_splits(monomial):
    """All ways to deal the letters into two ordered hands."""
    if not monomial:
        return ((tuple(), tuple()),)
    head = monomial[:1]
    out = []
    for left, right in _primitive_splits(monomial[1:]):
        out.append((head + left, right))
        out.append((left, head + right))
    return tuple(out)


def tensor_coproduct(series: TensorSeries) -> TruncatedTensor:
    """Coproduct with every basis letter primitive."""
    terms = {}
    for monomial, coeff in series.terms.items():
        for key in _primitive_splits(monomial):
            s = terms.get(key, 0) + coeff
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return TruncatedTensor(series.rank, series.cap, terms)


def is_tensor_primitive(series: TensorSeries) -> bool:
    if series.constant_term():
        return False
    one = TruncatedSeries.one(series.rank, series.cap)
    expected = tensor_outer(series, one) + tensor_outer(one, series)
    return tensor_coproduct(series) == expected


def is_tensor_group_like(series: TensorSeries) -> bool:
    if series.constant_term() != 1:
        return False
    return tensor_coproduct(series) == tensor_outer(series, series)


def cyclicize(series: TensorSeries) -> TensorSeries:
    """Sum of all cyclic rotations; defined on homogeneous input of degree >= 1."""
    degrees = {len(m) for m in series.terms}
    if not degrees:
        return TruncatedSeries.zero(series.rank, series.cap)
    if len(degrees) != 1:
        raise ValueError("cyclicization needs a homogeneous input")
    (degree,) = degrees
    if degree < 1:
        raise ValueError("cyclicization needs degree at least 1")
    terms = {}
    for monomial, coeff in series.terms.items():
        for r in range(degree):
            rotated = monomial[r:] + monomial[:r]
            s = terms.get(rotated, Fraction(0)) + coeff
            if s:
                terms[rotated] = s
            else:
                terms.pop(rotated, None)
    return TruncatedSeries._raw(series.rank, series.cap, terms)


def contraction(u: TensorSeries, v: TensorSeries) -> TensorSeries:
    """Contract the last letter of u with the first letter of v.

    (h_1 ... h_m) ~> (k_1 ... k_n) = (h_m . k_1) h_1 ... h_{m-1} k_2 ... k_n.
    Both arguments must have zero constant term.
    """
    if u.rank != v.rank:
        raise ValueError("rank mismatch")
    if u.constant_term() or v.constant_term():
        raise DomainError("contraction needs arguments without constant terms")
    genus = _genus_of_rank(u.rank)
    form = intersection_form(genus)
    cap = min(u.cap, v.cap)
    terms = {}
    for mu, cu in u.terms.items():
        for mv, cv in v.terms.items():
            if len(mu) + len(mv) - 2 >= cap:
                continue
            scalar = form[mu[-1] - 1][mv[0] - 1]
            if not scalar:
                continue
            key = mu[:-1] + mv[1:]
            s = terms.get(key, Fraction(0)) + cu * cv * scalar
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return TruncatedSeries._raw(u.rank, cap, terms)


def derivation_pairing(u: TensorSeries, v: TensorSeries) -> TensorSeries:
    """The pairing <u, v> whose left slot acts by symplectic derivations.

    A degree-1 left argument h acts as the derivation sending a basis
    letter k to the scalar h . k.  A left argument of degree m >= 2 acts by

        <h_1...h_m, k_1...k_n> =
            - sum_j k_1...k_{j-1} (k_j ~> N(h_1...h_m)) k_{j+1}...k_n

    with N the cyclicization.  Degree-0 left arguments act as zero.
    """
    if u.rank != v.rank:
        raise ValueError("rank mismatch")
    genus = _genus_of_rank(u.rank)
    form = intersection_form(genus)
    cap = min(u.cap, v.cap)
    terms = {}

    def add(key, value):
        if len(key) >= cap:
            return
        s = terms.get(key, Fraction(0)) + value
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)

    for mu, cu in u.terms.items():
        m = len(mu)
        if m == 0:
            continue
        if m == 1:
            for mv, cv in v.terms.items():
                for j, letter in enumerate(mv):
                    scalar = form[mu[0] - 1][letter - 1]
                    if scalar:
                        add(mv[:j] + mv[j + 1:], cu * cv * scalar)
            continue
        rotations = [mu[r:] + mu[:r] for r in range(m)]
        for mv, cv in v.terms.items():
            weight = -cu * cv
            for j, letter in enumerate(mv):
                head = mv[:j]
                tail = mv[j + 1:]
                for rot in rotations:
                    scalar = form[letter - 1][rot[0] - 1]
                    if scalar:
                        add(head + rot[1:] + tail, weight * scalar)
    return TruncatedSeries._raw(u.rank, cap, terms)


def s_of_omega(genus: int, cap: int) -> TensorSeries:
    """The series s(omega) with s(z) = 1/(e^{-z} - 1) + 1/z."""
    w = omega(genus, cap)
    total = TruncatedSeries.scalar(2 * genus, cap, S_COEFFICIENTS[0])
    power = TruncatedSeries.one(2 * genus, cap)
    for coefficient in S_COEFFICIENTS[1:]:
        power = power * w
        if power.is_zero():
            break
        if coefficient:
            total = total + power.scale(coefficient)
    return total


def tensorial_rho(u: TensorSeries, v: TensorSeries) -> TensorSeries:
    """(u - eps u) ~> (v - eps v) + (u - eps u) s(omega) (v - eps v)."""
    if u.rank != v.rank:
        raise ValueError("rank mismatch")
    genus = _genus_of_rank(u.rank)
    u1 = u - u.constant_term()
    v1 = v - v.constant_term()
    cap = min(u.cap, v.cap)
    middle = s_of_omega(genus, cap)
    return contraction(u1, v1) + (u1.truncate(cap) * middle * v1.truncate(cap))


class SymplecticExpansion:
    """Group-like generator images sending the boundary word to e^{-omega}."""

    __slots__ = ("genus", "cap", "images", "exponents", "_prefix_cache")

    def __init__(self, genus, cap, images, exponents=None):
        rank = 2 * genus
        if len(images) != rank:
            raise ValueError("need one image per basis direction")
        for i, image in enumerate(images):
            if image.rank != rank or image.cap != cap:
                raise ValueError("image shape mismatch")
            if image.constant_term() != 1:
                raise ValueError("images must have constant term 1")
            if image.degree_part(1) != basis_vector(genus, i + 1, cap):
                raise ValueError("degree-1 part of image %d is not the basis vector" % (i + 1))
        self.genus = genus
        self.cap = cap
        self.images = tuple(images)
        self.exponents = None if exponents is None else tuple(exponents)
        self._prefix_cache = {(): TruncatedSeries.one(rank, cap)}

    @property
    def rank(self):
        return 2 * self.genus

    def apply_word(self, word: GroupWord) -> TensorSeries:
        total = TruncatedSeries.one(self.rank, self.cap)
        for letter in word.letters:
            image = self.images[abs(letter) - 1]
            total = total * (image if letter > 0 else image.inverse())
        return total

    def _monomial_image(self, monomial):
        cached = self._prefix_cache.get(monomial)
        if cached is None:
            head = self._monomial_image(monomial[:-1])
            cached = head * (self.images[monomial[-1] - 1] - 1)
            self._prefix_cache[monomial] = cached
        return cached

    def apply_hat(self, series: TruncatedSeries) -> TensorSeries:
        """Extend the expansion to truncated group-algebra series.

        Substitutes X_i -> theta(x_i) - 1 multiplicatively; the result is
        capped at min(series.cap, self.cap).
        """
        if series.rank != self.rank:
            raise ValueError("rank mismatch")
        cap = min(series.cap, self.cap)
        total = TruncatedSeries.zero(self.rank, cap)
        for monomial, coeff in series.truncate(cap).terms.items():
            total = total + self._monomial_image(monomial).truncate(cap).scale(coeff)
        return total

    def boundary_image(self) -> TensorSeries:
        return self.apply_word(SurfaceSpec(self.genus, self.cap).boundary_word())

    def is_group_like(self) -> bool:
        return all(is_tensor_group_like(image) for image in self.images)

    def is_symplectic(self) -> bool:
        return self.boundary_image() == (-omega(self.genus, self.cap)).exp()


def lie_bracket_of_word(rank, cap, letters) -> TensorSeries:
    """Right-nested commutator [h_1, [h_2, [..., h_d]...]] of basis letters."""
    series = TruncatedSeries.variable(rank, cap, letters[-1])
    for letter in reversed(letters[:-1]):
        h = TruncatedSeries.variable(rank, cap, letter)
        series = h * series - series * h
    return series


def _degree_words(rank, degree):
    if degree == 1:
        return [(i,) for i in range(1, rank + 1)]
    return [w + (i,) for w in _degree_words(rank, degree - 1)
            for i in range(1, rank + 1)]


def build_symplectic_expansion(genus: int, cap: int) -> SymplecticExpansion:
    """Solve for group-like images with boundary image e^{-omega}.

    Exponents start at the basis letters and are corrected degree by
    degree: the degree-d defect of log theta(nu) + omega is cancelled by
    a combination of right-nested Lie brackets added to the exponents
    (those brackets span the free Lie algebra in each degree, so the
    probed linear system is consistent whenever an expansion exists).
    The first-pivot-wins pseudo-solution keeps the output deterministic.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    if cap < 3:
        raise ValueError("cap must be at least 3")
    rank = 2 * genus
    boundary = SurfaceSpec(genus, cap).boundary_word()
    target = omega(genus, cap)

    def defect_series(exponents):
        total = TruncatedSeries.one(rank, cap)
        for letter in boundary.letters:
            e = exponents[abs(letter) - 1]
            total = total * (e if letter > 0 else -e).exp()
        return total.log() + target

    exponents = [TruncatedSeries.variable(rank, cap, i + 1) for i in range(rank)]
    if not defect_series(exponents).degree_part(2).is_zero():
        raise SolverError("degree-2 defect is nonzero; omega does not match nu")
    # The boundary word has zero exponent sums, so a degree d correction
    # to the exponents first shows up in the defect at degree d + 1:
    # degree-D defects are cancelled by degree D - 1 brackets.
    for degree in range(3, cap):
        defect = defect_series(exponents).degree_part(degree)
        if defect.is_zero():
            continue
        brackets = [lie_bracket_of_word(rank, cap, w)
                    for w in _degree_words(rank, degree - 1)]
        columns = []
        probes = []
        for slot in range(rank):
            for bracket in brackets:
                if bracket.is_zero():
                    continue
                probed = list(exponents)
                probed[slot] = probed[slot] + bracket
                change = defect_series(probed).degree_part(degree) - defect
                columns.append(change)
                probes.append((slot, bracket))
        rows = sorted({m for c in columns for m in c.terms}
                      | set(defect.terms))
        matrix = [[c.coefficient(m) for c in columns] for m in rows]
        rhs = [-defect.coefficient(m) for m in rows]
        solution = linalg.solve_consistent(matrix, rhs)
        if solution is None:
            raise SolverError("no degree-%d correction exists" % degree)
        for x, (slot, bracket) in zip(solution, probes):
            if x:
                exponents[slot] = exponents[slot] + bracket.scale(x)
    if not defect_series(exponents).is_zero():
        raise SolverError("corrections did not close the boundary condition")
    images = [e.exp() for e in exponents]
    return SymplecticExpansion(genus, cap, images, exponents)


def verify_section9(spec: SurfaceSpec, expansion: SymplecticExpansion, cap: int,
                    extra_words=None) -> dict:
    """Check both expansion diagrams at the given cap.

    For u, v running over generator images and optional extra words,
    compares theta(sigma(u, v)) with <theta u, theta v> and
    theta(eta(u, v)) with the tensorial rho.  Inputs are embedded two
    degrees above cap so every compared coefficient is complete.
    """
    if expansion.genus != spec.genus:
        raise ValueError("genus mismatch")
    if expansion.cap < cap + 2:
        raise ValueError("expansion cap must be at least cap + 2")
    work = cap + 2
    pairing = surface_pairing(SurfaceSpec(spec.genus, cap))
    rank = spec.rank
    inputs = [("x%d" % (i + 1), GroupWord.generator(rank, i + 1))
              for i in range(rank)]
    for j, word in enumerate(extra_words or []):
        inputs.append(("word%d" % (j + 1), word))
    embedded = [(label, embed(GroupAlgebraElement.from_word(w), work))
                for label, w in inputs]
    checks = []
    for label_u, u in embedded:
        theta_u = expansion.apply_hat(u)
        for label_v, v in embedded:
            theta_v = expansion.apply_hat(v)
            left = expansion.apply_hat(derived_form_truncated(pairing, u, v))
            right = derivation_pairing(theta_u, theta_v)
            witness = first_difference(left.truncate(cap), right.truncate(cap))
            checks.append({"name": "derived-diagram-%s-%s" % (label_u, label_v),
                           "pass": witness is None, "witness": witness})
            left = expansion.apply_hat(pairing.evaluate(u, v))
            right = tensorial_rho(theta_u, theta_v)
            witness = first_difference(left.truncate(cap), right.truncate(cap))
            checks.append({"name": "pairing-diagram-%s-%s" % (label_u, label_v),
                           "pass": witness is None, "witness": witness})
    return {
        "scenario": "symplectic-expansion",
        "genus": spec.genus,
        "cap": cap,
        "ok": all(c["pass"] for c in checks),
        "checks": checks,
    }
