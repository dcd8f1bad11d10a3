"""Acceptance gate: eleven criteria, every comparison an exact rational identity.

Each test prints one pass/fail line; there are no tolerances anywhere,
equality always means equality of Fractions coefficient by coefficient.
"""

import random
import time
from fractions import Fraction

from foxtwist.derived_twists import derived_form_exact, derived_form_truncated
from foxtwist.fox_pairings import FoxPairing
from foxtwist.group_algebra import (
    GroupAlgebraElement,
    fox_derivative_left,
    fox_derivative_right,
)
from foxtwist.surfaces import (
    CurveSpec,
    SurfaceSpec,
    classical_dehn_twist,
    figure_eight_scenario,
    first_difference,
    generalized_dehn_twist,
    surface_pairing,
    word_automorphism,
)
from foxtwist.truncated_completion import embed, fox_left_series, fox_right_series
from foxtwist.verify import (
    appendix_suite,
    fox_laws_suite,
    hopf_suite,
    nabla_suite,
    run_suite,
    symplectic_suite,
    twist_laws_suite,
)
from foxtwist.words import GroupWord


def _report(number, label, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {number:2d}: {status} - {label}")
    assert not failures, f"criterion {number}: {failures}"


def _suite_failures(report, required=()):
    failures = [c for c in report["checks"] if not c["pass"]]
    names = {c["name"] for c in report["checks"]}
    failures += [f"missing check {name}" for name in required if name not in names]
    return failures


def test_criterion_01_figure_eight_reproduction():
    started = time.monotonic()
    failures = []
    for k in (Fraction(1, 2), 1):
        scenario = figure_eight_scenario(k, cap=5)
        failures += [dict(c, k=str(k)) for c in scenario["checks"] if not c["pass"]]
    elapsed = time.monotonic() - started
    if elapsed >= 10:
        failures.append(f"runtime {elapsed:.2f}s exceeds 10s")
    _report(1, f"figure-eight curve scenario at cap 5 ({elapsed:.2f}s)", failures)


def test_criterion_02_classical_twist_comparison():
    failures = []
    spec1 = SurfaceSpec(1, 5)
    got = generalized_dehn_twist(spec1, CurveSpec(spec1.parse_curve("a")))
    want = classical_dehn_twist(spec1, "nonseparating-a1")
    if got != want:
        failures.append(("genus-1", [first_difference(g, w)
                                     for g, w in zip(got.images, want.images)]))
    spec2 = SurfaceSpec(2, 4)
    got = generalized_dehn_twist(spec2, CurveSpec(spec2.parse_curve("a1 b1 a1^-1 b1^-1")))
    want = classical_dehn_twist(spec2, "separating-genus1-part")
    if got != want:
        failures.append(("genus-2", [first_difference(g, w)
                                     for g, w in zip(got.images, want.images)]))
    _report(2, "generalized twists match word-level twists (caps 5 and 4)", failures)


def test_criterion_03_hopf_automorphism_suite():
    failures = _suite_failures(hopf_suite(4), required=(
        "twist-coproduct-genus-1-a",
        "twist-grouplike-images-genus-1-a",
        "twist-coproduct-genus-2-commutator",
    ))
    _report(3, "twists are Hopf automorphisms at cap 4", failures)


def test_criterion_04_twist_laws():
    failures = _suite_failures(twist_laws_suite(4), required=(
        "additivity",
        "square-curve",
        "inverse-curve",
        "homology-transvection",
    ))
    _report(4, "twist weight/curve laws and the homology transvection at cap 4", failures)


def test_criterion_05_boundary_and_pairing_preservation():
    failures = []
    spec = SurfaceSpec(1, 5)
    pairing = surface_pairing(spec)
    boundary = embed(GroupAlgebraElement.from_word(spec.boundary_word()), spec.cap)
    for text in ("a", "b"):
        t = generalized_dehn_twist(spec, CurveSpec(spec.parse_curve(text)))
        if not t.fixes(boundary):
            failures.append(f"twist along {text} moves the boundary")
        if not t.preserves_pairing(pairing):
            failures.append(f"twist along {text} does not preserve the pairing")
    swap = word_automorphism(2, 5, [spec.parse_curve("b"), spec.parse_curve("a")])
    if swap.fixes(boundary):
        failures.append("generator swap unexpectedly fixes the boundary")
    if swap.preserves_pairing(pairing):
        failures.append("generator swap unexpectedly preserves the pairing")
    _report(5, "twists fix the boundary and the pairing; the a/b swap breaks both", failures)


def test_criterion_06_nabla_defining_identity():
    failures = _suite_failures(nabla_suite(5, words=20), required=(
        "defining-identity-genus-1",
        "defining-identity-genus-2",
    ))
    _report(6, "rho(iota w, nabla) = iota w - aug for 20 words, genus 1 and 2, cap 5", failures)


def test_criterion_07_truncated_exact_oracle():
    rng = random.Random(1301)
    failures = []

    def random_word(max_len=3, min_len=0):
        return GroupWord(2, tuple(rng.choice([1, -1, 2, -2])
                                  for _ in range(rng.randint(min_len, max_len))))

    def random_element(terms=2):
        e = GroupAlgebraElement.zero(2)
        for _ in range(terms):
            e = e + GroupAlgebraElement.from_word(random_word(), rng.randint(-2, 2))
        return e

    for trial in range(50):
        matrix = [[random_element() for _ in range(2)] for _ in range(2)]
        eta = FoxPairing(matrix)
        a, b = random_element(), random_element()
        s = embed(a, 5)
        for i in (1, 2):
            if fox_left_series(s, i) != embed(fox_derivative_left(a, i), 4):
                failures.append((trial, f"left derivative {i}"))
            if fox_right_series(s, i) != embed(fox_derivative_right(a, i), 4):
                failures.append((trial, f"right derivative {i}"))
        truncated = eta.embedded(6)
        rho = truncated.evaluate(embed(a, 6), embed(b, 6))
        if rho.truncate(4) != embed(eta.evaluate(a, b), 4):
            failures.append((trial, "pairing value"))
        sigma = derived_form_truncated(truncated, embed(a, 6), embed(b, 6))
        if sigma.truncate(4) != embed(derived_form_exact(eta, a, b), 4):
            failures.append((trial, "derived form"))
        if failures:
            break
    _report(7, "truncated derivatives and derived forms match the exact layer, 50 inputs", failures)


def test_criterion_08_exact_layer_laws():
    failures = _suite_failures(fox_laws_suite(4, trials=100), required=(
        "derived-derivation",
        "derived-swap",
        "derived-filtration",
        "derived-congruence",
        "derived-conjugacy",
    ))
    _report(8, "exact-layer derivation/swap/filtration/congruence laws, 100 trials", failures)


def test_criterion_09_power_series_identities():
    failures = _suite_failures(appendix_suite(5), required=(
        "bch-degree-3",
        "bch-lie-through-5",
        "hadamard",
        "log-exp-inversion",
        "log-powers",
    ))
    _report(9, "commutator expansion of log(e^u e^v), conjugation series, log/exp laws", failures)


def test_criterion_10_symplectic_expansion_diagrams():
    report = symplectic_suite(5)
    failures = _suite_failures(report, required=(
        "expansion-grouplike",
        "expansion-symplectic",
        "rho-boundary-unit",
        "omega-contraction",
    ))
    diagrams = sum(1 for c in report["checks"]
                   if c["name"].startswith(("derived-diagram", "pairing-diagram")))
    if diagrams < 288:
        failures.append(f"only {diagrams} diagram checks ran")
    _report(10, "genus-1 expansion to cap 5; both diagrams on 12 inputs at cap 3", failures)


def test_criterion_11_full_suite_runtime():
    started = time.monotonic()
    report = run_suite("all", 4)
    elapsed = time.monotonic() - started
    failures = [c for c in report["checks"] if not c["pass"]]
    if elapsed >= 120:
        failures.append(f"runtime {elapsed:.2f}s exceeds 120s")
    _report(11, f"verify suite 'all' at cap 4 in {elapsed:.2f}s (budget 120s)", failures)
