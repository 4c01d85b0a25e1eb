"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Any falsified report or failed decomposition inside the hypothesis
ranges fails the build (criterion 8 re-asserts this over the recorded
outcomes of the other criteria).
"""

import time

import numpy as np
import pytest

from pgcodes.bounds import a_value, bounds
from pgcodes.code import is_codeword, is_dual_codeword
from pgcodes.construct import (
    OddParams,
    bagchi_codeword,
    generalized_odd,
    odd_common_point,
    random_small_weight,
)
from pgcodes.decompose import decompose, verify_decomposition
from pgcodes.field import factor_prime_power
from pgcodes.geometry import point_table, random_collineation, theta
from pgcodes.verify import lemma_suite, verify_appendix, verify_weight_theorems

OUTCOMES: dict[str, bool] = {}

TINY_CASES = [(2, 2), (2, 3), (3, 2), (3, 3)]
SWEEP_CASES = [(n, q) for n in (3, 4) for q in (7, 8, 9, 11, 13)]
SWEEP_SEEDS = 100


def record(criterion: str, ok: bool, detail: str) -> None:
    OUTCOMES[criterion] = ok
    print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="module")
def tiny_reports():
    out = {}
    t0 = time.time()
    for (n, q) in TINY_CASES:
        out[(n, q)] = verify_weight_theorems(n, q)
    out["elapsed"] = time.time() - t0
    return out


@pytest.fixture(scope="module")
def sweep_instances():
    """Shared between criteria 4 and 7: instance, recipe and decomposition."""
    out = {}
    t0 = time.time()
    for (n, q) in SWEEP_CASES:
        rows = []
        for seed in range(SWEEP_SEEDS):
            c, recipe = random_small_weight(n, q, seed)
            d = decompose(c)
            rows.append((c, recipe, d))
        out[(n, q)] = rows
    out["elapsed"] = time.time() - t0
    return out


def test_criterion_1_minimum_weight(tiny_reports):
    expected_min = {(2, 2): 3, (2, 3): 4, (3, 2): 7, (3, 3): 13}
    ok = True
    for (n, q) in TINY_CASES:
        by_id = {r.claim_id: r for r in tiny_reports[(n, q)]}
        rep = by_id["minimum-weight"]
        ok &= rep.verified and rep.evidence["min_weight"] == expected_min[(n, q)]
        assert rep.evidence["min_weight"] == expected_min[(n, q)] == theta(n - 1, q)
        assert rep.evidence["non_hyperplane_words"] == 0
    elapsed = tiny_reports["elapsed"]
    ok &= elapsed < 60
    record(
        "1 minimum-weight words are scalar hyperplanes",
        ok,
        f"min weights {[theta(n-1,q) for n,q in TINY_CASES]}, {elapsed:.1f}s < 60s",
    )
    assert ok


def test_criterion_2_gap_and_second_weight(tiny_reports):
    ok = True
    for (n, q) in TINY_CASES:
        by_id = {r.claim_id: r for r in tiny_reports[(n, q)]}
        gap = by_id["second-weight-gap"]
        shape = by_id["second-weight-shape"]
        ok &= gap.verified and shape.verified
        assert gap.evidence["violations"] == []
        assert shape.evidence["bad"] == 0
    record(
        "2 gap and second-weight characterisation",
        ok,
        f"no weights inside ]theta_(n-1), 2q^(n-1)[ on {TINY_CASES}",
    )
    assert ok


def test_criterion_3_odd_family():
    ok = True
    details = []
    for p in (5, 7, 11, 13):
        c = bagchi_codeword(p)
        ok &= c.weight() == 3 * p - 3
        ok &= is_dual_codeword(c)
        ok &= is_codeword(c)
        tab = point_table(2, p)
        rng = np.random.default_rng(p * 1000 + 7)
        mismatches = 0
        for _ in range(100):
            params = OddParams(
                p,
                int(rng.integers(1, p)),
                tuple(int(x) for x in rng.integers(0, p, 3)),
                random_collineation(tab, rng),
            )
            d = generalized_odd(params)
            s_val = int(d.values[odd_common_point(params)])
            if d.weight() != (3 * p - 3 if s_val == 0 else 3 * p - 2):
                mismatches += 1
        ok &= mismatches == 0
        details.append(f"p={p}: wt {3*p-3}, dual+code ok, 100 draws, {mismatches} mismatches")
    record("3 odd-word family and weight dichotomy", ok, "; ".join(details))
    assert ok


def test_criterion_4_decomposition_round_trip(sweep_instances):
    ok = True
    bad = []
    for (n, q) in SWEEP_CASES:
        for idx, (c, recipe, d) in enumerate(sweep_instances[(n, q)]):
            if not verify_decomposition(c, d):
                bad.append((n, q, idx, "reconstruction"))
            if d.vertex != recipe.vertex:
                bad.append((n, q, idx, "vertex"))
    elapsed = sweep_instances["elapsed"]
    ok = not bad and elapsed < 600
    record(
        "4 decomposition round-trip",
        ok,
        f"{SWEEP_SEEDS} seeds x {len(SWEEP_CASES)} spaces, {elapsed:.0f}s < 600s, failures: {bad[:3]}",
    )
    assert ok


def test_criterion_5_bound_table():
    import mpmath

    mpmath.mp.dps = 60
    ok = bounds(3, 5).B.u == 50 and bounds(3, 5).B.v == 0
    # independent oracle: 60-digit evaluation then exact integer floor
    oracle_b37 = int(mpmath.floor((3 * 7 - mpmath.sqrt(6 * 7) - mpmath.mpf(1) / 2) * 7))
    ok &= bounds(3, 7).floor_B == oracle_b37 == 98
    ok &= a_value(19) == 59
    oracle_b313 = int(mpmath.floor((3 * 13 - mpmath.sqrt(78) - mpmath.mpf(1) / 2) * 13))
    ok &= bounds(3, 13).floor_B == oracle_b313
    oracle_b423 = int(
        mpmath.floor((4 * 23 - mpmath.sqrt(8 * 23) - mpmath.mpf(33) / 2) * 23**2)
    )
    ok &= bounds(4, 23).floor_B == oracle_b423
    record(
        "5 bound table spot values",
        ok,
        f"B(3,5)=50, floorB(3,7)={bounds(3,7).floor_B}, A_19={a_value(19)}, oracle agreement exact",
    )
    assert ok


def test_criterion_6_appendix_replay():
    excluded = {25, 27, 32, 49, 121}
    qs = []
    for q in range(23, 129):
        try:
            factor_prime_power(q)
        except ValueError:
            continue
        if q not in excluded:
            qs.append(q)
    t0 = time.time()
    failures = []
    for q in qs:
        for n in (3, 4, 5, 6):
            rep = verify_appendix(q, n)
            if not rep.verified:
                failures.append((q, n))
    elapsed = time.time() - t0
    ok = not failures and elapsed < 60
    record(
        "6 appendix inequality replay",
        ok,
        f"{len(qs)} prime powers x 4 dimensions, {elapsed:.1f}s < 60s, failures: {failures}",
    )
    assert ok


def test_criterion_7_lemma_suites(sweep_instances):
    falsified = []
    for (n, q) in SWEEP_CASES:
        for idx, (c, recipe, d) in enumerate(sweep_instances[(n, q)]):
            for rep in lemma_suite(c):
                if not rep.verified:
                    falsified.append((n, q, idx, rep.claim_id))
    ok = not falsified
    record(
        "7 lemma suites on all sweep instances",
        ok,
        f"{SWEEP_SEEDS * len(SWEEP_CASES)} instances, falsifications: {falsified[:3]}",
    )
    assert ok


def test_criterion_8_no_failures_anywhere():
    """Full generality is not reproducible at desk scale; criteria 1-7 stand
    in for it, and any recorded failure or falsification fails the build."""
    missing = [k for k in ("1", "3", "4", "6") if not any(o.startswith(k + " ") for o in OUTCOMES)]
    bad = [k for k, v in OUTCOMES.items() if not v]
    ok = not bad
    record(
        "8 desk-scale substitution complete",
        ok,
        f"recorded criteria: {sorted(OUTCOMES)}; failures: {bad}",
    )
    assert ok
