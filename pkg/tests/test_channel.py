import random

import pytest

from compocode.channel import ErrorModel, TrialReport, corrupt, run_trials
from compocode.compositions import compose_all, multiset_symmetric_difference


def test_corrupt_zero_errors_is_identity():
    c = compose_all("100101")
    out, log = corrupt(c, ErrorModel("symmetric", 0, seed=1))
    assert out == c and log == []


def test_corrupt_counts_and_shape():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(6, 20)
        s = "".join(rng.choice("01") for _ in range(n))
        c = compose_all(s)
        t = rng.randint(1, 3)
        out, log = corrupt(c, ErrorModel("symmetric", t), rng=rng)
        assert len(log) == t
        count, detail = multiset_symmetric_difference(c, out)
        assert count == 2 * t
        for l in range(1, n + 1):
            assert out.level_size(l) == n - l + 1


def test_corrupt_asymmetric_avoids_reciprocal_pairs():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(8, 20)
        s = "".join(rng.choice("01") for _ in range(n))
        out, log = corrupt(
            compose_all(s), ErrorModel("asymmetric", 3), rng=rng)
        levels = [l for l, _, _ in log]
        assert len(set(levels)) == len(levels)
        for l in levels:
            if n + 1 - l != l:
                assert (n + 1 - l) not in levels


def test_corrupt_can_produce_worked_example():
    c = compose_all("00001111111")
    # level 4: the single 0^4 swapped for 1^4
    out = c.copy()
    out.replace(4, 0, 4)
    found = False
    for seed in range(400):
        cand, log = corrupt(c, ErrorModel("symmetric", 1, seed=seed))
        if cand == out:
            found = True
            break
    assert found


def test_run_trials_recon_perfect():
    model = ErrorModel("symmetric", 0)
    rep = run_trials("recon", {"k": 10}, model, trials=30, seed=5)
    assert rep.successes == 30
    assert rep.mean_backtracks == 0.0


def test_run_trials_asym1():
    model = ErrorModel("asymmetric", 1)
    rep = run_trials("asym1", {"k": 8}, model, trials=25, seed=6)
    assert rep.success_rate == 1.0


def test_run_trials_asym_t():
    model = ErrorModel("asymmetric", 2)
    rep = run_trials("asym-t", {"k": 10, "t": 2}, model, trials=15, seed=7)
    assert rep.success_rate == 1.0


def test_report_determinism():
    model = ErrorModel("asymmetric", 1)
    a = run_trials("asym1", {"k": 6}, model, trials=10, seed=42)
    b = run_trials("asym1", {"k": 6}, model, trials=10, seed=42)
    assert a.to_json() == b.to_json()
    assert a.to_csv_row() == b.to_csv_row()
    c = run_trials("asym1", {"k": 6}, model, trials=10, seed=43)
    assert c.to_json() != a.to_json() or c.successes == a.successes


def test_report_accounting():
    rep = TrialReport("x", {}, 10, 7, {"boom": 3}, seed=1)
    assert rep.successes + sum(rep.failures.values()) == rep.trials
    assert rep.success_rate == 0.7


def test_unknown_scheme_and_model():
    with pytest.raises(ValueError):
        run_trials("nope", {"k": 4}, ErrorModel("symmetric", 0), 1)
    with pytest.raises(ValueError):
        ErrorModel("weird", 1)
