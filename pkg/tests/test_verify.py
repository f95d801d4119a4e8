import pytest

from hookblock import verify


@pytest.mark.parametrize("p", [2, 3])
def test_all_suites_pass(p):
    reports = verify.run(p, suite="all")
    assert [r for r in reports if r["status"] != "pass"] == []


def test_complexes_at_five_marks_oracle_skipped():
    reports = verify.run(5, suite="complexes")
    status = {(r["suite"], r["check"]): r["status"] for r in reports}
    assert status[("oracle", "oracle")] == "skipped-tier"
    assert all(s == "pass" for k, s in status.items() if k[0] == "complexes")


def test_oracle_tier_is_enforced():
    with pytest.raises(verify.TierError):
        verify.run(5, suite="oracle")


def test_seed_changes_nothing_but_inputs():
    a = verify.run(3, suite="combinatorics", seed=1)
    b = verify.run(3, suite="combinatorics", seed=1)
    assert a == b
