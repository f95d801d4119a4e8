import pytest

from hookblock import blockmap as bm, closed_forms as cf
from hookblock.partitions import Partition, to_text


def test_hook_block_tables_reproduced():
    t = bm.weight1_block_tables(Partition(()), 3)
    assert t["labels"] == ["1,1,1", "2,1", "3"]
    assert t["ext"][("F", "1,1,1", "F", "1,1,1")] == {0: 1, 2: 1, 4: 1}
    assert t["order_isomorphism"] and t["theta_on_costandards"]


def test_weight_one_block_over_a_box():
    t = bm.weight1_block_tables(Partition((1,)), 2)
    assert t["labels"] == ["1,1,1", "3"]
    assert t["decomposition_matrix"] == [[1, 1], [0, 1]]


def test_weight_bound():
    assert bm.weight_bound_check(4, 3)["witness-dims"]["partitions"] == 5
    assert bm.weight_bound_check(4, 3)["status"] == "pass"
    assert bm.weight_bound_check(7, 5)["status"] == "pass"
    with pytest.raises(ValueError):
        bm.weight_bound_check(6, 3)


def test_theta_counterexample():
    r = bm.theta_counterexample(2)
    assert r["status"] == "pass"
    assert r["witness-dims"]["factors"] == {"3,2": 1, "2,2,1": 1}
    assert r["witness-dims"]["source_weight"] == 2


def test_blocks_partition_everything():
    out = bm.blocks(4, 3)
    assert sum(len(m) for _, m in out) == 5
    labels = {to_text(b.core): [to_text(x) for x in m] for b, m in out}
    assert labels["1"] == ["4", "2,2", "1,1,1,1"]
