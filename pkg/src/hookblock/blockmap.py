"""Blocks of partitions and the transport of hook-block data to other weight-one blocks."""

from dataclasses import dataclass

from . import closed_forms as cf
from .abacus import mu_index, p_core_and_weight, weight1_diagrams
from .complexes import report
from .lr import hook_translation_coefficient, theta_multiplicities
from .partitions import Partition, dominates_reversed, enumerate_partitions, hook_partition, to_text


@dataclass(frozen=True)
class BlockLabel:
    core: Partition
    weight: int
    p: int

    def __str__(self):
        return f"B(core={to_text(self.core)}, w={self.weight}, p={self.p})"


def blocks(e, p):
    """Partitions of e grouped by p-core, blocks sorted by core."""
    groups = {}
    for lam in enumerate_partitions(e):
        core, w = p_core_and_weight(lam, p)
        groups.setdefault((core, w), []).append(lam)
    return [(BlockLabel(core, w, p), members) for (core, w), members in
            sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][0].parts))]


def weight1_labels(core, p):
    return [mu_index(core, p, i) for i in range(p)]


def weight1_block_tables(core, p):
    """Labels mu_0..mu_(p-1) with the hook block's tables carried over by theta."""
    core = Partition(core)
    labels = weight1_labels(core, p)
    if sorted(labels) != sorted(weight1_diagrams(core, p)):
        raise ValueError("labels do not exhaust the weight-one block")
    order_ok = all(dominates_reversed(labels[i], labels[i + 1]) for i in range(p - 1))
    theta_ok = all(
        hook_translation_coefficient(i, core, mu, p) == (1 if mu == labels[i] else 0)
        for i in range(p) for mu in labels)
    ext = {}
    for kx in cf.KINDS:
        for ky in cf.KINDS:
            for m in range(p):
                for n in range(p):
                    ext[(kx, to_text(labels[m]), ky, to_text(labels[n]))] = \
                        cf.ext_table((kx, m), (ky, n), p).as_dict()
    return {
        "core": to_text(core), "p": p,
        "labels": [to_text(mu) for mu in labels],
        "decomposition_matrix": cf.decomposition_matrix(p).tolist(),
        "ext": ext,
        "schur_model_graded_dims": cf.model_schur_yoneda(p).graded_dims(),
        "simple_model_graded_dims": cf.model_simple_yoneda(p).graded_dims(),
        "order_isomorphism": order_ok,
        "theta_on_costandards": theta_ok,
    }


def weight_bound_check(e, p):
    """For e < 2p every partition of e has p-weight at most one."""
    if e >= 2 * p:
        raise ValueError(f"e={e} is not below 2p={2 * p}; the bound is not claimed there")
    parts = enumerate_partitions(e)
    worst = max(p_core_and_weight(lam, p)[1] for lam in parts)
    return report("weight_bound", p, None, {"e": e}, worst <= 1,
                  {"partitions": len(parts), "max_weight": worst})


def theta_counterexample(p=2):
    """theta on the weight-two block: S_(2,2) goes to two Schur factors."""
    if p != 2:
        raise ValueError("the recorded counterexample is for p = 2")
    lam, nu = Partition((1,)), Partition((2, 2))
    out = theta_multiplicities(lam, nu, p)
    w = p_core_and_weight(nu, p)[1]
    expected = {Partition((3, 2)): 1, Partition((2, 2, 1)): 1}
    ok = out == expected and w == 2
    return report("theta_counterexample", p, None, {"core": "1", "object": "S:2,2"}, ok,
                  {"factors": {to_text(m): c for m, c in out.items()}, "source_weight": w})


def hook_labels(p):
    return [hook_partition(p, i) for i in range(p)]
