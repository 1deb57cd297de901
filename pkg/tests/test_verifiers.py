import json

import pytest

import vizing as vz
from vizing.verify import (SamplingConfig, Violation, _check_multifan_instance,
                           _val_violation, replay_violation)

PSTAR = vz.named_graph("petersen_minus_vertex")


def test_verify_val_examples():
    report = vz.verify_val(vz.cycle_graph(5))
    assert not report.vacuous and not report.violations
    assert report.counters["critical_edges"] == 5
    report = vz.verify_val(vz.complete_graph(4))
    assert report.vacuous and report.counters["class1"] == 1
    # no edge of K5 is critical, so the check is vacuous but clean
    report = vz.verify_val(vz.complete_graph(5))
    assert report.vacuous and report.counters["critical_edges"] == 0
    assert vz.verify_val(PSTAR).violations == []


def test_verify_multifan_examples():
    report = vz.verify_multifan_lemma(vz.cycle_graph(5))
    assert report.applicable == 20 and not report.violations
    assert vz.verify_multifan_lemma(vz.complete_graph(4)).vacuous
    sampled = vz.verify_multifan_lemma(PSTAR, SamplingConfig(exhaustive_limit=10, sample_size=5))
    assert sampled.applicable and not sampled.violations


def test_verify_kierstead_examples():
    report = vz.verify_kierstead_lemma(vz.cycle_graph(5))
    assert report.applicable == 20 and not report.violations
    # a class-2 graph whose Kierstead enumeration finds no 3-edge path
    k3 = vz.complete_graph(3)
    report = vz.verify_kierstead_lemma(k3)
    assert report.vacuous and report.instances_checked > 0


def test_verify_degree_dichotomy_vacuous_on_small():
    for g in (vz.cycle_graph(5), vz.complete_graph(5)):
        report = vz.verify_degree_dichotomy(g)
        assert report.vacuous
    report = vz.verify_degree_dichotomy(vz.cycle_graph(5))
    assert report.counters["qualifying_vertices"] == 0


def test_verify_xy_existence_gating():
    report = vz.verify_xy_existence(vz.complete_graph(5))
    assert report.vacuous and report.counters["not_delta_critical"] == 1
    report = vz.verify_xy_existence(vz.cycle_graph(5))
    assert report.vacuous and report.counters["overfull"] == 1
    report = vz.verify_xy_existence(PSTAR)
    assert report.vacuous and report.counters["min_degree_too_large"] == 1


def test_verify_fork_lemma_arithmetic_vacuity():
    report = vz.verify_fork_lemma(vz.cycle_graph(7))
    assert report.vacuous and report.instances_checked == 28
    assert not report.violations


def test_verify_branch_lemmas_on_pstar():
    report = vz.verify_branch_lemma(PSTAR, SamplingConfig(exhaustive_limit=40, sample_size=10))
    assert report.applicable > 0 and not report.violations
    short = vz.verify_short_branch_lemma(PSTAR, SamplingConfig(exhaustive_limit=40, sample_size=10))
    assert not short.violations


def test_verify_theorem1_examples():
    report = vz.verify_theorem1(vz.cycle_graph(5))
    assert report.vacuous and report.counters["hypothesis_failed"] == 1
    report = vz.verify_theorem1(vz.complete_graph(5))
    assert report.counters["not_delta_critical"] == 1
    assert vz.verify_theorem1(PSTAR).vacuous  # 3*3 - 5*2 < 2*9 - 7


def test_disconnected_inputs_are_not_applicable():
    split = vz.Graph(10, [(0, 1), (1, 2), (2, 0), (5, 6), (6, 7), (7, 5)])
    for check in (vz.verify_degree_dichotomy, vz.verify_xy_existence,
                  vz.verify_fork_lemma, vz.verify_theorem1):
        report = check(split)
        assert report.vacuous and report.counters["disconnected"] == 1


def test_monotone_accounting_and_records(class2_graphs):
    sampling = SamplingConfig(exhaustive_limit=30, sample_size=10)
    sample = [g for g in class2_graphs if g.n <= 6]
    for g in sample:
        for check in vz.CHECKS.values():
            report = check(g, sampling)
            assert report.instances_checked >= report.applicable >= len(report.violations)
            assert report.vacuous == (report.applicable == 0)
            record = report.to_record()
            assert "elapsed" not in json.dumps(record)
            assert list(record) == ["check", "graph", "instances_checked", "applicable",
                                    "vacuous", "violations", "counters"]


def test_sampling_determinism():
    sampling = SamplingConfig(exhaustive_limit=8, sample_size=4, seed=7)
    first = vz.verify_multifan_lemma(PSTAR, sampling).to_record()
    second = vz.verify_multifan_lemma(PSTAR, sampling).to_record()
    assert first == second
    shifted = vz.verify_multifan_lemma(PSTAR, SamplingConfig(8, 4, seed=8)).to_record()
    assert shifted["instances_checked"] == first["instances_checked"]


def test_replay_reproducing_violation():
    # the fan conditions legitimately fail on a class-1 graph, which gives
    # the replay machinery a genuine reproducing witness
    k4 = vz.complete_graph(4)
    coloring = vz.enumerate_colorings(k4, (0, 1), 3, budget=10).colorings[0]
    fan = vz.maximal_multifan(coloring, 0)
    failures = _check_multifan_instance(coloring, fan)
    assert failures
    violation = Violation("multifan", vz.encode_graph6(k4), failures[0][0], failures[0][1],
                          edge=(0, 1), coloring=coloring.dump(), structure=fan.dump())
    assert replay_violation(violation)


def test_replay_non_reproducing_violation(c5_minus_edge):
    g, c = c5_minus_edge
    fan = vz.maximal_multifan(c, 0)
    fabricated = Violation("multifan", vz.encode_graph6(g), "multifan.elementary",
                           "fabricated", edge=(0, 1), coloring=c.dump(), structure=fan.dump())
    assert not replay_violation(fabricated)


def test_replay_val_violation():
    star = vz.Graph(5, [(0, i) for i in range(1, 5)])
    assert _val_violation(star, 1, 0) is not None
    witness = Violation("val", vz.encode_graph6(star), "val.neighbor_count",
                        "leaf lacks max-degree neighbors", edge=(1, 0))
    assert replay_violation(witness)
    honest = Violation("val", vz.encode_graph6(vz.cycle_graph(5)), "val.neighbor_count",
                       "", edge=(0, 1))
    assert not replay_violation(honest)


def test_scan_conjecture_counts_and_violations():
    lines = ["Dhc", "D~{", "not graph6 $$$", "Bw"]
    seen = []
    report = vz.scan_conjecture(lines, on_graph=seen.append)
    assert report.counters["parse_failures"] == 1
    assert report.counters["graphs"] == 3
    assert len(seen) == 4 and "error" in seen[2]
    assert not report.violations
    # C5 and K3 are delta-critical and overfull; K5 is not delta-critical
    assert report.counters["delta_critical"] == 2
    assert report.counters["confirmed_overfull"] == 2
    assert report.applicable == 2


def test_scan_conjecture_odd_cycles():
    lines = [vz.encode_graph6(vz.cycle_graph(n)) for n in (5, 6, 7, 8, 9)]
    report = vz.scan_conjecture(lines)
    # every odd cycle is delta-critical, but only C5 meets 3*delta > n
    assert report.counters["delta_critical"] == 3
    assert report.applicable == 1 and report.counters["confirmed_overfull"] == 1


def test_scan_conjecture_pstar_boundary():
    report = vz.scan_conjecture([vz.encode_graph6(PSTAR)])
    assert report.counters["delta_critical"] == 1
    assert report.applicable == 0  # 3*delta == n exactly: hypothesis fails
    assert report.counters["niessen_checked"] == 0  # and the count gate with it
    assert not report.violations


def test_scan_conjecture_mapper_equivalence(corpus_lines):
    lines = corpus_lines[:300]
    seq = vz.scan_conjecture(lines)
    entries_a, entries_b = [], []
    par = vz.scan_conjecture(lines, on_graph=entries_a.append,
                             mapper=lambda fn, items: list(map(fn, items)))
    vz.scan_conjecture(lines, on_graph=entries_b.append)
    assert seq.to_record() == par.to_record()
    assert entries_a == entries_b
