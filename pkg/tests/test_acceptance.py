"""Acceptance gate: one test per criterion, printing a pass line on success.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.
"""
import random
import subprocess
import sys

import pytest

from mcdm.errors import DegenerateAlternative
from mcdm.ingest import parse_matrix_csv, serialize_matrix_csv
from mcdm.model import WeightVector, new_matrix
from mcdm.reporting import export_json, parse_topsis_json
from mcdm.repro import (
    builtin_expected,
    fixture_csv_path,
    internal_consistency_deltas,
    run_sweep,
)
from mcdm.topsis import rank, topsis_rank
from mcdm.weighting import (
    Basis,
    ahp_weights,
    entropy_weights,
    equal_weights,
    manual_weights,
    std_dev_weights,
)

from .conftest import random_matrix
from .oracle import topsis_oracle
from .test_topsis import inject_dominated_row
from .test_weighting import consistent_pairwise

PUBLISHED_RANKS = [3, 4, 2, 1, 6, 7, 9, 8, 10, 11, 5]


def report(name):
    print(f"ACCEPTANCE {name}: PASS")


def test_criterion_1_internal_consistency():
    deltas = internal_consistency_deltas()
    assert len(deltas) == 11
    assert max(deltas) < 1e-5
    report("1 table-2 internal consistency (|dci| < 1e-5)")


def test_criterion_2_rank_reproduction():
    expected = builtin_expected()
    assert rank(list(expected.closenesses())) == PUBLISHED_RANKS
    report("2 table-2 rank reproduction")


def test_criterion_3_reproduction_sweep():
    a = run_sweep()
    b = run_sweep()
    assert a == b, "sweep must be deterministic"
    assert len(a.entries) == 12, "sweep must cover every configuration"
    assert a.best_config is not None
    best = [e for e in a.entries if e.config == a.best_config][0]
    assert best.kendall_tau is not None and -1.0 <= best.kendall_tau <= 1.0
    report(
        "3 reproduction sweep runs, deterministic; best config "
        f"{a.best_config.name} kendall_tau={best.kendall_tau:.6f}"
    )


def test_criterion_4_topsis_oracle_equivalence():
    rng = random.Random(42)
    for _ in range(1000):
        m = random_matrix(rng, max_m=6, max_n=5)
        raw = [rng.uniform(0.1, 1.0) for _ in range(m.n)]
        weights = manual_weights(raw)
        result = topsis_rank(m, weights)
        sp, sm, ci, _ = topsis_oracle(
            [list(r) for r in m.values],
            [d.value for d in m.directions],
            list(weights.weights),
        )
        for i, row in enumerate(result.rows):
            assert abs(row.s_plus - sp[i]) <= 1e-12
            assert abs(row.s_minus - sm[i]) <= 1e-12
            assert abs(row.closeness - ci[i]) <= 1e-12
    report("4 TOPSIS oracle equivalence (1000 random matrices, 1e-12)")


def test_criterion_5_dominance():
    rng = random.Random(43)
    checked = 0
    while checked < 1000:
        m = inject_dominated_row(rng, random_matrix(rng))
        try:
            result = topsis_rank(m, equal_weights(m.n))
        except DegenerateAlternative:
            continue
        assert result.rows[-1].closeness <= result.rows[0].closeness + 1e-12
        checked += 1
    report("5 dominance property (1000 injected dominated rows)")


def test_criterion_6_scale_invariance():
    rng = random.Random(44)
    weight_fns = {
        "std_dev_normalized": lambda mm: std_dev_weights(mm, Basis.VECTOR_NORMALIZED),
        "entropy": entropy_weights,
        "equal": lambda mm: equal_weights(mm.n),
        "manual": lambda mm: manual_weights([j + 1.0 for j in range(mm.n)]),
    }
    for _ in range(250):
        m = random_matrix(rng)
        j = rng.randrange(m.n)
        c = rng.uniform(0.05, 40.0)
        scaled = new_matrix(
            m.alternatives,
            m.criteria,
            [[v * c if k == j else v for k, v in enumerate(row)] for row in m.values],
        )
        for fn in weight_fns.values():
            base = topsis_rank(m, fn(m))
            out = topsis_rank(scaled, fn(scaled))
            for a, b in zip(out.rows, base.rows):
                assert abs(a.closeness - b.closeness) <= 1e-12
                assert abs(a.s_plus - b.s_plus) <= 1e-12
                assert abs(a.s_minus - b.s_minus) <= 1e-12
                assert a.rank == b.rank
    report("6 scale invariance across normalized-basis weighting schemes")


def test_criterion_7_weighting_correctness():
    from mcdm.model import Criterion, Direction

    two_col = new_matrix(
        ["a", "b"],
        [Criterion("c1", Direction.BENEFIT), Criterion("c2", Direction.BENEFIT)],
        [[1.0, 1.0], [3.0, 5.0]],
    )
    w = std_dev_weights(two_col, Basis.RAW)
    assert abs(w.weights[0] - 1 / 3) <= 1e-12
    assert abs(w.weights[1] - 2 / 3) <= 1e-12

    rng = random.Random(45)
    for _ in range(200):
        n = rng.randint(2, 7)
        target = [rng.uniform(0.05, 1.0) for _ in range(n)]
        total = sum(target)
        target = [x / total for x in target]
        out = ahp_weights(consistent_pairwise(target))
        for got, want in zip(out.weights.weights, target):
            assert abs(got - want) <= 1e-9
        assert abs(out.consistency_ratio) < 1e-9

    for _ in range(100):
        m = random_matrix(rng)
        for vec in (
            equal_weights(m.n),
            std_dev_weights(m, Basis.RAW),
            std_dev_weights(m, Basis.VECTOR_NORMALIZED),
            entropy_weights(m),
        ):
            assert abs(sum(vec.weights) - 1.0) <= 1e-12
    report("7 weighting correctness (std-dev, AHP recovery, simplex sums)")


def test_criterion_8_round_trips():
    rng = random.Random(46)
    for _ in range(200):
        m = random_matrix(rng)
        assert parse_matrix_csv(serialize_matrix_csv(m)) == m
        result = topsis_rank(m, equal_weights(m.n))
        assert parse_topsis_json(export_json(result)) == result
    report("8 CSV and JSON round-trips lossless (200 random inputs)")


def test_criterion_9_cli_determinism():
    fixture = str(fixture_csv_path())
    invocations = [
        ("rank", "--input", fixture, "--weights", "std_dev"),
        ("sensitivity", "--input", fixture, "--weights", "equal",
         "--step", "0.05", "--max-delta", "0.1"),
        ("repro",),
    ]
    for argv in invocations:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "mcdm.cli", *argv],
                capture_output=True,
                check=False,
            )
            for _ in range(2)
        ]
        assert runs[0].returncode == runs[1].returncode == 0
        assert runs[0].stdout == runs[1].stdout
        assert runs[0].stdout
    report("9 CLI golden determinism (rank, sensitivity, repro)")
