"""Iteration driver: stopping semantics, oracle root and benchmark counting."""

import pytest

from colebrook.core import ColebrookParams, DomainError, residual
from colebrook.engine import (
    CONVERGED_BY_AGREEMENT,
    CONVERGED_BY_DIV0,
    DEFAULT_START,
    StoppingPolicy,
    count_iterations,
    iterations_to_solution,
    oracle_root,
    run,
)

EXAMPLES = {
    1: (ColebrookParams(3.78e6, 0.00854), 5.274511499),
    2: (ColebrookParams(6.23e4, 0.012), 4.928634498),
    3: (ColebrookParams(1.18e7, 0.032), 4.128359435),
    4: (ColebrookParams(5.74e7, 0.0008), 7.331277467),
    5: (ColebrookParams(8.31e3, 0.024), 4.22204103),
}


class TestOracle:
    @pytest.mark.parametrize("idx", sorted(EXAMPLES))
    def test_reference_solutions(self, idx):
        p, want = EXAMPLES[idx]
        x = oracle_root(p)
        assert abs(x - want) <= 5e-9
        assert abs(residual(p, x)) < 1e-13

    def test_newton_fixed_point(self):
        # once |F| < 1e-13, one more polish step moves less than 1e-12
        from colebrook.core import first_derivative
        p = EXAMPLES[1][0]
        x = oracle_root(p)
        polished = x - residual(p, x) / first_derivative(p, x)
        assert abs(polished - x) <= 1e-12


class TestStopping:
    def test_policy_defaults(self):
        pol = StoppingPolicy()
        assert pol.decimal_agreement == 9
        assert pol.abs_tol == 0.5e-9
        assert pol.max_iterations == 100

    def test_policy_validation(self):
        with pytest.raises(ValueError):
            StoppingPolicy(decimal_agreement=0)
        with pytest.raises(ValueError):
            StoppingPolicy(max_iterations=0)

    def test_fixed_point_example_five(self):
        p, _ = EXAMPLES[5]
        tr = run("fixed-point", p)
        assert len(tr.iterates) == 8
        assert f"{tr.final:.9f}" == "4.222041030"
        assert tr.termination == CONVERGED_BY_AGREEMENT
        assert tr.iterations_to_solution == 7

    def test_sharma_arora_div0_example_three(self):
        p, _ = EXAMPLES[3]
        tr = run("sharma-arora", p)
        assert tr.termination == CONVERGED_BY_DIV0
        assert len(tr.iterates) == 1
        assert f"{tr.final:.9f}" == "4.128359435"
        assert tr.iterations_to_solution == 1

    def test_neta_johnson_example_five_length(self):
        p, _ = EXAMPLES[5]
        tr = run("neta-johnson", p)
        assert len(tr.iterates) == 12
        assert f"{tr.final:.9f}" == "4.222041030"

    def test_max_iterations_cap(self):
        p, _ = EXAMPLES[5]
        tr = run("fixed-point", p, policy=StoppingPolicy(max_iterations=3))
        assert tr.termination == "failed_max_iter"
        assert len(tr.iterates) == 3

    def test_rejects_non_finite_start(self):
        with pytest.raises(DomainError):
            run("newton-raphson", EXAMPLES[1][0], x0=float("nan"))

    def test_deterministic(self):
        p, _ = EXAMPLES[2]
        a = run("dzunic-petkovic-petkovic", p)
        b = run("dzunic-petkovic-petkovic", p)
        assert a.iterates == b.iterates
        assert a.termination == b.termination

    def test_converged_final_matches_oracle(self):
        for idx in EXAMPLES:
            p, _ = EXAMPLES[idx]
            root = oracle_root(p)
            for mid in ("newton-raphson", "neta", "sharma-guha-gupta"):
                tr = run(mid, p)
                assert tr.converged
                assert abs(tr.final - root) < StoppingPolicy().abs_tol


class TestCounting:
    def test_start_at_root_counts_zero(self):
        p, _ = EXAMPLES[1]
        root = oracle_root(p)
        tr = run("newton-raphson", p, x0=root)
        assert tr.iterations_to_solution == 0

    def test_fixed_point_example_two(self):
        # the recomputed x5 is 2.5e-10 from the root, inside the 0.5e-9
        # tolerance, so the count-against-root rule yields 5 even though
        # the printed ninth decimals first coincide at x6
        p, _ = EXAMPLES[2]
        tr = run("fixed-point", p)
        assert tr.iterations_to_solution == 5

    def test_neta_example_one(self):
        p, _ = EXAMPLES[1]
        tr = run("neta", p)
        assert tr.iterations_to_solution == 1

    def test_sentinel_when_never_reached(self):
        pol = StoppingPolicy(max_iterations=2)
        p, _ = EXAMPLES[5]
        tr = run("fixed-point", p, policy=pol)
        assert tr.iterations_to_solution == pol.max_iterations + 1

    def test_monotone_in_tolerance(self):
        p, _ = EXAMPLES[5]
        tr = run("fixed-point", p)
        root = oracle_root(p)
        counts = [count_iterations(tr, root, tol)
                  for tol in (1e-12, 1e-10, 0.5e-9, 1e-7, 1e-4)]
        assert counts == sorted(counts, reverse=True)

    def test_helper_agrees_with_trace_field(self):
        for idx in EXAMPLES:
            p, _ = EXAMPLES[idx]
            root = oracle_root(p)
            tr = run("kung-traub", p)
            pol = StoppingPolicy()
            assert tr.iterations_to_solution == iterations_to_solution(
                tr.start, tr.iterates, root, pol)
