"""Random-search ERM and the PAC experiment runner."""

import numpy as np
import pytest

from src.learning import (
    EXPERIMENT_COLUMNS,
    ExperimentConfig,
    ExperimentRunner,
    HypothesisSpace,
    RandomSearchERM,
    binomial_half_width,
    run_experiment,
)
from src.interface import load_learn_config
from src.systems import CompactSystemParams, sign_observe
from src.utils import InvalidInputError


def _config(family, target, **overrides):
    settings = dict(target=target, family=family, seed=123, sizes=[5, 20], trials=3, test_size=500, budget=150)
    settings.update(overrides)
    return ExperimentConfig(**settings)


def test_constant_concept_is_learned_from_one_example(fourier_basis):
    """A large offset makes every label 1; some proposal is consistent with a single example."""
    target = CompactSystemParams(coeffs=[[0.0]], eigen_params=[-0.3], offset=5.0)
    result = run_experiment(_config(fourier_basis, target, sizes=[1], trials=4))
    for row in result.rows:
        assert row.consistent, f"trial {row.trial}: {row.note}"
        assert row.train_error == 0.0
        assert 0.0 <= row.test_error <= 1.0


def test_errors_and_bounds_are_in_range(fourier_basis):
    target = CompactSystemParams(coeffs=[[0.8]], eigen_params=[-0.6], offset=0.1)
    result = run_experiment(_config(fourier_basis, target))
    frame = result.to_frame()
    assert list(frame.columns) == EXPERIMENT_COLUMNS
    assert len(frame) == 6
    assert frame["test_error"].between(0.0, 1.0).all()
    assert frame["train_error"].between(0.0, 1.0).all()
    assert (frame["bound_eps"] <= 1.0).all()
    assert (frame["vc_upper"] == result.vc_upper).all()
    assert list(zip(frame["s"], frame["trial"])) == [(s, t) for s in (5, 20) for t in range(3)]


def test_experiment_is_deterministic(fourier_basis):
    target = CompactSystemParams(coeffs=[[0.8]], eigen_params=[-0.6], offset=0.1)
    first = run_experiment(_config(fourier_basis, target))
    second = run_experiment(_config(fourier_basis, target))
    assert first.model_dump() == second.model_dump()


def test_bound_curve_decreases_with_sample_size(fourier_basis):
    target = CompactSystemParams(coeffs=[[0.8]], eigen_params=[-0.6], offset=0.1)
    config = _config(fourier_basis, target, sizes=[10, 100_000, 10_000_000], trials=1, test_size=10, budget=5)
    runner = ExperimentRunner(config)
    bounds = [runner.bound_eps[s] for s in config.sizes]
    assert bounds[0] == 1.0
    assert bounds[1] > bounds[2]


def test_labels_follow_the_target_response(fourier_basis):
    target = CompactSystemParams(coeffs=[[0.8]], eigen_params=[-0.6], offset=0.1)
    runner = ExperimentRunner(_config(fourier_basis, target))
    controls = runner.draw_controls(np.random.default_rng(0), 50)
    assert controls.shape == (50, 3)
    assert np.all(np.abs(controls) <= 1.0)
    expected = sign_observe(0.1 + controls @ runner.target_weights)
    np.testing.assert_array_equal(runner.label(controls), expected)


def test_erm_stops_at_first_consistent_hypothesis(fourier_basis):
    space = HypothesisSpace(fourier_basis, 1, offset_scale=10.0)
    controls = np.zeros((3, 3))
    labels = np.ones(3, dtype=np.int8)
    result = RandomSearchERM(space, budget=200).fit(controls, labels, np.random.default_rng(1))
    assert result.consistent
    assert result.draws < 200
    assert result.theta[-1] > 0


def test_hypothesis_parameters_stay_compact(fourier_basis):
    space = HypothesisSpace(fourier_basis, 2, proposal_radius=0.5)
    theta = space.sample(np.random.default_rng(2), 1)[0]
    params = space.to_params(theta)
    assert params.n == 2
    assert max(abs(value) for value in params.eigen_params) < 0.5


def test_binomial_half_width():
    assert binomial_half_width(0.0, 100) == 0.0
    assert abs(binomial_half_width(0.5, 10_000, z=2.0) - 0.01) < 1e-15


def test_invalid_experiment_configs(fourier_basis):
    target = CompactSystemParams(coeffs=[[0.8]], eigen_params=[-0.6], offset=0.1)
    with pytest.raises(InvalidInputError):
        ExperimentRunner(_config(fourier_basis, target, sizes=[]))
    with pytest.raises(InvalidInputError):
        ExperimentRunner(_config(fourier_basis, target, trials=0))
    with pytest.raises(InvalidInputError):
        HypothesisSpace(fourier_basis, 1, proposal_radius=1.0)
    with pytest.raises(InvalidInputError):
        RandomSearchERM(HypothesisSpace(fourier_basis, 1), budget=0)


def test_median_test_error_does_not_grow_with_sample_size(config_dir):
    """The demo run: 20 trials at s = 10, 30, 100, 300."""
    demo = load_learn_config(str(config_dir / "learn_demo.json"))
    config = demo.experiment(demo.seed)
    assert config.sizes == [10, 30, 100, 300]
    assert config.trials == 20
    medians = run_experiment(config).median_test_error()
    values = [medians[s] for s in config.sizes]
    for smaller, larger in zip(values, values[1:]):
        assert larger <= smaller + 0.02, f"median test errors {values}"
    assert values[-1] < values[0], f"median test errors {values}"
