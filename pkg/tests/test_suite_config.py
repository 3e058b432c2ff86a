from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.config.defaults import DEFAULT_TOLERANCES
from clifford_workbench.config.suite_config import SuiteConfig, load_config
from clifford_workbench.errors import ConfigError
from clifford_workbench.mass.terms import MassKind


def test_defaults():
    cfg = SuiteConfig()
    assert cfg.n == 2
    assert cfg.convention is SignConvention.LEDGER
    assert cfg.mass_term().kind is MassKind.RIGHT_SCALAR
    assert cfg.tolerance("cauchy_theorem") == DEFAULT_TOLERANCES["cauchy_theorem"]
    assert cfg.fd_tolerance() == pytest.approx(10 * 1e-3**2)
    assert cfg.fd_tolerance(1e-2) == pytest.approx(1e-3)


@pytest.mark.parametrize(
    "data",
    [
        {"n": 0},
        {"n": 7},
        {"lambda": "abc"},
        {"n": 1, "lambda": "0,1,0,0"},
        {"sign_convention": "upside-down"},
        {"h": 0.0},
        {"samples": 0},
        {"refinements": []},
        {"refinements": [0, 1]},
        {"refinements": [3, 2]},
        {"tolerances": {"no_such_check": 1e-3}},
        {"tolerances": {"algebra": -1.0}},
    ],
)
def test_invalid_configs(data):
    with pytest.raises(ConfigError):
        load_config(data)


def test_lambda_accepts_numbers():
    cfg = load_config({"lambda": 0.25})
    assert cfg.mass == "0.25"
    assert cfg.mass_term().scalar == 0.25
    assert load_config({"lambda": 0}).mass_term().is_zero


def test_clifford_lambda():
    cfg = load_config({"n": 2, "lambda": "0,0.3,0,0"})
    assert cfg.mass_term().kind is MassKind.RIGHT_CLIFFORD
    assert cfg.mass_term().label == "0.3e1"


def test_with_updates_merges_tolerances():
    cfg = load_config({"tolerances": {"algebra": 1e-10}})
    updated = cfg.with_updates(n=3, mass="0", tolerances={"taylor": 1e-4}, seed=None)
    assert updated.n == 3
    assert updated.mass_term().is_zero
    assert updated.seed == cfg.seed
    assert updated.tolerances == {"algebra": 1e-10, "taylor": 1e-4}
    assert cfg.n == 2
    with pytest.raises(ConfigError):
        cfg.with_updates(n=9)


def test_config_is_frozen():
    cfg = SuiteConfig()
    with pytest.raises(ValidationError):
        cfg.n = 3


def test_digest_tracks_content():
    a = SuiteConfig()
    b = load_config({})
    assert a.digest() == b.digest()
    assert len(a.digest()) == 12
    assert a.with_updates(seed=1).digest() != a.digest()


def test_yaml_round_trip(tmp_path):
    cfg = load_config({
        "n": 3,
        "lambda": "0,0.3,0,0,0,0,0,0",
        "sign_convention": "printed",
        "refinements": [1, 2],
        "tolerances": {"bergman_linear": 0.05},
    })
    path = tmp_path / "suite.yaml"
    cfg.to_yaml(path)
    assert "lambda:" in path.read_text()
    assert SuiteConfig.from_yaml(path) == cfg


def test_yaml_errors(tmp_path):
    with pytest.raises(ConfigError):
        SuiteConfig.from_yaml(tmp_path / "missing.yaml")
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        SuiteConfig.from_yaml(listing)
    broken = tmp_path / "broken.yaml"
    broken.write_text("n: [1,\n")
    with pytest.raises(ConfigError):
        SuiteConfig.from_yaml(broken)
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert SuiteConfig.from_yaml(empty) == SuiteConfig()


EXAMPLES = sorted((Path(__file__).parents[1] / "configs" / "examples").glob("*.yaml"))


@pytest.mark.parametrize("path", EXAMPLES, ids=lambda p: p.stem)
def test_example_configs_load(path):
    cfg = SuiteConfig.from_yaml(path)
    cfg.mass_term()
