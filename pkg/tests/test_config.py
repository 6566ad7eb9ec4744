import pytest

from torus_rigidity.config import OrbitSearchConfig, PipelineConfig, VerifyConfig, WitnessConfig


def test_defaults_match_tolerances():
    cfg = PipelineConfig()
    assert cfg.verify == VerifyConfig(samples=1000, seed=0, tol=1e-9)
    assert cfg.witness == WitnessConfig(separation=1e-3, max_attempts=200)
    assert cfg.orbit == OrbitSearchConfig(size_bound=10_000, norm_bound=10**6)


def test_round_trip_and_partial(tmp_path):
    cfg = PipelineConfig.from_dict({"verify": {"samples": 50, "seed": 3}})
    assert cfg.verify.samples == 50 and cfg.verify.tol == 1e-9
    assert PipelineConfig.from_dict(cfg.to_dict()) == cfg
    path = tmp_path / "cfg.json"
    path.write_text('{"orbit": {"size_bound": 12}}')
    assert PipelineConfig.load(path).orbit.size_bound == 12


def test_unknown_section_rejected():
    with pytest.raises(ValueError):
        PipelineConfig.from_dict({"plots": {}})
    with pytest.raises(TypeError):
        PipelineConfig.from_dict({"verify": {"sample": 1}})
