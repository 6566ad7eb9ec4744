"""Run settings for witness construction, verification and orbit searches."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from .verify import EQUIVARIANCE_TOL
from .witness import DEFAULT_ATTEMPTS, DEFAULT_SEPARATION


@dataclass(frozen=True)
class WitnessConfig:
    separation: float = DEFAULT_SEPARATION
    max_attempts: int = DEFAULT_ATTEMPTS


@dataclass(frozen=True)
class VerifyConfig:
    samples: int = 1000
    seed: int = 0
    tol: float = EQUIVARIANCE_TOL


@dataclass(frozen=True)
class OrbitSearchConfig:
    size_bound: int = 10_000
    norm_bound: int = 10**6


@dataclass(frozen=True)
class PipelineConfig:
    witness: WitnessConfig = field(default_factory=WitnessConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    orbit: OrbitSearchConfig = field(default_factory=OrbitSearchConfig)

    @classmethod
    def from_dict(cls, raw: dict) -> "PipelineConfig":
        sections = {"witness": WitnessConfig, "verify": VerifyConfig, "orbit": OrbitSearchConfig}
        unknown = set(raw) - set(sections)
        if unknown:
            raise ValueError(f"unknown config sections: {sorted(unknown)}")
        return cls(**{k: sections[k](**raw[k]) for k in raw})

    @classmethod
    def load(cls, path: str | Path) -> "PipelineConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)
