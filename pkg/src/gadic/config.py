"""Run configuration: flat key-value text files and shipped presets."""
from __future__ import annotations

from dataclasses import dataclass

from .core import GadicSequence
from .partition import PartitionSpec
from .basis import BasisSpec


class ConfigError(ValueError):
    """Malformed or inconsistent run configuration."""


@dataclass
class RunConfig:
    seq: GadicSequence
    partition: PartitionSpec
    t: int
    window: int = 5000
    budget: int = 20       # members to certify (K)
    witnesses: int = 3     # witnesses per member (W)

    @property
    def basis(self) -> BasisSpec:
        return BasisSpec(seq=self.seq, partition=self.partition)

    def serialize(self) -> str:
        return (f"sequence = {self.seq.serialize()}\n"
                f"partition = {self.partition.serialize()}\n"
                f"t = {self.t}\n"
                f"window = {self.window}\n"
                f"budget = {self.budget}\n"
                f"witnesses = {self.witnesses}\n")

    @classmethod
    def parse(cls, text: str) -> "RunConfig":
        fields: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"line {lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            fields[key.strip()] = value.strip()
        try:
            seq = GadicSequence.parse(fields["sequence"])
            partition = PartitionSpec.parse(fields["partition"])
            cfg = cls(seq=seq, partition=partition,
                      t=int(fields["t"]),
                      window=int(fields.get("window", "5000")),
                      budget=int(fields.get("budget", "20")),
                      witnesses=int(fields.get("witnesses", "3")))
        except ConfigError:
            raise
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"invalid configuration: {exc}") from exc
        return cfg


# One-command reproductions of the headline configurations.
PRESETS: dict[str, str] = {
    # order 2, binary scale, consecutive-pair partition
    "binary-h2": ("sequence = prefix=[];period=[2]\n"
                  "partition = h=2;prefix=[];period=[0,0,1,1]\n"
                  "t = 2\nwindow = 5000\nbudget = 20\nwitnesses = 3\n"),
    # alternating quotients 2,3 (even-index scale values are powers of 6)
    "mixed23-h2": ("sequence = prefix=[];period=[2,3]\n"
                   "partition = h=2;prefix=[];period=[0,0,1,1]\n"
                   "t = 2\nwindow = 5000\nbudget = 20\nwitnesses = 3\n"),
    # order 3, runs of length 3
    "h3-runs": ("sequence = prefix=[];period=[2]\n"
                "partition = h=3;prefix=[];period=[0,0,0,1,1,1,2,2,2]\n"
                "t = 3\nwindow = 5000\nbudget = 5\nwitnesses = 2\n"),
    # order 4, runs of length 3
    "h4-runs": ("sequence = prefix=[];period=[2]\n"
                "partition = h=4;prefix=[];period=[0,0,0,1,1,1,2,2,2,3,3,3]\n"
                "t = 3\nwindow = 5000\nbudget = 5\nwitnesses = 2\n"),
}


def load_preset(name: str) -> RunConfig:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; available: {sorted(PRESETS)}")
    return RunConfig.parse(PRESETS[name])
