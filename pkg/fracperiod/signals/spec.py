from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional

import attr
import tomlkit

from fracperiod.signals.signal import BUILTINS, FourierSignal
from fracperiod.utils.validation import _check_period


def _check_builtin(self, attribute: attr.Attribute, name: Optional[str]):
    if name is not None and name not in BUILTINS:
        raise ValueError(
            f"'builtin' must be one of {', '.join(BUILTINS)} (got {name})"
        )


def _check_harmonics(
    self, attribute: attr.Attribute, harmonics: Optional[List[Dict]]
) -> None:
    if (harmonics is None) == (self.builtin is None):
        raise ValueError(
            "a signal spec needs either 'builtin' or 'harmonics', not both"
        )
    for entry in harmonics or []:
        if not isinstance(entry.get("k"), int) or isinstance(
            entry.get("k"), bool
        ):
            raise ValueError(f"'k' must be an integer (got {entry})")


@attr.s(frozen=True)
class SignalSpec:
    """Serializable description of a signal, either a builtin shape or an
    explicit list of harmonics.

    Attributes:
        amplitude: The amplitude of a builtin shape.
            Defaults to 1.0.
        builtin: The name of the builtin shape.
            Defaults to None.
        harmonics: The explicit harmonics, as dictionaries with the keys k,
            re and im. Both k and -k must be listed.
            Defaults to None.
        offset: The offset of a builtin shape.
            Defaults to 0.0.
        period: The period T.
            Defaults to 2 pi.

    """

    builtin = attr.ib(
        default=None,
        type=Optional[str],
        validator=_check_builtin,
    )

    harmonics = attr.ib(
        default=None,
        type=Optional[List[Dict[str, Any]]],
        validator=_check_harmonics,
    )

    period = attr.ib(
        kw_only=True,
        default=2 * math.pi,
        type=float,
        converter=float,
        validator=_check_period,
    )

    amplitude = attr.ib(
        kw_only=True, default=1.0, type=float, converter=float
    )

    offset = attr.ib(kw_only=True, default=0.0, type=float, converter=float)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> SignalSpec:
        """Creates a signal spec from its dictionary form.

        Args:
            data: The dictionary, as read from a JSON or TOML file.

        Returns:
            The signal spec.

        Raises:
            ValueError: If the dictionary has unknown or missing keys.

        """
        data = dict(data)
        allowed = {"builtin", "harmonics", "period", "amplitude", "offset"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown signal spec keys: {sorted(unknown)}")
        if "harmonics" in data:
            data["harmonics"] = [
                {
                    "k": entry["k"],
                    "re": float(entry.get("re", 0.0)),
                    "im": float(entry.get("im", 0.0)),
                }
                for entry in data["harmonics"]
            ]
            if "period" not in data:
                raise ValueError("'period' is required with 'harmonics'")
        return cls(
            data.get("builtin"),
            data.get("harmonics"),
            **{
                key: data[key]
                for key in ("period", "amplitude", "offset")
                if key in data
            },
        )

    @staticmethod
    def load(filename: str) -> SignalSpec:
        """Loads a signal spec from a JSON or a TOML file.

        Args:
            filename: The file name, whose .toml extension selects TOML.

        Returns:
            The signal spec.

        Raises:
            ValueError: If the file cannot be parsed as a signal spec.

        """
        path = Path(filename)
        text = path.read_text(encoding="utf8")
        try:
            if path.suffix.lower() == ".toml":
                data = tomlkit.loads(text).unwrap()
            else:
                data = json.loads(text)
        except Exception as err:
            raise ValueError(f"unable to parse {filename}: {err}") from err
        if not isinstance(data, dict):
            raise ValueError(f"{filename} does not hold a signal spec")
        return SignalSpec.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        """Returns the dictionary form of the signal spec."""
        if self.builtin is not None:
            return {
                "builtin": self.builtin,
                "period": self.period,
                "amplitude": self.amplitude,
                "offset": self.offset,
            }
        return {"period": self.period, "harmonics": list(self.harmonics)}

    def to_signal(self) -> FourierSignal:
        """Returns the described signal.

        Raises:
            NonConjugateSymmetric: If the harmonics do not describe a real
                signal.

        """
        if self.builtin is not None:
            return FourierSignal.builtin(
                self.builtin, self.period, self.amplitude, self.offset
            )
        harmonics: Dict[int, complex] = {}
        for entry in self.harmonics:  # type: ignore
            c = complex(entry["re"], entry["im"])
            harmonics[entry["k"]] = harmonics.get(entry["k"], 0j) + c
        return FourierSignal.from_harmonics(self.period, harmonics)
