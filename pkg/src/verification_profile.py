"""YAML verification profiles.

A profile fixes the default seed, the sampler settings, the lattice size
guards and the number of samples each verification suite draws. Every key is
optional; see ``profiles/default.yaml`` for the full set.
"""

from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Optional, Union

import yaml

from transfer import MAX_ENUMERATION_SIZE


class ProfileError(Exception):
    """Base exception for profile loading errors."""
    pass


class ProfileNotFoundError(ProfileError):
    """Raised when profile file is not found."""
    def __init__(self, profile_path: str):
        self.profile_path = profile_path
        super().__init__(f"Profile file not found: {profile_path}. Please check that the profile file exists and the path is correct.")


class ProfileParseError(ProfileError):
    """Raised when profile file cannot be parsed."""
    def __init__(self, profile_path: str, original_error: str):
        self.profile_path = profile_path
        super().__init__(f"Error parsing profile file {profile_path}: {original_error}. Please check that the profile file is valid YAML.")


class ProfileValidationError(ProfileError):
    """Raised when a profile has unknown keys or values of the wrong type."""
    def __init__(self, profile_path: str, key: str, problem: str):
        self.profile_path = profile_path
        self.key = key
        super().__init__(f"Invalid profile {profile_path}: {key} {problem}")


@dataclass(frozen=True)
class SamplingSettings:
    bound: int = 20
    max_attempts: int = 1000


@dataclass(frozen=True)
class LimitSettings:
    max_sites: int = 8
    max_enumeration_size: int = 3


@dataclass(frozen=True)
class SuiteSettings:
    ybe_samples: int = 100
    geometry_samples: int = 50
    commute_samples: int = 30
    partition_samples: int = 20


@dataclass(frozen=True)
class VerificationProfile:
    seed: int = 0
    sampling: SamplingSettings = field(default_factory=SamplingSettings)
    limits: LimitSettings = field(default_factory=LimitSettings)
    suites: SuiteSettings = field(default_factory=SuiteSettings)


DEFAULT_PROFILE = VerificationProfile()

_MINIMUMS = {"bound": 1, "max_attempts": 1, "max_sites": 1, "max_enumeration_size": 1}
_MAXIMUMS = {"max_enumeration_size": MAX_ENUMERATION_SIZE}


def _section(cls, raw: Any, path: str, prefix: str):
    if raw is None:
        return cls()
    if not isinstance(raw, dict):
        raise ProfileValidationError(path, prefix, "must be a mapping")
    known = {f.name for f in fields(cls)}
    values = {}
    for key, value in raw.items():
        name = f"{prefix}.{key}"
        if key not in known:
            raise ProfileValidationError(path, name, "is not a known setting")
        # bool is an int subclass
        if isinstance(value, bool) or not isinstance(value, int):
            raise ProfileValidationError(path, name, f"must be an integer, got {value!r}")
        if value < _MINIMUMS.get(key, 0):
            raise ProfileValidationError(path, name, f"must be at least {_MINIMUMS.get(key, 0)}, got {value}")
        if key in _MAXIMUMS and value > _MAXIMUMS[key]:
            raise ProfileValidationError(path, name, f"must be at most {_MAXIMUMS[key]}, got {value}")
        values[key] = value
    return cls(**values)


def profile_from_mapping(data: Optional[dict], path: str = "<profile>") -> VerificationProfile:
    if data is None:
        return DEFAULT_PROFILE
    if not isinstance(data, dict):
        raise ProfileValidationError(path, "<root>", "must be a mapping")
    unknown = set(data) - {"seed", "sampling", "limits", "suites"}
    if unknown:
        raise ProfileValidationError(path, sorted(unknown)[0], "is not a known setting")
    seed = data.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
        raise ProfileValidationError(path, "seed", f"must be an unsigned 64-bit integer, got {seed!r}")
    return VerificationProfile(
        seed=seed,
        sampling=_section(SamplingSettings, data.get("sampling"), path, "sampling"),
        limits=_section(LimitSettings, data.get("limits"), path, "limits"),
        suites=_section(SuiteSettings, data.get("suites"), path, "suites"),
    )


def load_profile(profile_file: Union[str, Path]) -> VerificationProfile:
    try:
        with open(profile_file, 'r') as f:
            data = yaml.safe_load(f)
    except FileNotFoundError:
        raise ProfileNotFoundError(str(profile_file))
    except yaml.YAMLError as e:
        raise ProfileParseError(str(profile_file), str(e))
    return profile_from_mapping(data, str(profile_file))
