from pathlib import Path

import pytest

from verification_profile import (
    DEFAULT_PROFILE,
    ProfileNotFoundError,
    ProfileParseError,
    ProfileValidationError,
    load_profile,
    profile_from_mapping,
)

PROFILES = Path(__file__).resolve().parent.parent / "profiles"


def test_default_file_matches_builtin_defaults():
    assert load_profile(PROFILES / "default.yaml") == DEFAULT_PROFILE


def test_quick_profile():
    profile = load_profile(PROFILES / "quick.yaml")
    assert profile.sampling.bound == 9
    assert profile.sampling.max_attempts == DEFAULT_PROFILE.sampling.max_attempts
    assert profile.limits.max_enumeration_size == 2
    assert profile.suites.ybe_samples == 10


def test_empty_file_gives_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_profile(path) == DEFAULT_PROFILE


def test_partial_profile(tmp_path):
    path = tmp_path / "partial.yaml"
    path.write_text("seed: 9\nlimits:\n  max_sites: 5\n")
    profile = load_profile(path)
    assert profile.seed == 9
    assert profile.limits.max_sites == 5
    assert profile.limits.max_enumeration_size == 3


def test_missing_file(tmp_path):
    with pytest.raises(ProfileNotFoundError):
        load_profile(tmp_path / "nope.yaml")


def test_invalid_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("seed: [1, 2\n")
    with pytest.raises(ProfileParseError):
        load_profile(path)


@pytest.mark.parametrize("data, key", [
    ({"colour": "red"}, "colour"),
    ({"sampling": {"bound": 0}}, "sampling.bound"),
    ({"sampling": {"bound": "20"}}, "sampling.bound"),
    ({"suites": {"ybe_samples": True}}, "suites.ybe_samples"),
    ({"limits": {"max_depth": 3}}, "limits.max_depth"),
    ({"limits": [1, 2]}, "limits"),
    ({"limits": {"max_enumeration_size": 4}}, "limits.max_enumeration_size"),
    ({"limits": {"max_enumeration_size": 6}}, "limits.max_enumeration_size"),
    ({"seed": -1}, "seed"),
    ({"seed": 2 ** 64}, "seed"),
])
def test_validation(data, key):
    with pytest.raises(ProfileValidationError) as excinfo:
        profile_from_mapping(data)
    assert excinfo.value.key == key


def test_zero_samples_allowed():
    assert profile_from_mapping({"suites": {"geometry_samples": 0}}).suites.geometry_samples == 0
