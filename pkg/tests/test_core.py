from fractions import Fraction

import pytest

from core.config import Settings, load_settings
from core.errors import ConfigError, SpecError
from core.rational import format_rational, parse_rational
from core.sampling import make_rng, random_quotients


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("3/4", Fraction(3, 4)),
        ("-2", Fraction(-2)),
        (" 1e-4 ", Fraction(1, 10000)),
        ("3.503", Fraction(3503, 1000)),
        (7, Fraction(7)),
        (0.5, Fraction(1, 2)),
        (Fraction(5, 3), Fraction(5, 3)),
    ],
)
def test_parse_rational(raw, expected):
    assert parse_rational(raw) == expected


@pytest.mark.parametrize("raw", ["1/0", "abc", "", True, None, [1]])
def test_parse_rational_rejects(raw):
    with pytest.raises(SpecError):
        parse_rational(raw)


def test_format_rational():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4)) == "4"


def test_settings_defaults():
    s = Settings()
    assert (s.order, s.window, s.trunc, s.precision_bits) == (5, 16, 24, 128)


def test_load_settings_from_yaml(tmp_path):
    path = tmp_path / "tp.yaml"
    path.write_text("order: 3\nwindow: 9\n")
    s = load_settings(str(path))
    assert s.order == 3 and s.window == 9
    assert s.nmax == Settings().nmax


def test_load_settings_env(tmp_path, monkeypatch):
    path = tmp_path / "env.yaml"
    path.write_text("precision_bits: 256\n")
    monkeypatch.setenv("TPV_CONFIG", str(path))
    assert load_settings().precision_bits == 256


@pytest.mark.parametrize(
    "text",
    ["order: [1, 2\n", "- 1\n- 2\n", "order: 0\n", "unknown_key: 1\n"],
)
def test_load_settings_invalid(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_settings(str(path))


def test_load_settings_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_settings(str(tmp_path / "nope.yaml"))


def test_random_quotients_seeded_and_in_range():
    a = random_quotients(make_rng(7), 20)
    b = random_quotients(make_rng(7), 20)
    assert a == b
    assert all(4 <= q <= 10 for q in a)
