import pytest

from zkxi.config import (
    DEFAULT_TOLERANCES,
    EvalConfig,
    config_load,
    config_load_file,
    dump_config,
)
from zkxi.errors import ParseError, RangeError


def test_empty_document_is_all_defaults():
    assert config_load("") == EvalConfig()
    assert config_load("{}") == EvalConfig()


def test_lattice_delta_range():
    with pytest.raises(RangeError) as info:
        config_load("lattice_delta: 0.3")
    assert info.value.key_path == "lattice_delta"


def test_compensated_tightens_unless_explicit():
    c = config_load("precision_mode: compensated\ntolerances:\n  constants: 1.0e-6\n")
    assert c.tol("cross_route") == pytest.approx(DEFAULT_TOLERANCES["cross_route"] * 1e-3)
    assert c.tol("constants") == 1e-6
    assert c.tol("growth") == DEFAULT_TOLERANCES["growth"]


@pytest.mark.parametrize("text,path", [
    ("jet_reserve: two", "jet_reserve"),
    ("em_defaults:\n  bogus: 1", "em_defaults.bogus"),
    ("tolerances:\n  cross_route: [1]", "tolerances.cross_route"),
    ("nonsense: 1", "nonsense"),
    ("jet_reserve: 2.5", "jet_reserve"),
])
def test_parse_errors_name_the_key(text, path):
    with pytest.raises(ParseError) as info:
        config_load(text)
    assert info.value.key_path == path


def test_malformed_yaml():
    with pytest.raises(ParseError):
        config_load("a: [1, 2")


@pytest.mark.parametrize("text,path", [
    ("jet_reserve: 1", "jet_reserve"),
    ("bisect_width: -1", "bisect_width"),
    ("precision_mode: quad", "precision_mode"),
    ("tolerances:\n  constants: 0", "tolerances.constants"),
])
def test_range_errors(text, path):
    with pytest.raises(RangeError) as info:
        config_load(text)
    assert info.value.key_path == path


def test_file_round_trip(tmp_path):
    c = EvalConfig(precision_mode="compensated", jet_reserve=6, lattice_delta=0.1)
    p = tmp_path / "zkxi.yaml"
    p.write_text(dump_config(c))
    assert config_load_file(p) == c
    assert config_load_file(p).fingerprint() == c.fingerprint()


def test_fingerprint_tracks_changes():
    assert EvalConfig().fingerprint() != EvalConfig(scan_oversample=5).fingerprint()
