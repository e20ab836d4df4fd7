import pytest

from symspace.errors import DegenerateParams, UnsupportedFamily
from symspace.spaces import SUPPORTED_SPACES, parse_space


@pytest.mark.parametrize("raw,canonical", [
    ("sl:3", "sl:3"),
    (" so : 4 , 1 ", "so:4,1"),
    ("hyperbolic:3", "so:3,1"),
    ("su:2,1", "su:2,1"),
    ("sp:2", "sp:2"),
])
def test_parse(raw, canonical):
    spec = parse_space(raw)
    assert spec.canonical == canonical
    assert spec.raw == raw


@pytest.mark.parametrize("raw", ["", "sl", "sl:", "e8:1", "sl:2,1", "so:4", "SL:3", "sl:-2"])
def test_unsupported(raw):
    with pytest.raises(UnsupportedFamily):
        parse_space(raw)


@pytest.mark.parametrize("raw", ["so:3,0", "su:2,0", "sl:1", "sl:0", "hyperbolic:1", "so:1,3", "so:1,1", "sp:0"])
def test_degenerate(raw):
    with pytest.raises(DegenerateParams):
        parse_space(raw)


def test_compact_message_mentions_compactness():
    with pytest.raises(DegenerateParams, match="compact"):
        parse_space("so:5,0")


def test_supported_spaces_build():
    for raw in SUPPORTED_SPACES:
        assert parse_space(raw).build().dim_g > 0
