import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicpair.jsonio import (
    InputError,
    decode_cubic_map,
    decode_matrix,
    decode_pairing,
    decode_polymap,
    decode_scalar,
    decode_series,
    dumps,
    encode,
    encode_scalar,
)
from cubicpair.linalg import RationalMatrix
from cubicpair.pairing import Pairing
from cubicpair.scalars import LambdaPoly, LambdaRational
from cubicpair.series import SYMBOLIC, TermSeries


def round_trip(obj, decoder):
    return decoder(json.loads(dumps(obj)))


def test_scalar_encodings():
    assert encode_scalar(Fraction(-3, 6)) == "-1/2"
    assert encode_scalar(Fraction(4)) == "4"
    r = LambdaRational(LambdaPoly([0, 0, 3]), LambdaPoly([1, 0, -1]))
    enc = encode_scalar(r)
    assert enc == {"num": ["0", "0", "-3"], "den": ["-1", "0", "1"]}
    assert decode_scalar(enc) == r
    assert encode_scalar(LambdaRational(5)) == "5"
    with pytest.raises(InputError):
        decode_scalar({"num": ["1"], "den": ["0"]})
    with pytest.raises(InputError):
        decode_scalar("1/0")


def test_fixture_round_trips(druz, essen):
    for fx in (druz, essen):
        assert round_trip(fx.A, decode_matrix) == fx.A
        assert round_trip(fx.f_inv, decode_polymap) == fx.f_inv
        assert round_trip(fx.f, decode_cubic_map).cubic_part == fx.f.cubic_part
        assert round_trip(fx.F, decode_cubic_map).a == fx.A
        p = round_trip(Pairing(fx.A, fx.B, fx.C, fx.f), decode_pairing)
        assert (p.A, p.B, p.C) == (fx.A, fx.B, fx.C)
        s = TermSeries.from_map(fx.k, 7, SYMBOLIC)
        assert round_trip(s, decode_series) == s


def test_output_is_deterministic(druz):
    s = TermSeries.from_map(druz.k, 7, SYMBOLIC)
    assert dumps(s) == dumps(round_trip(s, decode_series))


def test_shape_errors():
    with pytest.raises(InputError):
        decode_matrix({"rows": 2, "cols": 2, "entries": [["1", "2"]]})
    with pytest.raises(InputError):
        decode_polymap({"source": 2, "target": 1, "components": [{"vars": 3, "terms": []}]})
    with pytest.raises(InputError):
        decode_cubic_map({"dim": 1, "cubic_part": {"source": 1, "target": 1,
                                                    "components": [{"vars": 1, "terms": [{"exp": [2], "coeff": "1"}]}]}})
    with pytest.raises(InputError):
        decode_cubic_map({"B": 1})
    with pytest.raises(TypeError):
        encode(object())


@given(st.lists(st.lists(st.fractions(max_denominator=9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_matrix_round_trip(rows):
    m = RationalMatrix(rows, cols=3)
    assert round_trip(m, decode_matrix) == m
