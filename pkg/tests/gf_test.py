import numpy as np
import pytest

from rankmet.errors import (
    FieldTooLarge,
    InvalidArgs,
    NotPrime,
    NotPrimitiveModulus,
    ParseError,
    Reducible,
)
from rankmet.gf import (
    build_field,
    field_from_order,
    field_info,
    frobenius,
    gamma_expand,
    gamma_flatten,
    gamma_reconstruct,
    gamma_unflatten,
    is_subfield_element,
    parse_element,
)
from rankmet.minimal import ETA_MODULUS, LAMBDA_EXPONENT


def test_powers_of_alpha(f8):
    assert f8.antilog.tolist() == [1, 2, 4, 3, 6, 7, 5]
    assert int(f8.generator) == 2
    assert int(f8.power(3)) == 3
    assert int(f8.power(-1)) == 5
    assert f8.label(6) == "g^4"
    assert f8.label(0) == "0"


def test_field_tower_parameters():
    ctx = field_from_order(4, 2)
    assert (ctx.p, ctx.e, ctx.m, ctx.q, ctx.order) == (2, 2, 2, 4, 16)
    assert ctx.subfield_stride == 5
    assert len(ctx.subfield_elements) == 4
    assert np.all(is_subfield_element(ctx, ctx.subfield))


def test_invalid_fields():
    with pytest.raises(NotPrime, match="not prime"):
        build_field(4, 1, 2)
    with pytest.raises(Reducible, match="reducible"):
        build_field(2, 1, 3, (1, 0, 0, 1))
    with pytest.raises(NotPrimitiveModulus):
        build_field(2, 1, 4, (1, 1, 1, 1, 1))
    with pytest.raises(FieldTooLarge):
        build_field(2, 1, 21)
    with pytest.raises(InvalidArgs, match="monic|Modulus|modulus"):
        build_field(2, 1, 3, (1, 1, 0, 0))


def test_frobenius(f8):
    assert int(frobenius(f8, 0)) == 0
    assert int(frobenius(f8, 2)) == 4
    assert int(frobenius(f8, 1)) == 1


def test_frobenius_fixes_embedded_subfield():
    ctx = build_field(2, 4, 3, ETA_MODULUS)
    everything = ctx.GF(np.arange(ctx.order))
    fixed = np.flatnonzero((frobenius(ctx, everything) == everything).view(np.ndarray))
    assert len(fixed) == 16
    assert fixed.tolist() == ctx.subfield_elements.tolist()


def test_lambda_generates_the_subfield():
    ctx = build_field(2, 4, 3, ETA_MODULUS)
    lam = ctx.power(LAMBDA_EXPONENT)
    assert int(lam**4 + lam + ctx.GF(1)) == 0
    assert int(ctx.beta[1]) == int(lam)


def test_gamma_expand(f8):
    coords = gamma_expand(f8, [1, 0, 2, 4])
    assert coords.view(np.ndarray).tolist() == [[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert int(gamma_expand(f8, 3).view(np.ndarray).tolist()[1]) == 1


def test_gamma_reconstruct_inverts_expansion_over_proper_subfield():
    ctx = field_from_order(4, 2)
    everything = ctx.GF(np.arange(ctx.order))
    coords = gamma_expand(ctx, everything)
    assert np.all(is_subfield_element(ctx, coords))
    assert np.array_equal(gamma_reconstruct(ctx, coords), everything)


def test_custom_gamma_basis(f8):
    ctx = build_field(2, 1, 3, (1, 1, 0, 1), gamma=(1, 3, 5))
    assert not ctx.default_gamma
    assert ctx.to_json()["gamma"] == [1, 3, 5]
    assert gamma_expand(ctx, 3).view(np.ndarray).tolist() == [0, 1, 0]
    with pytest.raises(InvalidArgs):
        build_field(2, 1, 3, (1, 1, 0, 1), gamma=(1, 2, 3))


def test_flatten_layout(f8):
    vectors = f8.GF([[2, 1], [4, 0]])
    flat = gamma_flatten(f8, vectors)
    assert flat.view(np.ndarray).tolist() == [[0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 0, 0]]
    assert np.array_equal(gamma_unflatten(f8, flat, 2), vectors)


def test_parse_element(f8):
    assert parse_element(f8, "g^3") == 3
    assert parse_element(f8, "7") == 7
    assert parse_element(f8, 0) == 0
    with pytest.raises(ParseError, match="out of range"):
        parse_element(f8, "8")
    with pytest.raises(ParseError, match="Not a field element"):
        parse_element(f8, "x")
    with pytest.raises(ParseError):
        parse_element(f8, True)


def test_field_info(f8):
    info = field_info(f8)
    assert info["q"] == 2
    assert info["order"] == 8
    assert info["modulus"] == [1, 1, 0, 1]
    assert info["gamma_labels"] == ["g^0", "g^1", "g^2"]


def test_elements_rejects_out_of_range(f8):
    with pytest.raises(InvalidArgs, match="out of range"):
        f8.elements([8])
