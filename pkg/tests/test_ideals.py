import pytest

from newton_segre import (DimensionMismatch, ParseError, ZeroGenerator,
                          make_ideal, monomial_str, parse_ideal,
                          serialize_ideal, stretch)
from tests.conftest import random_ideal


def test_dominated_generator_removed():
    ideal = make_ideal(2, [(2, 0), (3, 1)])
    assert ideal.generators == ((2, 0),)


def test_pure_power_kept():
    assert make_ideal(1, [(5,)]).generators == ((5,),)


def test_zero_generator_rejected():
    with pytest.raises(ZeroGenerator):
        make_ideal(2, [(0, 0), (1, 1)])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        make_ideal(2, [(1, 2, 3)])


def test_incomparable_generators_survive():
    ideal = make_ideal(2, [(2, 0), (1, 1), (0, 2)])
    assert ideal.generators == ((0, 2), (1, 1), (2, 0))


def test_minimalization_idempotent(rng):
    for _ in range(50):
        ideal = random_ideal(rng)
        again = make_ideal(ideal.n, ideal.generators)
        assert again == ideal


def test_stretch_pure_power_two_vars():
    # (x1^l) under factors (a2, a1) becomes (x1^(l*a2))
    ideal = make_ideal(2, [(3, 0)])
    assert stretch(ideal, (4, 7)).generators == ((12, 0),)


def test_stretch_componentwise():
    assert stretch(make_ideal(2, [(2, 1)]), (2, 3)).generators == ((4, 3),)


def test_stretch_identity():
    ideal = make_ideal(2, [(2, 0), (1, 1)])
    assert stretch(ideal, (1, 1)) == ideal


def test_stretch_preserves_minimality(rng):
    for _ in range(30):
        ideal = random_ideal(rng)
        factors = tuple(rng.randint(1, 5) for _ in range(ideal.n))
        stretched = stretch(ideal, factors)
        assert len(stretched.generators) == len(ideal.generators)


# ---- parsing --------------------------------------------------------------

def test_parse_text():
    ideal = parse_ideal("x1^2, x1*x2")
    assert ideal.n == 2
    assert ideal.generators == ((1, 1), (2, 0))


def test_parse_whitespace_and_implicit_star():
    assert parse_ideal(" x1 ^2 ,x1 x2 ") == parse_ideal("x1^2,x1*x2")


def test_parse_repeated_variable_accumulates():
    assert parse_ideal("x1*x1").generators == ((2,),)


def test_parse_json_string_and_dict():
    ideal = parse_ideal('{"n": 1, "generators": [[3]]}')
    assert ideal.generators == ((3,),)
    assert parse_ideal({"n": 2, "generators": [[2, 0], [1, 1]]}).n == 2


def test_parse_zero_power_is_unit_ideal():
    with pytest.raises(ZeroGenerator):
        parse_ideal("x1^0")


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_ideal("x1^2, y3")
    assert err.value.position == 5


def test_parse_explicit_n_widens():
    ideal = parse_ideal("x1^3", n=2)
    assert ideal.n == 2
    assert ideal.generators == ((3, 0),)


def test_parse_explicit_n_rejects_out_of_range():
    with pytest.raises(DimensionMismatch):
        parse_ideal("x1*x3", n=2)


def test_round_trip(rng):
    for _ in range(25):
        ideal = random_ideal(rng)
        assert parse_ideal(serialize_ideal(ideal)) == ideal


def test_monomial_str():
    assert monomial_str((2, 0, 1)) == "x1^2*x3"
    assert monomial_str((0, 1)) == "x2"
