import pytest
from hypothesis import given, strategies as st

from listlab import (
    CENTRALIZED,
    FULL,
    PARTIAL,
    CostBreakdown,
    CostModel,
    ExchangeKind,
    OutOfRange,
    Unsupported,
    access_cost,
    center_position,
    exchange_cost,
    model_token,
    parse_model_token,
    pd,
)

ALL_MODELS = (FULL, PARTIAL, pd(1), pd(2), CENTRALIZED)

positions = st.integers(1, 50).flatmap(
    lambda l: st.tuples(st.integers(1, l), st.just(l))
)


def test_full_ninth_position():
    assert access_cost(FULL, 9, 9) == 9


def test_partial_front_position_is_free():
    assert access_cost(PARTIAL, 1, 5) == 0


def test_centralized_ninth_of_nine():
    # center of nine positions is 5, so distance is 4
    assert center_position(9) == 5
    assert access_cost(CENTRALIZED, 9, 9) == 4


def test_pd_access_matches_full():
    assert access_cost(pd(3), 4, 8) == 4


@pytest.mark.parametrize("i,l", [(0, 5), (6, 5), (-1, 3)])
def test_access_out_of_range(i, l):
    with pytest.raises(OutOfRange):
        access_cost(FULL, i, l)


@given(positions)
def test_full_minus_partial_is_one(pos_l):
    i, l = pos_l
    assert access_cost(FULL, i, l) - access_cost(PARTIAL, i, l) == 1


@given(st.integers(1, 60))
def test_centralized_zero_at_center(l):
    assert access_cost(CENTRALIZED, center_position(l), l) == 0


@given(st.integers(2, 40))
def test_access_monotone_and_unimodal(l):
    for model in (FULL, PARTIAL, pd(2)):
        costs = [access_cost(model, i, l) for i in range(1, l + 1)]
        assert costs == sorted(costs)
    c = center_position(l)
    central = [access_cost(CENTRALIZED, i, l) for i in range(1, l + 1)]
    assert central[:c] == sorted(central[:c], reverse=True)
    assert central[c - 1 :] == sorted(central[c - 1 :])
    assert min(central) == central[c - 1] == 0


def test_free_exchange_costs_nothing_under_full():
    assert exchange_cost(FULL, ExchangeKind.FREE_ELIGIBLE, 8) == 0


def test_paid_exchange_costs_one_each():
    assert exchange_cost(FULL, ExchangeKind.PAID, 3) == 3
    assert exchange_cost(PARTIAL, ExchangeKind.PAID, 5) == 5


def test_pd_charges_both_kinds():
    assert exchange_cost(pd(2), ExchangeKind.FREE_ELIGIBLE, 2) == 4
    assert exchange_cost(pd(2), ExchangeKind.PAID, 2) == 4


def test_centralized_paid_movement_refused():
    with pytest.raises(Unsupported):
        exchange_cost(CENTRALIZED, ExchangeKind.PAID, 1)
    assert exchange_cost(CENTRALIZED, ExchangeKind.FREE_ELIGIBLE, 4) == 0


@pytest.mark.parametrize("model", ALL_MODELS)
@pytest.mark.parametrize("kind", list(ExchangeKind))
def test_zero_transpositions_cost_zero(model, kind):
    assert exchange_cost(model, kind, 0) == 0


def test_negative_transpositions_rejected():
    with pytest.raises(ValueError):
        exchange_cost(FULL, ExchangeKind.PAID, -1)


def test_pd_requires_positive_charge():
    with pytest.raises(ValueError):
        CostModel("pd", 0)
    with pytest.raises(ValueError):
        CostModel("bogus")


@pytest.mark.parametrize("token", ["full", "partial", "centralized", "pd:2", "pd:10"])
def test_model_token_round_trip(token):
    assert model_token(parse_model_token(token)) == token


@pytest.mark.parametrize("token", ["pd", "pd:x", "pd:0", "full:1", "bogus", ""])
def test_bad_model_tokens(token):
    with pytest.raises(ValueError):
        parse_model_token(token)


def test_breakdown_total_is_component_sum():
    b = CostBreakdown(access=3, matching=2, replacement=1, exchange=4)
    assert b.total == 10
    assert CostBreakdown().total == 0
