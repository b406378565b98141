import itertools

import pytest

from opdcoevo import GameParams, Strategy, payoff

C, D, A = Strategy.COOPERATE, Strategy.DEFECT, Strategy.ABSTAIN


@pytest.mark.parametrize("b", [1.18, 1.9])
@pytest.mark.parametrize("l", [0.0, 0.6])
def test_payoff_table_exact(b, l):
    g = GameParams(b, l)
    expected = {
        (C, C): 1.0, (C, D): 0.0, (C, A): l,
        (D, C): b, (D, D): 0.0, (D, A): l,
        (A, C): l, (A, D): l, (A, A): l,
    }
    for (sx, sy), want in expected.items():
        assert payoff(sx, sy, g) == want
        assert g.payoff_matrix()[sx, sy] == want


def test_spec_example_values():
    g = GameParams(1.9, 0.6)
    assert payoff(C, C, g) == 1.0
    assert payoff(D, C, g) == 1.9
    assert payoff(D, D, g) == 0.0
    assert payoff(A, D, g) == 0.6
    assert payoff(D, A, g) == 0.6


def test_abstain_symmetry():
    g = GameParams(1.5, 0.3)
    for s in Strategy:
        assert payoff(A, s, g) == g.l
        assert payoff(s, A, g) == g.l


@pytest.mark.parametrize("b,l", list(itertools.product([1.01, 1.34, 1.74, 2.0],
                                                       [0.0, 0.2, 0.6, 0.99])))
def test_orderings(b, l):
    g = GameParams(b, l)
    # temptation > reward > punishment >= sucker
    assert payoff(D, C, g) > payoff(C, C, g) > payoff(D, D, g) >= payoff(C, D, g)
    if 0.0 < l:
        # punishment < loner < reward
        assert payoff(D, D, g) < payoff(A, C, g) < payoff(C, C, g)
    for sx in Strategy:
        for sy in Strategy:
            assert payoff(sx, sy, g) >= 0.0


def test_param_validation():
    GameParams(1.0, 0.0)  # closed lower endpoints are legal
    GameParams(2.0, 0.0)
    for b, l in [(2.5, 0.6), (0.99, 0.6), (1.5, 1.0), (1.5, -0.1)]:
        with pytest.raises(ValueError):
            GameParams(b, l)


def test_strategy_encoding_roundtrip():
    assert len(set(Strategy)) == 3
    for s in Strategy:
        assert Strategy(int(s)) is s
