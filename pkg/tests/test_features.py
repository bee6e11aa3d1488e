import random

import numpy as np
import pytest

from pickem.exceptions import (
    ConvergenceError,
    MissingRepresentationError,
    ZeroLeagueAverageError,
    ZeroPossessionsError,
)
from pickem.features.adjusted import (
    ADJ_DE,
    ADJ_OE,
    adjusted_averages,
    adjusted_efficiencies,
)
from pickem.features.averages import (
    ALLOWED_SUFFIX,
    basic_averages,
    opponents_average,
    weighted_average,
)
from pickem.features.builder import RepresentationBuilder
from pickem.features.games import GameIndex, pair_games
from pickem.features.possessions import normalize_per_possessions
from pickem.features.srs import RATING, SOS, srs_weighted
from pickem.models.features import UNIFORM, RecencyWeights
from pickem.params.schemas import BASKETBALL, POINTS
from pickem.params.static import RecencyScheme, RepresentationKind, Venue
from tests.factories import (
    BOX_SCORE,
    BOX_SCORE_POSSESSIONS,
    day,
    feature_config,
    game,
    random_season,
    row,
)

ALLOWED_POINTS = f"{POINTS}{ALLOWED_SUFFIX}"


def test_possessions_identity():
    normalized = normalize_per_possessions(
        row(0, "A", "B", Venue.HOME, 70, 60), BASKETBALL, BOX_SCORE_POSSESSIONS
    )

    assert normalized[POINTS] == pytest.approx(70)
    for stat, value in BOX_SCORE.items():
        assert normalized[stat] == pytest.approx(value)


def test_possessions_direct_proportion():
    stats = {**{s: 0 for s in BASKETBALL.stats}, "fga": 40, "to": 10}

    normalized = normalize_per_possessions(
        row(0, "A", "B", Venue.HOME, 20, 10, stats), BASKETBALL, 65
    )

    assert normalized[POINTS] == pytest.approx(26.0)
    assert normalized["fga"] == pytest.approx(52.0)


def test_possessions_full_row():
    normalized = normalize_per_possessions(
        row(0, "A", "B", Venue.HOME, 70, 60), BASKETBALL, 65
    )

    possessions = 60 - 10 + 12 + 0.475 * 20
    assert normalized["ast"] == pytest.approx(14 * 65 / possessions)
    assert normalized[POINTS] == pytest.approx(70 * 65 / possessions)


def test_possessions_zero():
    stats = {s: 0 for s in BASKETBALL.stats}

    with pytest.raises(ZeroPossessionsError):
        normalize_per_possessions(
            row(0, "A", "B", Venue.HOME, 20, 10, stats), BASKETBALL, 65
        )


@pytest.mark.parametrize("seed", range(3))
def test_doubling_target_doubles_every_stat(seed):
    games = random_season(["A", "B", "C", "D"], 4, seed=seed)

    for g in games:
        for own in g.rows():
            single = normalize_per_possessions(own, BASKETBALL, 65)
            double = normalize_per_possessions(own, BASKETBALL, 130)
            assert double == pytest.approx({k: 2 * v for k, v in single.items()})

    single = basic_averages(games, day(4), BASKETBALL, 65, UNIFORM)
    double = basic_averages(games, day(4), BASKETBALL, 130, UNIFORM)
    for team, rep in single.items():
        doubled = {k: 2 * v for k, v in rep.features.items()}
        assert double[team].features == pytest.approx(doubled)


def test_recency_weights():
    exponential = RecencyWeights(scheme=RecencyScheme.EXPONENTIAL, parameter=0.5)
    linear = RecencyWeights(scheme=RecencyScheme.LINEAR, parameter=1)

    assert list(exponential.weights(3)) == [0.25, 0.5, 1]
    assert list(linear.weights(3)) == [1, 2, 3]


@pytest.mark.parametrize("scheme,parameter", [("exponential", 0), ("linear", -1)])
def test_recency_weights_invalid(scheme, parameter):
    with pytest.raises(ValueError):
        RecencyWeights(scheme=scheme, parameter=parameter)


def test_weighted_average():
    decay = RecencyWeights(scheme=RecencyScheme.EXPONENTIAL, parameter=0.5)

    averaged = weighted_average([{"x": 10}, {"x": 20}], decay)

    assert averaged["x"] == pytest.approx(16.6667, abs=1e-4)


def test_weighted_average_identical_and_uniform():
    rows = [{"x": 4, "y": 1}, {"x": 4, "y": 5}, {"x": 4, "y": 9}]

    averaged = weighted_average(rows, UNIFORM)

    assert averaged == pytest.approx({"x": 4, "y": 5})


def test_pair_games_orients_and_rejects():
    rows = [
        row(0, "A", "B", Venue.AWAY, 60, 70),
        row(0, "B", "A", Venue.HOME, 70, 60),
        row(1, "C", "D", Venue.NEUTRAL, 50, 55),
        row(1, "D", "C", Venue.NEUTRAL, 55, 50),
        row(2, "A", "C", Venue.HOME, 80, 75),
        row(3, "B", "D", Venue.HOME, 80, 75),
        row(3, "D", "B", Venue.AWAY, 70, 80),
    ]

    pairing = pair_games(rows)

    assert [(g.home.team, g.away.team) for g in pairing.games] == [
        ("B", "A"),
        ("C", "D"),
    ]
    assert pairing.games[1].neutral
    reasons = sorted(reason for _, reason in pairing.rejected)
    assert reasons == [
        "opponent row missing",
        "points do not mirror",
        "points do not mirror",
    ]


def test_game_index_before_is_strict():
    games = [game(0, "A", "B", 70, 60), game(1, "A", "C", 70, 60)]

    index = GameIndex(games)

    assert index.before(day(0)) == []
    assert index.before(day(1)) == games[:1]
    assert index.before(day(5)) == games


def test_opponents_average_single_opponent():
    games = [game(0, "A", "B", 70, 60)]
    basic = basic_averages(games, day(1), BASKETBALL, 65, UNIFORM)

    opp = opponents_average("A", games, basic, UNIFORM)

    assert opp.kind == RepresentationKind.OPP
    assert opp.features == pytest.approx(basic["B"].features)


def test_opponents_average_three_games():
    games = [
        game(0, "A", "B", 70, 60),
        game(1, "A", "C", 65, 60),
        game(2, "D", "A", 75, 70),
        game(3, "B", "C", 50, 60),
    ]
    basic = basic_averages(games, day(4), BASKETBALL, 65, UNIFORM)

    opp = opponents_average("A", games, basic, UNIFORM)

    expected = np.mean([basic[t].features[POINTS] for t in ("B", "C", "D")])
    assert opp.features[POINTS] == pytest.approx(expected)


def test_adjusted_symmetric_league():
    games = [
        game(0, "A", "B", 70, 70),
        game(1, "C", "A", 70, 70),
        game(2, "B", "C", 70, 70),
    ]
    basic = basic_averages(games, day(3), BASKETBALL, 65, UNIFORM)

    adjusted = adjusted_averages(games, day(3), BASKETBALL, 65, UNIFORM)

    for team in ("A", "B", "C"):
        assert adjusted[team].features == pytest.approx(basic[team].features)


def test_adjusted_two_teams_fixed_point():
    games = [game(0, "A", "B", 80, 60)]
    scale = 65 / BOX_SCORE_POSSESSIONS
    a, b = 80 * scale, 60 * scale
    league = (a + b) / 2

    adjusted = adjusted_averages(
        games, day(1), BASKETBALL, 65, UNIFORM, stats=[POINTS]
    )

    assert adjusted["A"].features[POINTS] == pytest.approx(league)
    assert adjusted["B"].features[POINTS] == pytest.approx(league)
    assert adjusted["A"].features[ALLOWED_POINTS] == pytest.approx(b)
    assert adjusted["B"].features[ALLOWED_POINTS] == pytest.approx(a)


def test_adjusted_efficiencies_identical_teams():
    games = [game(0, "A", "B", 70, 70), game(1, "B", "A", 70, 70)]

    eff = adjusted_efficiencies(games, day(2), BASKETBALL, UNIFORM)

    raw = 70 * 100 / BOX_SCORE_POSSESSIONS
    for team in ("A", "B"):
        assert eff[team].kind == RepresentationKind.EFF
        assert eff[team].features[ADJ_OE] == pytest.approx(raw)
        assert eff[team].features[ADJ_DE] == pytest.approx(raw)


def mirror_oracle(games, tolerance=1e-12):
    """Alternating offense/defense adjustment of points per 100 possessions."""
    teams = sorted({t for g in games for t in (g.home.team, g.away.team)})
    played = {t: [] for t in teams}
    for g in games:
        for own, opp in ((g.home, g.away), (g.away, g.home)):
            own_eff = own.points_for * 100 / BASKETBALL.estimate_possessions(own.stats)
            opp_eff = opp.points_for * 100 / BASKETBALL.estimate_possessions(opp.stats)
            played[own.team].append((opp.team, own_eff, opp_eff))

    counts = {t: len(played[t]) for t in teams}
    total = sum(counts.values())

    def league_mean(values):
        return sum(values[t] * counts[t] for t in teams) / total

    off = {t: sum(o for _, o, _ in played[t]) / counts[t] for t in teams}
    dfn = {t: sum(d for _, _, d in played[t]) / counts[t] for t in teams}
    league_off, league_def = league_mean(off), league_mean(dfn)

    for _ in range(10000):
        new_off = {
            t: sum(o * league_def / dfn[opp] for opp, o, _ in played[t]) / counts[t]
            for t in teams
        }
        k = league_off / league_mean(new_off)
        new_off = {t: v * k for t, v in new_off.items()}

        new_def = {
            t: sum(d * league_off / new_off[opp] for opp, _, d in played[t])
            / counts[t]
            for t in teams
        }
        k = league_def / league_mean(new_def)
        new_def = {t: v * k for t, v in new_def.items()}

        change = max(
            max(abs(new_off[t] - off[t]) for t in teams),
            max(abs(new_def[t] - dfn[t]) for t in teams),
        )
        off, dfn = new_off, new_def
        if change < tolerance:
            break

    return off, dfn


@pytest.mark.parametrize("seed", range(5))
def test_adjusted_efficiencies_round_robin_oracle(seed):
    games = random_season(["A", "B", "C"], 6, seed=seed)

    eff = adjusted_efficiencies(games, day(10), BASKETBALL, UNIFORM)
    off, dfn = mirror_oracle(games)

    for team in ("A", "B", "C"):
        assert eff[team].features[ADJ_OE] == pytest.approx(off[team], abs=1e-6)
        assert eff[team].features[ADJ_DE] == pytest.approx(dfn[team], abs=1e-6)


@pytest.mark.parametrize("seed", range(5))
def test_adjusted_keeps_league_mean(seed):
    games = random_season(["A", "B", "C"], 6, seed=seed)
    played = {}
    for g in games:
        for own in g.rows():
            played[own.team] = played.get(own.team, 0) + 1
    teams = sorted(played)
    counts = [played[t] for t in teams]

    basic = basic_averages(games, day(10), BASKETBALL, 65, UNIFORM)
    adjusted = adjusted_averages(
        games, day(10), BASKETBALL, 65, UNIFORM, stats=[POINTS]
    )

    for stat in (POINTS, ALLOWED_POINTS):
        raw = np.average([basic[t].features[stat] for t in teams], weights=counts)
        adj = np.average([adjusted[t].features[stat] for t in teams], weights=counts)
        assert adj == pytest.approx(raw, rel=1e-9)


def test_adjusted_zero_league_average():
    games = [game(0, "A", "B", 0, 0), game(1, "B", "A", 0, 0)]

    with pytest.raises(ZeroLeagueAverageError):
        adjusted_averages(games, day(2), BASKETBALL, 65, UNIFORM, stats=[POINTS])


def test_adjusted_convergence_error():
    games = random_season(["A", "B", "C", "D"], 6, seed=1)

    with pytest.raises(ConvergenceError) as e:
        adjusted_averages(
            games, day(10), BASKETBALL, 65, UNIFORM, stats=[POINTS], max_iterations=1
        )

    assert e.value.iterations == 1
    assert e.value.residual > 0


def test_srs_zero_margins():
    games = [game(0, "A", "B", 70, 70), game(1, "B", "C", 65, 65)]

    ratings = srs_weighted(games, day(2), UNIFORM)

    for rep in ratings.values():
        assert rep.features[RATING] == pytest.approx(0, abs=1e-9)


def test_srs_two_teams():
    ratings = srs_weighted([game(0, "A", "B", 80, 70)], day(1), UNIFORM)

    assert ratings["A"].features[RATING] == pytest.approx(5)
    assert ratings["B"].features[RATING] == pytest.approx(-5)
    assert ratings["A"].features[SOS] == pytest.approx(-5)


def random_connected_schedule(rng):
    teams = [f"T{i}" for i in range(rng.randint(4, 8))]
    order = rng.sample(teams, len(teams))
    pairs = list(zip(order, order[1:]))
    pairs += [tuple(rng.sample(teams, 2)) for _ in range(rng.randint(0, 12))]

    games = []
    for n, (home, away) in enumerate(pairs):
        margin = rng.choice([-1, 1]) * rng.randint(1, 25)
        games.append(game(n, home, away, 70 + margin, 70))
    return sorted(teams), games


def srs_oracle(teams, games):
    index = {t: i for i, t in enumerate(teams)}
    n = len(teams)
    counts = np.zeros(n)
    margins = np.zeros(n)
    faced = np.zeros((n, n))

    for g in games:
        h, a = index[g.home.team], index[g.away.team]
        diff = g.home.points_for - g.away.points_for
        counts[[h, a]] += 1
        margins[h] += diff
        margins[a] -= diff
        faced[h, a] += 1
        faced[a, h] += 1

    system = np.vstack([np.eye(n) - faced / counts[:, None], np.ones(n)])
    target = np.append(margins / counts, 0)

    return np.linalg.lstsq(system, target, rcond=None)[0]


def test_srs_linear_system_oracle():
    rng = random.Random(11)

    for _ in range(100):
        teams, games = random_connected_schedule(rng)

        ratings = srs_weighted(games, day(100), UNIFORM)
        expected = srs_oracle(teams, games)

        got = np.array([ratings[t].features[RATING] for t in teams])
        assert np.max(np.abs(got - expected)) < 1e-6


def test_srs_components_centered_separately():
    games = [game(0, "A", "B", 80, 70), game(0, "C", "D", 90, 70)]

    ratings = srs_weighted(games, day(1), UNIFORM)

    assert ratings["A"].features[RATING] == pytest.approx(5)
    assert ratings["C"].features[RATING] == pytest.approx(10)
    assert ratings["D"].features[RATING] == pytest.approx(-10)


def blowout(g):
    return game((g.date - day(0)).days, g.home.team, g.away.team, 150, 20)


def test_builder_walk_forward():
    games = random_season(["A", "B", "C", "D"], 8, seed=2)
    corrupted = [g if g.date < day(4) else blowout(g) for g in games]

    clean = RepresentationBuilder(games, feature_config())
    dirty = RepresentationBuilder(corrupted, feature_config())

    for kind in RepresentationKind:
        for as_of in (day(1), day(3), day(4)):
            assert clean.snapshot(kind, as_of) == dirty.snapshot(kind, as_of)


def test_builder_missing_representation():
    builder = RepresentationBuilder([game(1, "A", "B", 70, 60)], feature_config())

    with pytest.raises(MissingRepresentationError):
        builder.representation("A", RepresentationKind.BASIC, day(1))

    rep = builder.representation("A", RepresentationKind.BASIC, day(2))
    assert rep.as_of_date == day(2)
