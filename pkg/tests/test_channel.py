import itertools
import random

import pytest

from brc.channel import attack, break_at, drop_short, pieces_in_order
from brc.encoder import encode
from brc.legit import sample_legit
from brc.mu import mu_code
from brc.params import derive_params

X = "0100011100"


def test_example_multisets():
    assert break_at(X, [1, 5, 9]) == sorted(["0", "0", "1000", "1110"])
    assert break_at(X, [3, 8]) == sorted(["010", "00111", "00"])
    assert break_at(X, [5]) == sorted(["01000", "11100"])


def test_example_cut_sets_recovered_by_enumeration():
    target = sorted(["0", "0", "1000", "1110"])
    hits = [
        cuts
        for k in range(4)
        for cuts in itertools.combinations(range(1, len(X)), k)
        if break_at(X, cuts) == target
    ]
    assert hits == [(1, 5, 9)]


def test_trivial_patterns():
    assert break_at("0110", []) == ["0110"]
    assert break_at("0110", [1, 2, 3]) == ["0", "0", "1", "1"]


@pytest.mark.parametrize("cuts", [[0], [10], [3, 3], [5, 2]])
def test_invalid_cuts(cuts):
    with pytest.raises(ValueError):
        break_at(X, cuts)


def test_conservation():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randrange(2, 60)
        c = format(rng.getrandbits(n), f"0{n}b")
        cuts = sorted(rng.sample(range(1, n), rng.randrange(0, min(n - 1, 6) + 1)))
        pieces = pieces_in_order(c, cuts)
        assert "".join(pieces) == c
        assert len(pieces) == len(cuts) + 1
        assert sorted(pieces) == break_at(c, cuts)


def test_drop_short():
    frags = break_at(X, [1, 5, 9])
    assert drop_short(frags, 0) == frags
    assert drop_short(frags, 2) == ["1000", "1110"]
    with pytest.raises(ValueError):
        drop_short(frags, 25, L=24)


@pytest.fixture(scope="module")
def instance():
    params = derive_params(1024, 4, 3)
    z, _ = sample_legit(params, 1)
    return params, z, encode(z, params)


def test_signature_target(instance):
    params, z, c = instance
    L = params.L
    starts = [params.info_start + p for p in mu_code(L).positions(c[params.info_start :])]
    assert len(starts) >= params.t
    cuts = attack("signature-target", c, params, 3)
    assert len(cuts) == params.t
    hit = [next(s for s in starts if s < p < s + L) for p in cuts]
    assert len(set(hit)) == params.t


def test_marker_target(instance):
    params, z, c = instance
    cuts = attack("marker-target", c, params, 5)
    assert len(cuts) == params.t
    strings = {p // params.inst_len for p in cuts}
    assert strings == set(range(params.t))
    assert all(p % params.inst_len for p in cuts)


def test_boundary_target(instance):
    params, z, c = instance
    cuts = attack("boundary-target", c, params, 2)
    assert len(cuts) == params.t
    assert all(params.info_start - 2 * params.L <= p <= params.info_start + 3 * params.L for p in cuts)


@pytest.mark.parametrize("strategy", ["uniform", "signature-target", "marker-target", "boundary-target"])
def test_deterministic(instance, strategy):
    params, z, c = instance
    a = attack(strategy, c, params, 11)
    assert a == attack(strategy, c, params, 11)
    assert a == sorted(set(a)) and len(a) <= params.t
    assert all(1 <= p <= len(c) - 1 for p in a)


def test_exhaustive_worst():
    params = derive_params(256, 2, 3)
    word = "0" * 10 + "1" * 10
    # a toy "decoder" that only survives while the 1-run stays whole
    worst = attack("exhaustive-worst", word, params, 0, decoder=lambda frags: any("1" * 10 in f for f in frags))
    assert worst == [11]
    assert attack("exhaustive-worst", word, params, 0, decoder=lambda frags: True) is None
    with pytest.raises(ValueError):
        attack("exhaustive-worst", "0" * 25, params, 0, decoder=lambda f: True)


def test_unknown_strategy(instance):
    params, z, c = instance
    with pytest.raises(ValueError, match="unknown strategy"):
        attack("random-walk", c, params, 0)
