import pytest

from pentasep import are_isomorphic
from pentasep.errors import UnsupportedN, WindupFailure
from pentasep.spiral import (
    GENERATION_BOUND,
    SpiralCode,
    count_table,
    generate,
    search_codes,
    unwind,
    windup,
)

SMALL_COUNTS = {20: 1, 22: 0, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6, 34: 6, 36: 15}


def test_c20_code_round_trip(c20):
    code = unwind(c20)
    assert code.face_count == 12
    assert code.pentagon_positions == tuple(range(1, 13))
    assert are_isomorphic(windup(code), c20)


def test_windup_unwind_inverse_c60(c60):
    code = unwind(c60)
    f = windup(code)
    assert are_isomorphic(f, c60)
    assert unwind(f) == code


@pytest.mark.parametrize("n,count", sorted(SMALL_COUNTS.items()))
def test_small_counts(n, count):
    assert len(search_codes(n)) == count


def test_generate_yields_valid_distinct():
    seen = set()
    for f in generate(30):
        assert f.vertex_count == 30
        code = unwind(f)
        assert code not in seen
        seen.add(code)
    assert len(seen) == 3


def test_generate_respects_min_separation():
    # no isomer below 60 vertices satisfies the isolated pentagon rule
    assert list(generate(36, min_separation=2)) == []


def test_count_table_row_shape():
    rows = count_table([24, 26])
    assert rows == [(24, 14, 1, 0, 0, 0, 0), (26, 15, 1, 0, 0, 0, 0)]


def test_unsupported_n():
    for bad in (19, 21, 18, GENERATION_BOUND + 2):
        with pytest.raises(UnsupportedN):
            search_codes(bad)


def test_bad_spiral_code_rejected():
    with pytest.raises(ValueError):
        SpiralCode(12, tuple(range(1, 12)))
    with pytest.raises(WindupFailure):
        # valid positions that jam: pentagons too late to close
        windup(SpiralCode(16, (5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16)))


def test_workers_agree_with_serial():
    serial = search_codes(28, workers=1)
    parallel = search_codes(28, workers=2)
    assert serial == parallel
