import pytest
from hypothesis import given, strategies as st

from brc.mu import mu_size
from brc.params import ParamsError, derive_params


def test_example_point():
    p = derive_params(256, 2, 3)
    assert (p.L, p.num_levels, p.u_len, p.n) == (24, 9, 696, 4456)
    assert p.W == 2 * 32 * 3 * 8**2 + 24 - 1 == 12311
    assert (p.field_adj, p.field_sig) == (48, 24)


def test_other_points():
    assert derive_params(256, 1, 3).n == 2368
    p = derive_params(1024, 4, 3)
    assert (p.L, p.num_levels, p.u_len) == (30, 10, 930)


@pytest.mark.parametrize(
    "m, t, c, needle",
    [
        (256, 0, 3, "t >= 1"),
        (300, 2, 3, "power of two"),
        (256, 2, 2, "integer >= 3"),
        (512, 2, 3, "even"),
        (256, 256, 3, "m > t"),
        (4, 1, 3, "too short"),
        (4, 3, 4, "codewords"),
    ],
)
def test_rejections(m, t, c, needle):
    with pytest.raises(ParamsError, match=needle):
        derive_params(m, t, c)


valid = st.tuples(
    st.sampled_from([2**k for k in range(4, 21, 2)]),
    st.integers(1, 8),
    st.sampled_from([3, 4, 5]),
)


@given(valid)
def test_layout_invariants(args):
    m, t, c = args
    try:
        p = derive_params(m, t, c)
    except ParamsError:
        return
    assert p.L % 2 == 0 and p.m & (p.m - 1) == 0
    assert p.n - p.m - p.L == 3 * p.t * p.u_len
    assert p.u_len % (p.L // 2) == 0
    assert p.chunks_per_string == 2 * p.u_len // p.L
    assert p.inst_len * p.t == p.info_start == 3 * p.t * p.u_len
    assert p.mu_size == mu_size(p.L) >= p.t + 2
    assert 2 ** (2 * p.L) >= p.mu_size + 4 * p.t
    assert 2**p.L > p.sig_msg_len + 3 * p.t
    # parity layout fills the string exactly, without overlaps
    assert p.level_offset(1, 0) == p.adj_offset(3) + 2 * p.L
    assert p.residual_offset(0) == p.level_offset(p.num_levels, 1) + p.L
    assert p.residual_offset(2) + p.L == p.u_len
    assert derive_params(m, t, c) == p


def test_num_levels_grows_by_one_per_doubling_of_log_m():
    # log2 m = 8 -> 16 (m = 256 -> 65536) doubles log2 m
    assert derive_params(2**16, 2, 3).num_levels == derive_params(2**8, 2, 3).num_levels + 1
    assert derive_params(2**16, 2, 4).num_levels == 10
    assert derive_params(2**4, 1, 4).num_levels == 8


def test_header():
    assert derive_params(256, 2, 3).header() == "BRC1 m=256 t=2 c=3"
