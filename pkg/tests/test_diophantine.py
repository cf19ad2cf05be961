import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnilpotent.diophantine import (
    BlockConfig,
    MOVES,
    apply_move,
    b1_corank,
    b_class,
    build_block_matrix,
    corank_direct,
    explore,
    greedy_trace,
    move_applies,
    pq_lattice_gcd,
    pqb_image,
    remark_config,
)
from qnilpotent.errors import InputError


def test_block_matrix_examples():
    assert build_block_matrix(BlockConfig.plain(1, 1, 1)) == [[1, 0, 1], [0, 2, 0], [1, 0, 1]]
    assert build_block_matrix(BlockConfig.plain(1, 0, 0)) == [[2]]
    assert build_block_matrix(BlockConfig(1, 1, 1, -1, 1, 1))[1][1] == 0


@pytest.mark.parametrize("abc,expected", [((1, 1, 1), 1), ((2, 1, 2), 2), ((1, 1, 2), 1)])
def test_corank_examples(abc, expected):
    assert corank_direct(BlockConfig.plain(*abc)) == expected


def test_move_examples():
    assert apply_move(BlockConfig.plain(3, 1, 1), 1) == BlockConfig(1, 1, 1, -1, 1, -1)
    assert apply_move(BlockConfig.plain(1, 1, 3), 2) == BlockConfig(1, -1, 1, -1, 1, 1)
    removed = apply_move(BlockConfig.plain(2, 1, 1), 1)
    assert removed.a == 0 and removed.size == 2
    with pytest.raises(InputError):
        apply_move(BlockConfig.plain(1, 1, 1), 1)


@pytest.mark.parametrize("ac,expected", [((1, 1), 1), ((2, 2), 2), ((1, 2), 1)])
def test_b1_examples(ac, expected):
    assert b1_corank(*ac) == expected


def test_invalid_configs():
    with pytest.raises(InputError):
        BlockConfig.plain(0, 0, 0)
    with pytest.raises(InputError):
        BlockConfig(1, 2, 1, 1, 1, 1)
    with pytest.raises(InputError):
        BlockConfig.plain(-1, 1, 1)
    with pytest.raises(InputError):
        b1_corank(0, 3)


def test_empty_block_drops_sign():
    assert BlockConfig(1, 1, 0, -1, 2, 1) == BlockConfig.plain(1, 0, 2)


configs = st.tuples(
    st.integers(0, 20), st.sampled_from((1, -1)),
    st.integers(0, 20), st.sampled_from((1, -1)),
    st.integers(0, 20), st.sampled_from((1, -1)),
).filter(lambda t: t[0] + t[2] + t[4] > 0).map(lambda t: BlockConfig(*t))


@given(configs)
def test_moves_preserve_corank_and_invariants(cfg):
    before = corank_direct(cfg)
    for m in MOVES:
        if move_applies(cfg, m):
            nxt = apply_move(cfg, m)
            assert corank_direct(nxt) == before
            assert nxt.size < cfg.size
            assert (nxt.p, nxt.q, nxt.b) == pqb_image(cfg, m)
            assert pq_lattice_gcd(nxt) == pq_lattice_gcd(cfg)
            assert b_class(nxt) == b_class(cfg)


@given(configs.filter(lambda c: c.size <= 30))
def test_all_terminal_paths_agree(cfg):
    assert explore(cfg).consistent


@given(configs)
def test_greedy_trace_ends_where_no_move_applies(cfg):
    steps = greedy_trace(cfg)
    last = steps[-1].after if steps else cfg
    assert not any(move_applies(last, m) for m in MOVES)
    assert corank_direct(last) == corank_direct(cfg)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(2, 3))
def test_tensorial_scaling(a, b, c, k):
    if a + b + c == 0:
        return
    assert corank_direct(BlockConfig.plain(k * a, k * b, k * c)) == k * corank_direct(BlockConfig.plain(a, b, c))


def test_remark_configuration():
    start, after = remark_config(5, 2, 1)
    assert start == BlockConfig.plain(5, 6, 1)
    assert (after.ea, after.eb, after.ec) == (-1, 1, -1)
    assert corank_direct(start) == corank_direct(after)
    with pytest.raises(InputError):
        remark_config(1, 2, 1)
