import random

import pytest
from hypothesis import given, settings, strategies as st

from nzcgraph import CapExceeded, NullVector, SingularBasis, field_new
from nzcgraph.vspace import (
    LCG,
    Basis,
    coords_in_basis,
    enumerate_vectors,
    expand_in_basis,
    format_basis,
    load_basis,
    parse_basis,
    random_bases,
    rank,
    support,
    vertex_from_id,
    vertex_id,
)

from oracles import solve_coords, span_rank


def tables(f):
    return f.add_table, f.mul_table


def test_enumeration_examples():
    assert enumerate_vectors(field_new(2), 2) == [(0, 1), (1, 0), (1, 1)]
    assert enumerate_vectors(field_new(3), 1) == [(1,), (2,)]
    assert len(enumerate_vectors(field_new(5), 3)) == 124


@pytest.mark.parametrize("q,n", [(2, 4), (3, 3), (4, 2), (5, 2)])
def test_enumeration_distinct_nonnull_sorted(q, n):
    vs = enumerate_vectors(field_new(q), n)
    assert len(vs) == q ** n - 1 == len(set(vs))
    assert all(any(v) for v in vs)
    assert vs == sorted(vs)
    assert [vertex_id(v, q) for v in vs] == list(range(len(vs)))
    assert [vertex_from_id(i, q, n) for i in range(len(vs))] == vs


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_vectors(field_new(2), 13)
    assert len(enumerate_vectors(field_new(2), 13, cap=8191)) == 8191


def test_support_examples():
    assert support((1, 0, 2)) == 0b101
    assert support((4,)) == 0b1
    with pytest.raises(NullVector):
        support((0, 0, 0))
    with pytest.raises(NullVector):
        vertex_id((0, 0), 3)


def test_rank_examples():
    f = field_new(2)
    assert rank(f, [(1, 0), (1, 1)]) == 2
    assert rank(f, [(1, 1), (0, 1), (1, 0)]) == 2
    assert rank(f, []) == 0


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (4, 2), (5, 2)])
def test_rank_matches_span_enumeration(q, n):
    f = field_new(q)
    rng = random.Random(q * 10 + n)
    vs = enumerate_vectors(f, n)
    for _ in range(40):
        sample = rng.sample(vs, rng.randint(1, n + 1))
        assert rank(f, sample) == span_rank(sample, *tables(f), q, n)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 4), st.data())
def test_rank_bounds_and_permutation_invariance(q, n, data):
    f = field_new(q)
    k = data.draw(st.integers(0, 6))
    vs = [tuple(data.draw(st.integers(0, q - 1)) for _ in range(n)) for _ in range(k)]
    r = rank(f, vs)
    assert r <= min(k, n)
    shuffled = data.draw(st.permutations(vs))
    assert rank(f, shuffled) == r


def test_coords_in_basis_examples():
    f = field_new(3)
    b = Basis(f, ((1, 1), (2, 1)))
    assert coords_in_basis((1, 1), b) == (1, 0)
    assert coords_in_basis((2, 1), b) == (0, 1)
    ident = Basis.identity(f, 2)
    assert all(coords_in_basis(v, ident) == v for v in enumerate_vectors(f, 2))


@pytest.mark.parametrize("q,n,seed", [(2, 3, 0), (3, 2, 1), (4, 2, 2), (5, 2, 3), (3, 3, 4)])
def test_coords_in_basis_round_trip_and_oracle(q, n, seed):
    f = field_new(q)
    (b,) = random_bases(f, n, 1, seed)
    for v in enumerate_vectors(f, n):
        c = coords_in_basis(v, b)
        assert expand_in_basis(c, b) == v
        if q ** n <= 27:
            assert solve_coords(v, b.rows, *tables(f), q) == [c]


def test_singular_basis():
    f = field_new(3)
    with pytest.raises(SingularBasis):
        Basis(f, ((1, 2), (2, 1)))
    with pytest.raises(SingularBasis):
        Basis(f, ((1, 0),))


def test_basis_file_round_trip(tmp_path):
    f = field_new(4)
    b = Basis(f, ((1, 2), (2, 1)))
    text = format_basis(b)
    assert text == "01,10\n10,01\n"
    path = tmp_path / "basis.txt"
    path.write_text(text)
    assert load_basis(path, f, 2) == b


def test_basis_file_rejections():
    f = field_new(3)
    with pytest.raises(SingularBasis):
        parse_basis("1,1\n2,2\n", f, 2)
    with pytest.raises(SingularBasis):
        parse_basis("1,1\n", f, 2)
    with pytest.raises(SingularBasis):
        parse_basis("1,1,0\n0,1,0\n", f, 2)


def test_lcg_is_fixed():
    rng = LCG(0)
    first = [rng.next() for _ in range(3)]
    # state_1 = C, state_2 = A*C + C, ... (mod 2^64); draws are state >> 33
    a, c, m = LCG.A, LCG.C, 1 << 64
    s1 = c
    s2 = (a * s1 + c) % m
    s3 = (a * s2 + c) % m
    assert first == [s1 >> 33, s2 >> 33, s3 >> 33]


def test_random_bases_reproducible_and_invertible():
    f = field_new(5)
    one = random_bases(f, 2, 20, seed=11)
    two = random_bases(f, 2, 20, seed=11)
    assert one == two
    assert all(rank(f, b.rows) == 2 for b in one)
    assert random_bases(f, 2, 20, seed=12) != one
