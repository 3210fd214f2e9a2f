import itertools
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lpdec import gf2
from lpdec.codes import (
    BUILTIN_CODES,
    LinearCode,
    bch_generator_poly,
    bch_parity_matrix,
    builtin_code,
    enumerate_codewords,
    format_alist,
    is_codeword,
    load_code,
    load_matrix,
    parse_alist,
    read_alist,
    save_matrix,
    write_alist,
)
from lpdec.errors import DimensionTooLarge, InvalidParameters, LengthMismatch, UnknownCode
from lpdec.gf2m import GF2m, PRIMITIVE_POLYS, is_irreducible, poly_mul

from conftest import all_words, brute_codewords

DATA = Path(__file__).parent / "data"


def columns_independent(M, cols):
    """No nonempty subset of the given columns sums to zero over GF(2)."""
    M = np.asarray(M, dtype=np.int64)
    for size in range(1, len(cols) + 1):
        for sub in itertools.combinations(cols, size):
            if not (M[:, list(sub)].sum(axis=1) % 2).any():
                return False
    return True


def span_size(M):
    M = np.asarray(M, dtype=np.int64)
    combos = all_words(M.shape[0]).astype(np.int64)
    return len({tuple(r) for r in (combos @ M) % 2})


# --- row_reduce / rank ---


def test_row_reduce_identity():
    R, piv = gf2.row_reduce(np.eye(3, dtype=np.uint8), (0, 1, 2))
    assert np.array_equal(R, np.eye(3))
    assert piv == [(0, 0), (1, 1), (2, 2)]


def test_row_reduce_zero_matrix():
    R, piv = gf2.row_reduce(np.zeros((2, 4), dtype=np.uint8), (3, 1, 0))
    assert not R.any()
    assert piv == []


def test_row_reduce_paper_least_reliable_columns(paper_code):
    order = (7, 5, 3, 0)
    assert columns_independent(paper_code.H, order)
    R, piv = gf2.row_reduce(paper_code.H, order)
    assert [c for _, c in piv] == [7, 5, 3, 0]
    for r, c in piv:
        col = np.zeros(4, dtype=np.uint8)
        col[r] = 1
        assert np.array_equal(R[:, c], col)
    assert gf2.same_row_space(R, paper_code.H)


def test_row_reduce_skips_dependent_columns():
    M = np.array([[1, 1, 0], [0, 0, 1]], dtype=np.uint8)
    R, piv = gf2.row_reduce(M, (0, 1, 2))
    assert [c for _, c in piv] == [0, 2]


def test_row_reduce_rejects_duplicate_order():
    with pytest.raises(ValueError):
        gf2.row_reduce(np.eye(2, dtype=np.uint8), (0, 0))


def test_rank_examples(paper_code):
    assert span_size(paper_code.H) == 2**4
    assert gf2.rank(paper_code.H) == 4
    assert gf2.rank(np.eye(5, dtype=np.uint8)) == 5
    assert gf2.rank(np.ones((3, 3), dtype=np.uint8)) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 7), st.data())
def test_row_reduce_preserves_null_space(m, n, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=m * n, max_size=m * n))
    M = np.array(bits, dtype=np.uint8).reshape(m, n)
    order = data.draw(st.permutations(range(n)))
    R, piv = gf2.row_reduce(M, order)
    assert np.array_equal(brute_codewords(R), brute_codewords(M))
    assert len(piv) == gf2.rank(M)
    assert 2 ** len(piv) == span_size(M)


# --- codes ---


def test_paper_code_matrix(paper_code):
    rows = ["".join(map(str, r)) for r in paper_code.H]
    assert rows == ["11111111", "01010101", "00110011", "00001111"]
    assert (paper_code.n, paper_code.k) == (8, 4)


def test_enumerate_paper_code(paper_code):
    words = enumerate_codewords(paper_code)
    assert words.shape == (16, 8)
    assert len({w.tobytes() for w in words}) == 16
    oracle = {w.tobytes() for w in brute_codewords(paper_code.H)}
    assert {w.tobytes() for w in words} == oracle
    assert oracle >= {np.zeros(8, np.uint8).tobytes(), np.ones(8, np.uint8).tobytes()}
    # information bits count up: word 0 is zero
    assert not words[0].any()


def test_enumerate_repetition_code():
    code = LinearCode(np.array([[1, 1, 0], [1, 0, 1]]))
    words = {"".join(map(str, w)) for w in enumerate_codewords(code)}
    assert words == {"000", "111"}


def test_enumerate_trivial_code():
    code = LinearCode(np.zeros((1, 2), dtype=np.uint8))
    assert code.k == 2
    assert len(enumerate_codewords(code)) == 4


def test_enumerate_guard():
    code = LinearCode(np.zeros((1, 25), dtype=np.uint8))
    with pytest.raises(DimensionTooLarge):
        enumerate_codewords(code)


def test_is_codeword(paper_code):
    assert is_codeword(paper_code, np.zeros(8))
    assert not is_codeword(paper_code, [1, 0, 0, 0, 0, 0, 0, 0])
    x = np.array([1, 1, 0, 0, 0, 1, 1, 0])
    assert not is_codeword(paper_code, x)
    failing = (paper_code.H.astype(int) @ x) % 2
    assert failing.tolist() == [0, 0, 1, 0]
    with pytest.raises(LengthMismatch):
        is_codeword(paper_code, np.zeros(7))


@pytest.mark.parametrize(
    "m,delta,n,k,g_octal",
    [
        (3, 3, 7, 4, "13"),
        (4, 3, 15, 11, "23"),
        (4, 5, 15, 7, "721"),
        (5, 5, 31, 21, "3551"),
        (6, 9, 63, 39, "166623567"),
        (6, 11, 63, 36, "1033500423"),
    ],
)
def test_bch_parameters_and_generators(m, delta, n, k, g_octal):
    # generator polynomials from standard BCH tables (octal, x^(n-k) first)
    assert bch_generator_poly(m, delta) == int(g_octal, 8)
    code = bch_parity_matrix(m, design_distance=delta)
    assert (code.n, code.k) == (n, k)
    assert gf2.rank(code.H) == n - k


def test_bch_15_7_golden(bch15):
    golden = load_matrix(DATA / "bch_15_7.txt")
    assert np.array_equal(bch15.H, golden)


def test_bch_15_7_minimum_distance(bch15):
    weights = bch15.codewords.sum(axis=1)
    assert weights.min() == 0
    assert sorted(set(weights.tolist()))[1] == 5
    assert np.all((weights == 0) | (weights >= 5))


def test_bch_invalid_parameters():
    for kwargs in ({"m": 9, "design_distance": 3}, {"m": 4, "design_distance": 4}, {"m": 4, "design_distance": 1}):
        with pytest.raises(InvalidParameters):
            bch_parity_matrix(**kwargs)


@pytest.mark.parametrize("name", BUILTIN_CODES)
def test_builtin_codes_consistent(name):
    code = builtin_code(name)
    assert gf2.rank(code.H) == code.n - code.k
    assert code.m >= code.n - code.k
    if code.k <= 21:
        words = code.codewords
        assert len(words) == 2**code.k
        assert not ((words.astype(np.int64) @ code.H.T) % 2).any()


def test_builtin_code_parameters():
    assert (builtin_code("bch_63_39").n, builtin_code("bch_63_39").k) == (63, 39)
    h = builtin_code("hamming_7_4")
    assert (h.n, h.k, gf2.rank(h.H)) == (7, 4, 3)
    with pytest.raises(UnknownCode):
        builtin_code("golay")


def test_encode_matches_codewords(bch15):
    rng = np.random.default_rng(3)
    for _ in range(20):
        assert is_codeword(bch15, bch15.encode(rng.integers(0, 2, bch15.k)))


# --- GF(2^m) ---


@pytest.mark.parametrize("m", sorted(PRIMITIVE_POLYS))
def test_primitive_polys(m):
    gf = GF2m(m)  # raises unless the polynomial is primitive
    assert is_irreducible(PRIMITIVE_POLYS[m])
    a = gf.element(gf.alpha_pow(1))
    assert (a ** gf.order).value == 1


def test_field_arithmetic():
    gf = GF2m(4)
    for v in range(1, 16):
        e = gf.element(v)
        assert (e * (gf.element(1) / e)).value == 1
        assert (e + e).value == 0
    with pytest.raises(InvalidParameters):
        GF2m(4, 0b10101)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    with pytest.raises(InvalidParameters):
        GF2m(17)


def test_minimal_polynomials_gf16():
    gf = GF2m(4)
    assert gf.cyclotomic_coset(3) == [3, 6, 12, 9]
    assert gf.cyclotomic_coset(5) == [5, 10]
    assert gf.minimal_polynomial(1) == 0b10011
    assert gf.minimal_polynomial(3) == 0b11111
    assert gf.minimal_polynomial(5) == 0b111
    assert poly_mul(0b10011, 0b11111) == int("721", 8)


# --- matrix I/O ---


def test_plain_text_golden_and_roundtrip(paper_code, tmp_path):
    golden = (DATA / "hamming_8_4_paper.txt").read_bytes()
    out = tmp_path / "h.txt"
    save_matrix(paper_code.H, out)
    assert out.read_bytes() == golden
    assert np.array_equal(load_matrix(out), paper_code.H)


@pytest.mark.parametrize("name", ["bch_15_7", "hamming_7_4", "bch_31_21"])
def test_roundtrips(name, tmp_path):
    H = builtin_code(name).H
    p = tmp_path / "m.txt"
    save_matrix(H, p)
    first = p.read_bytes()
    save_matrix(load_matrix(p), p)
    assert p.read_bytes() == first
    a = tmp_path / "m.alist"
    write_alist(H, a)
    assert np.array_equal(read_alist(a), H)
    assert np.array_equal(load_code(str(a)).H, H)


def test_alist_reader_external_layout():
    # (7,4) Hamming in MacKay alist layout with zero padding
    text = """7 3
3 4
1 1 2 1 2 2 3
4 4 4
1 0 0
2 0 0
1 2 0
3 0 0
1 3 0
2 3 0
1 2 3
1 3 5 7
2 3 6 7
4 5 6 7
"""
    H = parse_alist(text)
    assert H.tolist() == [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]
    assert parse_alist(format_alist(H)).tolist() == H.tolist()


def test_load_code_unknown(tmp_path):
    with pytest.raises(UnknownCode):
        load_code(str(tmp_path / "missing.txt"))
