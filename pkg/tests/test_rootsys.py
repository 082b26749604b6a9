"""Labels, orderings, reduced words, weights and the dimension formula."""

import math
from fractions import Fraction

import pytest

from fflvstring.rootsys import (
    LieType,
    RootLabel,
    apply_word,
    build_labels,
    cartan_matrix,
    column_key,
    dominant_weights,
    fflv_weight,
    fundamental_weight_roots,
    lifted_coeffs,
    lifted_weight_roots,
    reduced_word,
    root_expansion,
    string_weight,
    vector_from_labels,
    weight_roots,
    weyl_dim,
    word_is_reduced,
    word_letter,
)
from oracles import freudenthal_dim, gt_dim

A1 = LieType("A", 1)
A2 = LieType("A", 2)
A3 = LieType("A", 3)
C2 = LieType("C", 2)
C3 = LieType("C", 3)


def fundamental(lt, i):
    return tuple(1 if k == i - 1 else 0 for k in range(lt.rank))


def test_lietype_validation():
    with pytest.raises(ValueError):
        LieType("B", 2)
    with pytest.raises(ValueError):
        LieType("A", 0)


def test_labels_a3_printed_basis():
    assert build_labels(A3) == (
        RootLabel(1, 3),
        RootLabel(2, 3),
        RootLabel(3, 3),
        RootLabel(1, 2),
        RootLabel(2, 2),
        RootLabel(1, 1),
    )


def test_labels_c2_printed_basis():
    assert build_labels(C2) == (
        RootLabel(1, 1, True),
        RootLabel(1, 2),
        RootLabel(2, 2),
        RootLabel(1, 1),
    )


def test_labels_a1_single_root():
    assert build_labels(A1) == (RootLabel(1, 1),)


def test_ascending_chain_a3():
    chain = tuple(reversed(build_labels(A3)))
    assert chain == (
        RootLabel(1, 1),
        RootLabel(2, 2),
        RootLabel(1, 2),
        RootLabel(3, 3),
        RootLabel(2, 3),
        RootLabel(1, 3),
    )


@pytest.mark.parametrize("family", ["A", "C"])
@pytest.mark.parametrize("rank", range(1, 11))
def test_label_count_matches_word_length(family, rank):
    lt = LieType(family, rank)
    expected = rank * (rank + 1) // 2 if family == "A" else rank * rank
    assert len(build_labels(lt)) == expected
    assert len(reduced_word(lt)) == expected


@pytest.mark.parametrize("family", ["A", "C"])
@pytest.mark.parametrize("rank", range(1, 11))
def test_word_is_reduced(family, rank):
    assert word_is_reduced(LieType(family, rank))


def test_reduced_word_fixtures():
    assert reduced_word(A3) == (3, 4, 5, 2, 3, 1)
    assert reduced_word(C2) == (3, 2, 3, 1)
    assert reduced_word(A1) == (1,)


@pytest.mark.parametrize("family", ["A", "C"])
@pytest.mark.parametrize("rank", range(1, 7))
def test_word_letters_align_with_labels(family, rank):
    lt = LieType(family, rank)
    letters = tuple(word_letter(lab, rank) for lab in build_labels(lt))
    assert letters == reduced_word(lt)


def test_column_key_identifies_n_and_n_bar():
    # key(n) == key(n-bar) realizes the n = n-bar convention
    assert column_key(RootLabel(1, 3), 3) == column_key(RootLabel(1, 3, True), 3)


def test_weyl_dim_fundamental_formulas():
    for n in range(1, 7):
        lt = LieType("A", n)
        for i in range(1, n + 1):
            assert weyl_dim(lt, fundamental(lt, i)) == math.comb(n + 1, i)
    for n in range(1, 6):
        lt = LieType("C", n)
        for k in range(1, n + 1):
            expected = math.comb(2 * n, k) - (
                math.comb(2 * n, k - 2) if k >= 2 else 0
            )
            assert weyl_dim(lt, fundamental(lt, k)) == expected


def test_weyl_dim_trivial_module():
    for lt in (A1, A3, C2, C3):
        assert weyl_dim(lt, (0,) * lt.rank) == 1


def test_weyl_dim_spot_values():
    assert weyl_dim(A3, (0, 1, 0)) == 6
    assert weyl_dim(C3, (0, 1, 0)) == 14
    assert weyl_dim(A3, (1, 1, 1)) == 64
    assert weyl_dim(A2, (1, 1)) == 8


@pytest.mark.parametrize("rank", range(1, 5))
def test_weyl_dim_against_pattern_count(rank):
    lt = LieType("A", rank)
    for w in dominant_weights(rank, 3):
        assert weyl_dim(lt, w) == gt_dim(w)


@pytest.mark.parametrize(
    "family,rank,level", [("A", 2, 3), ("A", 3, 2), ("C", 2, 2), ("C", 3, 2)]
)
def test_weyl_dim_against_freudenthal(family, rank, level):
    lt = LieType(family, rank)
    for w in dominant_weights(rank, level):
        assert weyl_dim(lt, w) == freudenthal_dim(family, rank, w)


def test_root_expansion():
    assert root_expansion(A2, RootLabel(1, 2)) == (1, 1)
    assert root_expansion(C2, RootLabel(1, 1, True)) == (2, 1)
    assert root_expansion(C2, RootLabel(1, 2)) == (1, 1)
    assert root_expansion(C3, RootLabel(1, 2, True)) == (1, 2, 1)
    assert root_expansion(C3, RootLabel(2, 2, True)) == (0, 2, 1)


def test_cartan_inverse_consistency():
    for family, rank in (("A", 4), ("C", 4), ("C", 1)):
        m = cartan_matrix(family, rank)
        for k in range(1, rank + 1):
            w = fundamental_weight_roots(family, rank, k)
            image = tuple(
                sum(m[i][j] * w[j] for j in range(rank)) for i in range(rank)
            )
            assert image == tuple(
                Fraction(1) if i == k - 1 else Fraction(0) for i in range(rank)
            )


def test_fflv_weight_examples():
    zero = (0,) * len(build_labels(A2))
    assert fflv_weight(A2, (1, 0), zero) == weight_roots("A", 2, (1, 0))

    p = vector_from_labels(A2, {RootLabel(1, 2): 1})
    expected = tuple(
        x - d for x, d in zip(weight_roots("A", 2, (1, 0)), (1, 1))
    )
    assert fflv_weight(A2, (1, 0), p) == expected

    p = vector_from_labels(C2, {RootLabel(1, 1, True): 1})
    expected = tuple(
        x - d for x, d in zip(weight_roots("C", 2, (0, 1)), (2, 1))
    )
    assert fflv_weight(C2, (0, 1), p) == expected


def test_fflv_weight_rejects_bad_vectors():
    with pytest.raises(ValueError):
        fflv_weight(A2, (1, 0), (0, 0))
    with pytest.raises(ValueError):
        vector_from_labels(A2, {RootLabel(1, 1, True): 1})


def test_string_weight_examples():
    n = len(reduced_word(A2))
    assert string_weight(A2, (1, 0), (0,) * n) == lifted_weight_roots(A2, (1, 0))

    # single letter in rank 1
    expected = tuple(
        x - d for x, d in zip(lifted_weight_roots(A1, (1,)), (1,))
    )
    assert string_weight(A1, (1,), (1,)) == expected

    # the lowest string vector lands on the extremal weight
    t = (1, 0, 1)  # e_{1,2} + e_{1,1} in descending label coordinates
    extremal = apply_word("A", 3, reduced_word(A2), lifted_weight_roots(A2, (1, 0)))
    assert string_weight(A2, (1, 0), t) == extremal


def test_string_weight_rejects_length_mismatch():
    with pytest.raises(ValueError):
        string_weight(A2, (1, 0), (0, 0))


def test_weight_maps_are_affine_with_weight_free_linear_part():
    labels = build_labels(A2)
    n = len(labels)
    base = [0] * n
    for k in range(n):
        bumped = tuple(1 if j == k else 0 for j in range(n))
        deltas = set()
        for w in ((0, 0), (1, 0), (2, 1)):
            diff = tuple(
                a - b
                for a, b in zip(fflv_weight(A2, w, bumped), fflv_weight(A2, w, tuple(base)))
            )
            deltas.add(diff)
        assert len(deltas) == 1
    m = len(reduced_word(C2))
    for k in range(m):
        bumped = tuple(1 if j == k else 0 for j in range(m))
        deltas = set()
        for w in ((0, 0), (1, 0), (0, 2)):
            diff = tuple(
                a - b
                for a, b in zip(
                    string_weight(C2, w, bumped), string_weight(C2, w, (0,) * m)
                )
            )
            deltas.add(diff)
        assert len(deltas) == 1


def test_lifted_coeffs_positions():
    assert lifted_coeffs(A3, (2, 0, 1)) == (2, 0, 0, 0, 1)
    assert lifted_coeffs(C2, (1, 1)) == (1, 0, 1)


def test_dominant_weights_enumeration():
    assert list(dominant_weights(2, 0)) == [(0, 0)]
    levels = list(dominant_weights(2, 2))
    assert levels == [
        (0, 0),
        (0, 1),
        (1, 0),
        (0, 2),
        (1, 1),
        (2, 0),
    ]
    assert len(list(dominant_weights(4, 3))) == 35
