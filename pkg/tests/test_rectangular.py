from collections import Counter

import pytest

from nilpair.diagrams import Diagram, parse
from nilpair.pairs import biexponents, build_pair
from nilpair.rectangular import (
    EmbeddingSpec,
    FormError,
    alt2,
    classification_list_predicate,
    clebsch_gordan,
    decompose_adjoint,
    even_orthogonal_pair_report,
    is_regular_embedding,
    module_weights,
    survey_embeddings,
    sym2,
    symmetric_diagram_pair,
    weight_multiset_decompose,
)


def test_clebsch_gordan_basics():
    assert clebsch_gordan(1, 1) == Counter({2: 1, 0: 1})
    assert sym2(1) == Counter({2: 1})
    assert alt2(2) == Counter({2: 1})


def test_plethysm_against_weight_oracle():
    for a in range(7):
        ws = module_weights(a)
        sym_w = [ws[i] + ws[j] for i in range(len(ws)) for j in range(i, len(ws))]
        alt_w = [ws[i] + ws[j] for i in range(len(ws)) for j in range(i + 1, len(ws))]
        assert weight_multiset_decompose(sym_w) == sym2(a)
        assert weight_multiset_decompose(alt_w) == +alt2(a)


def test_dimension_bookkeeping():
    for spec in (
        EmbeddingSpec("sl", ((2, 2),)),
        EmbeddingSpec("sp", ((2, 1),)),
        EmbeddingSpec("so", ((3, 1), (1, 3))),
    ):
        dec = decompose_adjoint(spec)
        total = sum((a + 1) * (b + 1) * m for (a, b), m in dec.items())
        n = spec.dim_v
        expected = {
            "sl": n * n - 1,
            "sp": n * (n + 1) // 2,
            "so": n * (n - 1) // 2,
        }[spec.algebra]
        assert total == expected


def test_sl_square_decomposition():
    dec = decompose_adjoint(EmbeddingSpec("sl", ((2, 2),)))
    assert dec == Counter({(2, 2): 1, (2, 0): 1, (0, 2): 1})


def test_so6_two_rectangles():
    dec = decompose_adjoint(EmbeddingSpec("so", ((3, 1), (1, 3))))
    assert sum(dec.values()) == 3


def test_sl_single_column_principal():
    accepted, exps = is_regular_embedding(EmbeddingSpec("sl", ((4, 1),)))
    assert accepted
    assert exps == ((1, 0), (2, 0), (3, 0))


def test_regularity_and_biexponents_match_diagram():
    for a, b in ((2, 2), (3, 2), (4, 1), (3, 3)):
        accepted, exps = is_regular_embedding(EmbeddingSpec("sl", ((a, b),)))
        assert accepted
        d = Diagram([(p, q) for p in range(a) for q in range(b)])
        pair, h = build_pair(d)
        assert exps == biexponents(pair, h)
        assert exps == tuple(sorted(x for x in d.boxes if x != (0, 0)))


def test_sp_parity_rule():
    assert is_regular_embedding(EmbeddingSpec("sp", ((2, 1),)))[0]
    assert not is_regular_embedding(EmbeddingSpec("sp", ((3, 1),)))[0]
    assert not is_regular_embedding(EmbeddingSpec("sp", ((2, 2), (2, 2))))[0]


def test_so_families():
    assert is_regular_embedding(EmbeddingSpec("so", ((3, 3),)))[0]
    assert is_regular_embedding(EmbeddingSpec("so", ((3, 1), (1, 3))))[0]
    assert is_regular_embedding(EmbeddingSpec("so", ((3, 3), (1, 1))))[0]
    assert not is_regular_embedding(EmbeddingSpec("so", ((3, 1), (3, 1))))[0]


def test_form_error():
    with pytest.raises(FormError):
        decompose_adjoint(EmbeddingSpec("so", ((2, 1),)))
    with pytest.raises(FormError):
        decompose_adjoint(EmbeddingSpec("sp", ((1, 1),)))


def test_survey_small_bounds():
    for alg in ("sl", "sp", "so"):
        rep = survey_embeddings(alg, 12)
        assert rep["agree"]
    tiny = survey_embeddings("sp", 3)
    assert all(r["is_pn_pair"] == r["expected"] for r in tiny["rows"])


def test_classification_predicate_families():
    assert classification_list_predicate(EmbeddingSpec("sl", ((5, 2),)))
    assert not classification_list_predicate(EmbeddingSpec("sl", ((2, 1), (1, 1))))
    assert classification_list_predicate(EmbeddingSpec("so", ((5, 1), (1, 3))))
    assert not classification_list_predicate(EmbeddingSpec("so", ((5, 1), (1, 2))))


def test_even_orthogonal_pairs():
    for n in (1, 2):
        rep = even_orthogonal_pair_report(n)
        assert rep["ok"]
        assert rep["centralizer_dim"] == 2 * n + 1
        assert rep["jordan_e1"] == [2 * n + 1, 2 * n + 1]


def test_symmetric_diagram_row():
    rep = symmetric_diagram_pair(parse("3"))
    assert rep["form_nondegenerate"] and rep["skew_adjoint"] and rep["commute"]
    assert rep["distinguished"]


def test_symmetric_diagram_square():
    rep = symmetric_diagram_pair(parse("3,3,3"))
    assert rep["distinguished"]


def test_symmetric_plus_shape():
    rep = symmetric_diagram_pair(parse("(0,0);(1,0);(-1,0);(0,1);(0,-1)"))
    assert rep["form_nondegenerate"] and rep["skew_adjoint"]
    assert not rep["commute"]
    assert "distinguished" not in rep


def test_asymmetric_rejected():
    with pytest.raises(FormError):
        symmetric_diagram_pair(parse("2,1"))
