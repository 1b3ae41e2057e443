"""Parser, validator, and round-trip tests for the CoNLL-U layer."""

import io

import pytest

from ukrstylo import parse_conllu, parse_path, serialize, token_count, validate
from ukrstylo.conllu import ConlluError, parse_feats, format_feats

SIMPLE = """\
# newdoc id = d1
# sent_id = s1
# text = Він спить.
1\tВін\tвін\tPRON\t_\tCase=Nom|Gender=Masc|Number=Sing|Person=3|PronType=Prs\t2\tnsubj\t_\t_
2\tспить\tспати\tVERB\t_\tAspect=Imp|Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin\t0\troot\t_\t_
3\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
"""

WITH_RANGES = """\
# sent_id = r1
# text = ...
1-2\tдо того\t_\t_\t_\t_\t_\t_\t_\t_
1\tдо\tдо\tADP\t_\tCase=Gen\t3\tcase\t_\t_
2\tтого\tтой\tDET\t_\tCase=Gen|Gender=Neut|Number=Sing|PronType=Dem\t3\tdet\t_\t_
2.1\tбуло\tбути\tAUX\t_\t_\t_\t_\t_\t_
3\tчасу\tчас\tNOUN\t_\tAnimacy=Inan|Case=Gen|Gender=Masc|Number=Sing\t0\troot\t_\t_
"""


def _parse(text, **kw):
    return parse_conllu(io.StringIO(text), **kw)


def test_parse_basic_shape():
    docs = _parse(SIMPLE)
    assert len(docs) == 1
    doc = docs[0]
    assert doc.doc_id == "d1"
    assert [s.sent_id for s in doc.sentences] == ["s1"]
    assert token_count(doc) == 3
    tok = doc.sentences[0].token(2)
    assert tok.form == "спить" and tok.lemma == "спати" and tok.upos == "VERB"
    assert tok.feats["Tense"] == "Pres"
    assert tok.head == 0 and tok.deprel == "root"


def test_default_doc_id_when_no_newdoc():
    docs = _parse(SIMPLE.replace("# newdoc id = d1\n", ""), default_doc_id="fallback")
    assert docs[0].doc_id == "fallback"


def test_multiword_ranges_and_empty_nodes_skipped():
    docs = _parse(WITH_RANGES, default_doc_id="r")
    sent = docs[0].sentences[0]
    assert [t.index for t in sent.tokens] == [1, 2, 3]
    assert [t.form for t in sent.tokens] == ["до", "того", "часу"]


def test_round_trip_preserves_feats_order_and_content():
    docs = _parse(SIMPLE)
    text = serialize(docs)
    docs2 = _parse(text)
    assert serialize(docs2) == text
    t1 = docs[0].sentences[0].token(1)
    t2 = docs2[0].sentences[0].token(1)
    assert t1.feats == t2.feats


def test_feats_sorted_case_insensitively():
    feats = parse_feats("Number=Sing|Animacy=Anim|aspect=Imp")
    assert format_feats(feats) == "Animacy=Anim|aspect=Imp|Number=Sing"
    assert format_feats({}) == "_"


@pytest.mark.parametrize("mutation, fragment", [
    ("1\tВін", "9\tВін"),                     # non-contiguous index
    ("2\tnsubj", "5\tnsubj"),                 # head out of range
    ("0\troot", "2\troot"),                   # self-head / no root
])
def test_parse_rejects_structural_problems(mutation, fragment):
    from ukrstylo.conllu import ValidationError
    with pytest.raises(ValidationError):
        _parse(SIMPLE.replace(mutation, fragment))


def test_validate_diagnostics_directly():
    from ukrstylo.conllu import Sentence, Token

    def tok(i, head, deprel="dep"):
        return Token(index=i, form="x", lemma="x", upos="NOUN", feats={},
                     head=head, deprel=deprel)

    clean = Sentence("s", None, (tok(1, 2), tok(2, 0, "root")))
    assert validate(clean) == []
    cyclic = Sentence("s", None, (tok(1, 2), tok(2, 1)))
    assert any("cycle" in d or "root" in d for d in validate(cyclic))
    assert any("out of range" in d
               for d in validate(Sentence("s", None, (tok(1, 7),))))


def test_malformed_line_reports_line_number():
    bad = SIMPLE.replace(
        "3\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_", "3\t.\tonly-three")
    with pytest.raises(ConlluError) as err:
        _parse(bad)
    assert err.value.line_no is not None


def test_unknown_upos_rejected():
    bad = SIMPLE.replace("\tPRON\t", "\tNOPE\t")
    with pytest.raises(ConlluError):
        _parse(bad)


def test_parse_path_matches_stream(tmp_path):
    p = tmp_path / "x.conllu"
    p.write_text(SIMPLE, encoding="utf-8")
    assert serialize(parse_path(p)) == serialize(_parse(SIMPLE))


def test_gold_corpus_is_structurally_clean():
    docs = parse_path("tests/fixtures/gold/gold.conllu")
    assert len(docs) == 10
    assert sum(len(d.sentences) for d in docs) == 40
    for doc in docs:
        for sent in doc.sentences:
            assert validate(sent) == [], (doc.doc_id, sent.sent_id)
