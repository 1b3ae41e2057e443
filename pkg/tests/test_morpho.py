"""Derived-morphology tests: corrections, declension, conjugation, tense,
transitivity.  Expected values for the classifier examples were worked out
by hand against standard Ukrainian grammar before the rules were written.
"""

import pytest

from ukrstylo.conllu import Sentence, Token
from ukrstylo.morpho import (
    FUTURE_COMPLEX, FUTURE_IMPERFECT_SIMPLE, FUTURE_PERFECT_SIMPLE,
    INTRANSITIVE, PAST_IMPERFECT, PAST_PERFECT, PRESENT_IMPERFECT, TRANSITIVE,
    Lexicons, annotate_sentence, classify_conjugation, classify_declension,
    correct_feats, detect_tense, detect_transitivity,
)


@pytest.fixture(scope="module")
def lex():
    return Lexicons()


def tok(i, form, lemma, upos, feats=None, head=0, deprel="root"):
    return Token(index=i, form=form, lemma=lemma, upos=upos,
                 feats=feats or {}, head=head, deprel=deprel)


def sent(*tokens):
    return Sentence("t", None, tuple(tokens))


# ---------------------------------------------------------------- declension

@pytest.mark.parametrize("lemma, gender, expected", [
    ("затримка", "Fem", "I"),
    ("помилка", "Fem", "I"),
    ("країна", "Fem", "I"),
    ("земля", "Fem", "I"),
    ("батько", "Masc", "II"),
    ("виступ", "Masc", "II"),
    ("місто", "Neut", "II"),
    ("ніч", "Fem", "III"),
    ("осінь", "Fem", "III"),
    ("мати", "Fem", "III"),
    ("ім'я", "Neut", "IV"),
    ("теля", "Neut", "IV"),
])
def test_declension_classes(lex, lemma, gender, expected):
    t = tok(1, lemma, lemma, "NOUN", {"Gender": gender})
    assert classify_declension(t, lex) == expected


def test_indeclinable_nouns_have_no_class(lex):
    assert classify_declension(tok(1, "таксі", "таксі", "NOUN",
                                   {"Gender": "Neut"}), lex) is None
    # the Uninflect feature works even for lemmas outside the lexicon
    assert classify_declension(tok(1, "авокадо", "авокадо", "NOUN",
                                   {"Gender": "Neut", "Uninflect": "Yes"}),
                               lex) is None


def test_declension_only_for_common_nouns(lex):
    assert classify_declension(tok(1, "Оксана", "Оксана", "PROPN",
                                   {"Gender": "Fem"}), lex) is None
    assert classify_declension(tok(1, "гарна", "гарний", "ADJ"), lex) is None


# --------------------------------------------------------------- conjugation

@pytest.mark.parametrize("lemma, expected", [
    ("писати", "I"),
    ("читати", "I"),
    ("хотіти", "I"),      # lexicon exception to the -іти rule
    ("жити", "I"),
    ("іти", "I"),
    ("піти", "I"),
    ("прийти", "I"),
    ("бачити", "II"),
    ("любити", "II"),
    ("сидіти", "II"),
    ("стояти", "II"),
    ("бігти", "II"),
    ("прибігти", "II"),
    ("дати", "III"),
    ("продати", "III"),
    ("їсти", "III"),
    ("відповісти", "III"),
    ("розповісти", "III"),
    ("бути", "IV"),
    ("забути", "IV"),
])
def test_conjugation_classes(lex, lemma, expected):
    assert classify_conjugation(tok(1, lemma, lemma, "VERB"), lex) == expected


def test_conjugation_strips_reflexive_suffix(lex):
    assert classify_conjugation(tok(1, "пишатися", "пишатися", "VERB"), lex) == "I"
    assert classify_conjugation(tok(1, "народитися", "народитися", "VERB"), lex) == "II"


def test_derived_imperfectives_not_athematic(lex):
    # -давати verbs conjugate like I, not like дати
    assert classify_conjugation(tok(1, "продавати", "продавати", "VERB"), lex) == "I"
    assert classify_conjugation(tok(1, "відповідати", "відповідати", "VERB"), lex) == "I"


def test_conjugation_only_for_verbs(lex):
    assert classify_conjugation(tok(1, "мати", "мати", "NOUN"), lex) is None


# --------------------------------------------------------------- corrections

def test_animacy_correction_both_directions(lex):
    s = sent(tok(1, "листа", "лист", "NOUN",
                 {"Animacy": "Anim", "Case": "Acc", "Gender": "Masc"}))
    assert correct_feats(s, 1, lex) == {"Animacy": "Inan"}
    s = sent(tok(1, "крук", "крук", "NOUN",
                 {"Animacy": "Inan", "Case": "Nom", "Gender": "Masc"}))
    assert correct_feats(s, 1, lex) == {"Animacy": "Anim"}


def test_animacy_correction_idempotent(lex):
    s = sent(tok(1, "лист", "лист", "NOUN", {"Animacy": "Inan"}))
    assert correct_feats(s, 1, lex) == {}


def test_aspect_correction_for_prefixed_verbs(lex):
    s = sent(tok(1, "Закрапало", "закрапати", "VERB",
                 {"Aspect": "Imp", "Mood": "Ind", "Tense": "Past",
                  "VerbForm": "Fin"}))
    assert correct_feats(s, 1, lex) == {"Aspect": "Perf"}


@pytest.mark.parametrize("lemma", [
    "захищати",       # lexicon exception
    "замовляти",      # lexicon exception
    "записувати",     # imperfectivizing -ува- suffix
    "зростати",       # no perfective prefix (за- is part of the stem? no: з-)
])
def test_aspect_rule_respects_exceptions(lex, lemma):
    feats = {"Aspect": "Imp", "VerbForm": "Fin"}
    if lemma == "зростати":
        pass  # prefix regex should simply not fire on з-
    s = sent(tok(1, lemma, lemma, "VERB", feats))
    assert correct_feats(s, 1, lex) == {}


def test_pos_correction_for_mistagged_noun(lex):
    s = sent(tok(1, "веснянки", "веснянка", "ADV"))
    out = correct_feats(s, 1, lex)
    assert out == {"UPOS": "NOUN", "Number": "Plur"}


def test_pos_correction_not_applied_when_already_noun(lex):
    s = sent(tok(1, "веснянки", "веснянка", "NOUN", {"Number": "Plur"}))
    assert correct_feats(s, 1, lex) == {}


def test_untouched_rows_stay_untouched(lex):
    """Regular well-tagged tokens must produce no overrides at all."""
    cases = [
        tok(1, "Завдання", "завдання", "NOUN",
            {"Animacy": "Inan", "Case": "Acc", "Gender": "Neut"}),
        tok(1, "Осінню", "осінь", "NOUN",
            {"Animacy": "Inan", "Case": "Ins", "Gender": "Fem"}),
        tok(1, "написав", "написати", "VERB",
            {"Aspect": "Perf", "Tense": "Past", "VerbForm": "Fin"}),
    ]
    for t in cases:
        assert correct_feats(sent(t), 1, lex) == {}, t.form


# --------------------------------------------------------------------- tense

def _verb(i, form, lemma, feats, head=0, deprel="root"):
    return tok(i, form, lemma, "VERB", feats, head, deprel)


@pytest.mark.parametrize("feats, expected", [
    ({"Aspect": "Imp", "Mood": "Ind", "Tense": "Pres", "VerbForm": "Fin"},
     PRESENT_IMPERFECT),
    ({"Aspect": "Imp", "Mood": "Ind", "Tense": "Past", "VerbForm": "Fin"},
     PAST_IMPERFECT),
    ({"Aspect": "Perf", "Mood": "Ind", "Tense": "Past", "VerbForm": "Fin"},
     PAST_PERFECT),
    ({"Aspect": "Perf", "Mood": "Ind", "Tense": "Fut", "VerbForm": "Fin"},
     FUTURE_PERFECT_SIMPLE),
    ({"Aspect": "Imp", "Mood": "Ind", "Tense": "Fut", "VerbForm": "Fin"},
     FUTURE_IMPERFECT_SIMPLE),
    ({"Aspect": "Imp", "Mood": "Imp", "VerbForm": "Fin"}, None),
    ({"Aspect": "Perf", "Tense": "Pres", "VerbForm": "Fin"}, None),  # no mood
])
def test_simple_tense_profiles(lex, feats, expected):
    s = sent(_verb(1, "x", "xверб", feats))
    assert detect_tense(s, 1, lex) == expected


def test_complex_future_marks_both_tokens(lex):
    s = sent(
        tok(1, "будемо", "бути", "AUX",
            {"Aspect": "Imp", "Mood": "Ind", "Tense": "Fut", "VerbForm": "Fin"},
            head=2, deprel="aux"),
        _verb(2, "читати", "читати", {"Aspect": "Imp", "VerbForm": "Inf"}),
    )
    assert detect_tense(s, 1, lex) == FUTURE_COMPLEX
    assert detect_tense(s, 2, lex) == FUTURE_COMPLEX


def test_complex_future_requires_imperfective_infinitive(lex):
    s = sent(
        tok(1, "буде", "бути", "AUX",
            {"Aspect": "Imp", "Mood": "Ind", "Tense": "Fut", "VerbForm": "Fin"},
            head=2, deprel="aux"),
        _verb(2, "прочитати", "прочитати", {"Aspect": "Perf", "VerbForm": "Inf"}),
    )
    # the auxiliary keeps its own simple-future profile, but no complex
    # future is formed and the perfective infinitive gets no profile
    assert detect_tense(s, 1, lex) == FUTURE_IMPERFECT_SIMPLE
    assert detect_tense(s, 2, lex) is None


def test_profiles_mutually_exclusive_on_gold_corpus(lex):
    from ukrstylo import parse_path
    from ukrstylo.morpho import (FUTURE_COMPLEX as FC)
    profiles = set()
    for doc in parse_path("tests/fixtures/gold/gold.conllu"):
        for s in doc.sentences:
            for m in annotate_sentence(s, lex):
                if m.tense_profile:
                    profiles.add(m.tense_profile)
    assert FC in profiles and len(profiles) == 6  # corpus exercises all six


# -------------------------------------------------------------- transitivity

def test_transitivity(lex):
    s = sent(
        _verb(1, "читає", "читати",
              {"Aspect": "Imp", "Mood": "Ind", "Tense": "Pres", "VerbForm": "Fin"}),
        tok(2, "книгу", "книга", "NOUN", {"Case": "Acc"}, head=1, deprel="obj"),
    )
    assert detect_transitivity(s, 1, lex) == TRANSITIVE

    s = sent(_verb(1, "сміятися", "сміятися", {"VerbForm": "Inf"}))
    assert detect_transitivity(s, 1, lex) == INTRANSITIVE  # reflexive

    s = sent(_verb(1, "спить", "спати",
                   {"Aspect": "Imp", "Tense": "Pres", "VerbForm": "Fin"}))
    assert detect_transitivity(s, 1, lex) == INTRANSITIVE  # finite, no object

    s = sent(_verb(1, "мати", "мати", {"VerbForm": "Inf"}))
    assert detect_transitivity(s, 1, lex) == TRANSITIVE    # lexicon exception

    s = sent(_verb(1, "читати", "читати", {"VerbForm": "Inf"}))
    assert detect_transitivity(s, 1, lex) is None          # undecidable

    assert detect_transitivity(sent(tok(1, "стіл", "стіл", "NOUN")), 1, lex) is None


# ------------------------------------------------------------------ pipeline

def test_annotate_sentence_runs_corrections_before_derivation(lex):
    s = sent(
        tok(1, "Вже", "вже", "ADV"),
        tok(2, "веснянки", "веснянка", "ADV", head=3, deprel="nsubj"),
        _verb(3, "заспівали", "заспівати",
              {"Aspect": "Perf", "Mood": "Ind", "Number": "Plur",
               "Tense": "Past", "VerbForm": "Fin"}),
    )
    morphs = annotate_sentence(s, lex)
    assert morphs[1].corrected_upos == "NOUN"
    assert morphs[1].decl_class == "I"     # derived from the corrected view
    assert morphs[2].tense_profile == PAST_PERFECT
