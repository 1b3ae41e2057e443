"""The metric registry: 104 declarative stylometric metrics.

Groups and declared sizes follow the published catalog (lexical 56,
grammar 23, syntax 14, part-of-speech 12); the registry itself carries the
union of every metric actually printed there, which is 55/24/13/12.  The
catalog dump records both numbers, and no metric is invented to pad a
group.  Aliases map variant spellings of the same metric to its canonical
id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .conllu import Sentence, Token
from .morpho import (
    FUTURE_COMPLEX, FUTURE_IMPERFECT_SIMPLE, FUTURE_PERFECT_SIMPLE,
    INTRANSITIVE, PAST_IMPERFECT, PAST_PERFECT, PRESENT_IMPERFECT,
    TRANSITIVE, DerivedMorph, Lexicons, annotate_sentence, corrected_view,
)

GROUP_LEXICAL = "lexical"
GROUP_GRAMMAR = "grammar"
GROUP_SYNTAX = "syntax"
GROUP_POS = "pos"

SCOPE_TOKEN = "token_predicate"
SCOPE_SENTENCE = "sentence_span"
SCOPE_RATIO = "ratio"

# declared group sizes in the published catalog vs what it actually prints
DECLARED_GROUP_SIZES = {GROUP_LEXICAL: 56, GROUP_GRAMMAR: 23,
                        GROUP_SYNTAX: 14, GROUP_POS: 12}

# variant spellings seen in the literature, resolved on lookup
ALIASES = {
    "L_INANIM_NOUNS": "L_INANIM_NOUN",
    "VF_SECOND_CONJ": "VT_SECOND_CONJ",
    "L_QUALITATIVE_ADJ_P": "L_QULITATIVE_ADJ_P",
}

CONTENT_UPOS = frozenset({"NOUN", "VERB", "ADJ", "ADV"})
QUOTE_FORMS = frozenset({'"', "«", "»", "“", "”", "„", "''", "``"})
DASH_FORMS = frozenset({"-", "–", "—"})
PERSONAL_NAME_TYPES = frozenset({"Giv", "Sur", "Pat"})


class AnnSent:
    """A sentence with its derived-morphology layer and corrected view."""

    __slots__ = ("sent", "morphs", "views", "_children")

    def __init__(self, sent: Sentence, lexicons: Lexicons):
        self.sent = sent
        self.morphs: list[DerivedMorph] = annotate_sentence(sent, lexicons)
        self.views = [corrected_view(t, m.corrected_feats)
                      for t, m in zip(sent.tokens, self.morphs)]
        children: dict[int, list[int]] = {}
        for t in sent.tokens:
            children.setdefault(t.head, []).append(t.index)
        self._children = children

    def __len__(self) -> int:
        return len(self.sent.tokens)

    def tok(self, i: int) -> Token:
        return self.sent.tokens[i - 1]

    def morph(self, i: int) -> DerivedMorph:
        return self.morphs[i - 1]

    def upos(self, i: int) -> str:
        return self.views[i - 1][0]

    def feat(self, i: int, key: str) -> str | None:
        return self.views[i - 1][1].get(key)

    def children(self, i: int) -> list[int]:
        return self._children.get(i, [])

    def deprel(self, i: int) -> str:
        return self.sent.tokens[i - 1].deprel

    def base_deprel(self, i: int) -> str:
        return self.sent.tokens[i - 1].deprel.split(":", 1)[0]


TokenPred = Callable[[AnnSent, int], bool]
SentPred = Callable[[AnnSent], bool]


@dataclass(frozen=True)
class MetricSpec:
    id: str
    group: str
    description: str
    scope: str
    token_pred: TokenPred | None = None
    sent_pred: SentPred | None = None


# ---------------------------------------------------------------- helpers

def _is_noun(s: AnnSent, i: int) -> bool:
    return s.upos(i) == "NOUN"


def _noun_case(case: str) -> TokenPred:
    return lambda s, i: s.upos(i) == "NOUN" and s.feat(i, "Case") == case


def _adj_degree(degree: str) -> TokenPred:
    return lambda s, i: s.upos(i) == "ADJ" and s.feat(i, "Degree") == degree


def _adv_degree(degree: str) -> TokenPred:
    return lambda s, i: s.upos(i) == "ADV" and s.feat(i, "Degree") == degree


def _noun_gender(gender: str) -> TokenPred:
    return lambda s, i: s.upos(i) == "NOUN" and s.feat(i, "Gender") == gender


def _is_pronominal(s: AnnSent, i: int) -> bool:
    return s.upos(i) in ("PRON", "DET")


def _pron_type(ptype: str) -> TokenPred:
    return lambda s, i: _is_pronominal(s, i) and s.feat(i, "PronType") == ptype


def _punct_form(forms: frozenset[str] | set[str]) -> TokenPred:
    return lambda s, i: s.upos(i) == "PUNCT" and s.tok(i).form in forms


def _is_personal_name(s: AnnSent, i: int) -> bool:
    return (s.upos(i) == "PROPN"
            and s.feat(i, "NameType") in PERSONAL_NAME_TYPES)


def pos_bucket(s: AnnSent, i: int) -> str | None:
    """Exactly one part-of-speech bucket per non-punctuation token."""
    upos = s.upos(i)
    if upos == "PUNCT":
        return None
    if upos in ("X", "SYM") or s.feat(i, "Foreign") == "Yes":
        return "OTHER"
    return {
        "VERB": "VERB", "AUX": "VERB",
        "NOUN": "NOUN", "PROPN": "NOUN",
        "ADJ": "ADJ", "ADV": "ADV", "DET": "DET", "INTJ": "INTJ",
        "CCONJ": "CONJ", "SCONJ": "CONJ",
        "PART": "PART", "NUM": "NUM", "ADP": "PREP", "PRON": "PRO",
    }[upos]


def _pos_pred(bucket: str) -> TokenPred:
    return lambda s, i: pos_bucket(s, i) == bucket


def is_content(s: AnnSent, i: int) -> bool:
    return s.upos(i) in CONTENT_UPOS


def is_function(s: AnnSent, i: int) -> bool:
    return s.upos(i) != "PUNCT" and s.upos(i) not in CONTENT_UPOS


def _tense_profile(profile: str, verbs_only: bool = True) -> TokenPred:
    def pred(s: AnnSent, i: int) -> bool:
        if verbs_only and s.upos(i) != "VERB":
            return False
        return s.morph(i).tense_profile == profile
    return pred


def _conj_class(cls: str) -> TokenPred:
    return lambda s, i: s.upos(i) == "VERB" and s.morph(i).conj_class == cls


def _root_verb_aspect(aspect: str) -> TokenPred:
    def pred(s: AnnSent, i: int) -> bool:
        if s.upos(i) != "VERB" or s.feat(i, "Aspect") != aspect:
            return False
        if s.deprel(i) == "root":
            return True
        tok = s.tok(i)
        return (s.base_deprel(i) == "conj" and tok.head > 0
                and s.deprel(tok.head) == "root")
    return pred


def _is_finite_verb(s: AnnSent, i: int) -> bool:
    return s.upos(i) in ("VERB", "AUX") and s.feat(i, "VerbForm") == "Fin"


def is_np_head(s: AnnSent, i: int) -> bool:
    """Head of a maximal noun phrase (not glued into a larger nominal)."""
    if s.upos(i) not in ("NOUN", "PROPN"):
        return False
    tok = s.tok(i)
    if tok.head > 0 and s.base_deprel(i) in ("flat", "fixed", "compound"):
        return s.upos(tok.head) not in ("NOUN", "PROPN")
    return True


# ------------------------------------------------------- sentence predicates

def _has_deprel(base: str) -> SentPred:
    return lambda s: any(s.base_deprel(i) == base for i in range(1, len(s) + 1))


def _sent_has_quotes(s: AnnSent) -> bool:
    return any(t.form in QUOTE_FORMS for t in s.sent.tokens)


def _sent_negative(s: AnnSent) -> bool:
    for i in range(1, len(s) + 1):
        tok = s.tok(i)
        if tok.upos == "PART" and tok.lemma.lower() in ("не", "ні"):
            return True
        if s.feat(i, "Polarity") == "Neg":
            return True
    return False


def _sent_terminal(char: str) -> SentPred:
    def pred(s: AnnSent) -> bool:
        return len(s) > 0 and char in s.tok(len(s)).form
    return pred


def _sent_non_finite(s: AnnSent) -> bool:
    return not any(_is_finite_verb(s, i) for i in range(1, len(s) + 1))


def _sent_ellipsis(s: AnnSent) -> bool:
    if any(s.base_deprel(i) == "orphan" for i in range(1, len(s) + 1)):
        return True
    return _sent_non_finite(s) and any(t.form in DASH_FORMS for t in s.sent.tokens)


def _sent_conditional(s: AnnSent) -> bool:
    for i in range(1, len(s) + 1):
        if s.tok(i).lemma.lower() in ("би", "б") or s.feat(i, "Mood") == "Cnd":
            return True
    return False


def _sent_imperative(s: AnnSent) -> bool:
    return any(s.feat(i, "Mood") == "Imp" for i in range(1, len(s) + 1))


def _make_amplified(lexicons: Lexicons) -> SentPred:
    def pred(s: AnnSent) -> bool:
        return any(s.tok(i).upos == "PART"
                   and lexicons.is_amplifier(s.tok(i).lemma.lower())
                   for i in range(1, len(s) + 1))
    return pred


def _make_direct_speech(lexicons: Lexicons) -> SentPred:
    def pred(s: AnnSent) -> bool:
        if not _sent_has_quotes(s):
            return False
        return any(s.upos(i) == "VERB"
                   and lexicons.is_speech_verb(s.tok(i).lemma.lower())
                   for i in range(1, len(s) + 1))
    return pred


# -------------------------------------------------------------- the registry

def builtin_registry(lexicons: Lexicons) -> "MetricRegistry":
    """Every published metric, wired to its predicate."""
    L, G, S, P = GROUP_LEXICAL, GROUP_GRAMMAR, GROUP_SYNTAX, GROUP_POS
    tok, sent, ratio = SCOPE_TOKEN, SCOPE_SENTENCE, SCOPE_RATIO

    def T(mid: str, group: str, desc: str, pred: TokenPred) -> MetricSpec:
        return MetricSpec(mid, group, desc, tok, token_pred=pred)

    def SS(mid: str, desc: str, pred: SentPred) -> MetricSpec:
        return MetricSpec(mid, S, desc, sent, sent_pred=pred)

    def _dim(s: AnnSent, i: int) -> bool:
        return s.upos(i) == "NOUN" and lexicons.is_diminutive(s.tok(i).lemma.lower())

    def _impersonal(s: AnnSent, i: int) -> bool:
        return s.upos(i) == "VERB" and (
            s.feat(i, "Person") == "0"
            or lexicons.is_impersonal(s.tok(i).lemma.lower()))

    def _relative_adj(s: AnnSent, i: int) -> bool:
        return (s.upos(i) == "ADJ" and s.feat(i, "Degree") is None
                and s.feat(i, "VerbForm") is None
                and s.feat(i, "NumType") is None
                and s.feat(i, "Poss") is None)

    specs: list[MetricSpec] = [
        # ------------------------------------------------------ lexical (55)
        MetricSpec("L_TYPE_TOKEN_RATIO_LEMMAS", L,
                   "Type-token ratio for words lemmas", ratio),
        T("L_CONT_A", L, "Incidence of Content words", is_content),
        T("L_FUNC_A", L, "Incidence of Function words", is_function),
        MetricSpec("L_CONT_T", L, "Incidence of Content words types", ratio),
        MetricSpec("L_FUNC_T", L, "Incidence of Function words types", ratio),
        T("L_PLURAL_NOUNS", L, "Incidence of nouns in plural",
          lambda s, i: _is_noun(s, i) and s.feat(i, "Number") == "Plur"),
        T("L_SINGULAR_NOUNS", L, "Incidence of nouns in singular",
          lambda s, i: _is_noun(s, i) and s.feat(i, "Number") == "Sing"),
        T("L_PROPER_NAME", L, "Incidence of proper names",
          lambda s, i: s.upos(i) == "PROPN"),
        T("L_PERSONAL_NAME", L, "Incidence of personal names", _is_personal_name),
        T("L_NOM_CASE", L, "Incidence of nouns in Nominative case", _noun_case("Nom")),
        T("L_GEN_CASE", L, "Incidence of nouns in Genitive case", _noun_case("Gen")),
        T("L_DAT_CASE", L, "Incidence of nouns in Dative case", _noun_case("Dat")),
        T("L_ACC_CASE", L, "Incidence of nouns in Accusative case", _noun_case("Acc")),
        T("L_INS_CASE", L, "Incidence of nouns in Instrumental case", _noun_case("Ins")),
        T("L_LOC_CASE", L, "Incidence of nouns in Locative case", _noun_case("Loc")),
        T("L_VOC_CASE", L, "Incidence of nouns in Vocative case", _noun_case("Voc")),
        T("L_INDIRECT_ADJ", L, "Incidence of indirect adjective",
          lambda s, i: s.upos(i) == "ADJ" and s.base_deprel(i) != "amod"),
        T("L_DIRECT_ADJ", L, "Incidence of direct adjective",
          lambda s, i: s.upos(i) == "ADJ" and s.base_deprel(i) == "amod"),
        T("L_QUALITATIVE_ADJ_SUP", L, "Incidence of qualitative superlative adj",
          _adj_degree("Sup")),
        T("L_QUALITATIVE_ADJ_CMP", L, "Incidence of qualitative comparative adj",
          _adj_degree("Cmp")),
        T("L_RELATIVE_ADJ", L, "Incidence of relative adj", _relative_adj),
        T("L_QULITATIVE_ADJ_P", L, "Incidence of qualitative adj positive",
          _adj_degree("Pos")),
        T("L_ANIM_NOUN", L, "Incidence of animated nouns",
          lambda s, i: _is_noun(s, i) and s.feat(i, "Animacy") == "Anim"),
        T("L_INANIM_NOUN", L, "Incidence of inanimate nouns",
          lambda s, i: _is_noun(s, i) and s.feat(i, "Animacy") == "Inan"),
        T("L_ADV_POS", L, "Incidence of positive adverbs", _adv_degree("Pos")),
        T("L_ADV_CMP", L, "Incidence of comparative adverbs", _adv_degree("Cmp")),
        T("L_ADV_SUP", L, "Incidence of superlative adverbs", _adv_degree("Sup")),
        T("L_DIMINUTIVES", L, "Incidence of diminutives", _dim),
        T("L_FEMININE_NAMES", L, "Incidence of feminine proper nouns",
          lambda s, i: _is_personal_name(s, i) and s.feat(i, "Gender") == "Fem"),
        T("L_MASCULINE_NAMES", L, "Incidence of masculine proper nouns",
          lambda s, i: _is_personal_name(s, i) and s.feat(i, "Gender") == "Masc"),
        T("L_GIVEN_NAMES", L, "Incidence of given names",
          lambda s, i: s.upos(i) == "PROPN" and s.feat(i, "NameType") == "Giv"),
        T("L_SURNAMES", L, "Incidence of surnames",
          lambda s, i: s.upos(i) == "PROPN" and s.feat(i, "NameType") == "Sur"),
        T("L_FLAT_MULTIWORD", L, "Incidence of flat multiwords expressions",
          lambda s, i: s.base_deprel(i) == "flat"),
        T("L_NOUN_MASCULINE", L, "Incidence of masculine nouns", _noun_gender("Masc")),
        T("L_NOUN_FAMININE", L, "Incidence of feminine nouns", _noun_gender("Fem")),
        T("L_NOUN_NEUTRAL", L, "Incidence of neutral nouns", _noun_gender("Neut")),
        T("L_NUM_CARD", L, "Incidence of numerals cardinals",
          lambda s, i: s.upos(i) == "NUM" and s.feat(i, "NumType") in (None, "Card")),
        T("L_NUM_ORD", L, "Incidence of numerals ordinals",
          lambda s, i: s.feat(i, "NumType") == "Ord"),
        T("L_PRON_DEM", L, "Incidence of demonstrative pronouns", _pron_type("Dem")),
        T("L_PRON_INT", L, "Incidence of indexical pronouns", _pron_type("Int")),
        T("L_PRON_NEG", L, "Incidence of negative pronoun", _pron_type("Neg")),
        T("L_PRON_POS", L, "Incidence of possessive pronoun",
          lambda s, i: _is_pronominal(s, i) and s.feat(i, "Poss") == "Yes"),
        T("L_PRON_PRS", L, "Incidence of personal pronouns",
          lambda s, i: (s.upos(i) == "PRON" and s.feat(i, "PronType") == "Prs"
                        and s.feat(i, "Poss") is None
                        and s.feat(i, "Reflex") is None)),
        T("L_PRON_REL", L, "Incidence of relative pronouns", _pron_type("Rel")),
        T("L_PRON_RELATIVE", L, "Incidence of relative pronoun 'що'",
          lambda s, i: (s.upos(i) == "PRON" and s.feat(i, "PronType") == "Rel"
                        and s.tok(i).lemma.lower() == "що")),
        T("L_PRON_RFL", L, "Incidence of reflexive pronoun",
          lambda s, i: s.upos(i) == "PRON" and s.feat(i, "Reflex") == "Yes"),
        T("L_PRON_TOT", L, "Incidence of total pronouns", _pron_type("Tot")),
        T("L_DIRECT_OBJ", L, "Incidence of direct objects",
          lambda s, i: s.base_deprel(i) == "obj"),
        T("L_INDIRECT_OBJ", L, "Incidence of indirect objects",
          lambda s, i: s.base_deprel(i) == "iobj"),
        T("L_PUNCT", L, "Incidence of punctuation",
          lambda s, i: s.upos(i) == "PUNCT"),
        T("L_PUNCT_DOT", L, "Incidence of dots", _punct_form({".", "…", "..."})),
        T("L_PUNCT_COM", L, "Incidence of comma", _punct_form({","})),
        T("L_PUNCT_SEMC", L, "Incidence of semicolon", _punct_form({";"})),
        T("L_PUNCT_COL", L, "Incidence of colon", _punct_form({":"})),
        T("L_PUNCT_DASH", L, "Incidence of dashes", _punct_form(DASH_FORMS)),
        # ------------------------------------------------------ grammar (24)
        T("VF_ROOT_VERB_IMPERFECT", G,
          "Root verbs and conjunctions in imperfect aspect", _root_verb_aspect("Imp")),
        T("VF_ALL_VERB_IMPERFECT", G, "Incidence of all verbs in imperfect aspect",
          lambda s, i: s.upos(i) == "VERB" and s.feat(i, "Aspect") == "Imp"),
        T("VF_ROOT_VERB_PERFECT", G,
          "Root verbs and conjunctions in perfect aspect", _root_verb_aspect("Perf")),
        T("VF_ALL_VERB_PERFECT", G, "Incidence of all verbs in perfect aspect",
          lambda s, i: s.upos(i) == "VERB" and s.feat(i, "Aspect") == "Perf"),
        T("VF_PRESENT_IND_IMPERFECT", G,
          "Incidence of verbs in the present tense, indicative mood, imperfect aspect",
          _tense_profile(PRESENT_IMPERFECT)),
        T("VF_PAST_IND_IMPERFECT", G,
          "Incidence of verbs in the past tense, indicative mood, imperfect aspect",
          _tense_profile(PAST_IMPERFECT)),
        T("VF_PAST_IND_PERFECT", G,
          "Incidence of verbs in the past tense, indicative mood, perfect aspect",
          _tense_profile(PAST_PERFECT)),
        T("VF_FUT_IND_PERFECT", G,
          "Incidence of verbs in the future tense, indicative mood, perfect aspect",
          _tense_profile(FUTURE_PERFECT_SIMPLE)),
        T("VF_FUT_IND_IMPERFECT_SIMPLE", G,
          "Incidence of verbs in the future tense, indicative mood, imperfect aspect, simple verb form",
          _tense_profile(FUTURE_IMPERFECT_SIMPLE)),
        T("VF_FUT_IND_COMPLEX", G,
          "Incidence of verbs in the future tense, indicative mood, complex verb forms",
          _tense_profile(FUTURE_COMPLEX, verbs_only=False)),
        T("VT_FIRST_CONJ", G, "Incidence of verbs in the first declension",
          _conj_class("I")),
        T("VT_SECOND_CONJ", G, "Incidence of verbs in the second declension",
          _conj_class("II")),
        T("VT_THIRD_CONJ", G, "Incidence of verbs in the third declension",
          _conj_class("III")),
        T("VT_FOURTH_CONJ", G, "Incidence of verbs in the fourth declension",
          _conj_class("IV")),
        T("VF_FIRST_CONJ", G, "Incidence of nouns in the first declension",
          lambda s, i: s.upos(i) == "NOUN" and s.morph(i).decl_class == "I"),
        T("VF_TRANSITIVE", G, "Incidence of transitive verbs",
          lambda s, i: s.morph(i).transitivity == TRANSITIVE),
        T("VF_PASSIVE", G, "Incidence of verbs in the passive form",
          lambda s, i: s.upos(i) == "VERB" and s.feat(i, "Voice") == "Pass"),
        T("VF_PARTICIPLE_PASSIVE", G, "Incidence of passive participles",
          lambda s, i: s.feat(i, "VerbForm") == "Part" and s.feat(i, "Voice") == "Pass"),
        T("VF_PARTICIPLE_ACTIVE", G, "Incidence of active participles",
          lambda s, i: s.feat(i, "VerbForm") == "Part" and s.feat(i, "Voice") == "Act"),
        T("VF_INTRANSITIVE", G, "Incidence of intransitive verbs",
          lambda s, i: s.morph(i).transitivity == INTRANSITIVE),
        T("VF_INFINITIVE", G, "Incidence of verbs in infinitive",
          lambda s, i: s.upos(i) == "VERB" and s.feat(i, "VerbForm") == "Inf"),
        T("VF_IMPERSONAL_VERBS", G, "Incidence of impersonal verbs", _impersonal),
        T("VF_ADV_PRF_PART", G, "Incidence of adverbial perfect participles",
          lambda s, i: s.feat(i, "VerbForm") == "Conv" and s.feat(i, "Aspect") == "Perf"),
        T("VF_ADV_IMPRF_PART", G, "Incidence of adverbial imperfect participles",
          lambda s, i: s.feat(i, "VerbForm") == "Conv" and s.feat(i, "Aspect") == "Imp"),
        # ------------------------------------------------------- syntax (13)
        SS("SY_PARATAXIS", "Number of words in parataxis sentences",
           _has_deprel("parataxis")),
        SS("SY_DIRECT_SPEECH", "Number of words in direct speech",
           _make_direct_speech(lexicons)),
        SS("SY_NEGATIVE", "Number of words in negative sentences", _sent_negative),
        SS("SY_NON_FINITE", "Number of words in sentences without any verbs",
           _sent_non_finite),
        SS("SY_QUOTATIONS", "Number of words in sentences with quotation marks",
           _sent_has_quotes),
        SS("SY_EXCLAMATION", "Number of words in exclamatory sentences",
           _sent_terminal("!")),
        SS("SY_QUESTION", "Number of words in interrogative sentences",
           _sent_terminal("?")),
        SS("SY_ELLIPSES", "Number of words in elliptic sentences", _sent_ellipsis),
        T("SY_POSITIONING", S, "Number of positionings (прикладка)",
          lambda s, i: s.base_deprel(i) == "appos"),
        SS("SY_CONDITIONAL", "Number of words in conditional sentences",
           _sent_conditional),
        SS("SY_IMPERATIVE", "Number of words in imperative sentences",
           _sent_imperative),
        SS("SY_AMPLIFIED_SENT", "Number of words in amplified sentences",
           _make_amplified(lexicons)),
        T("SY_NOUN_PHRASES", S, "Number of noun phrases", is_np_head),
        # -------------------------------------------------------- pos (12)
        T("POS_VERB", P, "Incidence of Verbs", _pos_pred("VERB")),
        T("POS_NOUN", P, "Incidence of Nouns", _pos_pred("NOUN")),
        T("POS_ADJ", P, "Incidence of Adjectives", _pos_pred("ADJ")),
        T("POS_ADV", P, "Incidence of Adverbs", _pos_pred("ADV")),
        T("POS_DET", P, "Incidence of Determiners", _pos_pred("DET")),
        T("POS_INTJ", P, "Incidence of Interjections", _pos_pred("INTJ")),
        T("POS_CONJ", P, "Incidence of Conjunctions", _pos_pred("CONJ")),
        T("POS_PART", P, "Incidence of Particles", _pos_pred("PART")),
        T("POS_NUM", P, "Incidence of Numerals", _pos_pred("NUM")),
        T("POS_PREP", P, "Incidence of Prepositions", _pos_pred("PREP")),
        T("POS_PRO", P, "Incidence of Pronouns", _pos_pred("PRO")),
        T("POS_OTHER", P, "Incidence of Code-Switching", _pos_pred("OTHER")),
    ]
    return MetricRegistry(specs)


class MetricRegistry:
    """Ordered, immutable collection of metric specs with alias lookup."""

    def __init__(self, specs: list[MetricSpec]):
        self.specs = tuple(specs)
        self._by_id = {spec.id: spec for spec in specs}
        if len(self._by_id) != len(self.specs):
            raise ValueError("duplicate metric id in registry")
        for spec in specs:
            if not spec.description:
                raise ValueError(f"{spec.id}: empty description")

    def __len__(self) -> int:
        return len(self.specs)

    def __iter__(self):
        return iter(self.specs)

    def resolve(self, metric_id: str) -> MetricSpec:
        mid = ALIASES.get(metric_id, metric_id)
        if mid not in self._by_id:
            raise KeyError(f"unknown metric id {metric_id!r}")
        return self._by_id[mid]

    def ids(self) -> list[str]:
        return [s.id for s in self.specs]

    def group_sizes(self) -> dict[str, int]:
        sizes: dict[str, int] = {}
        for spec in self.specs:
            sizes[spec.group] = sizes.get(spec.group, 0) + 1
        return sizes

    def select_groups(self, groups: set[str] | None) -> "MetricRegistry":
        if not groups:
            return self
        unknown = groups - {GROUP_LEXICAL, GROUP_GRAMMAR, GROUP_SYNTAX, GROUP_POS}
        if unknown:
            raise ValueError(f"unknown metric groups: {sorted(unknown)}")
        return MetricRegistry([s for s in self.specs if s.group in groups])
