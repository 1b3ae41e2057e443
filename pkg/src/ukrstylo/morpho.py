"""Ukrainian-specific morphology on top of UD annotations.

Derives properties the base annotation layer does not carry (declension and
conjugation classes, a six-way tense profile, transitivity) and applies
affix/lexicon-based corrections for known tagger mis-assignments (animacy,
aspect, part of speech).  All rule tables ship as plain-text data files so
they can be extended without touching code.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .conllu import Sentence, Token

DEFAULT_DATA_DIR = Path(__file__).parent / "data"
DATA_DIR_ENV = "UKRSTYLO_DATA_DIR"

# tense profiles
PRESENT_IMPERFECT = "present_imperfect"
PAST_IMPERFECT = "past_imperfect"
PAST_PERFECT = "past_perfect"
FUTURE_PERFECT_SIMPLE = "future_perfect_simple"
FUTURE_IMPERFECT_SIMPLE = "future_imperfect_simple"
FUTURE_COMPLEX = "future_complex"

TRANSITIVE = "transitive"
INTRANSITIVE = "intransitive"

_PERFECTIVE_PREFIX = re.compile(r"^(за|по|про)")
_IMPERFECTIVIZING = re.compile(r"(ува|юва|овува)")


class LexiconError(RuntimeError):
    """A required lexicon file is missing or malformed."""


def _load_table(path: Path) -> tuple[dict[str, dict[str, str]], list[tuple[str, dict[str, str]]]]:
    """Read a ``lemma<TAB>key=value`` file.

    Entries whose lemma starts with ``-`` are suffix patterns and are
    returned separately, longest first.
    """
    exact: dict[str, dict[str, str]] = {}
    suffixes: dict[str, dict[str, str]] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or "=" not in parts[1]:
                raise LexiconError(f"{path.name}:{line_no}: expected 'lemma<TAB>key=value'")
            lemma, kv = parts
            key, _, value = kv.partition("=")
            target = suffixes if lemma.startswith("-") else exact
            target.setdefault(lemma.lstrip("-") if lemma.startswith("-") else lemma, {})[key] = value
    ordered = sorted(suffixes.items(), key=lambda kv: -len(kv[0]))
    return exact, ordered


class Lexicons:
    """Read-only rule tables loaded once from a data directory."""

    FILES = (
        "corrections", "conjugation", "indeclinable", "transitive",
        "impersonal", "amplifiers", "speech_verbs", "diminutives",
    )

    def __init__(self, data_dir: str | Path | None = None):
        if data_dir is None:
            data_dir = os.environ.get(DATA_DIR_ENV) or DEFAULT_DATA_DIR
        self.data_dir = Path(data_dir)
        self._exact: dict[str, dict[str, dict[str, str]]] = {}
        self._suffix: dict[str, list[tuple[str, dict[str, str]]]] = {}
        for name in self.FILES:
            path = self.data_dir / f"{name}.tsv"
            if not path.exists():
                raise LexiconError(f"missing lexicon file: {path}")
            self._exact[name], self._suffix[name] = _load_table(path)

    def lookup(self, table: str, lemma: str) -> dict[str, str] | None:
        entry = self._exact[table].get(lemma)
        if entry is not None:
            return entry
        for suffix, values in self._suffix[table]:
            if lemma.endswith(suffix) and len(lemma) > len(suffix):
                return values
        return None

    def correction(self, lemma: str) -> dict[str, str] | None:
        return self.lookup("corrections", lemma)

    def is_indeclinable(self, lemma: str) -> bool:
        return self.lookup("indeclinable", lemma) is not None

    def conjugation_override(self, lemma: str) -> str | None:
        entry = self.lookup("conjugation", lemma)
        return entry.get("Conj") if entry else None

    def is_transitive_exception(self, lemma: str) -> bool:
        return self.lookup("transitive", lemma) is not None

    def is_impersonal(self, lemma: str) -> bool:
        return self.lookup("impersonal", lemma) is not None

    def is_amplifier(self, lemma: str) -> bool:
        return self.lookup("amplifiers", lemma) is not None

    def is_speech_verb(self, lemma: str) -> bool:
        return self.lookup("speech_verbs", lemma) is not None

    def is_diminutive(self, lemma: str) -> bool:
        return self.lookup("diminutives", lemma) is not None

    def is_imperfective_exception(self, lemma: str) -> bool:
        entry = self.lookup("corrections", lemma)
        return bool(entry and entry.get("KeepAspect") == "Imp")


@dataclass(frozen=True)
class DerivedMorph:
    """Per-token derived morphology; ``corrected_feats`` holds only overrides."""

    conj_class: str | None = None          # I..IV, verbs
    decl_class: str | None = None          # I..IV, nouns
    tense_profile: str | None = None
    transitivity: str | None = None
    corrected_feats: dict[str, str] = field(default_factory=dict)

    @property
    def corrected_upos(self) -> str | None:
        return self.corrected_feats.get("UPOS")


def correct_feats(sentence: Sentence, idx: int, lexicons: Lexicons) -> dict[str, str]:
    """Overrides for the known mis-tag classes; empty map = trust the input.

    The ``UPOS`` pseudo-key carries part-of-speech overrides.  Corrections
    whose trigger is not decidable from the ten CoNLL-U columns (nominative
    subjects of impersonal predicates, locative after с/із/зі) are known
    gaps and deliberately produce no override.
    """
    tok = sentence.token(idx)
    out: dict[str, str] = {}
    entry = lexicons.correction(tok.lemma)
    if entry:
        for key, value in entry.items():
            if key == "KeepAspect":
                continue
            if key == "UPOS":
                if tok.upos != value and tok.upos in ("ADV", "ADJ"):
                    out["UPOS"] = value
            elif tok.feats.get(key) != value:
                out[key] = value
    upos = out.get("UPOS", tok.upos)
    if (upos == "VERB" and tok.feats.get("Aspect") == "Imp"
            and "Aspect" not in out
            and _PERFECTIVE_PREFIX.match(tok.lemma)
            and not _IMPERFECTIVIZING.search(tok.lemma)
            and not lexicons.is_imperfective_exception(tok.lemma)):
        out["Aspect"] = "Perf"
    return out


def corrected_view(tok: Token, overrides: dict[str, str]) -> tuple[str, dict[str, str]]:
    """(upos, feats) with corrections applied."""
    upos = overrides.get("UPOS", tok.upos)
    feats = dict(tok.feats)
    for key, value in overrides.items():
        if key != "UPOS":
            feats[key] = value
    return upos, feats


def classify_declension(tok: Token, lexicons: Lexicons,
                        upos: str | None = None,
                        feats: dict[str, str] | None = None) -> str | None:
    """Ukrainian noun declension class from lemma-final characters and gender."""
    upos = upos or tok.upos
    feats = feats if feats is not None else tok.feats
    if upos != "NOUN" or not tok.lemma:
        return None
    lemma = tok.lemma.lower()
    if lexicons.is_indeclinable(lemma) or feats.get("Uninflect") == "Yes":
        return None
    gender = feats.get("Gender")
    if lemma == "мати":
        return "III"
    if lemma.endswith(("а", "я")):
        if gender == "Neut":
            return "IV"
        return "I"
    if gender == "Fem":
        return "III"
    return "II"


def classify_conjugation(tok: Token, lexicons: Lexicons,
                         upos: str | None = None) -> str | None:
    """Verb conjugation class, lemma-driven; III/IV only via the irregular lexicon."""
    upos = upos or tok.upos
    if upos != "VERB" or not tok.lemma:
        return None
    lemma = tok.lemma.lower()
    override = lexicons.conjugation_override(lemma)
    if override:
        return override
    stem = lemma
    for refl in ("ся", "сь"):
        if stem.endswith(refl):
            stem = stem[: -len(refl)]
            break
    override = lexicons.conjugation_override(stem)
    if override:
        return override
    if stem.endswith(("ити", "їти", "іти")):
        return "II"
    return "I"


def _is_fut_aux(tok: Token, feats: dict[str, str], upos: str) -> bool:
    return upos == "AUX" and tok.lemma.lower() == "бути" and feats.get("Tense") == "Fut"


def _is_imp_inf(feats: dict[str, str], upos: str) -> bool:
    return (upos == "VERB" and feats.get("VerbForm") == "Inf"
            and feats.get("Aspect") == "Imp")


def detect_tense(sentence: Sentence, idx: int, lexicons: Lexicons,
                 views: list[tuple[str, dict[str, str]]] | None = None) -> str | None:
    """Six-way tense profile; profiles are mutually exclusive by construction.

    ``views`` optionally supplies corrected (upos, feats) per token so the
    detection runs on the corrected layer.
    """
    if views is None:
        views = [(t.upos, t.feats) for t in sentence.tokens]
    tok = sentence.token(idx)
    upos, feats = views[idx - 1]
    if upos not in ("VERB", "AUX"):
        return None

    # analytic future: бути[Fut] + imperfective infinitive, either direction
    if _is_fut_aux(tok, feats, upos):
        if tok.head > 0:
            h_upos, h_feats = views[tok.head - 1]
            if _is_imp_inf(h_feats, h_upos):
                return FUTURE_COMPLEX
        for child in sentence.children(idx):
            c_upos, c_feats = views[child.index - 1]
            if _is_imp_inf(c_feats, c_upos):
                return FUTURE_COMPLEX
    if _is_imp_inf(feats, upos):
        for child in sentence.children(idx):
            c_upos, c_feats = views[child.index - 1]
            if _is_fut_aux(child, c_feats, c_upos):
                return FUTURE_COMPLEX
        if tok.head > 0:
            head = sentence.token(tok.head)
            h_upos, h_feats = views[tok.head - 1]
            if _is_fut_aux(head, h_feats, h_upos):
                return FUTURE_COMPLEX

    if feats.get("Mood") != "Ind":
        return None
    tense, aspect = feats.get("Tense"), feats.get("Aspect")
    if tense == "Pres" and aspect == "Imp":
        return PRESENT_IMPERFECT
    if tense == "Past" and aspect == "Imp":
        return PAST_IMPERFECT
    if tense == "Past" and aspect == "Perf":
        return PAST_PERFECT
    if tense == "Fut" and aspect == "Perf":
        return FUTURE_PERFECT_SIMPLE
    if tense == "Fut" and aspect == "Imp":
        return FUTURE_IMPERFECT_SIMPLE
    return None


def detect_transitivity(sentence: Sentence, idx: int, lexicons: Lexicons,
                        upos: str | None = None) -> str | None:
    """Transitive iff an obj dependent exists or the lemma is a known exception."""
    tok = sentence.token(idx)
    upos = upos or tok.upos
    if upos != "VERB":
        return None
    lemma = tok.lemma.lower()
    if lemma.endswith(("ся", "сь")):
        return INTRANSITIVE
    if any(c.deprel == "obj" for c in sentence.children(idx)):
        return TRANSITIVE
    if lexicons.is_transitive_exception(lemma):
        return TRANSITIVE
    if tok.feats.get("VerbForm") == "Fin":
        return INTRANSITIVE
    return None


def annotate_sentence(sentence: Sentence, lexicons: Lexicons) -> list[DerivedMorph]:
    """DerivedMorph for every token, corrections applied before derivation."""
    overrides = [correct_feats(sentence, t.index, lexicons) for t in sentence.tokens]
    views = [corrected_view(t, ov) for t, ov in zip(sentence.tokens, overrides)]
    out: list[DerivedMorph] = []
    for tok, ov, (upos, feats) in zip(sentence.tokens, overrides, views):
        out.append(DerivedMorph(
            conj_class=classify_conjugation(tok, lexicons, upos=upos),
            decl_class=classify_declension(tok, lexicons, upos=upos, feats=feats),
            tense_profile=detect_tense(sentence, tok.index, lexicons, views=views),
            transitivity=detect_transitivity(sentence, tok.index, lexicons, upos=upos),
            corrected_feats=ov,
        ))
    return out
