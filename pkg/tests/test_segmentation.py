import string

from hypothesis import given, settings
from hypothesis import strategies as st

from yazim.segmentation import SentenceSpan, segment, split_sentences, tokenize

TURKISH_TEXT = st.text(
    alphabet=string.ascii_letters + "çğıöşüÇĞİÖŞÜ .,!?'\n-…0123456789",
    max_size=200,
)


class TestSplitSentences:
    def test_single_sentence(self):
        text = "Tatil yapmak istiyrum fakat çalışmaya devam etmem şart."
        spans = split_sentences(text)
        assert len(spans) == 1
        assert (spans[0].start, spans[0].end) == (0, len(text))

    def test_empty(self):
        assert split_sentences("") == []

    def test_two_sentences_hand_computed(self):
        # Oracle: boundaries fall after '.' (index 5) and '!' (index 12).
        spans = split_sentences("Geldi. Gitti!")
        assert [(s.start, s.end) for s in spans] == [(0, 6), (7, 13)]

    def test_abbreviation_guard(self):
        spans = split_sentences("Dr. Ahmet geldi. Gitti.")
        assert len(spans) == 2
        assert spans[0].start == 0 and spans[0].end == 16

    def test_newline_is_hard_boundary(self):
        spans = split_sentences("birinci satır\nikinci satır")
        assert len(spans) == 2

    def test_lowercase_continuation_not_split(self):
        spans = split_sentences("Saat 12.30 gibi geldi.")
        assert len(spans) == 1

    def test_reconstruction(self):
        text = "Geldi. Gitti!  Sonra durdu."
        spans = split_sentences(text)
        rebuilt = ""
        prev = 0
        for s in spans:
            rebuilt += text[prev : s.start] + text[s.start : s.end]
            prev = s.end
        rebuilt += text[prev:]
        assert rebuilt == text


class TestTokenize:
    def test_apostrophe_stays_in_token(self):
        text = "Bugün hep beraber gittiğimiz geziye Ayşe'de geldi."
        sentences = segment(text)
        surfaces = [t.surface for t in sentences[0].tokens]
        assert "Ayşe'de" in surfaces

    def test_terminal_punctuation_is_own_token(self):
        text = "Durumu oğlunada bildirdi."
        sentences = segment(text)
        assert [t.surface for t in sentences[0].tokens] == [
            "Durumu", "oğlunada", "bildirdi", ".",
        ]

    def test_minimal_two_tokens(self):
        text = "a b"
        sentences = segment(text)
        tokens = sentences[0].tokens
        assert [(t.surface, t.start, t.end) for t in tokens] == [
            ("a", 0, 1), ("b", 2, 3),
        ]

    def test_offsets_slice_back(self):
        text = "Çocuğun ağızı açık kaldı."
        for sent in segment(text):
            for tok in sent.tokens:
                assert text[tok.start : tok.end] == tok.surface


class TestProperties:
    @settings(max_examples=200)
    @given(TURKISH_TEXT)
    def test_offset_fidelity(self, text):
        for sent in segment(text):
            last_end = sent.start
            for tok in sent.tokens:
                assert text[tok.start : tok.end] == tok.surface
                assert tok.start >= last_end
                assert sent.start <= tok.start < tok.end <= sent.end
                last_end = tok.end

    @settings(max_examples=200)
    @given(TURKISH_TEXT)
    def test_sentences_cover_non_whitespace(self, text):
        spans = split_sentences(text)
        for a, b in zip(spans, spans[1:]):
            assert a.end <= b.start
            assert text[a.end : b.start].strip() == ""
        if spans:
            assert text[: spans[0].start].strip() == ""
            assert text[spans[-1].end :].strip() == ""
        else:
            assert text.strip() == ""

    @settings(max_examples=100)
    @given(TURKISH_TEXT)
    def test_retokenization_idempotent(self, text):
        surfaces = [t.surface for s in segment(text) for t in s.tokens]
        rejoined = " ".join(surfaces)
        again = [t.surface for s in segment(rejoined) for t in s.tokens]
        assert again == surfaces
