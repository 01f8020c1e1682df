"""Both scorers against reference outputs captured on the bundled lexicons"""
from pathlib import Path

import pandas as pd
import pytest

from reddit_sentiment.lexsent.lexicon import load_demo_lexicons
from reddit_sentiment.lexsent.polarity import score_polarity
from reddit_sentiment.lexsent.valence import score_valence

REFERENCE_SCORES = Path(__file__).parent / "data" / "reference_scores.tsv"
VALENCE_LEXICON, POLARITY_LEXICON = load_demo_lexicons()


def _reference():
    frame = pd.read_csv(REFERENCE_SCORES, sep="\t", keep_default_na=False)
    return list(frame.itertuples(index=False))


def test_reference_suite_size():
    assert len(_reference()) >= 50


@pytest.mark.parametrize("row", _reference(), ids=lambda row: row.text)
def test_valence_matches_reference(row):
    # reference compounds are rounded to four decimals
    assert score_valence(row.text, VALENCE_LEXICON).value == pytest.approx(row.compound, abs=1e-4)


@pytest.mark.parametrize("row", _reference(), ids=lambda row: row.text)
def test_polarity_matches_reference(row):
    assert score_polarity(row.text, POLARITY_LEXICON).value == pytest.approx(
        row.polarity, abs=1e-4
    )
