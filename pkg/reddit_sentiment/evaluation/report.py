"""Text renderings of the corpus, label agreement and grid search tables"""
from typing import Mapping

import numpy as np
import pandas as pd

from reddit_sentiment.evaluation.evaluation import STATUS_OK

DELTA_COLUMNS = [
    "algorithm",
    "representation_all",
    "min_freq_all",
    "f1_all",
    "representation_in_band",
    "min_freq_in_band",
    "f1_in_band",
    "f1_delta",
]


def _best_rows(grid: pd.DataFrame) -> pd.DataFrame:
    best = grid[grid["best"].astype(bool) & (grid["status"] == STATUS_OK)]
    return best.set_index("algorithm")


def grid_delta(grid_all: pd.DataFrame, grid_in_band: pd.DataFrame) -> pd.DataFrame:
    """
    Best F-score of every algorithm before and after removing length outliers

    Args:
        grid_all: Grid report of the full corpus
        grid_in_band: Grid report of the in-band corpus

    Returns:
        One row per algorithm best in both grids; f1_delta = f1_in_band - f1_all
    """
    best_all = _best_rows(grid_all)
    best_in_band = _best_rows(grid_in_band)
    rows = []
    for algorithm in best_all.index:
        if algorithm not in best_in_band.index:
            continue
        before = best_all.loc[algorithm]
        after = best_in_band.loc[algorithm]
        rows.append(
            (
                algorithm,
                before["representation"],
                int(before["min_freq"]),
                float(before["f1"]),
                after["representation"],
                int(after["min_freq"]),
                float(after["f1"]),
                float(after["f1"]) - float(before["f1"]),
            )
        )
    return pd.DataFrame(rows, columns=DELTA_COLUMNS)


def _format(value) -> str:
    if isinstance(value, (float, np.floating)):
        return "" if np.isnan(value) else f"{value:.3f}"
    return str(value)


def render_grid_table(grid: pd.DataFrame, title: str = "") -> str:
    """
    Best configuration of every algorithm, one row each

    Args:
        grid: Grid report frame (see GridResult.to_frame)
        title: Line printed above the table

    Returns:
        Text table with macro precision, recall, F-score and accuracy at 3 decimals
    """
    best = _best_rows(grid).reset_index()
    table = pd.DataFrame(
        {
            "Algorithm": best["algorithm"].str.upper(),
            "Representation": best["representation"].str.upper(),
            "Min. word frequency": best["min_freq"].astype(int),
            "Macro precision": best["precision"],
            "Macro recall": best["recall"],
            "Macro F-score": best["f1"],
            "Accuracy": best["accuracy"],
        }
    )
    text = table.to_string(index=False, formatters={c: _format for c in table.columns})
    return f"{title}\n{text}" if title else text


def render_corpus_table(stats: Mapping[str, pd.DataFrame]) -> str:
    """
    Corpus statistics of several datasets side by side

    Args:
        stats: name,count frames (see CorpusStats.to_frame) by dataset

    Returns:
        Text table, one column per dataset
    """
    columns = {dataset: frame.set_index("name")["count"] for dataset, frame in stats.items()}
    return pd.DataFrame(columns).fillna(0).astype(int).to_string()


def render_label_table(agreement: pd.DataFrame) -> str:
    """
    Scorer agreement of several corpora side by side

    Args:
        agreement: One row per corpus with a "corpus" column and AgreementStats.to_dict columns

    Returns:
        Text table; percentages at 2 decimals
    """
    table = agreement.set_index("corpus").T.astype(object)
    for name in table.index:
        percent = name.endswith(("pct", "share"))
        table.loc[name] = [f"{float(v):.2f}" if percent else str(int(v)) for v in table.loc[name]]
    return table.to_string()
