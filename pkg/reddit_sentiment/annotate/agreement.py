"""Raw inter-annotator agreement and validity of tool labels"""
import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

import pandas as pd

from reddit_sentiment.annotate.session import AnnotationRecord
from reddit_sentiment.corpus.filters import LengthBand, Message
from reddit_sentiment.exceptions import CoverageError, InputDataError
from reddit_sentiment.lexsent.labels import SentimentLabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AgreementReport:
    """
    Agreement of two annotators over one group of messages

    Attributes:
        group_size: Number of messages in the group
        both_positive: Messages both annotators labelled Positive
        both_negative: Messages both annotators labelled Negative
        disagreed: Messages the annotators labelled differently
    """

    group_size: int
    both_positive: int
    both_negative: int
    disagreed: int

    def __post_init__(self):
        if self.group_size <= 0:
            raise ValueError("An agreement group needs at least one message")
        if self.both_positive + self.both_negative + self.disagreed != self.group_size:
            raise ValueError(f"Agreement counts do not add up to the group size: {self}")

    @property
    def agreement(self) -> float:
        """Share of messages both annotators gave the same label, in [0, 1]"""
        return (self.both_positive + self.both_negative) / self.group_size

    def to_dict(self, tag: str = "") -> dict:
        """Counts as a flat dict, keys prefixed with "tag/" when a tag is given"""
        prefix = f"{tag}/" if tag else ""
        return {
            prefix + "group_size": self.group_size,
            prefix + "both_positive": self.both_positive,
            prefix + "both_negative": self.both_negative,
            prefix + "disagreed": self.disagreed,
            prefix + "agreement": self.agreement,
        }


@dataclass(frozen=True)
class ValidityReport:
    """
    Annotator agreement over tool-labelled messages

    Attributes:
        agreement: Agreement of the two annotators
        confirmed: Messages both annotators labelled like the tool
        contradicted: Messages both annotators labelled against the tool
    """

    agreement: AgreementReport
    confirmed: int
    contradicted: int

    def to_dict(self, tag: str = "") -> dict:
        """Counts as a flat dict, keys prefixed with "tag/" when a tag is given"""
        prefix = f"{tag}/" if tag else ""
        return {
            **self.agreement.to_dict(tag),
            prefix + "confirmed": self.confirmed,
            prefix + "contradicted": self.contradicted,
        }


def _labels_by_message(records: Sequence[AnnotationRecord]) -> dict[str, SentimentLabel]:
    labels = {}
    for record in records:
        if record.message_id in labels:
            raise InputDataError(
                f"Message {record.message_id} labelled twice by {record.annotator_id}"
            )
        labels[record.message_id] = record.label
    return labels


def inter_annotator_agreement(
    records_a: Sequence[AnnotationRecord], records_b: Sequence[AnnotationRecord]
) -> AgreementReport:
    """
    Agreement of two annotators: matching labels over group size

    Args:
        records_a: Records of the first annotator
        records_b: Records of the second annotator, same message ids

    Returns:
        The report; it is symmetric in the annotators and ignores record order
    """
    labels_a = _labels_by_message(records_a)
    labels_b = _labels_by_message(records_b)
    if labels_a.keys() != labels_b.keys():
        raise CoverageError(
            labels_a.keys() - labels_b.keys(),
            labels_b.keys() - labels_a.keys(),
            "annotator records",
        )
    both_positive = sum(
        1 for mid, label in labels_a.items() if label == labels_b[mid] == SentimentLabel.POSITIVE
    )
    both_negative = sum(
        1 for mid, label in labels_a.items() if label == labels_b[mid] == SentimentLabel.NEGATIVE
    )
    return AgreementReport(
        group_size=len(labels_a),
        both_positive=both_positive,
        both_negative=both_negative,
        disagreed=len(labels_a) - both_positive - both_negative,
    )


def validity_report(
    records_a: Sequence[AnnotationRecord],
    records_b: Sequence[AnnotationRecord],
    tool_labels: Mapping[str, Optional[SentimentLabel]],
) -> ValidityReport:
    """
    Check tool labels against two annotators

    Args:
        records_a: Records of the first annotator
        records_b: Records of the second annotator
        tool_labels: Tool consensus label by message id, covering the same messages

    Returns:
        Annotator agreement plus how often the annotators jointly confirm or contradict the tool
    """
    report = inter_annotator_agreement(records_a, records_b)
    labels_a = _labels_by_message(records_a)
    labels_b = _labels_by_message(records_b)
    if labels_a.keys() != set(tool_labels):
        raise CoverageError(
            labels_a.keys() - set(tool_labels), set(tool_labels) - labels_a.keys(), "tool labels"
        )
    joint = {mid: label for mid, label in labels_a.items() if labels_b[mid] == label}
    confirmed = sum(1 for mid, label in joint.items() if tool_labels[mid] == label)
    return ValidityReport(
        agreement=report, confirmed=confirmed, contradicted=len(joint) - confirmed
    )


def restrict_to_band(
    records: Sequence[AnnotationRecord], messages: Mapping[str, Message], band: LengthBand
) -> list[AnnotationRecord]:
    """Keep the records of messages whose word count lies in band"""
    missing = {r.message_id for r in records} - set(messages)
    if missing:
        raise InputDataError(
            f"No message text for {len(missing)} annotated ids: {sorted(missing)[:10]}"
        )
    return [r for r in records if band.contains(messages[r.message_id].word_count)]


def format_agreement_table(reports: Mapping[str, Union[AgreementReport, ValidityReport]]) -> str:
    """
    Render agreement reports side by side

    Args:
        reports: Report by group name, in column order

    Returns:
        Plain-text table; agreement is shown with 3 decimals
    """
    columns = {}
    rows: list[str] = []
    for name, report in reports.items():
        agreement = report.agreement if isinstance(report, ValidityReport) else report
        column = {
            "Messages": str(agreement.group_size),
            "Both agree: positive": str(agreement.both_positive),
            "Both agree: negative": str(agreement.both_negative),
            "Disagreed": str(agreement.disagreed),
            "Agreement": f"{agreement.agreement:.3f}",
        }
        if isinstance(report, ValidityReport):
            column["Confirm tool"] = str(report.confirmed)
            column["Contradict tool"] = str(report.contradicted)
        columns[name] = column
        rows.extend(row for row in column if row not in rows)
    return pd.DataFrame(columns, index=rows).fillna("").to_string()
