"""Stratified k-fold plans"""
from dataclasses import dataclass
from typing import Iterator

import numpy as np


@dataclass(frozen=True)
class CVPlan:
    """
    Assignment of every document to one of k folds

    Attributes:
        k: Number of folds
        seed: Seed the plan was drawn with
        fold_of: Fold id per document index
    """

    k: int
    seed: int
    fold_of: np.ndarray

    def __post_init__(self):
        if self.fold_of.size and (self.fold_of.min() < 0 or self.fold_of.max() >= self.k):
            raise ValueError(f"Fold ids must lie in [0, {self.k})")

    def __len__(self) -> int:
        return len(self.fold_of)

    def splits(self) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
        """(fold, train indices, test indices) for every fold"""
        for fold in range(self.k):
            in_fold = self.fold_of == fold
            yield fold, np.flatnonzero(~in_fold), np.flatnonzero(in_fold)

    def fold_sizes(self, labels: np.ndarray, code: int) -> np.ndarray:
        """Number of documents with label code in each fold"""
        return np.bincount(self.fold_of[np.asarray(labels) == code], minlength=self.k)


def stratified_kfold(labels: np.ndarray, k: int = 10, seed: int = 0) -> CVPlan:
    """
    Stratified k-fold plan

    Documents of each class, taken in ascending class code order, are shuffled with the seeded
    generator and dealt round-robin to the folds. Dealing continues where the previous class
    stopped, so fold sizes also differ by at most one overall.

    Args:
        labels: Label code per document
        k: Number of folds, >= 2
        seed: Seed of the shuffles

    Returns:
        The plan
    """
    labels = np.asarray(labels)
    if k < 2:
        raise ValueError(f"Cross-validation needs k >= 2, got {k}")
    classes, class_sizes = np.unique(labels, return_counts=True)
    too_small = {int(c): int(size) for c, size in zip(classes, class_sizes) if size < k}
    if too_small:
        raise ValueError(f"Every class needs at least k={k} documents, got {too_small}")
    rng = np.random.default_rng(seed)
    fold_of = np.empty(len(labels), dtype=np.int64)
    offset = 0
    for code in classes:
        members = rng.permutation(np.flatnonzero(labels == code))
        fold_of[members] = (offset + np.arange(len(members))) % k
        offset = (offset + len(members)) % k
    return CVPlan(k=k, seed=int(seed), fold_of=fold_of)
