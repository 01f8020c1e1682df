"""Derivation of child seeds from the master seed"""
import hashlib


def derive_seed(master_seed: int, label: str) -> int:
    """
    Derive a stable child seed for one consumer of randomness

    The same (master_seed, label) pair always gives the same seed, on every platform and
    independent of call order, so adding a new consumer never shifts existing streams.

    Args:
        master_seed: The run's master seed
        label: Name of the consumer, e.g. "cv", "sample/task-1", "svm/fold3"

    Returns:
        Non-negative 32-bit integer seed
    """
    digest = hashlib.sha256(f"{int(master_seed)}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "little")
